/*
   Copyright 2026 The charsum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHARSUM_EXACTALG_HPP
#define CHARSUM_EXACTALG_HPP

#pragma once

#include "exactalg/cyclo.hpp"
#include "exactalg/rational.hpp"
#include "exactalg/ratpoly.hpp"
#include "exactalg/series.hpp"

#endif  // CHARSUM_EXACTALG_HPP
