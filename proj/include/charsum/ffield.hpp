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

#ifndef CHARSUM_FFIELD_HPP
#define CHARSUM_FFIELD_HPP

#pragma once

#include "ffield/charsum_value.hpp"
#include "ffield/gf.hpp"
#include "ffield/homog.hpp"
#include "ffield/smoothness.hpp"
#include "ffield/sums.hpp"
#include "ffield/tower.hpp"

#endif
