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

#ifndef CHARSUM_POLYGON_HPP
#define CHARSUM_POLYGON_HPP

#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exactalg.hpp"
#include "hodge.hpp"

namespace charsum {

struct PolygonPoint {
    BigRational x;
    BigRational y;
    friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

/// One edge as (slope, horizontal length).
struct SlopeSegment {
    BigRational slope;
    BigRational length;
    friend bool operator==(const SlopeSegment&, const SlopeSegment&) = default;
};

/**
 * Convex piecewise-linear function on [0, length()] starting at (0,0),
 * stored by its vertices. Collinear interior points are dropped, so
 * consecutive slopes increase strictly.
 */
class NewtonPolygon {
public:
    /// The degenerate polygon {(0,0)}.
    NewtonPolygon() : vertices_{PolygonPoint{0, 0}} {}

    /// Validates origin start, increasing x and convexity; merges collinear runs.
    static NewtonPolygon from_vertices(std::vector<PolygonPoint> pts) {
        if (pts.empty() || pts.front().x != 0 || pts.front().y != 0)
            throw std::invalid_argument("NewtonPolygon: first vertex must be (0,0)");
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (pts[i].x <= pts[i - 1].x) throw std::invalid_argument("NewtonPolygon: x must increase strictly");
        std::vector<PolygonPoint> out{pts.front()};
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (out.size() >= 2) {
                const auto& a = out[out.size() - 2];
                const auto& b = out.back();
                BigRational s1 = (b.y - a.y) / (b.x - a.x);
                BigRational s2 = (pts[i].y - b.y) / (pts[i].x - b.x);
                if (s2 < s1) throw std::invalid_argument("NewtonPolygon: vertices are not convex");
                if (s2 == s1) out.pop_back();
            }
            out.push_back(pts[i]);
        }
        NewtonPolygon p;
        p.vertices_ = std::move(out);
        return p;
    }

    /// Polygon of prod (1 - q^slope t)^mult generalised to rational slopes and lengths.
    static NewtonPolygon from_slope_multiplicities(std::vector<SlopeSegment> segs) {
        for (const auto& s : segs)
            if (s.length < 0) throw std::invalid_argument("NewtonPolygon: negative multiplicity");
        std::stable_sort(segs.begin(), segs.end(),
                         [](const SlopeSegment& a, const SlopeSegment& b) { return a.slope < b.slope; });
        std::vector<PolygonPoint> pts{PolygonPoint{0, 0}};
        for (const auto& s : segs) {
            if (s.length == 0) continue;
            const auto& last = pts.back();
            pts.push_back({last.x + s.length, last.y + s.slope * s.length});
        }
        return from_vertices(std::move(pts));
    }

    /// Slope j with multiplicity mult[j].
    static NewtonPolygon from_integer_slopes(std::span<const long> mult) {
        std::vector<SlopeSegment> segs;
        for (std::size_t j = 0; j < mult.size(); ++j) {
            if (mult[j] < 0) throw std::invalid_argument("NewtonPolygon: negative multiplicity");
            segs.push_back({BigRational(static_cast<long>(j)), BigRational(mult[j])});
        }
        return from_slope_multiplicities(std::move(segs));
    }

    /**
     * Lower convex hull of (index, valuation) over finite valuations.
     * Index 0 must be present with valuation 0.
     */
    static NewtonPolygon from_valuation_points(std::vector<std::pair<long, std::optional<BigRational>>> pts) {
        std::vector<PolygonPoint> finite;
        bool have_origin = false;
        for (auto& [i, v] : pts) {
            if (i < 0) throw std::invalid_argument("NewtonPolygon: negative index");
            if (i == 0) {
                if (!v || *v != 0) throw std::invalid_argument("NewtonPolygon: valuation at index 0 must be 0");
                have_origin = true;
            }
            if (v) finite.push_back({BigRational(i), *v});
        }
        if (!have_origin) throw std::invalid_argument("NewtonPolygon: index 0 missing");
        std::sort(finite.begin(), finite.end(), [](const PolygonPoint& a, const PolygonPoint& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        std::vector<PolygonPoint> hull;
        for (const auto& pt : finite) {
            if (!hull.empty() && hull.back().x == pt.x) continue;  // keep the lowest at each x
            while (hull.size() >= 2) {
                const auto& a = hull[hull.size() - 2];
                const auto& b = hull.back();
                // drop b when it lies on or above segment a -> pt
                BigRational cross = (b.x - a.x) * (pt.y - a.y) - (b.y - a.y) * (pt.x - a.x);
                if (cross <= 0)
                    hull.pop_back();
                else
                    break;
            }
            hull.push_back(pt);
        }
        return from_vertices(std::move(hull));
    }

    std::span<const PolygonPoint> vertices() const { return vertices_; }

    BigRational length() const { return vertices_.back().x; }

    BigRational end_height() const { return vertices_.back().y; }

    /// Linear interpolation; x must lie in [0, length()].
    BigRational value_at(const BigRational& x) const {
        if (x < 0 || x > length()) throw std::out_of_range("NewtonPolygon::value_at outside domain");
        for (std::size_t i = 1; i < vertices_.size(); ++i) {
            const auto& a = vertices_[i - 1];
            const auto& b = vertices_[i];
            if (x <= b.x) return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
        }
        return vertices_.back().y;
    }

    std::vector<SlopeSegment> slopes() const {
        std::vector<SlopeSegment> out;
        for (std::size_t i = 1; i < vertices_.size(); ++i) {
            const auto& a = vertices_[i - 1];
            const auto& b = vertices_[i];
            out.push_back({(b.y - a.y) / (b.x - a.x), b.x - a.x});
        }
        return out;
    }

    /**
     * The polygon with every slope s replaced by weight - s: the point
     * reflection of the graph through its midpoint, sheared by weight * x so
     * that it is convex again. Reversing a Hodge vector of length n+1 maps
     * from_integer_slopes(k) to from_integer_slopes(k).dual(n).
     */
    NewtonPolygon dual(const BigRational& weight) const {
        const auto& end = vertices_.back();
        std::vector<PolygonPoint> pts;
        for (auto it = vertices_.rbegin(); it != vertices_.rend(); ++it) {
            BigRational x = end.x - it->x;
            pts.push_back({x, weight * x - (end.y - it->y)});
        }
        return from_vertices(std::move(pts));
    }

    NewtonPolygon scaled_vertically(const BigRational& s) const {
        if (s < 0) throw std::invalid_argument("NewtonPolygon: negative vertical scale breaks convexity");
        std::vector<PolygonPoint> pts;
        for (const auto& v : vertices_) pts.push_back({v.x, v.y * s});
        return from_vertices(std::move(pts));
    }

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

    /// "(0,0) (1,1/2) ..."
    std::string to_string() const {
        std::string s;
        for (const auto& v : vertices_) {
            if (!s.empty()) s += " ";
            s += "(" + charsum::to_string(v.x) + "," + charsum::to_string(v.y) + ")";
        }
        return s;
    }

    /// Same as to_string() with decimal coordinates.
    std::string to_decimal_string(int digits = 6) const {
        std::string s;
        char buf[64];
        for (const auto& v : vertices_) {
            if (!s.empty()) s += " ";
            std::snprintf(buf, sizeof buf, "(%.*g,%.*g)", digits, v.x.get_d(), digits, v.y.get_d());
            s += buf;
        }
        return s;
    }

private:
    std::vector<PolygonPoint> vertices_;
};

namespace detail {

inline std::vector<BigRational> union_breakpoints(std::span<const NewtonPolygon> polys) {
    std::vector<BigRational> xs;
    for (const auto& p : polys)
        for (const auto& v : p.vertices()) xs.push_back(v.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace detail

/// Pointwise mean of polygons sharing one domain.
inline NewtonPolygon average(std::span<const NewtonPolygon> polys) {
    if (polys.empty()) throw std::invalid_argument("average: no polygons");
    for (const auto& p : polys)
        if (p.length() != polys.front().length()) throw std::invalid_argument("average: mismatched domains");
    std::vector<PolygonPoint> pts;
    const BigRational count(static_cast<long>(polys.size()));
    for (const auto& x : detail::union_breakpoints(polys)) {
        BigRational y = 0;
        for (const auto& p : polys) y += p.value_at(x);
        pts.push_back({x, y / count});
    }
    return NewtonPolygon::from_vertices(std::move(pts));
}

struct Dominance {
    bool holds = false;
    /// Some x with upper(x) < lower(x) when holds is false.
    std::optional<BigRational> witness;
    /// True iff the two functions coincide.
    bool equal = false;
};

/// upper(x) >= lower(x) on the common domain, decided at both polygons' breakpoints.
inline Dominance dominates(const NewtonPolygon& upper, const NewtonPolygon& lower) {
    if (upper.length() != lower.length()) throw std::invalid_argument("dominates: mismatched domains");
    const NewtonPolygon both[] = {upper, lower};
    Dominance d{true, std::nullopt, true};
    for (const auto& x : detail::union_breakpoints(both)) {
        BigRational u = upper.value_at(x);
        BigRational l = lower.value_at(x);
        if (u != l) d.equal = false;
        if (u < l) {
            d.holds = false;
            d.witness = x;
            return d;
        }
    }
    return d;
}

/**
 * Predicted lower bound: the average over the Frobenius orbit e^(0..a-1) of the
 * polygons with slope j of multiplicity k^j(d_{bar e^(i)}) = k^{n-j}(d_{e^(i)}).
 */
inline NewtonPolygon expected_polygon(const ExponentVector& e, const HodgePolynomial& hp, long p, int a) {
    std::vector<NewtonPolygon> polys;
    for (const auto& ei : frobenius_orbit(e, p, a)) {
        HodgeVector k = hodge_numbers(ei, hp).reversed();
        polys.push_back(NewtonPolygon::from_integer_slopes(k.k));
    }
    return average(polys);
}

inline NewtonPolygon expected_polygon(const ExponentVector& e, const DegreeProfile& profile, long p, int a) {
    return expected_polygon(e, HodgePolynomial(profile), p, a);
}

}  // namespace charsum

#endif  // CHARSUM_POLYGON_HPP
