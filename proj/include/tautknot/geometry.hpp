// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tautknot/errors.hpp"

namespace tautknot {

// Geometric comparison tolerance in tile units, used for tangency, clearance
// and grid-touch tests.
inline constexpr double kGeoTol = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

struct PlanePoint {
    double x = 0;
    double y = 0;
};

inline PlanePoint operator+(PlanePoint a, PlanePoint b) { return {a.x + b.x, a.y + b.y}; }
inline PlanePoint operator-(PlanePoint a, PlanePoint b) { return {a.x - b.x, a.y - b.y}; }
inline PlanePoint operator*(double s, PlanePoint a) { return {s * a.x, s * a.y}; }
inline double dot(PlanePoint a, PlanePoint b) { return a.x * b.x + a.y * b.y; }
inline double cross(PlanePoint a, PlanePoint b) { return a.x * b.y - a.y * b.x; }
inline double norm(PlanePoint a) { return std::hypot(a.x, a.y); }
inline double dist(PlanePoint a, PlanePoint b) { return norm(b - a); }
inline PlanePoint normalized(PlanePoint a) {
    double n = norm(a);
    return {a.x / n, a.y / n};
}
// Rotations by +90 and -90 degrees.
inline PlanePoint perp_left(PlanePoint a) { return {-a.y, a.x}; }
inline PlanePoint perp_right(PlanePoint a) { return {a.y, -a.x}; }

inline double wrap_angle(double a) { // into [0, 2*pi)
    double r = std::fmod(a, 2 * kPi);
    if (r < 0) r += 2 * kPi;
    return r;
}

// Puncture center w = (l/2, m/2) with l, m odd.
struct LatticePoint {
    long long l = 1;
    long long m = 1;

    LatticePoint() = default;
    LatticePoint(long long l_, long long m_) : l(l_), m(m_) {
        if (l % 2 == 0 || m % 2 == 0)
            throw InputError("lattice point coordinates must be odd integers");
    }

    PlanePoint center() const { return {l / 2.0, m / 2.0}; }

    // Displacement by whole tiles.
    LatticePoint displaced(long long p, long long q) const {
        return LatticePoint(l + 2 * p, m + 2 * q);
    }

    friend bool operator==(LatticePoint a, LatticePoint b) { return a.l == b.l && a.m == b.m; }
    friend bool operator!=(LatticePoint a, LatticePoint b) { return !(a == b); }
};

// Tile displacement from a to b.
inline std::pair<long long, long long> tile_displacement(LatticePoint a, LatticePoint b) {
    return {(b.l - a.l) / 2, (b.m - a.m) / 2};
}

// Center of the unit tile containing p.  Points on a radius-eps circle stay
// inside their center's tile because eps < 1/2.
inline LatticePoint center_of_tile(PlanePoint p) {
    long long l = 2 * static_cast<long long>(std::floor(p.x)) + 1;
    long long m = 2 * static_cast<long long>(std::floor(p.y)) + 1;
    return LatticePoint(l, m);
}

struct Epsilon {
    double value;
    explicit Epsilon(double v) : value(v) {
        if (!(v > 0.0) || !(v < 0.5))
            throw InputError("epsilon must satisfy 0 < eps < 1/2, got " + std::to_string(v));
    }
};

// Straight piece of a taut path.  A missing circle reference marks the free
// start/end point, which lies on its anchor circle but not tangentially.
struct TangentSegment {
    PlanePoint a;
    PlanePoint b;
    std::optional<LatticePoint> from_circle;
    std::optional<LatticePoint> to_circle;

    double length() const { return dist(a, b); }
    PlanePoint direction() const { return normalized(b - a); }
};

// Circular piece on the boundary of one puncture disk.  turn is the signed
// covered angle, positive counterclockwise; zero marks a point contact.
struct ContactArc {
    LatticePoint center;
    double angle_start = 0;
    double turn = 0;

    double angle_end() const { return angle_start + turn; }
    PlanePoint point_at(double theta, double eps) const {
        PlanePoint c = center.center();
        return {c.x + eps * std::cos(theta), c.y + eps * std::sin(theta)};
    }
    double length(double eps) const { return std::abs(turn) * eps; }
    int dir() const { return turn > 0 ? 1 : (turn < 0 ? -1 : 0); }
};

// Polygonal input arc with endpoints on two puncture circles.
struct Polyline {
    std::vector<PlanePoint> vertices;
    LatticePoint start_circle;
    LatticePoint end_circle;
};

// Alternating decomposition gamma_1, delta_1, ..., delta_n, gamma_{n+1}.
struct TautPath {
    std::vector<TangentSegment> segments; // n+1
    std::vector<ContactArc> arcs;         // n
    Epsilon epsilon;

    std::size_t contact_count() const { return arcs.size(); }

    double length() const {
        double sum = 0;
        for (const auto& s : segments) sum += s.length();
        for (const auto& a : arcs) sum += a.length(epsilon.value);
        return sum;
    }
};

// Enumerate puncture centers whose center lies in the closed box.
template <typename F>
inline void for_centers_in_box(double xmin, double xmax, double ymin, double ymax, F&& fn) {
    auto first_odd_ge = [](double v) {
        long long k = static_cast<long long>(std::ceil(v));
        if ((k % 2 + 2) % 2 == 0) ++k;
        return k;
    };
    for (long long l = first_odd_ge(2 * xmin); l <= 2 * xmax; l += 2)
        for (long long m = first_odd_ge(2 * ymin); m <= 2 * ymax; m += 2)
            fn(LatticePoint(l, m));
}

// Parameter of the closest point of [a,b] to p, clamped to [0,1].
inline double closest_param(PlanePoint p, PlanePoint a, PlanePoint b) {
    PlanePoint d = b - a;
    double len2 = dot(d, d);
    if (len2 <= 0) return 0;
    return std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
}

inline double point_segment_distance(PlanePoint p, PlanePoint a, PlanePoint b) {
    double t = closest_param(p, a, b);
    return dist(p, a + t * (b - a));
}

// All puncture centers whose open eps-disk meets the open segment, ordered
// along the segment.  Empty result means the segment is admissible.
inline std::vector<LatticePoint> segment_disk_conflicts(PlanePoint a, PlanePoint b,
                                                        Epsilon eps) {
    std::vector<LatticePoint> out;
    if (dist(a, b) <= kGeoTol) return out;
    double e = eps.value;
    std::vector<std::pair<double, LatticePoint>> hits;
    for_centers_in_box(std::min(a.x, b.x) - e, std::max(a.x, b.x) + e, std::min(a.y, b.y) - e,
                       std::max(a.y, b.y) + e, [&](LatticePoint w) {
                           PlanePoint c = w.center();
                           if (point_segment_distance(c, a, b) < e - kGeoTol)
                               hits.emplace_back(closest_param(c, a, b), w);
                       });
    std::sort(hits.begin(), hits.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    out.reserve(hits.size());
    for (auto& h : hits) out.push_back(h.second);
    return out;
}

inline std::vector<LatticePoint> segment_disk_conflicts(const TangentSegment& seg, Epsilon eps) {
    return segment_disk_conflicts(seg.a, seg.b, eps);
}

namespace detail {

// Physical winding sign: s = +1 means the path winds counterclockwise around
// the circle, which puts the disk on the left of the direction of travel.

// Common tangent segment of two equal radius-eps circles, leaving c1 with
// winding s1 and arriving at c2 with winding s2.  Equal signs give the outer
// tangent parallel to the center line, opposite signs the inner one.
inline TangentSegment bitangent_physical(LatticePoint c1, int s1, LatticePoint c2, int s2,
                                         Epsilon eps) {
    if (c1 == c2) throw DegenerateTangent("bitangent of a circle with itself");
    PlanePoint p1 = c1.center(), p2 = c2.center();
    PlanePoint d = p2 - p1;
    double len = norm(d);
    PlanePoint dh = {d.x / len, d.y / len};
    double e = eps.value;
    TangentSegment seg;
    seg.from_circle = c1;
    seg.to_circle = c2;
    if (s1 == s2) {
        PlanePoint n = s1 > 0 ? perp_right(dh) : perp_left(dh);
        seg.a = p1 + e * n;
        seg.b = p2 + e * n;
        return seg;
    }
    if (2 * e >= len - kGeoTol)
        throw DegenerateTangent("inner bitangent does not exist: eps >= half center distance");
    double co = 2 * e / len;
    double si = std::sqrt(1 - co * co);
    PlanePoint u = co * dh + (s1 > 0 ? -si : si) * perp_left(dh);
    seg.a = p1 + e * u;
    seg.b = p2 - e * u;
    return seg;
}

// Tangent segment from a free point to a circle, arriving with winding s.
inline TangentSegment tangent_from_point(PlanePoint p, LatticePoint c, int s, Epsilon eps) {
    PlanePoint ctr = c.center();
    double len = dist(p, ctr);
    double e = eps.value;
    if (len <= e + kGeoTol)
        throw DegenerateTangent("tangent source point lies inside the circle");
    double base = std::atan2(p.y - ctr.y, p.x - ctr.x);
    double off = std::acos(e / len);
    for (double sign : {1.0, -1.0}) {
        double theta = base + sign * off;
        PlanePoint t = {ctr.x + e * std::cos(theta), ctr.y + e * std::sin(theta)};
        PlanePoint v = t - p;
        if (s * cross(v, ctr - t) > 0) return TangentSegment{p, t, std::nullopt, c};
    }
    throw DegenerateTangent("no tangent from point matches the requested winding");
}

// Tangent segment from a circle (leaving with winding s) to a free point.
inline TangentSegment tangent_to_point(LatticePoint c, int s, PlanePoint p, Epsilon eps) {
    PlanePoint ctr = c.center();
    double len = dist(p, ctr);
    double e = eps.value;
    if (len <= e + kGeoTol)
        throw DegenerateTangent("tangent target point lies inside the circle");
    double base = std::atan2(p.y - ctr.y, p.x - ctr.x);
    double off = std::acos(e / len);
    for (double sign : {1.0, -1.0}) {
        double theta = base + sign * off;
        PlanePoint t = {ctr.x + e * std::cos(theta), ctr.y + e * std::sin(theta)};
        PlanePoint v = p - t;
        if (s * cross(v, ctr - t) > 0) return TangentSegment{t, p, c, std::nullopt};
    }
    throw DegenerateTangent("no tangent to point matches the requested winding");
}

} // namespace detail

// The common tangent of two equal circles selected by winding labels.  The
// labels are read against the canonical orientation of the pair (from the
// lexicographically smaller center to the larger): dir=+1 places the tangent
// point on the left of that direction.  Equal labels select an outer
// bitangent, opposite labels an inner one (which needs eps < half the center
// distance).  Swapping (c1,dir1) with (c2,dir2) returns the reversed segment.
inline TangentSegment bitangent(LatticePoint c1, int dir1, LatticePoint c2, int dir2,
                                Epsilon eps) {
    bool canonical = c1.l < c2.l || (c1.l == c2.l && c1.m < c2.m);
    int flip = canonical ? -1 : 1;
    return detail::bitangent_physical(c1, flip * dir1, c2, flip * dir2, eps);
}

// Signed grid-crossing counts of a segment: p counts vertical integer lines
// with the sign of the horizontal displacement, q horizontal lines with the
// sign of the vertical displacement.  Equivalently, the whole-tile
// displacement between the tiles containing the endpoints.
inline std::pair<long long, long long> grid_crossings(PlanePoint a, PlanePoint b) {
    for (double v : {a.x, a.y, b.x, b.y}) {
        if (std::abs(v - std::round(v)) <= kGeoTol)
            throw GridTouch("segment endpoint within tolerance of a grid line");
    }
    long long p = static_cast<long long>(std::floor(b.x)) - static_cast<long long>(std::floor(a.x));
    long long q = static_cast<long long>(std::floor(b.y)) - static_cast<long long>(std::floor(a.y));
    return {p, q};
}

inline std::pair<long long, long long> grid_crossings(const TangentSegment& seg) {
    return grid_crossings(seg.a, seg.b);
}

} // namespace tautknot
