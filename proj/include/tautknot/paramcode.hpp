// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "tautknot/errors.hpp"
#include "tautknot/geometry.hpp"
#include "tautknot/param_seq.hpp"
#include "tautknot/tauten.hpp"

namespace tautknot {

// Winding integer of a signed turn: the least m >= 1 with |turn| <= m*pi,
// signed by the turn direction; a point contact gives 0.
inline long long winding_of_turn(double turn) {
    if (turn == 0) return 0;
    double mag = std::abs(turn) / kPi;
    long long m = static_cast<long long>(std::ceil(mag - 1e-9));
    if (m < 1) m = 1;
    return turn > 0 ? m : -m;
}

// Read the slope/winding sequence off a taut path.  Defined for any taut
// path; canonical once the path is simplified.
inline ParamSequence extract_path(const TautPath& path) {
    ParamSequence seq;
    for (std::size_t i = 0; i < path.segments.size(); ++i) {
        auto [p, q] = grid_crossings(path.segments[i]);
        if (i < path.arcs.size()) {
            seq.triples.push_back({p, q, winding_of_turn(path.arcs[i].turn)});
        } else {
            seq.tail_p = p;
            seq.tail_q = q;
        }
    }
    return seq;
}

struct SimplifiedTautPath {
    TautPath path;
    Epsilon epsilon_final;
    int shrink_steps = 0;
};

// Canonical sequence of a simplified path, with the validity predicate as a
// postcondition: a violation here signals a tautening defect.
inline ParamSequence extract(const SimplifiedTautPath& s) {
    ParamSequence seq = extract_path(s.path);
    auto violations = validate(seq);
    if (!violations.empty())
        throw InvalidTaut("extracted sequence " + seq.str() + " violates validity: " +
                          violations.front().clause);
    return seq;
}

// Shrink eps by halving until the extracted sequence is stable across two
// consecutive values and no arc reduction pattern remains.
inline SimplifiedTautPath simplify(const Polyline& input, Epsilon eps0) {
    double eps = eps0.value;
    std::optional<ParamSequence> prev;
    int steps = 0;
    for (;;) {
        TautPath path = tauten(input, Epsilon(eps));
        ParamSequence seq = extract_path(path);
        if (prev && seq == *prev && !detect_arc_reduction(path))
            return {path, Epsilon(eps), steps};
        prev = seq;
        eps /= 2;
        ++steps;
        if (eps < 1e-6)
            throw ShrinkLimit("extraction did not stabilize before eps underflowed 1e-6");
    }
}

// --- reconstruction ---------------------------------------------------------

struct ReconstructResult {
    Polyline polyline;
    Epsilon eps_used;
};

namespace detail {

// Winding directions per contact.  m = 0 marks a point contact inside a
// straight run; it needs equal slopes on both sides and equal-direction
// bounding arcs (it is the tangency of an outer bitangent run), and borrows
// their direction for realization.
inline std::vector<int> contact_signs(const ParamSequence& seq) {
    std::size_t n = seq.n();
    std::vector<int> sign(n, 0);
    for (std::size_t i = 0; i < n; ++i) sign[i] = sgn(seq.triples[i].m);
    auto slope = [&](std::size_t i) { // slope pair i, 0-based, i <= n
        return i < n ? std::make_pair(seq.triples[i].p, seq.triples[i].q)
                     : std::make_pair(seq.tail_p, seq.tail_q);
    };
    std::size_t i = 0;
    while (i < n) {
        if (sign[i] != 0) {
            ++i;
            continue;
        }
        std::size_t lo = i, hi = i;
        while (hi + 1 < n && sign[hi + 1] == 0) ++hi;
        if (lo == 0 || hi == n - 1)
            throw InvalidSequence("m=0 adjacent to a path endpoint is not an inflection");
        if (sign[lo - 1] != sign[hi + 1])
            throw InvalidSequence("m=0 requires equal winding directions around the straight run");
        for (std::size_t j = lo; j <= hi + 1; ++j)
            if (slope(j) != slope(lo))
                throw InvalidSequence("m=0 requires equal slopes through the tangency");
        for (std::size_t j = lo; j <= hi; ++j) sign[j] = sign[lo - 1];
        i = hi + 1;
    }
    return sign;
}

// Geometric realization of a valid sequence at a fixed eps.  Throws
// InfeasibleEpsilon when a winding bracket or a clearance fails at this eps.
inline std::pair<TautPath, Polyline> realize_sequence(const ParamSequence& seq, Epsilon eps) {
    std::size_t n = seq.n();
    std::vector<LatticePoint> centers;
    centers.push_back(LatticePoint(1, 1)); // w0 = (1/2, 1/2)
    for (std::size_t i = 0; i < n; ++i)
        centers.push_back(centers.back().displaced(seq.triples[i].p, seq.triples[i].q));
    centers.push_back(centers.back().displaced(seq.tail_p, seq.tail_q));

    std::vector<int> sign = contact_signs(seq);

    auto connect = [&](std::size_t ci) -> TangentSegment {
        bool first = ci == 0, last = ci == n;
        if (first && last)
            return TangentSegment{centers[0].center(), centers[1].center(), std::nullopt,
                                  std::nullopt};
        if (first) return tangent_from_point(centers[0].center(), centers[1], sign[0], eps);
        if (last) return tangent_to_point(centers[n], sign[n - 1], centers[n + 1].center(), eps);
        return bitangent_physical(centers[ci], sign[ci - 1], centers[ci + 1], sign[ci], eps);
    };

    TautPath path{{}, {}, eps};
    for (std::size_t i = 0; i <= n; ++i) path.segments.push_back(connect(i));

    for (std::size_t i = 0; i < n; ++i) {
        PlanePoint ctr = centers[i + 1].center();
        PlanePoint in = path.segments[i].b;
        PlanePoint out = path.segments[i + 1].a;
        double phi_in = std::atan2(in.y - ctr.y, in.x - ctr.x);
        long long m = seq.triples[i].m;
        if (m == 0) {
            path.arcs.push_back(ContactArc{centers[i + 1], phi_in, 0.0});
            continue;
        }
        double phi_out = std::atan2(out.y - ctr.y, out.x - ctr.x);
        int s = sign[i];
        double frac = wrap_angle(s * (phi_out - phi_in));
        if (frac > 2 * kPi - 1e-9) frac = 0; // numeric wrap of an exact boundary
        long long mm = std::llabs(m);
        double turn;
        if (frac < 1e-9) {
            // tangent points coincide: only whole numbers of full turns fit
            if (mm % 2 != 0)
                throw InfeasibleEpsilon("odd winding over a straight-through contact");
            turn = mm * kPi;
        } else {
            double lo = (mm - 1) * kPi, hi = mm * kPi;
            long long k = static_cast<long long>(std::ceil((lo - frac) / (2 * kPi) - 1e-12));
            if (k < 0) k = 0;
            turn = frac + 2 * kPi * k;
            if (turn <= lo || turn > hi + 1e-9)
                throw InfeasibleEpsilon("winding " + std::to_string(m) +
                                        " is not realizable at this eps");
        }
        path.arcs.push_back(ContactArc{centers[i + 1], phi_in, s * turn});
    }

    // Clip the anchor legs onto the end circles.
    TangentSegment& f = path.segments.front();
    f.a = f.a + eps.value * f.direction();
    TangentSegment& l = path.segments.back();
    l.b = l.b - eps.value * l.direction();

    // No segment may dip into a disk; structural grazes sit at distance
    // exactly eps and do not trip the strict test.
    for (const auto& s : path.segments)
        if (!segment_disk_conflicts(s, eps).empty())
            throw InfeasibleEpsilon("segment clearance fails at this eps");

    // Polygonal representative: arcs become their circumscribed tangent
    // polygons, whose edges touch but never enter the disk.
    Polyline poly;
    poly.start_circle = centers.front();
    poly.end_circle = centers.back();
    auto push = [&](PlanePoint v) {
        if (poly.vertices.empty() || dist(poly.vertices.back(), v) > kGeoTol)
            poly.vertices.push_back(v);
    };
    push(path.segments[0].a);
    for (std::size_t i = 0; i < path.segments.size(); ++i) {
        push(path.segments[i].b);
        if (i < path.arcs.size()) {
            const ContactArc& arc = path.arcs[i];
            double total = std::abs(arc.turn);
            if (total > 0) {
                PlanePoint ctr = arc.center.center();
                int steps = std::max(1, static_cast<int>(std::ceil(total / (2 * kPi / 16))));
                double d = arc.turn / steps;
                double r = eps.value / std::cos(std::abs(d) / 2);
                for (int j = 0; j < steps; ++j) {
                    double mid = arc.angle_start + (j + 0.5) * d;
                    push({ctr.x + r * std::cos(mid), ctr.y + r * std::sin(mid)});
                }
            }
            push(path.segments[i + 1].a);
        }
    }
    return {path, poly};
}

} // namespace detail

// Build a polygonal representative whose tautening extracts the sequence
// again.  Shrinks eps internally when the requested value is infeasible and
// reports the value used.
inline ReconstructResult reconstruct(const ParamSequence& seq, Epsilon eps) {
    auto violations = validate(seq);
    if (!violations.empty())
        throw InvalidSequence("invalid sequence " + seq.str() + ": " + violations.front().clause);
    double e = eps.value;
    for (;;) {
        try {
            auto [path, poly] = detail::realize_sequence(seq, Epsilon(e));
            return {poly, Epsilon(e)};
        } catch (const ComputeError&) {
            e /= 2;
            if (e < 1e-6) throw InfeasibleEpsilon("no eps >= 1e-6 realizes " + seq.str());
        }
    }
}

// --- torus arc lift ---------------------------------------------------------

// Projection of the bridge arc of a (1,1)-knot in straight bridge position:
// a closed polyline on the torus based at the marked point w0 = (1/2,1/2).
// Each edge carries the number of times it crosses the meridian/longitude
// seams, which makes the lift to the plane explicit.
struct TorusArcInput {
    std::vector<PlanePoint> points;                // in [0,1]^2; first == last == (1/2,1/2)
    std::vector<std::pair<int, int>> edge_shifts;  // per edge: (du, dv) sheet displacement

    void check() const {
        if (points.size() < 2 || edge_shifts.size() != points.size() - 1)
            throw InputError("torus arc needs n points and n-1 edge shifts");
        auto at_w0 = [](PlanePoint p) {
            return std::abs(p.x - 0.5) < 1e-9 && std::abs(p.y - 0.5) < 1e-9;
        };
        if (!at_w0(points.front()) || !at_w0(points.back()))
            throw InputError("torus arc must start and end at the marked point (1/2,1/2)");
        for (const auto& p : points)
            if (p.x < -1e-9 || p.x > 1 + 1e-9 || p.y < -1e-9 || p.y > 1 + 1e-9)
                throw InputError("torus arc points must lie in the unit square");
    }

    // Unrolled lift starting at (1/2, 1/2).
    std::vector<PlanePoint> lift() const {
        check();
        std::vector<PlanePoint> out;
        double du = 0, dv = 0;
        out.push_back(points[0]);
        for (std::size_t i = 1; i < points.size(); ++i) {
            du += edge_shifts[i - 1].first;
            dv += edge_shifts[i - 1].second;
            out.push_back({points[i].x + du, points[i].y + dv});
        }
        return out;
    }
};

// Unroll the torus arc to the plane, trim it to the multipunctured plane and
// extract the tight parameterization of the corresponding (1,1)-knot.
inline ParamSequence lift_and_parameterize(const TorusArcInput& input, Epsilon eps0) {
    std::vector<PlanePoint> lift = input.lift();
    LatticePoint start(1, 1);
    LatticePoint end = center_of_tile(lift.back());
    if (dist(lift.back(), end.center()) > 1e-9)
        throw InputError("torus arc lift must end at a lift of the marked point");

    // eps small enough that the lift interior clears every puncture disk.
    // The first and last edges leave their anchor centers radially and are
    // exempt from their own anchor's clearance.
    double d_min = 1e300;
    for (std::size_t i = 0; i + 1 < lift.size(); ++i) {
        PlanePoint a = lift[i], b = lift[i + 1];
        for_centers_in_box(std::min(a.x, b.x) - 1, std::max(a.x, b.x) + 1,
                           std::min(a.y, b.y) - 1, std::max(a.y, b.y) + 1, [&](LatticePoint w) {
                               if (i == 0 && w == start) return;
                               if (i + 2 == lift.size() && w == end) return;
                               d_min = std::min(d_min, point_segment_distance(w.center(), a, b));
                           });
    }
    double e = std::min(eps0.value, d_min / 2);
    if (e < 1e-6) throw InfeasibleEpsilon("torus arc passes too close to a puncture lift");

    // Trim: e is at most half the clearance of every non-anchor edge, so the
    // path leaves the start disk within its first edge and enters the end
    // disk within its last edge.
    auto ray_circle = [&](PlanePoint a, PlanePoint b, PlanePoint c, bool leaving) {
        PlanePoint d = b - a, fo = a - c;
        double A = dot(d, d), B = 2 * dot(fo, d), C = dot(fo, fo) - e * e;
        double disc = B * B - 4 * A * C;
        if (disc < 0) throw InputError("torus arc trim failed");
        double r = std::sqrt(disc);
        double t = leaving ? (-B + r) / (2 * A) : (-B - r) / (2 * A);
        if (t < -1e-9 || t > 1 + 1e-9) throw InputError("torus arc trim failed");
        return std::clamp(t, 0.0, 1.0);
    };
    double t0 = ray_circle(lift[0], lift[1], start.center(), true);
    double t1 = ray_circle(lift[lift.size() - 2], lift.back(), end.center(), false);

    std::vector<PlanePoint> verts;
    verts.push_back(lift[0] + t0 * (lift[1] - lift[0]));
    for (std::size_t i = 1; i + 1 < lift.size(); ++i) verts.push_back(lift[i]);
    verts.push_back(lift[lift.size() - 2] + t1 * (lift.back() - lift[lift.size() - 2]));

    Polyline poly{verts, start, end};
    SimplifiedTautPath simplified = simplify(poly, Epsilon(e));
    return extract(simplified);
}

} // namespace tautknot
