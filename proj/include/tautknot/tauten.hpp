// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tautknot/errors.hpp"
#include "tautknot/geometry.hpp"
#include "tautknot/homotopy.hpp"

namespace tautknot {

// Combinatorial summary of a taut path: which punctures it wraps, in which
// direction, with how many extra full turns.
struct ContactWordEntry {
    LatticePoint center;
    int dir = 0;          // +1 counterclockwise, -1 clockwise
    long long wraps = 0;  // extra full turns beyond the fractional angle
};

struct ContactWord {
    LatticePoint start_anchor;
    LatticePoint end_anchor;
    std::vector<ContactWordEntry> entries;
};

inline ContactWord contact_word(const TautPath& path) {
    ContactWord w;
    w.start_anchor = center_of_tile(path.segments.front().a);
    w.end_anchor = center_of_tile(path.segments.back().b);
    for (const ContactArc& a : path.arcs) {
        if (a.turn == 0) continue; // point contacts carry no winding
        double mag = std::abs(a.turn);
        long long wraps = static_cast<long long>(std::floor(mag / (2 * kPi)));
        w.entries.push_back({a.center, a.dir(), wraps});
    }
    return w;
}

namespace detail {

inline constexpr int kMaxIterations = 10000;
inline constexpr int kMaxInsertDepth = 64;
inline constexpr double kTinyTurn = 1e-7;
inline constexpr double kAngEps = 1e-9;

// Engine state: anchors at the two end-circle centers, and between them a
// list of circle contacts (with a believed signed turn) and pivot waypoints
// (vertices of the input polyline not yet straightened away).
struct EngineContact {
    LatticePoint center;
    double turn = 0; // signed; sign selects the winding used for tangents
};
struct EnginePivot {
    PlanePoint point;
};
using EngineEntry = std::variant<EngineContact, EnginePivot>;

class TautEngine {
public:
    TautEngine(const Polyline& input, Epsilon eps)
        : eps_(eps), start_(input.start_circle), end_(input.end_circle) {
        for (const PlanePoint& v : input.vertices) entries_.push_back(EnginePivot{v});
        std::vector<PathPiece> target_pieces;
        for (std::size_t i = 0; i + 1 < input.vertices.size(); ++i)
            target_pieces.push_back(PathPiece::segment(input.vertices[i], input.vertices[i + 1]));
        target_ = target_pieces.empty()
                      ? Word{}
                      : strip_anchor_letters(reduce_word(word_of_pieces(target_pieces)), start_, end_);
    }

    TautPath run() {
        int iter = 0;
        for (;;) {
            if (++iter > kMaxIterations)
                throw NonConvergence("tauten did not reach a fixpoint within " +
                                     std::to_string(kMaxIterations) + " iterations");
            realize();
            if (try_remove_pivot()) continue;
            if (try_remove_contact()) continue;
            break;
        }
        realize();
        TautPath path = assemble();
        verify(path);
        return path;
    }

private:
    // --- element geometry ---

    struct Element {
        bool is_anchor = false;
        bool is_contact = false;
        PlanePoint point;      // anchors and pivots
        LatticePoint center{}; // contacts
        int sign = 0;          // contacts
    };

    Element element_at(long long idx) const {
        Element e;
        if (idx < 0) {
            e.is_anchor = true;
            e.point = start_.center();
            e.center = start_;
            return e;
        }
        if (idx >= static_cast<long long>(entries_.size())) {
            e.is_anchor = true;
            e.point = end_.center();
            e.center = end_;
            return e;
        }
        if (const auto* c = std::get_if<EngineContact>(&entries_[idx])) {
            e.is_contact = true;
            e.center = c->center;
            e.sign = c->turn >= 0 ? 1 : -1;
        } else {
            e.point = std::get<EnginePivot>(entries_[idx]).point;
        }
        return e;
    }

    TangentSegment connect(const Element& a, const Element& b) const {
        if (a.is_contact && b.is_contact)
            return bitangent_physical(a.center, a.sign, b.center, b.sign, eps_);
        if (a.is_contact) return tangent_to_point(a.center, a.sign, b.point, eps_);
        if (b.is_contact) return tangent_from_point(a.point, b.center, b.sign, eps_);
        return TangentSegment{a.point, b.point, std::nullopt, std::nullopt};
    }

    // Connectors conns_[i] join element i-1 and element i (anchors at the
    // virtual indices -1 and entries_.size()).
    void realize() {
        std::size_t k = entries_.size();
        conns_.assign(k + 1, TangentSegment{});
        for (std::size_t i = 0; i <= k; ++i)
            conns_[i] = connect(element_at(static_cast<long long>(i) - 1),
                                element_at(static_cast<long long>(i)));
        // Recompute contact turns, resolving full wraps against the previous
        // believed turn (tangent points move continuously between moves).
        for (std::size_t i = 0; i < k; ++i) {
            auto* c = std::get_if<EngineContact>(&entries_[i]);
            if (!c) continue;
            PlanePoint ctr = c->center.center();
            PlanePoint in = conns_[i].b, out = conns_[i + 1].a;
            double phi_in = std::atan2(in.y - ctr.y, in.x - ctr.x);
            double phi_out = std::atan2(out.y - ctr.y, out.x - ctr.x);
            int s = c->turn >= 0 ? 1 : -1;
            double frac = wrap_angle(s * (phi_out - phi_in));
            double wraps = std::round((std::abs(c->turn) - frac) / (2 * kPi));
            if (wraps < -1) wraps = -1;
            c->turn = s * (frac + 2 * kPi * wraps);
        }
    }

    double current_length() const {
        double len = 0;
        for (const auto& s : conns_) len += s.length();
        for (const auto& e : entries_)
            if (const auto* c = std::get_if<EngineContact>(&e))
                len += std::abs(c->turn) * eps_.value;
        return len;
    }

    // --- homotopy-safe local moves ---

    // Contacts blocking the straight connection between two elements, wrapped
    // on the side the string retracts from (sigma = side of the old route).
    // An anchor's own disk never counts: the piece inside it is clipped away.
    std::vector<EngineContact> wrap_conflicts(const Element& a, const Element& b, int sigma,
                                              int depth) const {
        if (depth > kMaxInsertDepth)
            throw NonConvergence("conflict insertion recursion exceeded depth limit");
        TangentSegment seg = connect(a, b);
        std::vector<LatticePoint> hits = segment_disk_conflicts(seg, eps_);
        std::erase_if(hits, [&](LatticePoint w) {
            return (a.is_anchor && w == a.center) || (b.is_anchor && w == b.center);
        });
        if (hits.empty()) return {};
        LatticePoint w = hits.front();
        Element mid;
        mid.is_contact = true;
        mid.center = w;
        mid.sign = -sigma;
        std::vector<EngineContact> out = wrap_conflicts(a, mid, sigma, depth + 1);
        out.push_back(EngineContact{w, mid.sign * kTinyTurn});
        auto tail = wrap_conflicts(mid, b, sigma, depth + 1);
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
    }

    // Replace entry i by the taut route between its neighbors.  sigma is the
    // side of the removed feature relative to the straight bypass.
    void splice(std::size_t i, int sigma) {
        Element left = element_at(static_cast<long long>(i) - 1);
        Element right = element_at(static_cast<long long>(i) + 1);

        // Angle of a connector endpoint around a circle center.
        auto angle_at = [](PlanePoint p, LatticePoint c) {
            PlanePoint ctr = c.center();
            return std::atan2(p.y - ctr.y, p.x - ctr.x);
        };

        if (left.is_contact && right.is_contact && left.center == right.center) {
            // The removed excursion joins two visits of the same circle:
            // merge them, with the excursion's net swept angle around the
            // center resolved by its downward-ray crossing count.
            LatticePoint w = left.center;
            auto* lc = std::get_if<EngineContact>(&entries_[i - 1]);
            auto* rc = std::get_if<EngineContact>(&entries_[i + 1]);
            double phi_d1 = angle_at(conns_[i].a, w);
            double phi_a2 = angle_at(conns_[i + 1].b, w);

            std::vector<PathPiece> excursion;
            excursion.push_back(PathPiece::segment(conns_[i].a, conns_[i].b));
            if (const auto* mc = std::get_if<EngineContact>(&entries_[i])) {
                PlanePoint ctr = mc->center.center();
                PlanePoint in = conns_[i].b;
                excursion.push_back(PathPiece::arc(
                    mc->center, std::atan2(in.y - ctr.y, in.x - ctr.x), mc->turn, eps_.value));
            }
            excursion.push_back(PathPiece::segment(conns_[i + 1].a, conns_[i + 1].b));

            long long nu = 0;
            for (const GapLetter& g : word_of_pieces(excursion))
                if (g.l == w.l && 2 * g.j <= w.m - 1) nu += g.sign;

            double delta0 = phi_a2 - phi_d1;
            while (delta0 > kPi) delta0 -= 2 * kPi;
            while (delta0 <= -kPi) delta0 += 2 * kPi;
            long long c0 = 0;
            double down = -kPi / 2;
            if (delta0 > 0 && wrap_angle(down - phi_d1) > 0 && wrap_angle(down - phi_d1) <= delta0)
                c0 = 1;
            if (delta0 < 0 && wrap_angle(phi_d1 - down) > 0 && wrap_angle(phi_d1 - down) <= -delta0)
                c0 = -1;
            double dphi = delta0 + 2 * kPi * static_cast<double>(nu - c0);
            double merged = lc->turn + dphi + rc->turn;
            if (merged == 0) merged = kTinyTurn; // keep a definite winding side
            entries_.erase(entries_.begin() + i, entries_.begin() + i + 2);
            std::get<EngineContact>(entries_[i - 1]).turn = merged;
            return;
        }

        std::vector<EngineContact> inserted = wrap_conflicts(left, right, sigma, 0);
        std::vector<EngineEntry> repl(inserted.begin(), inserted.end());
        entries_.erase(entries_.begin() + i);
        entries_.insert(entries_.begin() + i, repl.begin(), repl.end());
    }

    bool try_remove_pivot() {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (!std::holds_alternative<EnginePivot>(entries_[i])) continue;
            PlanePoint p = std::get<EnginePivot>(entries_[i]).point;
            Element left = element_at(static_cast<long long>(i) - 1);
            Element right = element_at(static_cast<long long>(i) + 1);
            TangentSegment bypass = connect(left, right);
            double side = cross(bypass.b - bypass.a, p - bypass.a);
            int sigma = side >= 0 ? 1 : -1;
            splice(i, sigma);
            return true;
        }
        return false;
    }

    bool try_remove_contact() {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto* c = std::get_if<EngineContact>(&entries_[i]);
            if (!c) continue;
            int s = c->turn >= 0 ? 1 : -1;
            bool slipped = s * c->turn <= kAngEps;
            bool clear = false;
            if (std::abs(c->turn) <= 2 * kPi + kAngEps) {
                Element left = element_at(static_cast<long long>(i) - 1);
                Element right = element_at(static_cast<long long>(i) + 1);
                try {
                    TangentSegment bypass = connect(left, right);
                    double d = point_segment_distance(c->center.center(), bypass.a, bypass.b);
                    double side = cross(bypass.b - bypass.a, c->center.center() - bypass.a);
                    clear = d >= eps_.value - kGeoTol && s * side >= -kGeoTol;
                } catch (const DegenerateTangent&) {
                    clear = false;
                }
            }
            if (slipped || clear) {
                splice(i, s);
                return true;
            }
        }
        return false;
    }

    // --- final assembly ---

    TautPath assemble() {
        for (const auto& e : entries_)
            if (std::holds_alternative<EnginePivot>(e))
                throw NonConvergence("pivot waypoints remain after fixpoint");

        TautPath path{{}, {}, eps_};
        std::size_t k = entries_.size();
        for (std::size_t i = 0; i <= k; ++i) {
            TangentSegment seg = conns_[i];
            if (i == 0) { // clip at the start circle
                PlanePoint dir = seg.direction();
                seg.a = seg.a + eps_.value * dir;
                seg.from_circle = std::nullopt;
            }
            if (i == k) { // clip at the end circle
                PlanePoint dir = seg.direction();
                seg.b = seg.b - eps_.value * dir;
                seg.to_circle = std::nullopt;
            }
            path.segments.push_back(seg);
            if (i < k) {
                const auto& c = std::get<EngineContact>(entries_[i]);
                PlanePoint ctr = c.center.center();
                PlanePoint in = conns_[i].b;
                path.arcs.push_back(
                    ContactArc{c.center, std::atan2(in.y - ctr.y, in.x - ctr.x), c.turn});
            }
        }
        decorate_grazes(path);
        return path;
    }

    // Split outer-bitangent segments at the circles their supporting line
    // grazes: a segment between equal-winding contacts runs parallel to the
    // line of centers, so every lattice center on that open line segment is
    // touched in exactly one point.  This is an exact lattice computation.
    void decorate_grazes(TautPath& path) const {
        TautPath out{{}, {}, eps_};
        for (std::size_t i = 0; i < path.segments.size(); ++i) {
            const TangentSegment& seg = path.segments[i];
            bool outer_equal = seg.from_circle && seg.to_circle && i >= 1 &&
                               i < path.arcs.size() && path.arcs[i - 1].dir() != 0 &&
                               path.arcs[i].dir() == path.arcs[i - 1].dir();
            if (!outer_equal) {
                out.segments.push_back(seg);
                if (i < path.arcs.size()) out.arcs.push_back(path.arcs[i]);
                continue;
            }
            LatticePoint c1 = *seg.from_circle, c2 = *seg.to_circle;
            auto [tp, tq] = tile_displacement(c1, c2);
            long long g = std::gcd(std::llabs(tp), std::llabs(tq));
            if (g < 2) {
                out.segments.push_back(seg);
                if (i < path.arcs.size()) out.arcs.push_back(path.arcs[i]);
                continue;
            }
            long long p0 = tp / g, q0 = tq / g;
            PlanePoint a = seg.a, b = seg.b;
            PlanePoint normal = normalized(perp_left(b - a));
            PlanePoint prev = a;
            std::optional<LatticePoint> prev_circle = seg.from_circle;
            for (long long j = 1; j < g; ++j) {
                LatticePoint w = c1.displaced(j * p0, j * q0);
                PlanePoint foot = w.center() + (dot(a - w.center(), normal)) * normal;
                out.segments.push_back(TangentSegment{prev, foot, prev_circle, w});
                double ang = std::atan2(foot.y - w.center().y, foot.x - w.center().x);
                out.arcs.push_back(ContactArc{w, ang, 0.0});
                prev = foot;
                prev_circle = w;
            }
            out.segments.push_back(TangentSegment{prev, b, prev_circle, seg.to_circle});
            if (i < path.arcs.size()) out.arcs.push_back(path.arcs[i]);
        }
        path = std::move(out);
    }

    void verify(const TautPath& path) const {
        std::vector<PathPiece> pieces;
        for (std::size_t i = 0; i < path.segments.size(); ++i) {
            const auto& s = path.segments[i];
            pieces.push_back(PathPiece::segment(s.a, s.b));
            if (i < path.arcs.size()) {
                const auto& a = path.arcs[i];
                if (a.turn != 0)
                    pieces.push_back(PathPiece::arc(a.center, a.angle_start, a.turn, eps_.value));
            }
        }
        Word got = strip_anchor_letters(reduce_word(word_of_pieces(pieces)), start_, end_);
        if (!(got == target_))
            throw NonConvergence("taut path is not homotopic to the input: expected word " +
                                 word_str(target_) + " but realized " + word_str(got));
        for (const auto& s : path.segments) {
            if (!segment_disk_conflicts(s, eps_).empty())
                throw NonConvergence("taut path segment dips into a puncture disk");
        }
    }

    Epsilon eps_;
    LatticePoint start_;
    LatticePoint end_;
    std::vector<EngineEntry> entries_;
    std::vector<TangentSegment> conns_;
    Word target_;
};

} // namespace detail

// Minimal-length representative of the homotopy class of the input arc,
// decomposed into tangent segments and contact arcs.
inline TautPath tauten(const Polyline& input, Epsilon eps) {
    detail::TautEngine engine(input, eps);
    return engine.run();
}

// Least arc index (0-based) matching the removable three-contact pattern:
// outer arcs winding in opposite directions, middle arc covering less than
// pi, and the middle center lying on the bulge side of the line joining the
// outer centers.  Such a contact detaches once eps shrinks enough.
inline std::optional<std::size_t> detect_arc_reduction(const TautPath& path) {
    if (path.arcs.size() < 3) return std::nullopt;
    for (std::size_t i = 1; i + 1 < path.arcs.size(); ++i) {
        const ContactArc& prev = path.arcs[i - 1];
        const ContactArc& mid = path.arcs[i];
        const ContactArc& next = path.arcs[i + 1];
        if (prev.dir() * next.dir() != -1) continue;
        if (mid.turn == 0 || std::abs(mid.turn) >= kPi - kGeoTol) continue;
        PlanePoint lam = next.center.center() - prev.center.center();
        PlanePoint off = mid.center.center() - prev.center.center();
        double side = cross(lam, off);
        if (std::abs(side) <= kGeoTol) continue; // collinear: blocked at every eps
        if ((side > 0 ? 1 : -1) == mid.dir()) return i;
    }
    return std::nullopt;
}

} // namespace tautknot
