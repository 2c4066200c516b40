// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tautknot/errors.hpp"
#include "tautknot/geometry.hpp"

namespace tautknot {

// Homotopy classes of arcs in the multipunctured plane are tracked by signed
// crossing words over a cut system: every vertical line x = l/2 through a
// column of punctures, split by the punctures into unit gaps.  The strips
// between consecutive cut lines are simply connected, so the reduced sequence
// of gap crossings is a complete homotopy invariant rel endpoints; stripping
// end-circle-adjacent letters from the front and back quotients out the
// freedom of sliding an endpoint along its anchor circle.

struct GapLetter {
    long long l = 1;  // odd; the cut line x = l/2
    long long j = 0;  // gap between centers (l, 2j-1) and (l, 2j+1), i.e. around y = j
    int sign = 0;     // +1 crossing with increasing x

    friend bool operator==(const GapLetter& a, const GapLetter& b) {
        return a.l == b.l && a.j == b.j && a.sign == b.sign;
    }
};

using Word = std::vector<GapLetter>;

inline bool same_gap(const GapLetter& a, const GapLetter& b) { return a.l == b.l && a.j == b.j; }

inline Word reduce_word(const Word& in) {
    Word out;
    for (const GapLetter& g : in) {
        if (!out.empty() && same_gap(out.back(), g) && out.back().sign == -g.sign)
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

inline bool gap_adjacent_to(const GapLetter& g, LatticePoint w) {
    return g.l == w.l && (2 * g.j == w.m - 1 || 2 * g.j == w.m + 1);
}

// Canonical representative of the class modulo sliding the endpoints along
// their anchor circles: sliding prepends/appends circle-adjacent letters, so
// strip those greedily from both ends.
inline Word strip_anchor_letters(Word w, LatticePoint start, LatticePoint end) {
    std::size_t lo = 0, hi = w.size();
    bool changed = true;
    while (changed) {
        changed = false;
        while (lo < hi && gap_adjacent_to(w[lo], start)) {
            ++lo;
            changed = true;
        }
        while (hi > lo && gap_adjacent_to(w[hi - 1], end)) {
            --hi;
            changed = true;
        }
    }
    return Word(w.begin() + lo, w.begin() + hi);
}

// A path piece for word computation.
struct PathPiece {
    enum Kind { Segment, Arc } kind = Segment;
    // Segment
    PlanePoint a, b;
    // Arc
    LatticePoint center;
    double angle_start = 0;
    double turn = 0;
    double eps = 0;

    static PathPiece segment(PlanePoint a, PlanePoint b) {
        PathPiece p;
        p.kind = Segment;
        p.a = a;
        p.b = b;
        return p;
    }
    static PathPiece arc(LatticePoint c, double angle_start, double turn, double eps) {
        PathPiece p;
        p.kind = Arc;
        p.center = c;
        p.angle_start = angle_start;
        p.turn = turn;
        p.eps = eps;
        return p;
    }

    double x_min() const {
        return kind == Segment ? std::min(a.x, b.x) : center.center().x - eps;
    }
    double x_max() const {
        return kind == Segment ? std::max(a.x, b.x) : center.center().x + eps;
    }
    PlanePoint end_point() const {
        if (kind == Segment) return b;
        PlanePoint c = center.center();
        double th = angle_start + turn;
        return {c.x + eps * std::cos(th), c.y + eps * std::sin(th)};
    }
};

namespace detail {

inline constexpr double kAngTol = 1e-9;

// Side of the piece relative to the cut line x = x_line, evaluated just
// inside the piece from the given end (0 = start, 1 = end).  Pieces never lie
// along a cut line: that would put them inside puncture disks.
inline int piece_side_near(const PathPiece& p, double x_line, int end) {
    if (p.kind == PathPiece::Segment) {
        double x0 = end == 0 ? p.a.x : p.b.x;
        double x1 = end == 0 ? p.b.x : p.a.x;
        if (std::abs(x0 - x_line) > kGeoTol) return x0 > x_line ? 1 : -1;
        return x1 > x0 ? 1 : -1;
    }
    double cx = p.center.center().x;
    double theta = end == 0 ? p.angle_start : p.angle_start + p.turn;
    double inward = (end == 0 ? 1.0 : -1.0) * (p.turn >= 0 ? 1.0 : -1.0);
    double x0 = cx + p.eps * std::cos(theta);
    if (std::abs(x0 - x_line) > kGeoTol) return x0 > x_line ? 1 : -1;
    double x1 = cx + p.eps * std::cos(theta + inward * 1e-5);
    return x1 > x0 ? 1 : -1;
}

struct CrossEvent {
    double param; // position within the piece, for ordering
    double y;
    int sign;
};

// Crossings strictly interior to the piece, ordered along it.
inline std::vector<CrossEvent> piece_crossings(const PathPiece& p, double x_line) {
    std::vector<CrossEvent> ev;
    if (p.kind == PathPiece::Segment) {
        double d0 = p.a.x - x_line, d1 = p.b.x - x_line;
        if (std::abs(d0) <= kGeoTol || std::abs(d1) <= kGeoTol) return ev; // junction handling
        if ((d0 < 0) == (d1 < 0)) return ev;
        double t = d0 / (d0 - d1);
        ev.push_back({t, p.a.y + t * (p.b.y - p.a.y), d1 > 0 ? 1 : -1});
        return ev;
    }
    PlanePoint c = p.center.center();
    if (std::abs(c.x - x_line) > kGeoTol) return ev; // arcs only reach their own column
    double total = std::abs(p.turn);
    int s = p.turn >= 0 ? 1 : -1;
    // Crossing angles: top (pi/2) and bottom (3pi/2) of the circle.
    for (double theta_c : {kPi / 2, 3 * kPi / 2}) {
        double off = wrap_angle(s * (theta_c - p.angle_start));
        // dx/du at the crossing, u = distance along the arc in turn direction
        double dxdu = -std::sin(theta_c) * s;
        int sign = dxdu > 0 ? 1 : -1;
        double y = c.y + p.eps * std::sin(theta_c);
        for (double u = off; u <= total - kAngTol; u += 2 * kPi) {
            if (u < kAngTol) continue; // junction at the very start
            ev.push_back({u, y, sign});
        }
    }
    std::sort(ev.begin(), ev.end(), [](const CrossEvent& a, const CrossEvent& b) {
        return a.param < b.param;
    });
    return ev;
}

} // namespace detail

// Signed gap-crossing word of a chain of pieces.
inline Word word_of_pieces(const std::vector<PathPiece>& pieces) {
    Word word;
    if (pieces.empty()) return word;
    double xmin = 1e300, xmax = -1e300;
    for (const auto& p : pieces) {
        xmin = std::min(xmin, p.x_min());
        xmax = std::max(xmax, p.x_max());
    }
    // Crossings keyed by (piece index, param) for global ordering.
    struct Keyed {
        std::size_t piece;
        double param;
        GapLetter letter;
    };
    std::vector<Keyed> all;

    auto first_odd_ge = [](double v) {
        long long k = static_cast<long long>(std::ceil(v));
        if ((k % 2 + 2) % 2 == 0) ++k;
        return k;
    };
    for (long long l = first_odd_ge(2 * (xmin - kGeoTol)); l <= 2 * (xmax + kGeoTol); l += 2) {
        double x_line = l / 2.0;
        int side = detail::piece_side_near(pieces[0], x_line, 0);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            for (const auto& e : detail::piece_crossings(pieces[i], x_line)) {
                if (e.sign != -side)
                    throw NonConvergence("inconsistent cut-line crossing parity");
                side = e.sign;
                long long j = static_cast<long long>(std::floor(e.y + 0.5));
                all.push_back({i, e.param, GapLetter{l, j, e.sign}});
            }
            int end_side = detail::piece_side_near(pieces[i], x_line, 1);
            if (i + 1 < pieces.size()) {
                int next_side = detail::piece_side_near(pieces[i + 1], x_line, 0);
                if (end_side != side)
                    throw NonConvergence("inconsistent cut-line side tracking");
                if (next_side != side) {
                    // crossing exactly at the junction point
                    PlanePoint jp = pieces[i].end_point();
                    long long j = static_cast<long long>(std::floor(jp.y + 0.5));
                    all.push_back({i + 1, -1.0, GapLetter{l, j, next_side}});
                    side = next_side;
                }
            }
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const Keyed& a, const Keyed& b) {
        if (a.piece != b.piece) return a.piece < b.piece;
        return a.param < b.param;
    });
    word.reserve(all.size());
    for (const auto& k : all) word.push_back(k.letter);
    return word;
}

inline std::string word_str(const Word& w) {
    std::string out;
    for (const auto& g : w) {
        out += (g.sign > 0 ? "+" : "-");
        out += "(" + std::to_string(g.l) + "," + std::to_string(g.j) + ") ";
    }
    return out;
}

} // namespace tautknot
