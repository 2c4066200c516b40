// Copyright 2026 The tautknot Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "tautknot/geometry.hpp"
#include "tautknot/homotopy.hpp"
#include "test_rng.hpp"

using namespace tautknot;
using Catch::Approx;

namespace {

// Brute-force oracle for segment_disk_conflicts: test every center in a wide
// box by plain point-to-segment distance.
std::vector<LatticePoint> conflicts_oracle(PlanePoint a, PlanePoint b, Epsilon eps) {
    std::vector<std::pair<double, LatticePoint>> hits;
    double e = eps.value;
    for_centers_in_box(std::min(a.x, b.x) - 2, std::max(a.x, b.x) + 2, std::min(a.y, b.y) - 2,
                       std::max(a.y, b.y) + 2, [&](LatticePoint w) {
                           double d = point_segment_distance(w.center(), a, b);
                           if (d < e - kGeoTol) hits.emplace_back(closest_param(w.center(), a, b), w);
                       });
    std::sort(hits.begin(), hits.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    std::vector<LatticePoint> out;
    for (auto& h : hits) out.push_back(h.second);
    return out;
}

} // namespace

TEST_CASE("lattice points validate oddness") {
    CHECK_THROWS_AS(LatticePoint(2, 1), InputError);
    CHECK_THROWS_AS(LatticePoint(1, 0), InputError);
    LatticePoint w(3, -1);
    CHECK(w.center().x == Approx(1.5));
    CHECK(w.center().y == Approx(-0.5));
    CHECK(w.displaced(1, 2) == LatticePoint(5, 3));
    CHECK(tile_displacement(w, w.displaced(-2, 4)) == std::make_pair(-2LL, 4LL));
}

TEST_CASE("epsilon domain") {
    CHECK_THROWS_AS(Epsilon(0.0), InputError);
    CHECK_THROWS_AS(Epsilon(0.5), InputError);
    CHECK_THROWS_AS(Epsilon(-0.1), InputError);
    CHECK_NOTHROW(Epsilon(0.499));
}

TEST_CASE("segment_disk_conflicts examples") {
    // passes between disk rows
    CHECK(segment_disk_conflicts({0.6, 0.5}, {1.4, 0.5}, Epsilon(0.05)).empty());

    // collinear through a center
    double e = 0.1;
    auto hits = segment_disk_conflicts({0.5 + e, 0.5}, {2.5 - e, 0.5}, Epsilon(e));
    REQUIRE(hits.size() == 1);
    CHECK(hits[0] == LatticePoint(3, 1));

    // degenerate zero-length segment
    CHECK(segment_disk_conflicts({0.7, 0.7}, {0.7, 0.7}, Epsilon(0.2)).empty());
}

TEST_CASE("segment_disk_conflicts matches the brute-force oracle") {
    {
        auto got = segment_disk_conflicts({0.6, 0.4}, {2.6, 1.6}, Epsilon(0.25));
        auto want = conflicts_oracle({0.6, 0.4}, {2.6, 1.6}, Epsilon(0.25));
        CHECK(got == want);
        CHECK_FALSE(got.empty());
    }
    auto rng = testing::make_rng(20);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::uniform_real_distribution<double> radius(0.05, 0.45);
    for (int it = 0; it < 500; ++it) {
        PlanePoint a{coord(rng), coord(rng)};
        PlanePoint b{coord(rng), coord(rng)};
        Epsilon eps(radius(rng));
        CHECK(segment_disk_conflicts(a, b, eps) == conflicts_oracle(a, b, eps));
    }
}

TEST_CASE("bitangent outer, same labels") {
    TangentSegment seg = bitangent(LatticePoint(1, 1), 1, LatticePoint(3, 1), 1, Epsilon(0.1));
    CHECK(seg.a.x == Approx(0.5).margin(1e-12));
    CHECK(seg.a.y == Approx(0.6).margin(1e-12));
    CHECK(seg.b.x == Approx(1.5).margin(1e-12));
    CHECK(seg.b.y == Approx(0.6).margin(1e-12));
}

TEST_CASE("bitangent inner crosses the midpoint") {
    TangentSegment seg = bitangent(LatticePoint(1, 1), 1, LatticePoint(3, 1), -1, Epsilon(0.1));
    // the inner tangent passes through the midpoint of the centers
    PlanePoint mid{1.0, 0.5};
    CHECK(point_segment_distance(mid, seg.a, seg.b) == Approx(0.0).margin(1e-12));
}

TEST_CASE("bitangent tangency and perpendicularity") {
    Epsilon eps(0.2);
    LatticePoint c1(1, 1), c2(5, 3);
    for (int d1 : {-1, 1})
        for (int d2 : {-1, 1}) {
            TangentSegment seg = bitangent(c1, d1, c2, d2, eps);
            for (auto [pt, ctr] : {std::pair{seg.a, c1}, std::pair{seg.b, c2}}) {
                CHECK(dist(pt, ctr.center()) == Approx(eps.value).margin(1e-12));
                PlanePoint radial = pt - ctr.center();
                CHECK(std::abs(dot(radial, seg.direction())) < 1e-12);
            }
            // open interior clear of every disk
            CHECK(segment_disk_conflicts(seg, eps).empty());
        }
}

TEST_CASE("bitangent reverses under swapping the ends") {
    Epsilon eps(0.15);
    auto rng = testing::make_rng(21);
    std::uniform_int_distribution<int> pick(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int it = 0; it < 200; ++it) {
        LatticePoint c1(2 * pick(rng) + 1, 2 * pick(rng) + 1);
        LatticePoint c2(2 * pick(rng) + 1, 2 * pick(rng) + 1);
        if (c1 == c2) continue;
        int d1 = coin(rng) ? 1 : -1, d2 = coin(rng) ? 1 : -1;
        TangentSegment fwd = bitangent(c1, d1, c2, d2, eps);
        TangentSegment rev = bitangent(c2, d2, c1, d1, eps);
        CHECK(dist(fwd.a, rev.b) < 1e-12);
        CHECK(dist(fwd.b, rev.a) < 1e-12);
    }
}

TEST_CASE("bitangent near the inner existence bound") {
    // lattice centers are at least one tile apart and eps < 1/2, so the
    // inner bitangents always exist; the guard only trips right at the bound
    CHECK_NOTHROW(bitangent(LatticePoint(1, 1), 1, LatticePoint(3, 1), -1, Epsilon(0.499)));
    CHECK_NOTHROW(bitangent(LatticePoint(1, 1), 1, LatticePoint(3, 1), 1, Epsilon(0.499)));
    CHECK_THROWS_AS(bitangent(LatticePoint(1, 1), 1, LatticePoint(1, 1), -1, Epsilon(0.1)),
                    DegenerateTangent);
}

TEST_CASE("grid crossings") {
    CHECK(grid_crossings({0.6, 0.5}, {1.4, 0.5}) == std::make_pair(1LL, 0LL));
    CHECK(grid_crossings({0.5, 0.6}, {0.5, -0.4}) == std::make_pair(0LL, -1LL));
    CHECK(grid_crossings({0.61, 0.43}, {2.43, 1.57}) == std::make_pair(2LL, 1LL));
    CHECK_THROWS_AS(grid_crossings({1.0, 0.5}, {1.7, 0.5}), GridTouch);
    CHECK_THROWS_AS(grid_crossings({0.5, 1.0 + 1e-12}, {0.7, 0.6}), GridTouch);
}

TEST_CASE("grid crossings of a reversed segment negate") {
    auto rng = testing::make_rng(22);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    int done = 0;
    while (done < 300) {
        PlanePoint a{coord(rng), coord(rng)}, b{coord(rng), coord(rng)};
        try {
            auto [p, q] = grid_crossings(a, b);
            auto [rp, rq] = grid_crossings(b, a);
            CHECK(p == -rp);
            CHECK(q == -rq);
            ++done;
        } catch (const GridTouch&) {
        }
    }
}

TEST_CASE("gap words distinguish the two sides of a puncture") {
    // straight pass south of (1.5, 0.5) vs north of it
    std::vector<PathPiece> south{PathPiece::segment({0.7, 0.3}, {2.3, 0.3})};
    std::vector<PathPiece> north{PathPiece::segment({0.7, 0.7}, {2.3, 0.7})};
    Word ws = reduce_word(word_of_pieces(south));
    Word wn = reduce_word(word_of_pieces(north));
    REQUIRE(ws.size() == 1);
    REQUIRE(wn.size() == 1);
    CHECK(ws[0].l == 3);
    CHECK(wn[0].l == 3);
    CHECK(ws[0].j == 0);  // gap below the puncture at (1.5, 0.5)
    CHECK(wn[0].j == 1);  // gap above
}

TEST_CASE("gap words reduce backtracks") {
    std::vector<PathPiece> zigzag{
        PathPiece::segment({0.7, 0.3}, {1.7, 0.3}),
        PathPiece::segment({1.7, 0.3}, {0.9, 0.25}),
        PathPiece::segment({0.9, 0.25}, {2.3, 0.3}),
    };
    Word w = reduce_word(word_of_pieces(zigzag));
    REQUIRE(w.size() == 1);
    CHECK(w[0].l == 3);
    CHECK(w[0].sign == 1);
}

TEST_CASE("gap word of a full circle wrap") {
    // CCW full circle around (0.5, 0.5): crosses its own column twice
    std::vector<PathPiece> loop{PathPiece::arc(LatticePoint(1, 1), 0.0, 2 * kPi, 0.2)};
    Word w = reduce_word(word_of_pieces(loop));
    REQUIRE(w.size() == 2);
    CHECK(w[0].l == 1);
    CHECK(w[1].l == 1);
    CHECK(w[0].j != w[1].j);
}
