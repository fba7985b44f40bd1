#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "airways/hexgrid.hpp"
#include "airways/rng.hpp"

using namespace airways;

TEST_CASE("locate: cell centers map to their own cell") {
    GridSpec grid;
    for (int li = 0; li < grid.cell_count(); ++li) {
        const CellIndex c = grid.cell_from_linear(li);
        const auto found = grid.locate(grid.center(c));
        REQUIRE(found.has_value());
        CHECK(*found == c);
    }
}

TEST_CASE("locate: one cell width across flats lands in the opposite-edge neighbor") {
    GridSpec grid;
    const CellIndex c{2, 2};
    for (int e = 1; e <= 6; ++e) {
        const auto nbr = grid.neighbor_across(c, e);
        REQUIRE(nbr.has_value());
        // displacement by the full across-flats width toward edge e
        const Point2D mid = grid.edge_midpoint(c, e);
        const Point2D ctr = grid.center(c);
        const Point2D p = ctr + 2.0 * (mid - ctr);
        CHECK(*grid.locate(p) == nbr->first);
    }
}

TEST_CASE("locate: outside the tiled region") {
    GridSpec grid;
    CHECK_FALSE(grid.locate({-50.0, 0.0}).has_value());
    CHECK_FALSE(grid.locate({0.0, 1e4}).has_value());
}

TEST_CASE("locate: boundary points resolve deterministically") {
    GridSpec grid;
    // midpoint of a shared edge is equidistant from both centers
    const CellIndex c{3, 3};
    const Point2D mid = grid.edge_midpoint(c, 1);
    const auto a = grid.locate(mid);
    const auto b = grid.locate(mid);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
    // lexicographically smallest of the two candidates
    const CellIndex nbr = grid.neighbor_across(c, 1)->first;
    const CellIndex expect = c < nbr ? c : nbr;
    CHECK(*a == expect);
}

TEST_CASE("neighbor_across is an involution and stays at axial distance 1") {
    GridSpec grid;
    for (int li = 0; li < grid.cell_count(); ++li) {
        const CellIndex c = grid.cell_from_linear(li);
        for (int e = 1; e <= 6; ++e) {
            const auto nbr = grid.neighbor_across(c, e);
            if (!nbr) continue;
            const auto back = grid.neighbor_across(nbr->first, nbr->second);
            REQUIRE(back.has_value());
            CHECK(back->first == c);
            CHECK(back->second == e);
            const int dq = nbr->first.q - c.q, dr = nbr->first.r - c.r;
            CHECK(std::max({std::abs(dq), std::abs(dr), std::abs(dq + dr)}) == 1);
        }
    }
}

TEST_CASE("corner cell has border edges; every in-bounds cell has 2..6 neighbors") {
    GridSpec grid;
    CHECK_FALSE(grid.neighbor_across({0, 0}, 4).has_value());
    CHECK_FALSE(grid.neighbor_across({0, 0}, 5).has_value());
    for (int li = 0; li < grid.cell_count(); ++li) {
        const CellIndex c = grid.cell_from_linear(li);
        int n = 0;
        for (int e = 1; e <= 6; ++e)
            if (grid.neighbor_across(c, e)) ++n;
        CHECK(n >= 2);
        CHECK(n <= 6);
    }
}

TEST_CASE("edge midpoints: shared edges coincide, apothem identity holds") {
    GridSpec grid;
    const CellIndex c{4, 5};
    for (int e = 1; e <= 6; ++e) {
        CHECK(distance(grid.edge_midpoint(c, e), grid.center(c)) ==
              doctest::Approx(grid.cell_width / 2).epsilon(1e-12));
        if (const auto nbr = grid.neighbor_across(c, e)) {
            const Point2D other = grid.edge_midpoint(nbr->first, nbr->second);
            CHECK(distance(grid.edge_midpoint(c, e), other) < 1e-9);
        }
    }
    // opposite-edge midpoints are a full cell width apart
    CHECK(distance(grid.edge_midpoint(c, 2), grid.edge_midpoint(c, 5)) ==
          doctest::Approx(grid.cell_width).epsilon(1e-12));
}

TEST_CASE("edge_pair_distance values at cell_width = 2.65") {
    GridSpec grid;
    CHECK(grid.edge_pair_distance(3, 3) == doctest::Approx(5.30));          // U-turn
    CHECK(grid.edge_pair_distance(1, 4) == doctest::Approx(2.65));          // opposite
    CHECK(grid.edge_pair_distance(1, 2) == doctest::Approx(1.325));         // adjacent
    CHECK(grid.edge_pair_distance(1, 3) == doctest::Approx(2.65 * std::sqrt(3.0) / 2));
}

TEST_CASE("edge_pair_distance symmetry and rotation invariance") {
    GridSpec grid;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            CHECK(grid.edge_pair_distance(i, j) == grid.edge_pair_distance(j, i));
            for (int k = 0; k < 6; ++k) {
                const int ri = (i - 1 + k) % 6 + 1, rj = (j - 1 + k) % 6 + 1;
                CHECK(grid.edge_pair_distance(i, j) ==
                      doctest::Approx(grid.edge_pair_distance(ri, rj)).epsilon(1e-12));
            }
        }
}

TEST_CASE("non-U-turn distances stand in ratios sin30 : sin60 : 1") {
    GridSpec grid;
    const double d60 = grid.edge_pair_distance(1, 2);
    const double d120 = grid.edge_pair_distance(1, 3);
    const double d180 = grid.edge_pair_distance(1, 4);
    CHECK(d60 / d180 == doctest::Approx(std::sin(M_PI / 6)).epsilon(1e-12));
    CHECK(d120 / d180 == doctest::Approx(std::sin(M_PI / 3)).epsilon(1e-12));
}

TEST_CASE("random in-bounds points are located consistently with neighbors") {
    GridSpec grid;
    SplitMix64 rng(7);
    Point2D lo, hi;
    grid.bounding_box(lo, hi);
    for (int k = 0; k < 2000; ++k) {
        const Point2D p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y)};
        const auto c = grid.locate(p);
        if (!c) continue;
        // containing cell's center is at least as close as any neighbor's
        const double d0 = distance(p, grid.center(*c));
        for (int e = 1; e <= 6; ++e)
            if (const auto nbr = grid.neighbor_across(*c, e))
                CHECK(d0 <= distance(p, grid.center(nbr->first)) + 1e-9);
    }
}
