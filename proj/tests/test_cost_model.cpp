#include <doctest.h>

#include "airways/cost_model.hpp"
#include "airways/rng.hpp"

using namespace airways;

namespace {
TrafficMatrix two_way_split() {  // t_{4,1} = t_{4,2} = 5
    TrafficMatrix t;
    for (int k = 0; k < 5; ++k) {
        t.record(4, 1);
        t.record(4, 2);
    }
    return t;
}
}  // namespace

TEST_CASE("unimpeded matrix at cell_width = 2.65") {
    GridSpec grid;
    const CostMatrix u = unimpeded_matrix(grid);
    CHECK(u[0][0] == doctest::Approx(5.30));   // U-turn
    CHECK(u[0][3] == doctest::Approx(2.65));   // opposite pair
    CHECK(u[3][1] == doctest::Approx(2.65 * std::sqrt(3.0) / 2));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            CHECK(u[i][j] == u[j][i]);
            CHECK(u[i][j] > 0.0);
        }
}

TEST_CASE("traffic cost: gain zero gives the all-ones matrix") {
    const auto c = traffic_cost(normalized(two_way_split()), 0.0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(c[i][j] == doctest::Approx(1.0));
}

TEST_CASE("traffic cost: concentrated history with k_t = 3") {
    TrafficMatrix t;
    t.record(4, 2);
    const auto c = traffic_cost(normalized(t), 3.0);
    CHECK(c[3][1] == doctest::Approx(-2.0));
    CHECK(c[0][0] == doctest::Approx(1.0));
    CHECK(c[3][0] == doctest::Approx(1.0));
}

TEST_CASE("traffic cost: virgin cell is all ones at any gain") {
    const auto c = traffic_cost(normalized(TrafficMatrix{}), 5.0);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(c[i][j] == doctest::Approx(1.0));
}

TEST_CASE("total cost: gain zero is U + 1 regardless of history") {
    GridSpec grid;
    const CostMatrix u = unimpeded_matrix(grid);
    const auto c = total_cost(u, normalized(two_way_split()), 0.0, 1e-3);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(c[i][j] == doctest::Approx(u[i][j] + 1.0));
}

TEST_CASE("total cost: two-way split at k_t = 3") {
    GridSpec grid;
    const CostMatrix u = unimpeded_matrix(grid);
    const auto c = total_cost(u, normalized(two_way_split()), 3.0, 1e-3);
    CHECK(c[3][0] == doctest::Approx(u[3][0] - 0.5));
    CHECK(c[3][1] == doctest::Approx(u[3][1] - 0.5));
}

TEST_CASE("total cost: saturated pair clamps at epsilon") {
    GridSpec grid;
    TrafficMatrix t;
    t.record(1, 2);  // adjacent pair, u = 1.325
    const CostMatrix u = unimpeded_matrix(grid);
    const double eps = 1e-3;
    const auto c = total_cost(u, normalized(t), 5.0, eps);
    // raw value 1.325 + 1 - 5 = -2.675
    CHECK(c[0][1] == doctest::Approx(eps));
    CHECK(c[1][0] == doctest::Approx(u[1][0] + 1.0));  // reverse direction unused
}

TEST_CASE("raw cost is non-increasing in k_t, strictly on used pairs") {
    GridSpec grid;
    SplitMix64 rng(5);
    const CostMatrix u = unimpeded_matrix(grid);
    TrafficMatrix t;
    for (int n = 0; n < 30; ++n)
        t.record(static_cast<int>(rng.next() % 6) + 1, static_cast<int>(rng.next() % 6) + 1);
    const auto n = normalized(t);
    for (double k = 0.0; k < 5.0; k += 0.5) {
        const auto lo = traffic_cost(n, k), hi = traffic_cost(n, k + 0.5);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                const double raw_lo = u[i][j] + lo[i][j], raw_hi = u[i][j] + hi[i][j];
                if (n.weights[i][j] > 0.0)
                    CHECK(raw_hi < raw_lo);
                else
                    CHECK(raw_hi == raw_lo);
            }
    }
}

TEST_CASE("attraction ordering: busier pair with equal distance is cheaper") {
    GridSpec grid;
    TrafficMatrix t;
    for (int k = 0; k < 7; ++k) t.record(1, 2);  // adjacent, busy
    for (int k = 0; k < 2; ++k) t.record(2, 3);  // adjacent, quieter
    const CostMatrix u = unimpeded_matrix(grid);
    const auto n = normalized(t);
    for (double kt : {0.5, 1.0, 3.0, 5.0}) {
        const double busy = u[0][1] + 1.0 - kt * n.weights[0][1];
        const double quiet = u[1][2] + 1.0 - kt * n.weights[1][2];
        CHECK(busy < quiet);
    }
}
