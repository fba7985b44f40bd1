#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "airways/conflict.hpp"

using namespace airways;

namespace {
constexpr double kCruise = 250.0 / 3600.0;  // mi/s
const RepulsionParams kDefaults{};
}  // namespace

TEST_CASE("repulsion magnitude: worked head-on value") {
    // 5 mi apart, net closing speed 500 mph = 0.1388.. mi/s, scale 50
    const double closing = 500.0 / 3600.0;
    const RelativeState rel{{5.0, 0.0}, {-closing, 0.0}};
    const double r = repulsion_magnitude(rel, kDefaults);
    CHECK(r == doctest::Approx(0.01 / 25.0 + 0.01 * closing * 50.0).epsilon(1e-12));
    CHECK(r == doctest::Approx(0.0698444).epsilon(1e-4));
}

TEST_CASE("repulsion magnitude: zero beyond the activation radius") {
    const RelativeState rel{{12.0, 0.0}, {-1.0, 0.0}};
    CHECK(repulsion_magnitude(rel, kDefaults) == 0.0);
}

TEST_CASE("repulsion magnitude: receding traffic keeps only the range term") {
    const RelativeState rel{{5.0, 0.0}, {0.1, 0.0}};
    CHECK(repulsion_magnitude(rel, kDefaults) == doctest::Approx(0.0004).epsilon(1e-12));
}

TEST_CASE("repulsion magnitude: purely tangential motion keeps only the range term") {
    const RelativeState rel{{0.0, 4.0}, {0.2, 0.0}};
    CHECK(repulsion_magnitude(rel, kDefaults) ==
          doctest::Approx(0.01 / 16.0).epsilon(1e-12));
}

TEST_CASE("repulsion magnitude: coincident positions are rejected") {
    CHECK_THROWS_AS(repulsion_magnitude({{0.0, 0.0}, {1.0, 0.0}}, kDefaults),
                    std::invalid_argument);
}

TEST_CASE("no traffic, no deviation") {
    const Mover own{{0.0, 0.0}, {kCruise, 0.0}};
    CHECK(total_heading_deviation(own, {}, kDefaults, 1.0, 0.1) == 0.0);
}

TEST_CASE("dead-ahead conflict breaks into a right turn") {
    const Mover own{{0.0, 0.0}, {kCruise, 0.0}};
    const std::vector<Mover> others{{{3.0, 0.0}, {-kCruise, 0.0}}};
    const double dev = total_heading_deviation(own, others, kDefaults, 1.0, 0.2);
    CHECK(dev < 0.0);
}

TEST_CASE("intruder on the left pushes right, and mirrored geometry flips the sign") {
    const Mover own{{0.0, 0.0}, {kCruise, 0.0}};
    const std::vector<Mover> left{{{3.0, 1.0}, {-kCruise, 0.0}}};
    const std::vector<Mover> right{{{3.0, -1.0}, {-kCruise, 0.0}}};
    const double dl = total_heading_deviation(own, left, kDefaults, 1.0, 0.5);
    const double dr = total_heading_deviation(own, right, kDefaults, 1.0, 0.5);
    CHECK(dl < 0.0);
    CHECK(dr > 0.0);
    CHECK(dl == doctest::Approx(-dr).epsilon(1e-12));
}

TEST_CASE("a symmetric pair of intruders cancels") {
    const Mover own{{0.0, 0.0}, {kCruise, 0.0}};
    const std::vector<Mover> others{{{3.0, 1.0}, {-kCruise, -0.01}},
                                    {{3.0, -1.0}, {-kCruise, 0.01}}};
    CHECK(total_heading_deviation(own, others, kDefaults, 1.0, 0.5) ==
          doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("the per-step deviation is clamped to the turn-rate limit") {
    const double max_turn = 6.0 * M_PI / 180.0;
    const Mover own{{0.0, 0.0}, {kCruise, 0.0}};
    const std::vector<Mover> others{{{0.1, 0.0}, {-kCruise, 0.0}}};
    const double dev = total_heading_deviation(own, others, kDefaults, 1.0, max_turn);
    CHECK(dev == doctest::Approx(-max_turn).epsilon(1e-12));
}

TEST_CASE("closer traffic repels harder") {
    const Mover own{{0.0, 0.0}, {kCruise, 0.0}};
    const std::vector<Mover> near{{{2.0, 1.0}, {0.0, 0.0}}};
    const std::vector<Mover> far{{{4.0, 2.0}, {0.0, 0.0}}};
    const double dn = total_heading_deviation(own, near, kDefaults, 1.0, 0.5);
    const double df = total_heading_deviation(own, far, kDefaults, 1.0, 0.5);
    CHECK(std::abs(dn) > std::abs(df));
}

TEST_CASE("deviation scales with dt below the clamp") {
    const Mover own{{0.0, 0.0}, {kCruise, 0.0}};
    const std::vector<Mover> others{{{5.0, 2.0}, {-kCruise, 0.0}}};
    const double d1 = total_heading_deviation(own, others, kDefaults, 1.0, 0.5);
    const double d2 = total_heading_deviation(own, others, kDefaults, 2.0, 0.5);
    CHECK(d2 == doctest::Approx(2.0 * d1).epsilon(1e-12));
}
