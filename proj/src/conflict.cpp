#include "airways/conflict.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace airways {

namespace {
// Radians of commanded turn rate per (mi/s of closing speed x unit gain).
// Calibrated so the closure term dominates the planner's pull during a
// head-on encounter while staying gentle for oblique, far-range traffic.
constexpr double kClosureScale = 50.0;
}

double repulsion_magnitude(const RelativeState& rel, const RepulsionParams& p) {
    const double range = norm(rel.r);
    if (range <= 0.0)
        throw std::invalid_argument("repulsion_magnitude: coincident aircraft positions");
    if (range > p.activation_radius) return 0.0;
    const double closing_mi_s = std::max(0.0, -dot(rel.rdot, rel.r) / range);
    return p.k_r / (range * range) + p.k_rdot * closing_mi_s * kClosureScale;
}

double total_heading_deviation(const Mover& own, std::span<const Mover> others,
                               const RepulsionParams& p, double dt, double max_turn) {
    double sum = 0.0;
    for (const auto& intruder : others) {
        const RelativeState rel{own.pos - intruder.pos, own.vel - intruder.vel};
        const double mag = repulsion_magnitude(rel, p);
        if (mag == 0.0) continue;
        const Point2D to_intruder = intruder.pos - own.pos;
        // Left of own velocity -> turn right (negative, CCW-positive angles);
        // dead ahead also breaks right.
        const double side = cross(own.vel, to_intruder);
        const double sign = side > 0.0 ? -1.0 : (side < 0.0 ? 1.0 : -1.0);
        sum += sign * mag;
    }
    const double limit = max_turn * dt;
    return std::clamp(sum * dt, -limit, limit);
}

}  // namespace airways
