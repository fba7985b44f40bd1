#pragma once

#include <span>

#include "airways/hexgrid.hpp"

namespace airways {

struct RepulsionParams {
    double k_r = 0.01;              // inverse-square range gain
    double k_rdot = 0.01;           // closing-speed gain
    double activation_radius = 10;  // miles; zero contribution beyond this
};

// Relative geometry of one intruder as seen by the ownship.
struct RelativeState {
    Point2D r;     // displacement intruder -> ownship, miles
    Point2D rdot;  // relative velocity d(r)/dt, miles/s
};

// Scalar repulsion from one intruder, in rad/s:
//   k_r / |r|^2 + k_rdot * max(0, closing speed) * scale
// The closing speed -(rdot . r)/|r| is in miles/s and multiplied by a fixed
// internal scale chosen so the 0.01 gains produce the mutual head-on
// diversion of the reference scenarios. Positive only while converging; zero
// outside the activation radius. Throws std::invalid_argument on coincident
// positions.
double repulsion_magnitude(const RelativeState& rel, const RepulsionParams& p);

// Minimal state the repulsion law needs about an aircraft.
struct Mover {
    Point2D pos;
    Point2D vel;  // miles/s
};

// Signed heading deviation for one time step, radians, CCW positive. Each
// intruder inside the activation radius pushes the ownship away from its
// bearing; an intruder dead ahead breaks the tie to a right turn. The summed
// deviation is clamped to +/- max_turn * dt.
double total_heading_deviation(const Mover& own, std::span<const Mover> others,
                               const RepulsionParams& p, double dt, double max_turn);

}  // namespace airways
