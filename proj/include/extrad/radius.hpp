#ifndef EXTRAD_RADIUS_HPP
#define EXTRAD_RADIUS_HPP

#include "extrad/spaceform.hpp"

namespace extrad {

// Smallest enclosing geodesic ball of a finite point set.
// Invariants on every output: all points within radius + 1e-8 of center,
// and at least one point at distance >= radius - 1e-6.
struct EnclosingBall {
    Vec center;
    double radius = 0.0;
    long iterations = 0;
    double residual = 0.0; // last center movement
};

// Farthest-point iteration p <- exp_p(log_p(farthest)/(k+2)) to get near the
// optimum, then a monotone pattern search over the tangent frame directions
// with shrinking steps.  Stops when the center movement drops below tol.
// Ties in the farthest-point scan break toward the lowest index.
EnclosingBall min_enclosing_ball(const SpaceForm& sf, const std::vector<Vec>& points,
                                 double tol = 1e-10);

// Test oracle, at most 500 points: 2-approximation from the farthest pair,
// refined by a shrinking grid search over geodesic perturbations of the
// midpoint until the radius improvement falls below 1e-9.  Independent of the
// production solver above.
EnclosingBall enclosing_ball_oracle(const SpaceForm& sf, const std::vector<Vec>& points);

} // namespace extrad

#endif
