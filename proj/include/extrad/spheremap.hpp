#ifndef EXTRAD_SPHEREMAP_HPP
#define EXTRAD_SPHEREMAP_HPP

#include "extrad/pinch.hpp"

namespace extrad {

// Radial projection onto the enclosing sphere S(center, R): the point at
// distance R on the geodesic from the center through x.  Defined for r > 0.
struct ProjectionMap {
    EnclosingBall ball;
    SpaceForm sf{0.0, 3};
};

Vec project_F(const ProjectionMap& map, const Vec& x);

// |dF(u)|^2 for a unit tangent vector u at the sample:
// |v|^2 sdelta^2(R)/sdelta^2(r) with v the part of u orthogonal to grad_r.
double dF_norm_analytic(const ProjectionMap& map, const SurfaceSample& sample, const Vec& u);

// sup over samples and unit tangent directions of | |dF(u)|^2 - 1 |.  The
// direction extremes are closed form: u parallel or orthogonal to the
// tangential part of grad_r.
double distortion(const ProjectionMap& map, const SurfaceSampling& s);

// Hyperboloid <-> Poincare ball conversion for delta = -1, centered so that
// the given hyperboloid point maps to the ball origin.
Vec hyperboloid_to_ball(const SpaceForm& sf, const Vec& center, const Vec& x);
Vec ball_to_hyperboloid(const SpaceForm& sf, const Vec& center, const Vec& y);

// h(r) = 2 / (1 - r^2); the conformal factor of the ball model is h^2.
double conformal_factor(double r_tilde);

// Hyperbolic mean curvature of the image surface from the Euclidean one:
// H = h^-1 (H~ + h^-1 <grad h, nu~>), with the gradient term determined by
// the radial component of the Euclidean normal.
double conformal_mean_curvature(double H_tilde, double r_tilde, double nu_tilde_radial);

// Conformal-model constants controlling the curvature threshold argument:
// a(R) = tdelta(R/2), rho solving a(R + rho) - a(R) = 4(2n-1) eta,
// E = (1 - a(R)^2)/2, the threshold E/(8 n eta), and the largest admissible
// eta, D = E^3/(2n).
struct Lemma43Geometry {
    int n = 2;
    double R = 0.0;
    double eta = 0.0;
    double a_R = 0.0;
    double rho = 0.0;
    double rho_prime = 0.0;  // (a(R+rho) - a(R-rho))/2
    double rho_dprime = 0.0; // a(R+rho) - a(R)
    double E = 0.0;
    double threshold = 0.0;
    double D = 0.0;
};

Lemma43Geometry lemma43_constants(int n, double R, double eta, double delta = -1.0);

} // namespace extrad

#endif
