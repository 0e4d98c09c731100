#ifndef EXTRAD_PINCH_HPP
#define EXTRAD_PINCH_HPP

#include <optional>
#include <string>

#include "extrad/immersion.hpp"
#include "extrad/radius.hpp"

namespace extrad {

// The field Z = sdelta(r) grad_r at a sample, split along the hypersurface.
struct ZField {
    TangentVector Z;
    Vec Z_tan;        // projection onto the tangent bundle of the surface
    double Z_nu = 0.0; // <Z, nu>
};

ZField z_field(const SpaceForm& sf, const SurfaceSample& s, const EnclosingBall& ball);

// Per-sample scalars relative to a ball center; everything the pinching
// diagnostics need, and all a homothety acts on.
struct RadialSample {
    double r = 0.0;
    double weight = 0.0;
    double H = 0.0;       // signed mean curvature
    double cos_nu = 0.0;  // <grad_r, nu>
    double grad_tan = 0.0; // |nabla r| along the surface, in [0,1]
    double b_frob = 0.0;
    double b_op = 0.0;
};

struct RadialScalars {
    double delta = 0.0;
    int n = 2;
    double volume = 0.0;
    double R = 0.0;
    std::vector<RadialSample> samples;

    RadialScalars rescaled(double lambda) const;
};

RadialScalars radial_scalars(const SurfaceSampling& s, const EnclosingBall& ball);

// Integral of cdelta(r) + <Z, H_vec> over the surface; vanishes for closed
// hypersurfaces by the divergence theorem (the flat case integrates to the
// Hsiung-Minkowski identity).  Returns the raw integral.
double minkowski_residual(const SurfaceSampling& s, const EnclosingBall& ball);
double minkowski_residual(const RadialScalars& rs);

// delta * int |Z^T|^2 - n * int (cdelta^2(r) - |H| cdelta(r) sdelta(r)),
// nonnegative up to quadrature error on valid closed surfaces.
double lemma21ii_slack(const SurfaceSampling& s, const EnclosingBall& ball);
double lemma21ii_slack(const RadialScalars& rs);

struct RadiusGaps {
    double gap_inf = 0.0;                  // tdelta(R) - 1/|H|_inf
    std::optional<double> gap_2p;          // tdelta(R) - V^(1/2p)/|H|_2p, delta >= 0
    std::optional<double> alpha;           // (1/sqrt(-delta) - 1/|H|_inf)/2, delta < 0
    double H_inf = 0.0;
    double H_2p = 0.0;
};

RadiusGaps radius_gaps(const SpaceForm& sf, const SurfaceSampling& s,
                       const EnclosingBall& ball, double p);
RadiusGaps radius_gaps(const RadialScalars& rs, double p);

// phi measures radial concentration, psi tangential radiality; both vanish
// exactly on centered geodesic spheres.
struct PhiPsi {
    std::vector<double> phi;
    std::vector<double> psi;
    double phi_l2 = 0.0, phi_inf = 0.0;
    double psi_l2 = 0.0, psi_inf = 0.0;
};

PhiPsi phi_psi(const SurfaceSampling& s, const EnclosingBall& ball);
PhiPsi phi_psi(const RadialScalars& rs);

// Explicit L2 bounds on phi and psi under the pinching hypotheses, evaluated
// on the unit-volume normalization of the surface.  `applicable` is false
// when the hypothesis (C <= alpha for delta < 0, C < 1 for delta >= 0) fails;
// that is a marker, not a failure.
struct L2BoundCheck {
    bool applicable = false;
    std::string reason;
    double pinch_constant = 0.0; // measured gap C on the normalized surface
    double phi_l2sq = 0.0, phi_rhs = 0.0, phi_slack = 0.0;
    double psi_l2sq = 0.0, psi_rhs = 0.0, psi_slack = 0.0;
};

L2BoundCheck l2_bound_checks(const SurfaceSampling& s, const EnclosingBall& ball, double p);
L2BoundCheck l2_bound_checks(const RadialScalars& rs, double p);

// Hausdorff distance between the sampled surface and the enclosing sphere
// S(center, R): max of sup(R - r) over samples and, over a refined grid of
// sphere points, the least distance to on-surface points.  The sphere-side
// grid is refined (doubling) until stable to 1e-4.
double hausdorff_to_sphere(const SurfaceSampling& s, const EnclosingBall& ball,
                           int sphere_resolution);

// Symmetric Hausdorff distance between two point clouds.
double hausdorff_points(const SpaceForm& sf, const std::vector<Vec>& a,
                        const std::vector<Vec>& b);

// Full diagnostic record for one surface; see the CSV schema in report.hpp.
struct PinchReport {
    std::string family;
    double param = 0.0;
    double delta = 0.0;
    int n = 2;
    double volume = 0.0;
    double R = 0.0;
    double H_inf = 0.0;
    double p = 1.0;
    double H_2p = 0.0;
    double B_inf = 0.0; // sup of the Frobenius norm of the shape operator
    double gap_inf = 0.0;
    std::optional<double> gap_2p;
    std::optional<double> alpha;
    double minkowski_residual = 0.0; // relative to volume
    double lemma21ii_slack = 0.0;
    double phi_l2 = 0.0, phi_inf = 0.0;
    double psi_l2 = 0.0, psi_inf = 0.0;
    std::optional<double> phi_slack, psi_slack;
    double hausdorff = 0.0;
    double distortion = 0.0;
    std::string status = "ok";
};

} // namespace extrad

#endif
