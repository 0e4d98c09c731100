#ifndef EXTRAD_IMMERSION_HPP
#define EXTRAD_IMMERSION_HPP

#include <functional>
#include <memory>
#include <string>

#include "extrad/quadrature.hpp"
#include "extrad/spaceform.hpp"

namespace extrad {

// Point plus first and second parameter derivatives of the immersion.
struct ImmersionJet {
    Vec x;
    std::vector<Vec> d1;              // n columns
    std::vector<std::vector<Vec>> d2; // n x n, symmetric
};

struct FdConfig {
    double step1 = 1e-5; // central differences, first derivatives
    double step2 = 1e-4; // second-derivative stencil
};

// Parametric hypersurface phi : S^n -> M^{n+1}(delta), parameterized through
// the angular chart of the unit n-sphere.  `jet` is the analytic derivative
// oracle; when absent, central finite differences of `eval` are used.
struct Immersion {
    int domain_dim = 2; // n
    SpaceForm sf{0.0, 3};
    std::function<Vec(const Eigen::VectorXd&)> eval;
    std::function<ImmersionJet(const Eigen::VectorXd&)> jet; // may be empty
    FdConfig fd_fallback;
    Vec orientation_center; // normals point away from here; defaults to sf.pole()
    std::string label;
};

ImmersionJet evaluate_jet(const Immersion& imm, const Eigen::VectorXd& angles);

struct SurfaceSample {
    Eigen::VectorXd u;       // chart angles
    Vec x;                   // ambient coordinates
    std::vector<Vec> tangent_basis; // the n coordinate tangent vectors
    Mat metric;              // first fundamental form, n x n
    Vec nu;                  // unit normal within the model tangent space
    Mat B;                   // second fundamental form w.r.t. nu, n x n
    Vec H_vec;               // mean curvature vector (orientation free)
    double H = 0.0;          // signed, H = <H_vec, nu>
    double B_frob = 0.0;     // Frobenius norm of the shape operator
    double B_op = 0.0;       // largest absolute eigenvalue of the shape operator
    double weight = 0.0;     // quadrature area element
};

struct SurfaceSampling {
    SpaceForm sf{0.0, 3};
    int domain_dim = 2;
    std::vector<SurfaceSample> samples;
    std::string quadrature; // rule description
    double total_volume = 0.0;
    std::shared_ptr<const Immersion> immersion; // provenance, used by diagnostics
};

// Discretize on the product grid.  Throws on singular metric or, for
// delta > 0, when the samples do not fit in a common open hemisphere.
SurfaceSampling sample(const Immersion& imm, const SpaceForm& sf, int resolution);

// Curvature data of a sampling, one entry per sample.
struct CurvatureField {
    std::vector<double> H;
    std::vector<Vec> H_vec;
    std::vector<Mat> B;
    std::vector<double> B_op;
};

CurvatureField mean_curvature_field(const SurfaceSampling& s);

// (integral of |f|^p dv)^(1/p); p = infinity returns the sample max.
double lp_norm(const SurfaceSampling& s, const std::vector<double>& field, double p);

constexpr double lp_infinity = std::numeric_limits<double>::infinity();

// Homothety to unit volume: lengths scale by V^{-1/n}, curvature delta by
// V^{2/n}, mean curvature by V^{1/n}.
struct Homothety {
    double lambda = 1.0; // length scale factor V^{-1/n}
    double delta_prime = 0.0;
    double R_prime = 0.0;
    double H_inf_prime = 0.0;
};

Homothety normalize_unit_volume(const SpaceForm& sf, const SurfaceSampling& s,
                                double R, double H_inf);

} // namespace extrad

#endif
