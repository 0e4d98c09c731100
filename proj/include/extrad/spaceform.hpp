#ifndef EXTRAD_SPACEFORM_HPP
#define EXTRAD_SPACEFORM_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "extrad/scalars.hpp"

namespace extrad {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Ambient model of the space form of curvature delta and dimension n+1:
//   delta = 0 : flat coordinates in R^{n+1}
//   delta > 0 : round sphere of radius 1/sqrt(delta) in R^{n+2}
//   delta < 0 : upper Minkowski hyperboloid <x,x> = 1/delta in R^{n+2},
//               signature (+,...,+,-), last coordinate positive.
struct SpaceForm {
    double delta = 0.0;
    int n_ambient = 3; // n + 1, hypersurface dimension n >= 2

    SpaceForm(double d, int na) : delta(d), n_ambient(na)
    {
        if (!(std::isfinite(d)))
            throw std::invalid_argument("SpaceForm: delta must be finite");
        if (na < 3)
            throw std::invalid_argument("SpaceForm: ambient dimension must be >= 3");
    }

    bool curved() const { return delta != 0.0; }
    int coord_dim() const { return curved() ? n_ambient + 1 : n_ambient; }

    // Bilinear form of the embedding space (Euclidean, or Minkowski for delta < 0).
    double dot(const Vec& a, const Vec& b) const
    {
        if (delta < 0.0) {
            const int m = coord_dim() - 1;
            return a.head(m).dot(b.head(m)) - a[m] * b[m];
        }
        return a.dot(b);
    }

    double norm(const Vec& a) const
    {
        const double q = dot(a, a);
        return q <= 0.0 ? 0.0 : std::sqrt(q);
    }

    // Base point used by the built-in families: origin, or the model pole.
    Vec pole() const
    {
        Vec p = Vec::Zero(coord_dim());
        if (curved())
            p[coord_dim() - 1] = 1.0 / std::sqrt(std::abs(delta));
        return p;
    }

    double hemisphere_radius() const
    {
        if (delta <= 0.0)
            return std::numeric_limits<double>::infinity();
        return M_PI / (2.0 * std::sqrt(delta));
    }
};

struct AmbientPoint {
    Vec coords;
};

struct TangentVector {
    Vec base; // coordinates of the base point
    Vec vec;  // ambient coordinates, model-orthogonal to the position constraint
};

// Geodesic distance to a pole together with the unit ambient gradient there.
struct RadialData {
    double r = 0.0;
    TangentVector grad_r;
};

// Constraint residual of a candidate model point (0 when exactly on the model).
double model_residual(const SpaceForm& sf, const Vec& x);

// Snap a near-model point back onto the model.  Applied after every exp/log so
// constraint drift stays below 1e-12.
Vec reproject(const SpaceForm& sf, const Vec& x);

// Remove the component of v that violates tangency at x.
Vec project_tangent(const SpaceForm& sf, const Vec& x, const Vec& v);

double geodesic_distance(const SpaceForm& sf, const Vec& p, const Vec& q);

Vec exp_map(const SpaceForm& sf, const Vec& p, const Vec& v);

// Inverse of exp_map on the injectivity domain; |log_map(p,q)| equals
// geodesic_distance(p,q).  Throws past the cut locus (delta > 0).
Vec log_map(const SpaceForm& sf, const Vec& p, const Vec& q);

RadialData radial_field(const SpaceForm& sf, const Vec& p0, const Vec& x);

// Isometry of the model taking `from` to `to` (rotation / Lorentz boost in the
// plane of the two points, translation when flat), applied to x.
Vec transport_point(const SpaceForm& sf, const Vec& from, const Vec& to, const Vec& x);

// Deterministic orthonormal basis of the model tangent space at x
// (n+1 vectors; the whole coordinate space when flat).
std::vector<Vec> tangent_basis(const SpaceForm& sf, const Vec& x);

} // namespace extrad

#endif
