#ifndef EXTRAD_QUADRATURE_HPP
#define EXTRAD_QUADRATURE_HPP

#include <Eigen/Dense>
#include <vector>

namespace extrad {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

GaussLegendre gauss_legendre(int n);

// Angular chart of the unit parameter sphere S^n in R^{n+1}:
// angles a_1..a_{n-1} in (0,pi), a_n in [0,2pi),
//   u_i = cos(a_i) * prod_{j<i} sin(a_j)   (i <= n),
//   u_{n+1} = prod_{j<=n} sin(a_j).
// Each component is a product of univariate sin/cos factors, so first and
// second angle derivatives come from the product rule.
struct SphereChartJet {
    Eigen::VectorXd u;                             // n+1
    std::vector<Eigen::VectorXd> du;               // n vectors of length n+1
    std::vector<std::vector<Eigen::VectorXd>> d2u; // n x n, symmetric
};

SphereChartJet sphere_chart_jet(const Eigen::VectorXd& angles);

// Product quadrature grid over the parameter sphere: Gauss-Legendre in the
// cosine of each colatitude, uniform in the longitude.  `weight` integrates
// d(a_1)...d(a_n), i.e. it already divides out the sin factors of the
// cosine substitution.  Nodes exclude the chart poles.
struct ParamNode {
    Eigen::VectorXd angles;
    double weight;
};

std::vector<ParamNode> sphere_param_grid(int n, int resolution);

} // namespace extrad

#endif
