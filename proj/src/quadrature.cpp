#include "extrad/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace extrad {

GaussLegendre gauss_legendre(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: order must be positive");
    GaussLegendre out;
    out.nodes.resize(n);
    out.weights.resize(n);
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p1 = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, pm = 0.0;
            for (int k = 0; k < n; ++k) {
                const double tmp = p0;
                p0 = ((2.0 * k + 1.0) * x * p0 - k * pm) / (k + 1.0);
                pm = tmp;
            }
            p1 = n * (x * p0 - pm) / (x * x - 1.0);
            const double dx = p0 / p1;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        out.nodes[n - 1 - i] = x;
        out.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * p1 * p1);
    }
    return out;
}

SphereChartJet sphere_chart_jet(const Eigen::VectorXd& angles)
{
    const int n = (int)angles.size();
    const int m = n + 1;

    // factor table: g(i,k) and derivatives, u_i = prod_k g(i,k)
    auto factor = [&](int i, int k, int order) -> double {
        // i in [0, m), k in [0, n); component i uses sin(a_k) for k < i,
        // cos(a_i) at k == i (when i < n), and 1 for k > i.
        const double a = angles[k];
        bool use_sin;
        if (k < i)
            use_sin = true;
        else if (k == i && i < n)
            use_sin = false;
        else
            return order == 0 ? 1.0 : 0.0;
        switch (order) {
        case 0: return use_sin ? std::sin(a) : std::cos(a);
        case 1: return use_sin ? std::cos(a) : -std::sin(a);
        default: return use_sin ? -std::sin(a) : -std::cos(a);
        }
    };

    SphereChartJet jet;
    jet.u.resize(m);
    jet.du.assign(n, Eigen::VectorXd::Zero(m));
    jet.d2u.assign(n, std::vector<Eigen::VectorXd>(n, Eigen::VectorXd::Zero(m)));

    for (int i = 0; i < m; ++i) {
        double val = 1.0;
        for (int k = 0; k < n; ++k)
            val *= factor(i, k, 0);
        jet.u[i] = val;

        for (int k = 0; k < n; ++k) {
            double d = factor(i, k, 1);
            if (d == 0.0) {
                jet.du[k][i] = 0.0;
                continue;
            }
            for (int l = 0; l < n; ++l)
                if (l != k)
                    d *= factor(i, l, 0);
            jet.du[k][i] = d;
        }

        for (int k = 0; k < n; ++k) {
            for (int l = k; l < n; ++l) {
                double d = (k == l) ? factor(i, k, 2)
                                    : factor(i, k, 1) * factor(i, l, 1);
                if (d != 0.0)
                    for (int q = 0; q < n; ++q)
                        if (q != k && q != l)
                            d *= factor(i, q, 0);
                jet.d2u[k][l][i] = d;
                jet.d2u[l][k][i] = d;
            }
        }
    }
    return jet;
}

std::vector<ParamNode> sphere_param_grid(int n, int resolution)
{
    if (n < 1)
        throw std::invalid_argument("sphere_param_grid: n must be >= 1");
    if (resolution < 2)
        throw std::invalid_argument("sphere_param_grid: resolution must be >= 2");

    const GaussLegendre gl = gauss_legendre(resolution);
    const int n_lon = 2 * resolution;
    const double dphi = 2.0 * M_PI / n_lon;

    std::vector<ParamNode> nodes;
    // odometer over the n-1 colatitude indices, longitude innermost
    std::vector<int> idx(n - 1, 0);
    bool done = false;
    while (!done) {
        Eigen::VectorXd angles(n);
        double w = 1.0;
        for (int k = 0; k < n - 1; ++k) {
            const double x = gl.nodes[idx[k]];
            const double theta = std::acos(x);
            angles[k] = theta;
            w *= gl.weights[idx[k]] / std::sin(theta); // dx = -sin(theta) dtheta
        }
        for (int j = 0; j < n_lon; ++j) {
            angles[n - 1] = (j + 0.5) * dphi;
            nodes.push_back({angles, w * dphi});
        }
        if (n == 1)
            break;
        int k = 0;
        while (k < n - 1) {
            if (++idx[k] < resolution)
                break;
            idx[k] = 0;
            ++k;
        }
        done = (k == n - 1);
    }
    return nodes;
}

} // namespace extrad
