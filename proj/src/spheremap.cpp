#include "extrad/spheremap.hpp"

#include <cmath>

namespace extrad {

Vec project_F(const ProjectionMap& map, const Vec& x)
{
    const double r = geodesic_distance(map.sf, map.ball.center, x);
    if (r < 1e-14)
        throw std::domain_error("project_F: undefined at the ball center");
    const Vec u = log_map(map.sf, map.ball.center, x) / r;
    return exp_map(map.sf, map.ball.center, map.ball.radius * u);
}

double dF_norm_analytic(const ProjectionMap& map, const SurfaceSample& sample, const Vec& u)
{
    const SpaceForm& sf = map.sf;
    const RadialData rad = radial_field(sf, map.ball.center, sample.x);
    const double un = sf.dot(u, rad.grad_r.vec);
    const double v2 = std::max(0.0, sf.dot(u, u) - un * un);
    const double ratio = sdelta(sf.delta, map.ball.radius) / sdelta(sf.delta, rad.r);
    return v2 * ratio * ratio;
}

double distortion(const ProjectionMap& map, const SurfaceSampling& s)
{
    const SpaceForm& sf = map.sf;
    const double sR = sdelta(sf.delta, map.ball.radius);
    double worst = 0.0;
    for (const SurfaceSample& smp : s.samples) {
        const RadialData rad = radial_field(sf, map.ball.center, smp.x);
        const double cosnu = sf.dot(rad.grad_r.vec, smp.nu);
        const double q2 = std::max(0.0, 1.0 - cosnu * cosnu); // |nabla r|^2
        const double ratio = std::pow(sR / sdelta(sf.delta, rad.r), 2);
        // extremes of |v|^2 over unit tangents: 1 and 1 - q2
        const double hi = std::abs(ratio - 1.0);
        const double lo = std::abs(ratio * (1.0 - q2) - 1.0);
        worst = std::max(worst, std::max(hi, lo));
    }
    return worst;
}

namespace {

void require_unit_hyperbolic(const SpaceForm& sf, const char* who)
{
    if (sf.delta != -1.0)
        throw std::invalid_argument(std::string(who) + ": conformal ball model requires delta = -1");
}

} // namespace

Vec hyperboloid_to_ball(const SpaceForm& sf, const Vec& center, const Vec& x)
{
    require_unit_hyperbolic(sf, "hyperboloid_to_ball");
    const Vec z = transport_point(sf, center, sf.pole(), x);
    const int m = sf.coord_dim() - 1;
    return z.head(m) / (1.0 + z[m]);
}

Vec ball_to_hyperboloid(const SpaceForm& sf, const Vec& center, const Vec& y)
{
    require_unit_hyperbolic(sf, "ball_to_hyperboloid");
    const double q = y.squaredNorm();
    if (q >= 1.0)
        throw std::domain_error("ball_to_hyperboloid: point outside the unit ball");
    const int m = sf.coord_dim() - 1;
    Vec z(sf.coord_dim());
    z.head(m) = 2.0 * y / (1.0 - q);
    z[m] = (1.0 + q) / (1.0 - q);
    return transport_point(sf, sf.pole(), center, z);
}

double conformal_factor(double r_tilde)
{
    if (std::abs(r_tilde) >= 1.0)
        throw std::domain_error("conformal_factor: |r| must be < 1");
    return 2.0 / (1.0 - r_tilde * r_tilde);
}

double conformal_mean_curvature(double H_tilde, double r_tilde, double nu_tilde_radial)
{
    const double h = conformal_factor(r_tilde);
    const double grad_h_nu = 4.0 * r_tilde * nu_tilde_radial /
                             std::pow(1.0 - r_tilde * r_tilde, 2);
    return (H_tilde + grad_h_nu / h) / h;
}

Lemma43Geometry lemma43_constants(int n, double R, double eta, double delta)
{
    if (!(delta < 0.0))
        throw std::invalid_argument("lemma43_constants: hyperbolic branch only (delta < 0)");
    if (!(eta > 0.0))
        throw std::invalid_argument("lemma43_constants: eta must be positive");
    if (!(R > 0.0) || n < 2)
        throw std::invalid_argument("lemma43_constants: need R > 0 and n >= 2");

    const auto a = [&](double x) { return tdelta(delta, x / 2.0); };

    Lemma43Geometry out;
    out.n = n;
    out.R = R;
    out.eta = eta;
    out.a_R = a(R);

    const double target = out.a_R + 4.0 * (2.0 * n - 1.0) * eta;
    if (target >= 1.0 / std::sqrt(-delta))
        throw std::domain_error("lemma43_constants: 4(2n-1)eta exceeds the range of the radius map");

    // a(R + rho) is strictly increasing and bounded by 1/sqrt(-delta);
    // bracket then bisect
    double lo = 0.0, hi = 1.0;
    while (a(R + hi) < target)
        hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (a(R + mid) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-16 * (1.0 + hi))
            break;
    }
    out.rho = 0.5 * (lo + hi);
    out.rho_prime = 0.5 * (a(R + out.rho) - a(R - out.rho));
    out.rho_dprime = a(R + out.rho) - out.a_R;
    out.E = 0.5 * (1.0 - out.a_R * out.a_R);
    out.threshold = out.E / (8.0 * n * eta);
    out.D = std::pow(out.E, 3) / (2.0 * n);
    return out;
}

} // namespace extrad
