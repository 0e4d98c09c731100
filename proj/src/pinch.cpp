#include "extrad/pinch.hpp"

#include <cmath>

namespace extrad {

ZField z_field(const SpaceForm& sf, const SurfaceSample& s, const EnclosingBall& ball)
{
    const RadialData rad = radial_field(sf, ball.center, s.x);
    ZField z;
    z.Z.base = s.x;
    z.Z.vec = sdelta(sf.delta, rad.r) * rad.grad_r.vec;
    z.Z_nu = sf.dot(z.Z.vec, s.nu);
    z.Z_tan = z.Z.vec - z.Z_nu * s.nu;
    return z;
}

RadialScalars radial_scalars(const SurfaceSampling& s, const EnclosingBall& ball)
{
    RadialScalars rs;
    rs.delta = s.sf.delta;
    rs.n = s.domain_dim;
    rs.volume = s.total_volume;
    rs.R = ball.radius;
    rs.samples.reserve(s.samples.size());
    for (const SurfaceSample& smp : s.samples) {
        const RadialData rad = radial_field(s.sf, ball.center, smp.x);
        RadialSample r;
        r.r = rad.r;
        r.weight = smp.weight;
        r.H = smp.H;
        r.cos_nu = s.sf.dot(rad.grad_r.vec, smp.nu);
        r.grad_tan = std::sqrt(std::max(0.0, 1.0 - r.cos_nu * r.cos_nu));
        r.b_frob = smp.B_frob;
        r.b_op = smp.B_op;
        rs.samples.push_back(r);
    }
    return rs;
}

RadialScalars RadialScalars::rescaled(double lambda) const
{
    RadialScalars out = *this;
    out.delta = delta / (lambda * lambda);
    out.volume = volume * std::pow(lambda, n);
    out.R = lambda * R;
    for (RadialSample& s : out.samples) {
        s.r *= lambda;
        s.weight *= std::pow(lambda, n);
        s.H /= lambda;
        s.b_frob /= lambda;
        s.b_op /= lambda;
        // cos_nu, grad_tan are angles: invariant
    }
    return out;
}

double minkowski_residual(const RadialScalars& rs)
{
    KahanSum acc;
    for (const RadialSample& s : rs.samples) {
        // <Z, H_vec> = H sdelta(r) <grad_r, nu>
        acc.add((cdelta(rs.delta, s.r) + s.H * sdelta(rs.delta, s.r) * s.cos_nu) * s.weight);
    }
    return acc.value();
}

double minkowski_residual(const SurfaceSampling& s, const EnclosingBall& ball)
{
    return minkowski_residual(radial_scalars(s, ball));
}

double lemma21ii_slack(const RadialScalars& rs)
{
    KahanSum lhs, rhs;
    for (const RadialSample& s : rs.samples) {
        const double sd = sdelta(rs.delta, s.r);
        const double cd = cdelta(rs.delta, s.r);
        const double zt2 = sd * sd * s.grad_tan * s.grad_tan;
        lhs.add(rs.delta * zt2 * s.weight);
        rhs.add(rs.n * (cd * cd - std::abs(s.H) * cd * sd) * s.weight);
    }
    return lhs.value() - rhs.value();
}

double lemma21ii_slack(const SurfaceSampling& s, const EnclosingBall& ball)
{
    return lemma21ii_slack(radial_scalars(s, ball));
}

namespace {

double lp_norm_scalar(const RadialScalars& rs, double p,
                      const std::vector<double>& field)
{
    if (std::isinf(p)) {
        double m = 0.0;
        for (double f : field)
            m = std::max(m, std::abs(f));
        return m;
    }
    KahanSum acc;
    for (std::size_t i = 0; i < field.size(); ++i)
        acc.add(std::pow(std::abs(field[i]), p) * rs.samples[i].weight);
    return std::pow(acc.value(), 1.0 / p);
}

std::vector<double> curvature_field(const RadialScalars& rs)
{
    std::vector<double> f(rs.samples.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = rs.samples[i].H;
    return f;
}

} // namespace

RadiusGaps radius_gaps(const RadialScalars& rs, double p)
{
    if (p < 1.0)
        throw std::invalid_argument("radius_gaps: p must be >= 1");
    const std::vector<double> H = curvature_field(rs);
    RadiusGaps g;
    g.H_inf = lp_norm_scalar(rs, lp_infinity, H);
    if (!(g.H_inf > 1e-14))
        throw std::invalid_argument("radius_gaps: degenerate input with vanishing mean curvature");
    g.H_2p = lp_norm_scalar(rs, 2.0 * p, H);
    g.gap_inf = tdelta(rs.delta, rs.R) - 1.0 / g.H_inf;
    if (rs.delta >= 0.0)
        g.gap_2p = tdelta(rs.delta, rs.R) - std::pow(rs.volume, 1.0 / (2.0 * p)) / g.H_2p;
    else
        g.alpha = 0.5 * (1.0 / std::sqrt(-rs.delta) - 1.0 / g.H_inf);
    return g;
}

RadiusGaps radius_gaps(const SpaceForm& sf, const SurfaceSampling& s,
                       const EnclosingBall& ball, double p)
{
    if (sf.delta != s.sf.delta)
        throw std::invalid_argument("radius_gaps: space form does not match the sampling");
    return radius_gaps(radial_scalars(s, ball), p);
}

PhiPsi phi_psi(const RadialScalars& rs)
{
    const double R = rs.R;
    PhiPsi out;
    out.phi.resize(rs.samples.size());
    out.psi.resize(rs.samples.size());
    const double tR2 = rs.delta < 0.0 ? std::pow(tdelta(rs.delta, R), 2) : 0.0;
    const double sR2 = std::pow(sdelta(rs.delta, R), 2);
    for (std::size_t i = 0; i < rs.samples.size(); ++i) {
        const RadialSample& s = rs.samples[i];
        if (s.r > R + 1e-8)
            throw std::invalid_argument("phi_psi: sample outside the enclosing ball");
        if (rs.delta < 0.0)
            out.phi[i] = tR2 - std::pow(tdelta(rs.delta, s.r), 2);
        else
            out.phi[i] = sR2 - std::pow(sdelta(rs.delta, s.r), 2);
        out.psi[i] = cdelta(rs.delta, s.r) * sdelta(rs.delta, s.r) * s.grad_tan;
    }
    out.phi_l2 = lp_norm_scalar(rs, 2.0, out.phi);
    out.phi_inf = lp_norm_scalar(rs, lp_infinity, out.phi);
    out.psi_l2 = lp_norm_scalar(rs, 2.0, out.psi);
    out.psi_inf = lp_norm_scalar(rs, lp_infinity, out.psi);
    return out;
}

PhiPsi phi_psi(const SurfaceSampling& s, const EnclosingBall& ball)
{
    return phi_psi(radial_scalars(s, ball));
}

L2BoundCheck l2_bound_checks(const RadialScalars& raw, double p)
{
    // all the bounds assume unit volume
    const double lambda = std::pow(raw.volume, -1.0 / raw.n);
    const RadialScalars rs = raw.rescaled(lambda);

    const RadiusGaps gaps = radius_gaps(rs, p);
    const PhiPsi pp = phi_psi(rs);

    const double R = rs.R;
    const double sR = sdelta(rs.delta, R);
    const double cR = cdelta(rs.delta, R);
    const double tR = tdelta(rs.delta, R);

    KahanSum int_c, int_c2;
    for (const RadialSample& s : rs.samples) {
        const double c = cdelta(rs.delta, s.r);
        int_c.add(c * s.weight);
        int_c2.add(c * c * s.weight);
    }

    L2BoundCheck out;
    out.phi_l2sq = pp.phi_l2 * pp.phi_l2;
    out.psi_l2sq = pp.psi_l2 * pp.psi_l2;

    if (rs.delta < 0.0) {
        const double C = gaps.gap_inf;
        const double alpha = *gaps.alpha;
        out.pinch_constant = C;
        if (!(C <= alpha)) {
            out.reason = "pinch constant exceeds alpha(|H|_inf)";
            return out;
        }
        out.applicable = true;
        const double Hinf = gaps.H_inf;
        out.phi_rhs = tR * tR * (C * C + 2.0 * C / Hinf) * int_c2.value();
        out.psi_rhs = cR * cR * (sR * sR - std::pow(int_c.value() / Hinf, 2));
    } else {
        const double C = *gaps.gap_2p; // unit volume: V^(1/2p) = 1
        out.pinch_constant = C;
        if (!(C < 1.0)) {
            out.reason = "pinch constant not below 1";
            return out;
        }
        out.applicable = true;
        const double H2p = gaps.H_2p;
        const double bracket = tR * tR - 1.0 / (H2p * H2p);
        out.phi_rhs = sR * sR * std::pow(int_c.value(), 2) * bracket;
        out.psi_rhs = cR * cR * bracket * std::pow(int_c.value(), 2);
    }
    out.phi_slack = out.phi_rhs - out.phi_l2sq;
    out.psi_slack = out.psi_rhs - out.psi_l2sq;
    return out;
}

L2BoundCheck l2_bound_checks(const SurfaceSampling& s, const EnclosingBall& ball, double p)
{
    return l2_bound_checks(radial_scalars(s, ball), p);
}

namespace {

// least geodesic distance from y to the cloud columns of P, via one Gram row
double min_dist_to_cloud(const SpaceForm& sf, const Vec& y, const Mat& cloud)
{
    if (!sf.curved()) {
        return (cloud.colwise() - y).colwise().norm().minCoeff();
    }
    const int m = sf.coord_dim() - 1;
    Eigen::RowVectorXd gram;
    if (sf.delta < 0.0)
        gram = y.head(m).transpose() * cloud.topRows(m) - y[m] * cloud.row(m);
    else
        gram = y.transpose() * cloud;
    // the nearest point maximizes the Gram value for either curvature sign:
    // acos(delta*g) decreasing for delta > 0, acosh(delta*g) with delta < 0
    // increasing as g decreases
    const double g = gram.maxCoeff();
    const double q = sf.delta * g;
    if (sf.delta > 0.0)
        return std::acos(std::clamp(q, -1.0, 1.0)) / std::sqrt(sf.delta);
    return std::acosh(std::max(q, 1.0)) / std::sqrt(-sf.delta);
}

} // namespace

double hausdorff_to_sphere(const SurfaceSampling& s, const EnclosingBall& ball,
                           int sphere_resolution)
{
    const SpaceForm& sf = s.sf;
    const double R = ball.radius;

    // surface-to-sphere side: dist(x, S) = R - r(x), exact given r <= R
    double term1 = 0.0;
    for (const SurfaceSample& smp : s.samples) {
        const double r = geodesic_distance(sf, ball.center, smp.x);
        term1 = std::max(term1, R - r);
    }

    Mat cloud(sf.coord_dim(), s.samples.size());
    for (std::size_t i = 0; i < s.samples.size(); ++i)
        cloud.col(i) = s.samples[i].x;

    // sphere-to-surface side: walk a parameter grid, pair each sphere point
    // with its on-surface probe (the point it radially projects from) plus
    // the nearest quadrature sample; refine the grid until stable.
    const Immersion* imm = s.immersion ? s.immersion.get() : nullptr;
    double prev = -1.0;
    double term2 = 0.0;
    int res = sphere_resolution;
    for (int level = 0; level < 4; ++level, res *= 2) {
        double sup = 0.0;
        const auto grid = sphere_param_grid(s.domain_dim, res);
        for (const ParamNode& node : grid) {
            Vec probe;
            if (imm)
                probe = imm->eval(node.angles);
            else
                probe = cloud.col(0);
            const RadialData rad = radial_field(sf, ball.center, probe);
            const Vec y = exp_map(sf, ball.center, (R / rad.r) * log_map(sf, ball.center, probe));
            double d = geodesic_distance(sf, y, probe);
            d = std::min(d, min_dist_to_cloud(sf, y, cloud));
            sup = std::max(sup, d);
        }
        term2 = sup;
        if (prev >= 0.0 && std::abs(term2 - prev) <= 1e-4)
            break;
        prev = term2;
    }
    return std::max(term1, term2);
}

double hausdorff_points(const SpaceForm& sf, const std::vector<Vec>& a,
                        const std::vector<Vec>& b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff_points: empty cloud");
    Mat A(sf.coord_dim(), a.size()), B(sf.coord_dim(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        A.col(i) = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        B.col(i) = b[i];
    double h = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        h = std::max(h, min_dist_to_cloud(sf, a[i], B));
    for (std::size_t i = 0; i < b.size(); ++i)
        h = std::max(h, min_dist_to_cloud(sf, b[i], A));
    return h;
}

} // namespace extrad
