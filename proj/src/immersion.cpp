#include "extrad/immersion.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace extrad {

namespace {

ImmersionJet fd_jet(const Immersion& imm, const Eigen::VectorXd& angles)
{
    const int n = imm.domain_dim;
    const double h1 = imm.fd_fallback.step1;
    const double h2 = imm.fd_fallback.step2;

    ImmersionJet jet;
    jet.x = imm.eval(angles);
    jet.d1.resize(n);
    jet.d2.assign(n, std::vector<Vec>(n));

    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd ap = angles, am = angles;
        ap[i] += h1;
        am[i] -= h1;
        jet.d1[i] = (imm.eval(ap) - imm.eval(am)) / (2.0 * h1);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Vec dij;
            if (i == j) {
                Eigen::VectorXd ap = angles, am = angles;
                ap[i] += h2;
                am[i] -= h2;
                dij = (imm.eval(ap) - 2.0 * jet.x + imm.eval(am)) / (h2 * h2);
            } else {
                Eigen::VectorXd app = angles, apm = angles, amp = angles, amm = angles;
                app[i] += h2; app[j] += h2;
                apm[i] += h2; apm[j] -= h2;
                amp[i] -= h2; amp[j] += h2;
                amm[i] -= h2; amm[j] -= h2;
                dij = (imm.eval(app) - imm.eval(apm) - imm.eval(amp) + imm.eval(amm)) / (4.0 * h2 * h2);
            }
            jet.d2[i][j] = dij;
            jet.d2[j][i] = dij;
        }
    }
    return jet;
}

// Unit normal in the model tangent space, orthogonal to the given tangents.
Vec surface_normal(const SpaceForm& sf, const Vec& x, const std::vector<Vec>& tangents)
{
    const std::vector<Vec> frame = tangent_basis(sf, x);
    const int m = (int)frame.size(); // n + 1
    const int n = (int)tangents.size();

    Mat T(m, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i)
            T(i, j) = sf.dot(tangents[j], frame[i]);

    Eigen::JacobiSVD<Mat> svd(T, Eigen::ComputeFullU);
    const Vec kernel = svd.matrixU().col(m - 1);

    Vec nu = Vec::Zero(x.size());
    for (int i = 0; i < m; ++i)
        nu += kernel[i] * frame[i];
    const double nn = sf.norm(nu);
    if (!(nn > 0.0))
        throw std::runtime_error("sample: failed to resolve a unit normal");
    return nu / nn;
}

} // namespace

ImmersionJet evaluate_jet(const Immersion& imm, const Eigen::VectorXd& angles)
{
    if (imm.jet)
        return imm.jet(angles);
    return fd_jet(imm, angles);
}

SurfaceSampling sample(const Immersion& imm, const SpaceForm& sf, int resolution)
{
    if (resolution < 8)
        throw std::invalid_argument("sample: resolution must be >= 8");
    const int n = imm.domain_dim;
    if (n < 2)
        throw std::invalid_argument("sample: hypersurface dimension must be >= 2");

    const Vec center = imm.orientation_center.size() > 0 ? imm.orientation_center : sf.pole();
    const auto grid = sphere_param_grid(n, resolution);

    SurfaceSampling out;
    out.sf = sf;
    out.domain_dim = n;
    out.quadrature = "gauss-legendre(cos colatitude) x uniform(longitude), resolution " +
                     std::to_string(resolution);
    out.samples.reserve(grid.size());
    out.immersion = std::make_shared<Immersion>(imm);

    KahanSum vol;
    for (const ParamNode& node : grid) {
        ImmersionJet jet = evaluate_jet(imm, node.angles);
        if (model_residual(sf, jet.x) > 1e-10)
            throw std::runtime_error("sample: immersion leaves the ambient model");

        SurfaceSample s;
        s.u = node.angles;
        s.x = jet.x;
        s.tangent_basis = jet.d1;

        s.metric.resize(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double gij = sf.dot(jet.d1[i], jet.d1[j]);
                s.metric(i, j) = gij;
                s.metric(j, i) = gij;
            }

        Eigen::SelfAdjointEigenSolver<Mat> es(s.metric);
        if (es.eigenvalues().minCoeff() <= 1e-10)
            throw std::runtime_error("sample: degenerate immersion (singular first fundamental form)");

        s.nu = surface_normal(sf, jet.x, jet.d1);
        // outward orientation: away from the orientation center
        const RadialData rad = radial_field(sf, center, jet.x);
        if (sf.dot(s.nu, rad.grad_r.vec) < 0.0)
            s.nu = -s.nu;

        s.B.resize(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double bij = sf.dot(jet.d2[i][j], s.nu);
                s.B(i, j) = bij;
                s.B(j, i) = bij;
            }

        // shape operator in a metric-orthonormal frame: L^-1 B L^-T, g = L L^T
        Eigen::LLT<Mat> llt(s.metric);
        Mat shape = llt.matrixL().solve(s.B);
        shape = llt.matrixL().solve(shape.transpose()).transpose();
        Eigen::SelfAdjointEigenSolver<Mat> se(shape);

        s.H = shape.trace() / n;
        s.H_vec = s.H * s.nu;
        s.B_frob = shape.norm();
        s.B_op = se.eigenvalues().cwiseAbs().maxCoeff();
        s.weight = node.weight * std::sqrt(s.metric.determinant());

        vol.add(s.weight);
        out.samples.push_back(std::move(s));
    }
    out.total_volume = vol.value();

    if (sf.delta > 0.0) {
        Vec mean = Vec::Zero(sf.coord_dim());
        for (const auto& s : out.samples)
            mean += s.x;
        const Vec c0 = reproject(sf, mean / (double)out.samples.size());
        for (const auto& s : out.samples)
            if (geodesic_distance(sf, c0, s.x) >= sf.hemisphere_radius() - 1e-9)
                throw std::runtime_error("sample: surface does not fit in an open hemisphere");
    }
    return out;
}

CurvatureField mean_curvature_field(const SurfaceSampling& s)
{
    CurvatureField out;
    out.H.reserve(s.samples.size());
    out.H_vec.reserve(s.samples.size());
    out.B.reserve(s.samples.size());
    out.B_op.reserve(s.samples.size());
    for (const SurfaceSample& smp : s.samples) {
        out.H.push_back(smp.H);
        out.H_vec.push_back(smp.H_vec);
        out.B.push_back(smp.B);
        out.B_op.push_back(smp.B_op);
    }
    return out;
}

double lp_norm(const SurfaceSampling& s, const std::vector<double>& field, double p)
{
    if (field.size() != s.samples.size())
        throw std::invalid_argument("lp_norm: field length does not match sampling");
    if (std::isinf(p)) {
        double m = 0.0;
        for (double f : field)
            m = std::max(m, std::abs(f));
        return m;
    }
    if (p < 1.0)
        throw std::invalid_argument("lp_norm: p must be >= 1 or infinity");
    KahanSum acc;
    for (std::size_t i = 0; i < field.size(); ++i)
        acc.add(std::pow(std::abs(field[i]), p) * s.samples[i].weight);
    return std::pow(acc.value(), 1.0 / p);
}

Homothety normalize_unit_volume(const SpaceForm& sf, const SurfaceSampling& s,
                                double R, double H_inf)
{
    const double V = s.total_volume;
    if (!(V > 0.0))
        throw std::invalid_argument("normalize_unit_volume: zero or negative volume");
    const int n = s.domain_dim;
    Homothety h;
    h.lambda = std::pow(V, -1.0 / n);
    h.delta_prime = sf.delta / (h.lambda * h.lambda);
    h.R_prime = h.lambda * R;
    h.H_inf_prime = H_inf / h.lambda;
    return h;
}

} // namespace extrad
