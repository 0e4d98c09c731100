#include "extrad/families.hpp"

#include <cmath>

namespace extrad {

const char* family_name(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::geodesic_sphere: return "geodesic_sphere";
    case FamilyKind::radial_graph: return "radial_graph";
    case FamilyKind::ellipsoid: return "ellipsoid";
    case FamilyKind::offset_sphere: return "offset_sphere";
    }
    return "?";
}

FamilyKind family_from_name(const std::string& name)
{
    if (name == "geodesic_sphere") return FamilyKind::geodesic_sphere;
    if (name == "radial_graph") return FamilyKind::radial_graph;
    if (name == "ellipsoid") return FamilyKind::ellipsoid;
    if (name == "offset_sphere") return FamilyKind::offset_sphere;
    throw std::invalid_argument("unknown family kind: " + name);
}

namespace {

// profile value with first/second angle derivatives
struct ProfileJet {
    double f = 0.0;
    Eigen::VectorXd df;
    Mat d2f;
};

// Harmonic profiles as polynomials in the chart components, normalized to
// [0,1] on the sphere:
//   (1,0): (1 + u1)/2          (2,0): u1^2
//   (2,1): u1 u2 + 1/2         (2,2): (u2^2 - u3^2 + 1)/2
//   (3,0): ((5 u1^3 - 3 u1)/2 + 1)/2
void harmonic_poly(int l, int m, const Eigen::VectorXd& u,
                   double& f, Eigen::VectorXd& fu, Mat& fuu)
{
    const int dim = (int)u.size();
    fu = Eigen::VectorXd::Zero(dim);
    fuu = Mat::Zero(dim, dim);
    if (l == 1 && m == 0) {
        f = 0.5 * (1.0 + u[0]);
        fu[0] = 0.5;
    } else if (l == 2 && m == 0) {
        f = u[0] * u[0];
        fu[0] = 2.0 * u[0];
        fuu(0, 0) = 2.0;
    } else if (l == 2 && m == 1) {
        f = u[0] * u[1] + 0.5;
        fu[0] = u[1];
        fu[1] = u[0];
        fuu(0, 1) = fuu(1, 0) = 1.0;
    } else if (l == 2 && m == 2) {
        f = 0.5 * (u[1] * u[1] - u[2] * u[2] + 1.0);
        fu[1] = u[1];
        fu[2] = -u[2];
        fuu(1, 1) = 1.0;
        fuu(2, 2) = -1.0;
    } else if (l == 3 && m == 0) {
        f = 0.5 * (0.5 * (5.0 * std::pow(u[0], 3) - 3.0 * u[0]) + 1.0);
        fu[0] = 0.25 * (15.0 * u[0] * u[0] - 3.0);
        fuu(0, 0) = 7.5 * u[0];
    } else {
        throw std::invalid_argument("radial_graph: unsupported harmonic (l,m); shipped set is (1,0),(2,0),(2,1),(2,2),(3,0)");
    }
}

ProfileJet profile_jet(const Perturbation& pert, const Eigen::VectorXd& angles,
                       const SphereChartJet& chart)
{
    const int n = (int)angles.size();
    ProfileJet out;
    out.df = Eigen::VectorXd::Zero(n);
    out.d2f = Mat::Zero(n, n);

    if (pert.kind == Perturbation::Kind::bump) {
        // smooth compactly supported cap about the chart axis, a function of
        // the first colatitude only: exp(1 - 1/(1 - t^2)) on t = angle/width
        const double w = pert.width;
        const double t = angles[0] / w;
        if (t < 1.0 - 1e-8) {
            const double s = 1.0 - t * t;
            const double f = std::exp(1.0 - 1.0 / s);
            const double g1 = -2.0 * t / (s * s);
            const double g2 = -2.0 * (1.0 + 3.0 * t * t) / (s * s * s);
            out.f = f;
            out.df[0] = f * g1 / w;
            out.d2f(0, 0) = f * (g2 + g1 * g1) / (w * w);
        }
        return out;
    }

    double f;
    Eigen::VectorXd fu;
    Mat fuu;
    harmonic_poly(pert.l, pert.m, chart.u, f, fu, fuu);
    out.f = f;
    for (int a = 0; a < n; ++a)
        out.df[a] = fu.dot(chart.du[a]);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            double v = fu.dot(chart.d2u[a][b]);
            v += chart.du[a].dot(fuu * chart.du[b]);
            out.d2f(a, b) = v;
            out.d2f(b, a) = v;
        }
    return out;
}

// x = exp_center(rho(angles) * W(angles)), W = sum_k u_k E_k, with the full
// chain-rule jet.  Covers geodesic spheres (constant rho) and radial graphs.
Immersion make_radial(const SurfaceFamilySpec& spec, const Vec& center)
{
    const SpaceForm sf(spec.delta, spec.dim + 1);
    std::vector<Vec> frame;
    if (sf.curved())
        frame = tangent_basis(sf, center);
    else
        for (int i = 0; i < sf.coord_dim(); ++i)
            frame.push_back(Vec::Unit(sf.coord_dim(), i));

    const double base = spec.base_radius;
    const double eps = spec.amplitude;
    const Perturbation pert = spec.perturbation;
    const int n = spec.dim;
    const double delta = spec.delta;
    const int cdim = sf.coord_dim();

    auto assemble = [frame, cdim](const Eigen::VectorXd& coeff) {
        Vec v = Vec::Zero(cdim);
        for (int k = 0; k < (int)coeff.size(); ++k)
            v += coeff[k] * frame[k];
        return v;
    };

    Immersion imm;
    imm.domain_dim = n;
    imm.sf = sf;
    imm.orientation_center = center;

    imm.eval = [=](const Eigen::VectorXd& angles) -> Vec {
        const SphereChartJet chart = sphere_chart_jet(angles);
        const double rho = base - eps * profile_jet(pert, angles, chart).f;
        const Vec W = assemble(chart.u);
        if (delta == 0.0)
            return center + rho * W;
        return reproject(sf, cdelta(delta, rho) * center + sdelta(delta, rho) * W);
    };

    imm.jet = [=](const Eigen::VectorXd& angles) -> ImmersionJet {
        const SphereChartJet chart = sphere_chart_jet(angles);
        const ProfileJet pf = profile_jet(pert, angles, chart);
        const double rho = base - eps * pf.f;
        Eigen::VectorXd drho = -eps * pf.df;
        Mat d2rho = -eps * pf.d2f;

        const Vec W = assemble(chart.u);
        std::vector<Vec> dW(n), d2W;
        for (int a = 0; a < n; ++a)
            dW[a] = assemble(chart.du[a]);

        ImmersionJet jet;
        jet.d1.resize(n);
        jet.d2.assign(n, std::vector<Vec>(n));

        if (delta == 0.0) {
            jet.x = center + rho * W;
            for (int a = 0; a < n; ++a)
                jet.d1[a] = drho[a] * W + rho * dW[a];
            for (int a = 0; a < n; ++a)
                for (int b = a; b < n; ++b) {
                    Vec v = d2rho(a, b) * W + drho[a] * dW[b] + drho[b] * dW[a] +
                            rho * assemble(chart.d2u[a][b]);
                    jet.d2[a][b] = v;
                    jet.d2[b][a] = v;
                }
            return jet;
        }

        const double c = cdelta(delta, rho);
        const double s = sdelta(delta, rho);
        jet.x = c * center + s * W;
        for (int a = 0; a < n; ++a)
            jet.d1[a] = -delta * s * drho[a] * center + c * drho[a] * W + s * dW[a];
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                Vec v = -delta * (c * drho[a] * drho[b] + s * d2rho(a, b)) * center
                        + (-delta * s * drho[a] * drho[b] + c * d2rho(a, b)) * W
                        + c * (drho[a] * dW[b] + drho[b] * dW[a])
                        + s * assemble(chart.d2u[a][b]);
                jet.d2[a][b] = v;
                jet.d2[b][a] = v;
            }
        return jet;
    };
    return imm;
}

Immersion make_ellipsoid(const SurfaceFamilySpec& spec)
{
    const SpaceForm sf(0.0, spec.dim + 1);
    const Vec axes = spec.axes;
    const int n = spec.dim;

    Immersion imm;
    imm.domain_dim = n;
    imm.sf = sf;
    imm.orientation_center = sf.pole();

    imm.eval = [axes](const Eigen::VectorXd& angles) -> Vec {
        const SphereChartJet chart = sphere_chart_jet(angles);
        return axes.asDiagonal() * chart.u;
    };
    imm.jet = [axes, n](const Eigen::VectorXd& angles) -> ImmersionJet {
        const SphereChartJet chart = sphere_chart_jet(angles);
        ImmersionJet jet;
        jet.x = axes.asDiagonal() * chart.u;
        jet.d1.resize(n);
        jet.d2.assign(n, std::vector<Vec>(n));
        for (int a = 0; a < n; ++a)
            jet.d1[a] = axes.asDiagonal() * chart.du[a];
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                Vec v = axes.asDiagonal() * chart.d2u[a][b];
                jet.d2[a][b] = v;
                jet.d2[b][a] = v;
            }
        return jet;
    };
    return imm;
}

} // namespace

Immersion build_family(const SurfaceFamilySpec& spec)
{
    if (spec.dim < 2)
        throw std::invalid_argument("family: hypersurface dimension must be >= 2");
    const SpaceForm sf(spec.delta, spec.dim + 1);

    if (spec.delta > 0.0) {
        const double reach = spec.base_radius + spec.amplitude + spec.offset;
        if (!(reach < sf.hemisphere_radius() - 1e-6))
            throw std::invalid_argument(
                "family: base_radius + amplitude + offset must stay below the open hemisphere radius");
    }

    switch (spec.kind) {
    case FamilyKind::geodesic_sphere: {
        if (!(spec.base_radius > 0.0))
            throw std::invalid_argument("geodesic_sphere: base_radius must be positive");
        SurfaceFamilySpec s = spec;
        s.amplitude = 0.0;
        Immersion imm = make_radial(s, sf.pole());
        imm.label = family_name(spec.kind);
        return imm;
    }
    case FamilyKind::radial_graph: {
        if (!(spec.base_radius > 0.0))
            throw std::invalid_argument("radial_graph: base_radius must be positive");
        if (!(spec.amplitude < spec.base_radius))
            throw std::invalid_argument("radial_graph: amplitude must stay below base_radius (r > 0)");
        if (spec.amplitude < 0.0)
            throw std::invalid_argument("radial_graph: amplitude must be nonnegative");
        if (spec.perturbation.kind == Perturbation::Kind::bump &&
            !(spec.perturbation.width > 0.0 && spec.perturbation.width < M_PI / 2))
            throw std::invalid_argument("radial_graph: bump width must lie in (0, pi/2)");
        Immersion imm = make_radial(spec, sf.pole());
        imm.label = family_name(spec.kind);
        return imm;
    }
    case FamilyKind::ellipsoid: {
        if (spec.delta != 0.0)
            throw std::invalid_argument("ellipsoid: only available in the flat model (delta = 0)");
        if (spec.axes.size() != spec.dim + 1)
            throw std::invalid_argument("ellipsoid: need n+1 semi-axes");
        if (spec.axes.minCoeff() <= 0.0)
            throw std::invalid_argument("ellipsoid: semi-axes must be positive");
        Immersion imm = make_ellipsoid(spec);
        imm.label = family_name(spec.kind);
        return imm;
    }
    case FamilyKind::offset_sphere: {
        if (!(spec.base_radius > 0.0))
            throw std::invalid_argument("offset_sphere: base_radius must be positive");
        Vec center = sf.pole();
        if (spec.offset != 0.0) {
            const Vec e1 = sf.curved() ? tangent_basis(sf, center)[0]
                                       : Vec::Unit(sf.coord_dim(), 0);
            center = exp_map(sf, center, spec.offset * e1);
        }
        SurfaceFamilySpec s = spec;
        s.amplitude = 0.0;
        Immersion imm = make_radial(s, center);
        imm.label = family_name(spec.kind);
        return imm;
    }
    }
    throw std::invalid_argument("family: unknown kind");
}

} // namespace extrad
