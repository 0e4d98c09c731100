#include "extrad/spaceform.hpp"

#include <cmath>

namespace extrad {

namespace {

void check_dim(const SpaceForm& sf, const Vec& x, const char* who)
{
    if (x.size() != sf.coord_dim())
        throw std::invalid_argument(std::string(who) + ": coordinate length does not match the model");
}

} // namespace

double model_residual(const SpaceForm& sf, const Vec& x)
{
    if (!sf.curved())
        return 0.0;
    return std::abs(sf.dot(x, x) - 1.0 / sf.delta);
}

Vec reproject(const SpaceForm& sf, const Vec& x)
{
    if (!sf.curved())
        return x;
    const double q = sf.delta * sf.dot(x, x); // 1 on the model, positive nearby
    if (!(q > 0.0))
        throw std::domain_error("reproject: point is not near the ambient model");
    Vec y = x / std::sqrt(q);
    if (sf.delta < 0.0 && y[y.size() - 1] <= 0.0)
        throw std::domain_error("reproject: point is on the lower hyperboloid sheet");
    return y;
}

Vec project_tangent(const SpaceForm& sf, const Vec& x, const Vec& v)
{
    if (!sf.curved())
        return v;
    return v - (sf.dot(v, x) / sf.dot(x, x)) * x;
}

double geodesic_distance(const SpaceForm& sf, const Vec& p, const Vec& q)
{
    check_dim(sf, p, "geodesic_distance");
    check_dim(sf, q, "geodesic_distance");
    if (!sf.curved())
        return (p - q).norm();

    const double sq = std::sqrt(std::abs(sf.delta));
    // Chord-based forms: stable for nearby points, where the Gram form
    // delta*<p,q> sits within roundoff of 1.
    if (sf.delta > 0.0) {
        const double chord = (p - q).norm();
        const double s = 0.5 * chord * sq;
        if (s >= 1.0 - 1e-12) {
            // antipodal: no common open hemisphere, log direction undefined
            throw std::domain_error("geodesic_distance: points are antipodal or outside a common hemisphere");
        }
        return 2.0 * std::asin(s) / sq;
    }
    const double m = sf.dot(p - q, p - q); // spacelike separation on the hyperboloid
    const double s = 0.5 * std::sqrt(std::max(m, 0.0)) * sq;
    return 2.0 * std::asinh(s) / sq;
}

Vec exp_map(const SpaceForm& sf, const Vec& p, const Vec& v)
{
    check_dim(sf, p, "exp_map");
    check_dim(sf, v, "exp_map");
    if (!sf.curved())
        return p + v;
    const double t = sf.norm(v);
    if (t == 0.0)
        return p;
    const Vec u = v / t;
    Vec out = cdelta(sf.delta, t) * p + sdelta(sf.delta, t) * u;
    return reproject(sf, out);
}

Vec log_map(const SpaceForm& sf, const Vec& p, const Vec& q)
{
    check_dim(sf, p, "log_map");
    check_dim(sf, q, "log_map");
    if (!sf.curved())
        return q - p;
    const double d = geodesic_distance(sf, p, q);
    if (sf.delta > 0.0 && d >= M_PI / std::sqrt(sf.delta) - 1e-12)
        throw std::domain_error("log_map: target at or past the cut locus");
    if (d == 0.0)
        return Vec::Zero(sf.coord_dim());
    // component of q orthogonal to p in the model form
    Vec w = q - sf.delta * sf.dot(p, q) * p;
    const double wn = sf.norm(w);
    if (wn < 1e-300)
        throw std::domain_error("log_map: degenerate direction");
    return (d / wn) * w;
}

RadialData radial_field(const SpaceForm& sf, const Vec& p0, const Vec& x)
{
    const double r = geodesic_distance(sf, p0, x);
    if (r < 1e-14)
        throw std::domain_error("radial_field: point coincides with the pole");
    if (sf.delta > 0.0 && r >= sf.hemisphere_radius())
        throw std::domain_error("radial_field: point outside the open hemisphere about the pole");

    RadialData out;
    out.r = r;
    if (!sf.curved()) {
        out.grad_r.base = x;
        out.grad_r.vec = (x - p0) / r;
        return out;
    }
    const Vec u = log_map(sf, p0, x) / r;
    // velocity at time r of the unit-speed geodesic from p0 through x
    Vec g = -sf.delta * sdelta(sf.delta, r) * p0 + cdelta(sf.delta, r) * u;
    out.grad_r.base = x;
    out.grad_r.vec = project_tangent(sf, x, g);
    return out;
}

Vec transport_point(const SpaceForm& sf, const Vec& from, const Vec& to, const Vec& x)
{
    check_dim(sf, x, "transport_point");
    if (!sf.curved())
        return x + (to - from);
    const double d = geodesic_distance(sf, from, to);
    if (d < 1e-15)
        return x;
    const Vec u = log_map(sf, from, to) / d;
    const double sq = std::sqrt(std::abs(sf.delta));
    const Vec P = sq * from;  // unit generator, <P,P> = sign(delta)
    const double theta = d * sq;

    const double sgn = sf.delta > 0.0 ? 1.0 : -1.0;
    const double alpha = sgn * sf.dot(x, P);
    const double beta = sf.dot(x, u);
    const Vec w = x - alpha * P - beta * u;

    double a2, b2;
    if (sf.delta > 0.0) {
        a2 = alpha * std::cos(theta) - beta * std::sin(theta);
        b2 = alpha * std::sin(theta) + beta * std::cos(theta);
    } else {
        a2 = alpha * std::cosh(theta) + beta * std::sinh(theta);
        b2 = alpha * std::sinh(theta) + beta * std::cosh(theta);
    }
    return reproject(sf, a2 * P + b2 * u + w);
}

std::vector<Vec> tangent_basis(const SpaceForm& sf, const Vec& x)
{
    const int dim = sf.coord_dim();
    std::vector<Vec> basis;
    if (!sf.curved()) {
        for (int i = 0; i < dim; ++i)
            basis.push_back(Vec::Unit(dim, i));
        return basis;
    }
    // Gram-Schmidt of the coordinate frame against the position constraint,
    // in the model form.  Exactly one candidate collapses.
    for (int i = 0; i < dim && (int)basis.size() < sf.n_ambient; ++i) {
        Vec v = project_tangent(sf, x, Vec::Unit(dim, i));
        for (const Vec& b : basis)
            v -= sf.dot(v, b) * b;
        const double nn = sf.dot(v, v);
        if (nn > 1e-16)
            basis.push_back(v / std::sqrt(nn));
    }
    if ((int)basis.size() != sf.n_ambient)
        throw std::runtime_error("tangent_basis: failed to span the tangent space");
    return basis;
}

} // namespace extrad
