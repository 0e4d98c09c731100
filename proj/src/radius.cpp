#include "extrad/radius.hpp"

#include <cmath>
#include <numeric>

namespace extrad {

namespace {

struct Farthest {
    int index = -1;
    double dist = 0.0;
};

Farthest farthest_point(const SpaceForm& sf, const Vec& c, const std::vector<Vec>& pts)
{
    Farthest f;
    for (int i = 0; i < (int)pts.size(); ++i) {
        const double d = geodesic_distance(sf, c, pts[i]);
        if (d > f.dist) { // strict: ties keep the lowest index
            f.dist = d;
            f.index = i;
        }
    }
    if (f.index < 0)
        f.index = 0;
    return f;
}

void check_hemisphere(const SpaceForm& sf, const Vec& c, const std::vector<Vec>& pts)
{
    if (sf.delta <= 0.0)
        return;
    for (const Vec& p : pts)
        if (geodesic_distance(sf, c, p) >= sf.hemisphere_radius() - 1e-9)
            throw std::domain_error("enclosing ball: points do not fit in a common open hemisphere");
}

Vec initial_center(const SpaceForm& sf, const std::vector<Vec>& pts)
{
    Vec m = Vec::Zero(pts[0].size());
    for (const Vec& p : pts)
        m += p;
    m /= (double)pts.size();
    return sf.curved() ? reproject(sf, m) : m;
}

// minimum-norm point of the convex hull of the given tangent directions
// (Gilbert's algorithm); vanishes exactly when the center is optimal for the
// current contact set
Vec min_norm_hull(const SpaceForm& sf, const std::vector<Vec>& dirs)
{
    Vec v = dirs[0];
    for (int it = 0; it < 300; ++it) {
        double best = std::numeric_limits<double>::infinity();
        int bi = 0;
        for (int i = 0; i < (int)dirs.size(); ++i) {
            const double s = sf.dot(v, dirs[i]);
            if (s < best) {
                best = s;
                bi = i;
            }
        }
        const double vv = sf.dot(v, v);
        if (vv - best <= 1e-15)
            break;
        const Vec d = v - dirs[bi];
        const double dd = sf.dot(d, d);
        if (dd <= 0.0)
            break;
        const double t = std::clamp(sf.dot(v, d) / dd, 0.0, 1.0);
        v = v - t * d;
    }
    return v;
}

double max_distance(const SpaceForm& sf, const Vec& c, const std::vector<Vec>& pts)
{
    double r = 0.0;
    for (const Vec& p : pts)
        r = std::max(r, geodesic_distance(sf, c, p));
    return r;
}

} // namespace

EnclosingBall min_enclosing_ball(const SpaceForm& sf, const std::vector<Vec>& points, double tol)
{
    if (points.size() < 2)
        throw std::invalid_argument("min_enclosing_ball: need at least 2 points");
    const long iteration_cap = 100000;

    Vec c = initial_center(sf, points);
    check_hemisphere(sf, c, points);

    long iters = 0;
    double movement = std::numeric_limits<double>::infinity();

    // farthest-point phase: cheap global pull toward the optimum
    for (long k = 0; k < 64 && iters < iteration_cap; ++k, ++iters) {
        const Farthest f = farthest_point(sf, c, points);
        if (f.dist == 0.0)
            break;
        const Vec step = log_map(sf, c, points[f.index]) / (double)(k + 2);
        const Vec cn = exp_map(sf, c, step);
        movement = geodesic_distance(sf, c, cn);
        c = cn;
        if (movement < tol)
            break;
    }

    // contact-set descent: move along the minimum-norm combination of the
    // directions toward the current farthest points, with a convex line
    // search on the max-distance objective
    double radius = max_distance(sf, c, points);
    double tau = std::max(radius * 1e-2, tol);
    while (iters < iteration_cap) {
        ++iters;
        std::vector<Vec> dirs;
        for (const Vec& p : points) {
            const double d = geodesic_distance(sf, c, p);
            if (d >= radius - tau && d > 0.0)
                dirs.push_back(log_map(sf, c, p) / d);
        }
        if (dirs.empty())
            break;
        const Vec v = min_norm_hull(sf, dirs);
        const double vn = sf.norm(v);
        bool moved = false;
        if (vn > 1e-13) {
            const Vec dir = v / vn;
            // golden-section on the geodesic; the objective is convex there
            double a = 0.0, b = std::min(radius, tau * 64.0);
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
            double f1 = max_distance(sf, exp_map(sf, c, x1 * dir), points);
            double f2 = max_distance(sf, exp_map(sf, c, x2 * dir), points);
            for (int it = 0; it < 90 && (b - a) > tol * 1e-3; ++it) {
                if (f1 <= f2) {
                    b = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = b - gr * (b - a);
                    f1 = max_distance(sf, exp_map(sf, c, x1 * dir), points);
                } else {
                    a = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = a + gr * (b - a);
                    f2 = max_distance(sf, exp_map(sf, c, x2 * dir), points);
                }
            }
            const double t = 0.5 * (a + b);
            const double ft = max_distance(sf, exp_map(sf, c, t * dir), points);
            if (t > 0.0 && ft < radius) {
                c = exp_map(sf, c, t * dir);
                radius = ft;
                movement = t;
                moved = true;
            }
        }
        if (!moved || movement < tau) {
            if (tau <= tol) {
                if (!moved)
                    break;
            } else {
                tau = std::max(tau * 0.25, tol);
            }
        }
        if (moved && movement < tol && tau <= tol)
            break;
    }

    EnclosingBall ball;
    ball.center = c;
    ball.radius = max_distance(sf, c, points);
    ball.iterations = iters;
    ball.residual = std::isfinite(movement) ? movement : 0.0;
    return ball;
}

namespace {

// smallest ball with every point of the basis on its boundary; the center
// lies in the totally geodesic span of the basis.  In the curved models the
// equidistant point in the span is normalize(X lambda) with the model Gram
// system G lambda = gamma 1; in the flat model it is the circumcenter within
// the affine hull.
EnclosingBall ball_from_boundary(const SpaceForm& sf, const std::vector<Vec>& basis, int coord_dim)
{
    EnclosingBall ball;
    ball.center = Vec::Zero(coord_dim);
    ball.radius = -1.0; // empty marker: contains nothing
    if (basis.empty())
        return ball;
    if (basis.size() == 1) {
        ball.center = basis[0];
        ball.radius = 0.0;
        return ball;
    }
    const int k = (int)basis.size();
    if (!sf.curved()) {
        Mat M(k - 1, k - 1);
        Vec rhs(k - 1);
        for (int i = 1; i < k; ++i) {
            for (int j = 1; j < k; ++j)
                M(i - 1, j - 1) = 2.0 * (basis[i] - basis[0]).dot(basis[j] - basis[0]);
            rhs[i - 1] = (basis[i] - basis[0]).squaredNorm();
        }
        const Vec beta = M.completeOrthogonalDecomposition().solve(rhs);
        Vec c = basis[0];
        for (int i = 1; i < k; ++i)
            c += beta[i - 1] * (basis[i] - basis[0]);
        ball.center = c;
        ball.radius = (c - basis[0]).norm();
        return ball;
    }

    Mat G(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            G(i, j) = sf.dot(basis[i], basis[j]);
    const Vec lambda = G.completeOrthogonalDecomposition().solve(Vec::Ones(k));
    Vec c = Vec::Zero(coord_dim);
    for (int i = 0; i < k; ++i)
        c += lambda[i] * basis[i];
    const double q = sf.delta * sf.dot(c, c);
    if (!(q > 1e-20)) {
        // no equidistant point in the span (degenerate basis)
        ball.radius = std::numeric_limits<double>::infinity();
        return ball;
    }
    c /= std::sqrt(q);
    if (sf.delta * sf.dot(c, basis[0]) < 0.0)
        c = -c;
    if (sf.delta < 0.0 && c[coord_dim - 1] < 0.0)
        c = -c;
    ball.center = c;
    ball.radius = geodesic_distance(sf, c, basis[0]);
    return ball;
}

bool ball_contains(const SpaceForm& sf, const EnclosingBall& ball, const Vec& p)
{
    if (ball.radius < 0.0)
        return false;
    if (!std::isfinite(ball.radius))
        return false;
    return geodesic_distance(sf, ball.center, p) <= ball.radius * (1.0 + 1e-12) + 1e-12;
}

EnclosingBall welzl(const SpaceForm& sf, const std::vector<Vec>& pts,
                    std::vector<int>& order, int count, std::vector<Vec>& boundary,
                    long& iters)
{
    // basis size cap: manifold dimension + 1
    if (count == 0 || (int)boundary.size() == sf.n_ambient + 1)
        return ball_from_boundary(sf, boundary, sf.coord_dim());
    ++iters;
    const Vec& p = pts[order[count - 1]];
    EnclosingBall ball = welzl(sf, pts, order, count - 1, boundary, iters);
    if (ball_contains(sf, ball, p))
        return ball;
    boundary.push_back(p);
    ball = welzl(sf, pts, order, count - 1, boundary, iters);
    boundary.pop_back();
    return ball;
}

} // namespace

EnclosingBall enclosing_ball_oracle(const SpaceForm& sf, const std::vector<Vec>& points)
{
    if (points.size() < 2)
        throw std::invalid_argument("enclosing_ball_oracle: need at least 2 points");
    if (points.size() > 500)
        throw std::invalid_argument("enclosing_ball_oracle: limited to 500 points");
    check_hemisphere(sf, initial_center(sf, points), points);

    // deterministic shuffle keeps the recursion shallow on sorted inputs
    std::vector<int> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int i = (int)order.size() - 1; i > 0; --i) {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        std::swap(order[i], order[(int)(state % (std::uint64_t)(i + 1))]);
    }

    std::vector<Vec> boundary;
    long iters = 0;
    EnclosingBall ball = welzl(sf, points, order, (int)points.size(), boundary, iters);
    ball.iterations = iters;
    ball.radius = max_distance(sf, ball.center, points);
    return ball;
}

} // namespace extrad
