#ifndef EXTRAD_TEST_HELPERS_HPP
#define EXTRAD_TEST_HELPERS_HPP

#include <random>

#include "extrad/spaceform.hpp"

namespace extrad::testing {

// deterministic random model points and tangents
struct ModelRng {
    explicit ModelRng(std::uint64_t seed) : eng(seed) {}

    double uniform(double a, double b)
    {
        return std::uniform_real_distribution<double>(a, b)(eng);
    }

    Vec gaussian(int dim)
    {
        std::normal_distribution<double> g;
        Vec v(dim);
        for (int i = 0; i < dim; ++i)
            v[i] = g(eng);
        return v;
    }

    // random unit tangent vector at x
    Vec unit_tangent(const SpaceForm& sf, const Vec& x)
    {
        while (true) {
            Vec v = project_tangent(sf, x, gaussian(sf.coord_dim()));
            const double n = sf.norm(v);
            if (n > 1e-8)
                return v / n;
        }
    }

    // random point within geodesic distance r_max of the pole
    Vec point_near_pole(const SpaceForm& sf, double r_max)
    {
        const Vec p = sf.pole();
        const double r = r_max * std::cbrt(uniform(0.0, 1.0));
        return exp_map(sf, p, r * unit_tangent(sf, p));
    }

    std::mt19937_64 eng;
};

} // namespace extrad::testing

#endif
