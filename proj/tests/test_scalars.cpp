#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "extrad/scalars.hpp"

using namespace extrad;

TEST_CASE("flat branch is the identity")
{
    CHECK(sdelta(0.0, 1.0) == 1.0);
    CHECK(cdelta(0.0, 1.0) == 1.0);
    CHECK(tdelta(0.0, 1.0) == 1.0);
}

TEST_CASE("hyperbolic identity at delta = -1")
{
    const double c = cdelta(-1.0, 0.7);
    const double s = sdelta(-1.0, 0.7);
    CHECK(c * c - s * s == doctest::Approx(1.0).epsilon(1e-15));
    // high-precision tanh evaluation
    CHECK(tdelta(-1.0, 1.0) == doctest::Approx(0.76159415595576488).epsilon(1e-15));
}

TEST_CASE("pythagorean identity across curvatures and arguments")
{
    for (double delta : {-2.0, -1.0, -0.25, 0.0, 0.25, 1.0, 2.0}) {
        for (double t = -1.4; t <= 1.4; t += 0.09) {
            if (delta > 0.0 && std::abs(t) >= M_PI / (2.0 * std::sqrt(delta)))
                continue;
            const double c = cdelta(delta, t);
            const double s = sdelta(delta, t);
            const double lhs = c * c + delta * s * s;
            // 4 ulps of the cancelling terms
            const double scale = std::max({1.0, c * c, std::abs(delta) * s * s});
            CHECK(std::abs(lhs - 1.0) <= 4.0 * scale * std::numeric_limits<double>::epsilon());
        }
    }
}

TEST_CASE("derivative identities against central differences")
{
    const double h = 1e-6;
    for (double delta : {-1.5, -1.0, 0.0, 1.0, 1.5}) {
        for (double t : {-0.9, -0.3, 0.2, 0.8, 1.1}) {
            if (delta > 0.0 && std::abs(t) + h >= M_PI / (2.0 * std::sqrt(delta)) - 0.05)
                continue;
            const double ds = (sdelta(delta, t + h) - sdelta(delta, t - h)) / (2 * h);
            const double dc = (cdelta(delta, t + h) - cdelta(delta, t - h)) / (2 * h);
            const double dt = (tdelta(delta, t + h) - tdelta(delta, t - h)) / (2 * h);
            CHECK(ds == doctest::Approx(cdelta(delta, t)).epsilon(1e-8));
            CHECK(dc == doctest::Approx(-delta * sdelta(delta, t)).epsilon(1e-8));
            const double td = tdelta(delta, t);
            CHECK(dt == doctest::Approx(1.0 + delta * td * td).epsilon(1e-8));
        }
    }
}

TEST_CASE("tdelta pole raises a domain error")
{
    CHECK_THROWS_AS((void)tdelta(1.0, M_PI / 2.0), std::domain_error);
}

TEST_CASE("tdelta_inverse round trip")
{
    for (double delta : {-1.0, 0.0, 1.0})
        for (double t : {0.1, 0.5, 1.0}) {
            if (delta > 0.0 && t >= M_PI / (2.0 * std::sqrt(delta)))
                continue;
            CHECK(tdelta_inverse(delta, tdelta(delta, t)) == doctest::Approx(t).epsilon(1e-14));
        }
}

TEST_CASE("kahan accumulator survives adversarial cancellation")
{
    KahanSum acc;
    acc.add(1.0);
    for (int i = 0; i < 10000; ++i)
        acc.add(1e-16);
    acc.add(-1.0);
    CHECK(acc.value() == doctest::Approx(1e-12).epsilon(1e-10));
}
