#ifndef EXTRAD_SCALARS_HPP
#define EXTRAD_SCALARS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace extrad {

// Generalized trigonometry of the simply connected space form of curvature
// delta.  sdelta/cdelta are entire in t for every delta and satisfy
//   cdelta^2 + delta * sdelta^2 = 1,   sdelta' = cdelta,   cdelta' = -delta * sdelta.
// tdelta = sdelta / cdelta blows up at the poles of cdelta (delta > 0 only).

template <class Scalar>
Scalar sdelta(Scalar delta, Scalar t)
{
    if (delta > Scalar(0)) {
        const Scalar rt = std::sqrt(delta);
        return std::sin(rt * t) / rt;
    }
    if (delta < Scalar(0)) {
        const Scalar rt = std::sqrt(-delta);
        return std::sinh(rt * t) / rt;
    }
    return t;
}

template <class Scalar>
Scalar cdelta(Scalar delta, Scalar t)
{
    if (delta > Scalar(0))
        return std::cos(std::sqrt(delta) * t);
    if (delta < Scalar(0))
        return std::cosh(std::sqrt(-delta) * t);
    return Scalar(1);
}

template <class Scalar>
Scalar tdelta(Scalar delta, Scalar t)
{
    const Scalar c = cdelta(delta, t);
    if (delta > Scalar(0)) {
        // pole of cdelta at |t| = pi / (2 sqrt(delta))
        if (std::abs(c) < Scalar(1e-14))
            throw std::domain_error("tdelta: evaluation at a pole of cdelta");
        return std::tan(std::sqrt(delta) * t) / std::sqrt(delta);
    }
    if (delta < Scalar(0))
        return std::tanh(std::sqrt(-delta) * t) / std::sqrt(-delta);
    return t;
}

// Inverse of tdelta on its principal branch.
template <class Scalar>
Scalar tdelta_inverse(Scalar delta, Scalar x)
{
    if (delta > Scalar(0))
        return std::atan(x * std::sqrt(delta)) / std::sqrt(delta);
    if (delta < Scalar(0)) {
        const Scalar rt = std::sqrt(-delta);
        if (std::abs(x) * rt >= Scalar(1))
            throw std::domain_error("tdelta_inverse: argument outside range of tdelta");
        return std::atanh(x * rt) / rt;
    }
    return x;
}

// Compensated (Kahan-Neumaier) accumulator.  Summation order is the caller's
// iteration order, which keeps reductions bit-reproducible run to run.
class KahanSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace extrad

#endif
