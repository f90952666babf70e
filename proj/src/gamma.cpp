#include <cmath>
#include <stdexcept>

#include "lagint/specfun.hpp"

// Gamma and digamma.  Gamma itself defers to std::tgamma; the derivative is
// Gamma' = Gamma * psi with psi computed by shifting the argument up past 10
// and applying the Stirling-type asymptotic series.

namespace lagint::sf {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double digamma(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("digamma: pole at nonpositive integer");
    if (x < 0.5)  // reflect away from the poles: psi(x) = psi(1-x) - pi cot(pi x)
        return digamma(1.0 - x) - kPi / std::tan(kPi * x);
    double acc = 0.0;
    while (x < 10.0) {  // psi(x) = psi(x+1) - 1/x
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    // Asymptotic series, truncated where the x >= 10 remainder is ~1e-16.
    double series = -1.0 / (2.0 * x);
    series -= inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 -
              inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * 691.0 / 32760.0)))));
    return acc + std::log(x) + series;
}

FnEval gamma_fn(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma_fn: pole at nonpositive integer");
    if (x > 170.0)
        throw std::domain_error("gamma_fn: argument too large, result overflows");
    FnEval r;
    r.value = std::tgamma(x);
    r.d1 = r.value * digamma(x);
    return r;
}

}  // namespace lagint::sf
