#include <cmath>
#include <stdexcept>

#include "lagint/specfun.hpp"

// Gauss hypergeometric 2F1 on the real interval (-1, 1) by direct summation
// of the defining series in extended precision.  The series converges
// geometrically with ratio |x| everywhere we need it (the identity catalog
// stays below x = 0.975), so no connection formulas are required; the term
// cap is sized for the slowest case.

namespace lagint::sf {

namespace {

bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::floor(v);
}

// Plain series value of 2F1(a, b; c; x).
long double series_2f1(double a, double b, double c, double x) {
    long double term = 1.0L, sum = 1.0L;
    const long double xl = x;
    for (int k = 0; k < 200000; ++k) {
        term *= (a + k) * (b + k) * xl / ((c + k) * (k + 1.0L));
        sum += term;
        if (term == 0.0L || std::abs(term) < 1e-22L * (std::abs(sum) + 1e-30L)) break;
    }
    return sum;
}

}  // namespace

FnEval hyp2f1(double a, double b, double c, double x) {
    if (is_nonpositive_integer(c))
        throw std::invalid_argument("hyp2f1: c must not be a nonpositive integer");
    if (x <= -1.0 || x >= 1.0)
        throw std::domain_error("hyp2f1: x out of range, need -1 < x < 1");
    FnEval r;
    r.value = static_cast<double>(series_2f1(a, b, c, x));
    r.d1 = static_cast<double>((static_cast<long double>(a) * b / c) *
                               series_2f1(a + 1.0, b + 1.0, c + 1.0, x));
    // Second derivative from the hypergeometric equation
    //   x(1-x) F'' + [c - (a+b+1)x] F' - ab F = 0.
    if (x == 0.0)
        r.d2 = a * (a + 1.0) * b * (b + 1.0) / (c * (c + 1.0));
    else
        r.d2 = (a * b * r.value - (c - (a + b + 1.0) * x) * r.d1) / (x * (1.0 - x));
    return r;
}

}  // namespace lagint::sf
