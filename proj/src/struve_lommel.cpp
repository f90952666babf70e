#include <cmath>
#include <stdexcept>

#include "lagint/specfun.hpp"

// Struve H_n and the Lommel function s_{m,n}, both by their ascending
// series in extended precision.  Second derivatives come from the
// inhomogeneous Bessel equations the two functions solve:
//   H:  y'' + y'/x + (1 - n^2/x^2) y = (x/2)^{n-1} / (sqrt(pi) Gamma(n + 1/2))
//   s:  y'' + y'/x + (1 - n^2/x^2) y = x^{m-1}

namespace lagint::sf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMaxArg = 10.0;

}  // namespace

FnEval struve_h(int n, double x) {
    if (n < 0 || n > 20)
        throw std::invalid_argument("struve_h: order out of range, need 0 <= n <= 20");
    if (x <= 0.0 || x > kMaxArg)
        throw std::domain_error("struve_h: x out of range, need 0 < x <= 10");
    // H_n = sum_k (-1)^k (x/2)^{2k+n+1} / (Gamma(k+3/2) Gamma(k+n+3/2))
    const long double half = static_cast<long double>(x) / 2.0L;
    long double term = std::pow(half, n + 1.0L) /
                       (std::tgamma(1.5L) * std::tgamma(n + 1.5L));
    long double sum = term, dsum = term * (n + 1.0L) / x;
    for (int k = 1; k <= 200; ++k) {
        term *= -half * half / ((k + 0.5L) * (k + n + 0.5L));
        sum += term;
        dsum += term * (2.0L * k + n + 1.0L) / x;
        if (std::abs(term) < 1e-24L * (std::abs(sum) + 1e-30L)) break;
    }
    FnEval r;
    r.value = static_cast<double>(sum);
    r.d1 = static_cast<double>(dsum);
    const double forcing = std::pow(x / 2.0, n - 1.0) / (std::sqrt(kPi) * std::tgamma(n + 0.5));
    r.d2 = forcing - r.d1 / x - (1.0 - static_cast<double>(n) * n / (x * x)) * r.value;
    return r;
}

FnEval lommel_s(double m, double n, double x) {
    if (x <= 0.0 || x > kMaxArg)
        throw std::domain_error("lommel_s: x out of range, need 0 < x <= 10");
    // s_{m,n} = sum_j c_j x^{m+1+2j},  c_0 = 1/((m+1)^2 - n^2),
    // c_j = -c_{j-1} / ((m+1+2j)^2 - n^2); the parameters must keep every
    // denominator nonzero.
    long double term = std::pow(static_cast<long double>(x), m + 1.0L);
    {
        const long double den = (m + 1.0L) * (m + 1.0L) - static_cast<long double>(n) * n;
        if (den == 0.0L)
            throw std::invalid_argument("lommel_s: (m+1+2j)^2 - n^2 vanishes, function undefined");
        term /= den;
    }
    long double sum = term, dsum = term * (m + 1.0L) / x;
    for (int j = 1; j <= 400; ++j) {
        const long double e = m + 1.0L + 2.0L * j;
        const long double den = e * e - static_cast<long double>(n) * n;
        if (den == 0.0L)
            throw std::invalid_argument("lommel_s: (m+1+2j)^2 - n^2 vanishes, function undefined");
        term *= -static_cast<long double>(x) * x / den;
        sum += term;
        dsum += term * e / x;
        if (std::abs(term) < 1e-24L * (std::abs(sum) + 1e-30L)) break;
    }
    FnEval r;
    r.value = static_cast<double>(sum);
    r.d1 = static_cast<double>(dsum);
    r.d2 = std::pow(x, m - 1.0) - r.d1 / x - (1.0 - n * n / (x * x)) * r.value;
    return r;
}

}  // namespace lagint::sf
