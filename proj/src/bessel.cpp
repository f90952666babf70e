#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "internal.hpp"
#include "lagint/specfun.hpp"

// Cylinder functions of integer order: J and Y (oscillatory), I and K
// (modified).  J is computed by Miller's backward recurrence with the
// Neumann normalisation J0 + 2*sum J_{2k} = 1, Y0/Y1 by the logarithmic
// Neumann series over the J array, I and K0/K1 by ascending series, and
// K0/K1 for larger arguments by the Laplace integral representation.
// Higher orders follow from the (stable) upward recurrences.

namespace lagint::sf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long double kEulerGamma = 0.577215664901532860606512090082L;
constexpr double kMaxArg = 30.0;
constexpr int kMaxOrder = 20;

void check_order(int n, const char* fn) {
    if (n < -kMaxOrder || n > kMaxOrder)
        throw std::invalid_argument(std::string(fn) + ": order out of range, need |n| <= 20");
}

// J_0..J_nmax by backward recurrence in extended precision.  Start order sits
// well above both nmax and x so the seed contamination has died off by the
// time the recursion reaches the requested orders.
std::vector<double> jn_array(double x, int nmax) {
    const int start = std::max(nmax, static_cast<int>(std::ceil(x))) + 40;
    std::vector<long double> b(start + 2, 0.0L);
    b[start + 1] = 0.0L;
    b[start] = 1e-30L;
    for (int m = start; m >= 1; --m) {
        b[m - 1] = (2.0L * m / x) * b[m] - b[m + 1];
        if (std::abs(b[m - 1]) > 1e4000L) {
            for (int j = m - 1; j <= start + 1; ++j) b[j] *= 1e-4000L;
        }
    }
    long double norm = b[0];
    for (int m = 2; m <= start; m += 2) norm += 2.0L * b[m];
    std::vector<double> j(nmax + 1);
    for (int m = 0; m <= nmax; ++m) j[m] = static_cast<double>(b[m] / norm);
    return j;
}

// Y_0..Y_nmax.  Y0 comes from the Neumann series
//   Y0 = (2/pi)(ln(x/2) + gamma) J0 + (4/pi) sum_{k>=1} (-1)^{k+1} J_{2k}/k,
// Y1 = -Y0' with the series differentiated term by term (J' taken from the
// J array), and the rest by upward recurrence, which is stable for Y.
std::vector<double> yn_array(double x, int nmax) {
    const int top = std::max(nmax + 2, static_cast<int>(std::ceil(x)) + 30);
    const std::vector<double> j = jn_array(x, top + 1);
    const long double lg = std::log(static_cast<long double>(x) / 2.0L) + kEulerGamma;

    long double s = 0.0L, sd = 0.0L;
    long double sign = 1.0L;
    for (int k = 1; 2 * k + 1 <= top; ++k) {
        s += sign * j[2 * k] / k;
        sd += sign * (j[2 * k - 1] - j[2 * k + 1]) / (2.0L * k);
        sign = -sign;
    }
    const long double y0 = (2.0L / kPi) * (lg * j[0] + 2.0L * s);
    // Y0' = (2/pi)(J0/x + lg*J0') + (4/pi) * d/dx(sum); J0' = -J1.
    const long double y0p = (2.0L / kPi) * (j[0] / x - lg * j[1] + 2.0L * sd);

    std::vector<double> y(std::max(nmax + 1, 2));
    y[0] = static_cast<double>(y0);
    y[1] = static_cast<double>(-y0p);
    for (int m = 1; m < nmax; ++m) y[m + 1] = (2.0 * m / x) * y[m] - y[m - 1];
    y.resize(nmax + 1);
    return y;
}

// I_n by its ascending series; every term is positive, so no cancellation.
double in_series(int n, double x) {
    const long double half = static_cast<long double>(x) / 2.0L;
    long double term = 1.0L;
    for (int m = 1; m <= n; ++m) term *= half / m;
    long double sum = term;
    const long double quarter = half * half;
    for (int k = 1; k <= 400; ++k) {
        term *= quarter / (static_cast<long double>(k) * (k + n));
        sum += term;
        if (term < sum * 1e-21L) break;
    }
    return static_cast<double>(sum);
}

// K0 and K1 for 0 < x < 4 from the logarithmic series
//   K0 = -(ln(x/2) + gamma) I0 + sum_{k>=1} (x^2/4)^k H_k / (k!)^2,
// with K1 = -K0' differentiated term by term.
void k01_series(double x, double& k0, double& k1) {
    const long double lg = std::log(static_cast<long double>(x) / 2.0L) + kEulerGamma;
    const long double quarter = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L, hk = 0.0L, s = 0.0L, sd = 0.0L;
    for (int k = 1; k <= 60; ++k) {
        term *= quarter / (static_cast<long double>(k) * k);
        hk += 1.0L / k;
        const long double t = term * hk;
        s += t;
        sd += t * (2.0L * k / x);
        if (t < 1e-24L * (std::abs(s) + 1.0L)) break;
    }
    const long double i0 = in_series(0, x);
    const long double i1 = in_series(1, x);
    k0 = static_cast<double>(-lg * i0 + s);
    // K1 = -K0' = I0/x + lg*I1 - sum'.
    k1 = static_cast<double>(i0 / x + lg * i1 - sd);
}

// K0 and K1 for x >= 4 from int_0^inf exp(-x cosh t) cosh(n t) dt.  The
// integrand is analytic and dead beyond t ~ acosh(760/x), so a composite
// Gauss rule on a fixed window nails it.
void k01_integral(double x, double& k0, double& k1) {
    k0 = detail::gl_integrate([x](double t) { return std::exp(-x * std::cosh(t)); },
                              0.0, 6.7, 24);
    k1 = detail::gl_integrate([x](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(t); },
                              0.0, 6.7, 24);
}

}  // namespace

FnEval bessel_j(int n, double x) {
    check_order(n, "bessel_j");
    if (x < 0.0 || x > kMaxArg)
        throw std::domain_error("bessel_j: x out of range, need 0 <= x <= 30");
    const double refl = (n < 0 && (n & 1)) ? -1.0 : 1.0;  // J_{-n} = (-1)^n J_n
    const int m = std::abs(n);
    if (x == 0.0) {
        FnEval r{m == 0 ? 1.0 : 0.0, m == 1 ? 0.5 : 0.0, 0.0};
        if (m == 0) r.d2 = -0.5;
        if (m == 2) r.d2 = 0.25;
        r.value *= refl;
        r.d1 *= refl;
        *r.d2 *= refl;
        return r;
    }
    const std::vector<double> j = jn_array(x, m + 1);
    FnEval r;
    r.value = refl * j[m];
    r.d1 = refl * (m / x * j[m] - j[m + 1]);
    r.d2 = -r.d1 / x - (1.0 - static_cast<double>(m) * m / (x * x)) * r.value;
    return r;
}

FnEval bessel_y(int n, double x) {
    check_order(n, "bessel_y");
    if (x <= 0.0 || x > kMaxArg)
        throw std::domain_error("bessel_y: x out of range, need 0 < x <= 30");
    const double refl = (n < 0 && (n & 1)) ? -1.0 : 1.0;  // Y_{-n} = (-1)^n Y_n
    const int m = std::abs(n);
    const std::vector<double> y = yn_array(x, m + 1);
    FnEval r;
    r.value = refl * y[m];
    r.d1 = refl * (m / x * y[m] - y[m + 1]);
    r.d2 = -r.d1 / x - (1.0 - static_cast<double>(m) * m / (x * x)) * r.value;
    return r;
}

FnEval bessel_i(int n, double x) {
    check_order(n, "bessel_i");
    if (x < 0.0 || x > kMaxArg)
        throw std::domain_error("bessel_i: x out of range, need 0 <= x <= 30");
    const int m = std::abs(n);  // I_{-n} = I_n
    if (x == 0.0) {
        FnEval r{m == 0 ? 1.0 : 0.0, m == 1 ? 0.5 : 0.0, 0.0};
        if (m == 0) r.d2 = 0.5;
        if (m == 2) r.d2 = 0.25;
        return r;
    }
    FnEval r;
    r.value = in_series(m, x);
    r.d1 = m / x * r.value + in_series(m + 1, x);
    r.d2 = -r.d1 / x + (1.0 + static_cast<double>(m) * m / (x * x)) * r.value;
    return r;
}

FnEval bessel_k(int n, double x) {
    check_order(n, "bessel_k");
    if (x <= 0.0 || x > kMaxArg)
        throw std::domain_error("bessel_k: x out of range, need 0 < x <= 30");
    const int m = std::abs(n);  // K_{-n} = K_n
    double k0, k1;
    if (x < 4.0)
        k01_series(x, k0, k1);
    else
        k01_integral(x, k0, k1);
    std::vector<double> kv(m + 2);
    kv[0] = k0;
    kv[1] = k1;
    for (int j = 1; j <= m; ++j) kv[j + 1] = (2.0 * j / x) * kv[j] + kv[j - 1];
    FnEval r;
    r.value = kv[m];
    r.d1 = m / x * kv[m] - kv[m + 1];
    r.d2 = -r.d1 / x + (1.0 + static_cast<double>(m) * m / (x * x)) * r.value;
    return r;
}

namespace detail {

double bessel_jnu_asymptotic(double nu, double x) {
    if (x < 15.0)
        throw std::domain_error("bessel_jnu_asymptotic: needs x >= 15");
    const double mu = 4.0 * nu * nu;
    long double p = 1.0L, q = 0.0L, t = 1.0L;
    for (int k = 1; k <= 30; ++k) {
        t *= (mu - detail::sqr(2.0 * k - 1)) / (8.0 * x * k);
        if (std::abs(t) < 1e-20L) break;
        switch (k & 3) {
            case 1: q += t; break;
            case 2: p -= t; break;
            case 3: q -= t; break;
            default: p += t; break;
        }
    }
    const double omega = x - (nu / 2.0 + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) *
           (static_cast<double>(p) * std::cos(omega) - static_cast<double>(q) * std::sin(omega));
}

double bessel_inu_series(double nu, double x) {
    if (x <= 0.0) throw std::domain_error("bessel_inu_series: needs x > 0");
    const long double half = static_cast<long double>(x) / 2.0L;
    long double term = std::pow(half, static_cast<long double>(nu)) /
                       std::tgamma(static_cast<long double>(nu) + 1.0L);
    long double sum = term;
    const long double quarter = half * half;
    for (int k = 1; k <= 500; ++k) {
        term *= quarter / (k * (k + static_cast<long double>(nu)));
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-21L) break;
    }
    return static_cast<double>(sum);
}

double bessel_knu_integral(double nu, double x) {
    if (x < 2.0) throw std::domain_error("bessel_knu_integral: needs x >= 2");
    return gl_integrate(
        [x, nu](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); },
        0.0, 6.7, 24);
}

}  // namespace detail

}  // namespace lagint::sf
