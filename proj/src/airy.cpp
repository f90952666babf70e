#include <cmath>
#include <stdexcept>

#include "internal.hpp"
#include "lagint/specfun.hpp"

// Airy Ai/Bi and the Scorer functions Gi/Hi.
//
// |x| <= 9:  Maclaurin series in extended precision (the classic f/g pair
//            Ai = c1 f - c2 g, Bi = sqrt(3)(c1 f + c2 g)).
// x  >  9:   Bessel connection formulas, Ai from K_{1/3}, Bi from I_{+-1/3}.
// x  < -9:   oscillatory connection formulas through J_{+-1/3}.
//
// Gi uses its Maclaurin series for |x| <= 7; for x > 7 the variation-of-
// parameters form Gi = Ai * int_0^x Bi + Bi * int_x^inf Ai (exact, and free
// of the cancellation that kills Bi - Hi there); for x < -7 the exact
// complement Gi = Bi - Hi, which is well conditioned on that side.  Hi uses
// its all-positive-terms series for x > 0 and the Laplace integral
// (1/pi) int_0^inf exp(x t - t^3/3) dt for x <= 0.

namespace lagint::sf {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct VD {
    double v = 0.0;
    double d = 0.0;
};

long double ai0() {  // Ai(0) = 3^{-2/3} / Gamma(2/3)
    static const long double v = std::pow(3.0L, -2.0L / 3.0L) / std::tgamma(2.0L / 3.0L);
    return v;
}

long double ai0p() {  // -Ai'(0) = 3^{-1/3} / Gamma(1/3)
    static const long double v = std::pow(3.0L, -1.0L / 3.0L) / std::tgamma(1.0L / 3.0L);
    return v;
}

// f, g fundamental pair (f'' = x f with f(0)=1, f'(0)=0; g(0)=0, g'(0)=1)
// summed together with their derivatives.
struct FGPair {
    long double f, fp, g, gp;
};

FGPair airy_maclaurin(double x) {
    if (x == 0.0) return {1.0L, 0.0L, 0.0L, 1.0L};
    const long double y = static_cast<long double>(x) * x * x;
    long double cf = 1.0L, cg = 1.0L;       // series coefficients times y^k
    long double f = 1.0L, ft = 0.0L;        // f and sum for f' / x^2
    long double g = 1.0L, gp = 1.0L;        // g / x and g'
    for (int k = 1; k <= 80; ++k) {
        cf *= y / (static_cast<long double>(3 * k) * (3 * k - 1));
        cg *= y / (static_cast<long double>(3 * k) * (3 * k + 1));
        f += cf;
        ft += 3.0L * k * cf / y;            // coefficient of x^2 * y^{k-1}
        g += cg;
        gp += (3.0L * k + 1) * cg;
        if (std::abs(cf) < 1e-25L * std::abs(f) && std::abs(cg) < 1e-25L * std::abs(g)) break;
    }
    FGPair r;
    r.f = f;
    r.fp = (x == 0.0) ? 0.0L : ft * x * x;
    r.g = g * x;
    r.gp = gp;
    return r;
}

VD ai_raw(double x) {
    // The Maclaurin difference c1 f - c2 g cancels like exp(2 zeta) on the
    // positive axis (f and g both track Bi there), so Ai hands over to the
    // Bessel-K representation already at x = 5, well before the loss bites.
    if (x <= 5.0 && x >= -9.0) {
        const FGPair s = airy_maclaurin(x);
        return {static_cast<double>(ai0() * s.f - ai0p() * s.g),
                static_cast<double>(ai0() * s.fp - ai0p() * s.gp)};
    }
    if (x > 5.0) {
        const double zeta = (2.0 / 3.0) * x * std::sqrt(x);
        return {std::sqrt(x / 3.0) / kPi * detail::bessel_knu_integral(1.0 / 3.0, zeta),
                -x / (kPi * std::sqrt(3.0)) * detail::bessel_knu_integral(2.0 / 3.0, zeta)};
    }
    const double z = -x;
    const double zeta = (2.0 / 3.0) * z * std::sqrt(z);
    const double jp = detail::bessel_jnu_asymptotic(1.0 / 3.0, zeta);
    const double jm = detail::bessel_jnu_asymptotic(-1.0 / 3.0, zeta);
    const double jp2 = detail::bessel_jnu_asymptotic(2.0 / 3.0, zeta);
    const double jm2 = detail::bessel_jnu_asymptotic(-2.0 / 3.0, zeta);
    return {std::sqrt(z) / 3.0 * (jp + jm), z / 3.0 * (jp2 - jm2)};
}

VD bi_raw(double x) {
    if (std::abs(x) <= 9.0) {
        const FGPair s = airy_maclaurin(x);
        const long double r3 = std::sqrt(3.0L);
        return {static_cast<double>(r3 * (ai0() * s.f + ai0p() * s.g)),
                static_cast<double>(r3 * (ai0() * s.fp + ai0p() * s.gp))};
    }
    if (x > 9.0) {
        const double zeta = (2.0 / 3.0) * x * std::sqrt(x);
        return {std::sqrt(x / 3.0) * (detail::bessel_inu_series(1.0 / 3.0, zeta) +
                                      detail::bessel_inu_series(-1.0 / 3.0, zeta)),
                x / std::sqrt(3.0) * (detail::bessel_inu_series(2.0 / 3.0, zeta) +
                                      detail::bessel_inu_series(-2.0 / 3.0, zeta))};
    }
    const double z = -x;
    const double zeta = (2.0 / 3.0) * z * std::sqrt(z);
    const double jp = detail::bessel_jnu_asymptotic(1.0 / 3.0, zeta);
    const double jm = detail::bessel_jnu_asymptotic(-1.0 / 3.0, zeta);
    const double jp2 = detail::bessel_jnu_asymptotic(2.0 / 3.0, zeta);
    const double jm2 = detail::bessel_jnu_asymptotic(-2.0 / 3.0, zeta);
    return {std::sqrt(z / 3.0) * (jm - jp), z / std::sqrt(3.0) * (jp2 + jm2)};
}

// Hi via its Laplace integral, valid for x <= 0 (integrand all-positive and
// rapidly decaying; window chosen so the tail underflows).
VD hi_integral(double x) {
    const auto fv = [x](double t) { return std::exp(x * t - t * t * t / 3.0); };
    const auto fd = [x, fv](double t) { return t * fv(t); };
    return {detail::gl_integrate(fv, 0.0, 13.2, 32) / kPi,
            detail::gl_integrate(fd, 0.0, 13.2, 32) / kPi};
}

// Shared engine for the Scorer Maclaurin series
//   (3^{-2/3}/pi) sum_k w(k) Gamma((k+1)/3) (3^{1/3} x)^k / k!
// with w == 1 for Hi and the period-3 pattern 1/2, 1/2, -1 for Gi.
VD scorer_series(double x, bool gi) {
    if (x == 0.0) {  // k = 0 and k = 1 terms only; avoids the t*k/x form
        const long double pref = std::pow(3.0L, -2.0L / 3.0L) / kPi;
        const long double w = gi ? 0.5L : 1.0L;
        return {static_cast<double>(pref * w * std::tgamma(1.0L / 3.0L)),
                static_cast<double>(pref * w * std::tgamma(2.0L / 3.0L) *
                                    std::pow(3.0L, 1.0L / 3.0L))};
    }
    const long double z = std::pow(3.0L, 1.0L / 3.0L) * x;
    const long double z3 = z * z * z;
    long double sum = 0.0L, dsum = 0.0L;
    // Three interleaved sub-series, one per residue of k mod 3.
    for (int j = 0; j < 3; ++j) {
        long double t = std::tgamma((j + 1) / 3.0L);
        for (int i = 1; i <= j; ++i) t *= z / i;
        long double s = 0.0L, ds = 0.0L;
        for (int m = 0; m <= 1500; ++m) {
            const int k = 3 * m + j;
            long double w = 1.0L;
            if (gi) w = (k % 3 == 2) ? -1.0L : 0.5L;
            s += w * t;
            if (k > 0) ds += w * t * k / x;
            if (m > 2 && std::abs(t) < 1e-25L * (std::abs(s) + 1e-30L) && k > std::abs(z)) break;
            t *= (m + (j + 1) / 3.0L) * z3 /
                 (static_cast<long double>(k + 3) * (k + 2) * (k + 1));
        }
        sum += s;
        dsum += ds;
    }
    const long double pref = std::pow(3.0L, -2.0L / 3.0L) / kPi;
    return {static_cast<double>(pref * sum), static_cast<double>(pref * dsum)};
}

// Gi for x > 7 by variation of parameters:
//   Gi(x) = Ai(x) int_0^x Bi + Bi(x) int_x^inf Ai,
//   Gi'(x) = Ai'(x) int_0^x Bi + Bi'(x) int_x^inf Ai.
VD gi_continuation(double x) {
    const double int_bi =
        detail::gl_integrate([](double t) { return bi_raw(t).v; }, 0.0, x, 30);
    const double int_ai =
        detail::gl_integrate([](double t) { return ai_raw(t).v; }, x, 20.0, 20);
    const VD a = ai_raw(x), b = bi_raw(x);
    return {a.v * int_bi + b.v * int_ai, a.d * int_bi + b.d * int_ai};
}

void check_airy_domain(double x, const char* fn) {
    if (std::abs(x) > 15.0)
        throw std::domain_error(std::string(fn) + ": x out of range, need |x| <= 15");
}

}  // namespace

FnEval airy_ai(double x) {
    check_airy_domain(x, "airy_ai");
    const VD r = ai_raw(x);
    return {r.v, r.d, x * r.v};
}

FnEval airy_bi(double x) {
    check_airy_domain(x, "airy_bi");
    const VD r = bi_raw(x);
    return {r.v, r.d, x * r.v};
}

FnEval scorer_gi(double x) {
    check_airy_domain(x, "scorer_gi");
    VD r;
    if (std::abs(x) <= 7.0) {
        r = scorer_series(x, true);
    } else if (x > 7.0) {
        r = gi_continuation(x);
    } else {
        const VD b = bi_raw(x);
        const VD h = hi_integral(x);
        r = {b.v - h.v, b.d - h.d};
    }
    return {r.v, r.d, x * r.v - 1.0 / kPi};
}

FnEval scorer_hi(double x) {
    check_airy_domain(x, "scorer_hi");
    const VD r = (x > 0.0) ? scorer_series(x, false) : hi_integral(x);
    return {r.v, r.d, x * r.v + 1.0 / kPi};
}

}  // namespace lagint::sf
