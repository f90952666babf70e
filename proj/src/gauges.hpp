#ifndef LAGINT_SRC_GAUGES_HPP
#define LAGINT_SRC_GAUGES_HPP

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "lagint/identity.hpp"
#include "lagint/specfun.hpp"

// Gauge functions h used by the corpus builders.  Each returns (h, h', h'')
// in closed form; make_identity does the rest.  Only corpus construction
// needs these, so they stay out of the public headers.

namespace lagint::gauges {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline GaugeFn constant(double c) {
    return {fmt(c), [c](double) { return GaugeEval{c, 0.0, 0.0}; }};
}

inline GaugeFn monomial(double m) {
    return {"x^" + fmt(m), [m](double x) {
                const double h = std::pow(x, m);
                return GaugeEval{h, m * h / x, m * (m - 1.0) * h / (x * x)};
            }};
}

// x^m sin(x) or x^m cos(x); s'' = -s collapses the second derivative.
inline GaugeFn monomial_trig(double m, bool use_sin) {
    const std::string name = "x^" + fmt(m) + (use_sin ? "*sin" : "*cos");
    return {name, [m, use_sin](double x) {
                const double s = use_sin ? std::sin(x) : std::cos(x);
                const double sp = use_sin ? std::cos(x) : -std::sin(x);
                const double xm = std::pow(x, m);
                const double h = xm * s;
                const double d1 = m * xm / x * s + xm * sp;
                const double d2 =
                    m * (m - 1.0) * xm / (x * x) * s + 2.0 * m * xm / x * sp - h;
                return GaugeEval{h, d1, d2};
            }};
}

inline GaugeFn monomial_log(double n) {
    return {"x^" + fmt(n) + "*ln", [n](double x) {
                const double xn = std::pow(x, n);
                const double lg = std::log(x);
                return GaugeEval{xn * lg, xn / x * (n * lg + 1.0),
                                 xn / (x * x) * (n * (n - 1.0) * lg + 2.0 * n - 1.0)};
            }};
}

inline GaugeFn exponential(double a) {
    return {"exp(" + fmt(a) + "x)", [a](double x) {
                const double h = std::exp(a * x);
                return GaugeEval{h, a * h, a * a * h};
            }};
}

inline GaugeFn sin_shift(double phi) {
    return {"sin(x+" + fmt(phi) + ")", [phi](double x) {
                return GaugeEval{std::sin(x + phi), std::cos(x + phi),
                                 -std::sin(x + phi)};
            }};
}

// (A + B x)^s.
inline GaugeFn linear_power(double A, double B, double s) {
    const std::string name =
        "(" + fmt(A) + "+" + fmt(B) + "x)^" + fmt(s);
    return {name, [A, B, s](double x) {
                const double u = A + B * x;
                const double h = std::pow(u, s);
                return GaugeEval{h, s * B * h / u, s * (s - 1.0) * B * B * h / (u * u)};
            }};
}

// ((1-x)/(1+x))^mu.  Logarithmic derivative -2 mu / (1 - x^2) gives
// h'' = 4 mu (mu - x) h / (1 - x^2)^2.
inline GaugeFn ratio_power(double mu) {
    return {"((1-x)/(1+x))^" + fmt(mu), [mu](double x) {
                const double w = 1.0 - x * x;
                const double h = std::pow((1.0 - x) / (1.0 + x), mu);
                return GaugeEval{h, -2.0 * mu * h / w,
                                 4.0 * mu * (mu - x) * h / (w * w)};
            }};
}

inline GaugeFn logarithm() {
    return {"ln(x)", [](double x) {
                return GaugeEval{std::log(x), 1.0 / x, -1.0 / (x * x)};
            }};
}

// ln(x / sqrt(1-x^2)), the modulus-to-comodulus ratio: h' = 1 / (x (1-x^2)).
inline GaugeFn log_modulus_ratio() {
    return {"ln(x/x')", [](double x) {
                const double w = 1.0 - x * x;
                return GaugeEval{std::log(x) - 0.5 * std::log(w), 1.0 / (x * w),
                                 -(1.0 - 3.0 * x * x) / (x * x * w * w)};
            }};
}

inline GaugeFn atanh_fn() {
    return {"atanh(x)", [](double x) {
                const double w = 1.0 - x * x;
                return GaugeEval{std::atanh(x), 1.0 / w, 2.0 * x / (w * w)};
            }};
}

// exp(c x^2) x^a (1-x^2)^{b/2} (3x^2-1)^d -- the shape every elementary
// closed-form gauge over the elliptic-modulus equations takes.  With the
// logarithmic derivative G = 2cx + a/x - bx/(1-x^2) + 6dx/(3x^2-1) the
// derivatives are h' = G h and h'' = (G^2 + G') h.
struct Frag {
    double c = 0.0;  // exponent coefficient on x^2
    double a = 0.0;  // power of x
    double b = 0.0;  // power of x' = sqrt(1-x^2)
    double d = 0.0;  // power of 3x^2 - 1
};

inline GaugeFn modulus_fragment(const Frag& fr) {
    std::string name = "frag(";
    name += fmt(fr.c) + "," + fmt(fr.a) + "," + fmt(fr.b) + "," + fmt(fr.d) + ")";
    return {std::move(name), [fr](double x) {
                const double w = 1.0 - x * x;
                const double v = 3.0 * x * x - 1.0;
                double h = std::exp(fr.c * x * x);
                if (fr.a != 0.0) h *= std::pow(x, fr.a);
                if (fr.b != 0.0) h *= std::pow(w, 0.5 * fr.b);
                if (fr.d != 0.0) h *= std::pow(v, fr.d);
                double G = 2.0 * fr.c * x;
                double Gp = 2.0 * fr.c;
                if (fr.a != 0.0) {
                    G += fr.a / x;
                    Gp -= fr.a / (x * x);
                }
                if (fr.b != 0.0) {
                    G -= fr.b * x / w;
                    Gp -= fr.b * (1.0 + x * x) / (w * w);
                }
                if (fr.d != 0.0) {
                    G += 6.0 * fr.d * x / v;
                    Gp -= 6.0 * fr.d * (3.0 * x * x + 1.0) / (v * v);
                }
                return GaugeEval{h, G * h, (G * G + Gp) * h};
            }};
}

// sqrt(1-x^2) P^1_nu(x) = -(1-x^2) P_nu'(x).  When nu(nu+1) = 1 this solves
// h'' + h/(1-x^2)^2 = 0, so h' = nu(nu+1) P_nu and h'' = nu(nu+1) P_nu' come
// straight out of the Legendre equation -- no second derivative of P needed.
inline GaugeFn comodulus_p1(double nu) {
    return {"x'*P1[" + fmt(nu) + "]", [nu](double x) {
                const sf::FnEval p = sf::legendre_p(nu, x);
                const double s = nu * (nu + 1.0);
                return GaugeEval{-(1.0 - x * x) * p.d1, s * p.value, s * p.d1};
            }};
}

// Wrap a closed-form special function (value, d1, d2 all required).
inline GaugeFn from_eval(std::string name, std::function<sf::FnEval(double)> fn) {
    return {std::move(name), [fn = std::move(fn)](double x) {
                const sf::FnEval e = fn(x);
                if (!e.d2)
                    throw std::runtime_error("gauge eval lacks a second derivative");
                return GaugeEval{e.value, e.d1, *e.d2};
            }};
}

inline GaugeFn sum(const GaugeFn& g1, const GaugeFn& g2) {
    return {g1.name + "+" + g2.name, [e1 = g1.eval, e2 = g2.eval](double x) {
                const GaugeEval a = e1(x), b = e2(x);
                return GaugeEval{a.h + b.h, a.d1 + b.d1, a.d2 + b.d2};
            }};
}

}  // namespace lagint::gauges

#endif
