#ifndef LAGINT_SRC_INTERNAL_HPP
#define LAGINT_SRC_INTERNAL_HPP

#include <cmath>
#include <functional>
#include <vector>

// Shared numeric building blocks for the evaluator implementations.
// Not installed; nothing here is part of the public surface.

namespace lagint::sf::detail {

// Nodes/weights of an n-point Gauss-Legendre rule on [-1, 1], computed once
// per order by Newton iteration on P_n (machine precision, no baked tables).
struct GaussRule {
    std::vector<double> x;  // nodes, symmetric
    std::vector<double> w;  // weights
};
const GaussRule& gauss_rule(int n);

// Composite Gauss-Legendre quadrature of f over [a, b] with `panels` equal
// panels.  Spectral accuracy on smooth integrands; used for the Laplace-type
// integral representations (Bessel K, Scorer Hi), never for the verification
// quadrature (that one is the adaptive Gauss-Kronrod rule in verify.cpp).
double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int panels = 8, int order = 24);

// Fractional-order Bessel helpers backing the Airy evaluators.
// J_nu by the Hankel asymptotic expansion; requires x >= 15.
double bessel_jnu_asymptotic(double nu, double x);
// I_nu by its ascending series (all-positive terms); any x > 0, |nu| < 30.
double bessel_inu_series(double nu, double x);
// K_nu by the Laplace integral int_0^inf exp(-x cosh t) cosh(nu t) dt;
// requires x >= 2 (integrand boundary layer resolved by the panel rule).
double bessel_knu_integral(double nu, double x);

inline double sqr(double v) { return v * v; }

}  // namespace lagint::sf::detail

#endif
