#ifndef LAGINT_IDENTITY_HPP
#define LAGINT_IDENTITY_HPP

#include <functional>
#include <string>

#include "lagint/odecat.hpp"

// Construction of indefinite-integral identities int g dx = F + C from a
// catalog equation and a gauge function h.  The central construction: if y
// solves y'' + p y' + q y = 0 with integrating factor f = exp(int p), then
// for any twice-differentiable h
//     d/dx [ f (h' y - h y') ] = f (h'' + h' p + h q) y,
// so F = f (h' y - h y') is an antiderivative of g = f (h'' + h' p + h q) y.
// Every specialised builder below is this rule with a particular h.

namespace lagint {

// Gauge function h with two derivatives.
struct GaugeEval {
    double h = 0.0, d1 = 0.0, d2 = 0.0;
};
struct GaugeFn {
    std::string name;
    std::function<GaugeEval(double)> eval;
};

// A verified-form integral identity: g has antiderivative F on (dom_lo, dom_hi).
struct Identity {
    std::string id;
    std::string note;  // human-readable description of g and F
    std::function<double(double)> integrand;       // g
    std::function<double(double)> antiderivative;  // F
    double dom_lo = 0.0, dom_hi = 0.0;
};

// The general construction above.
Identity make_identity(const LinearODE2& ode, const SolutionFn& y, const GaugeFn& h);

// h == 1:  g = f q y,  F = -f y'.
Identity second_integral(const LinearODE2& ode, const SolutionFn& y);

// Quadratic (energy) form:  g = (fq)' y^2 - f' y'^2,  F = f (y'^2 + q y^2).
// Uses the catalog's analytic d/dx(fq) when present, else a central difference
// with step 1e-6 (1 + |x|); f' is always p f exactly.
Identity energy_identity(const LinearODE2& ode, const SolutionFn& y);

// Conjugate-equation form: a and b must share the same p.  With y solving a
// and h solving b,  g = f (q_a - q_b) h y,  F = f (h' y - h y').
Identity conjugate_identity(const LinearODE2& a, const LinearODE2& b,
                            const SolutionFn& y, const SolutionFn& h);

// Multiplier carrying solutions of `source` into solutions of `target`:
//   m(x) = exp( (1/2) int_{x0}^x (p_source - p_target) dt ),
// i.e. y_target = m * y_source leaves the q-profiles to match as
//   q_target = (1/2)(p_target - p_source)' + (p_target^2 - p_source^2)/4 + q_source.
// The integral is evaluated by adaptive quadrature.
double gauge_multiplier(const LinearODE2& source, const LinearODE2& target,
                        double x0, double x);

// The q-profile the gauge transport demands of the target at x (formula
// above); both equations must provide p_deriv.
double riccati_q(const LinearODE2& source, const LinearODE2& target, double x);

// f (y1 y2' - y1' y2): constant for any two solutions of the same equation.
double wronskian(const LinearODE2& ode, const SolutionFn& y1, const SolutionFn& y2,
                 double x);

// Wrap a solution closure as a gauge function; the solution must expose d2.
GaugeFn gauge_from_solution(const SolutionFn& y);

// Scale a gauge by a constant.
GaugeFn scale_gauge(const GaugeFn& g, double c);

}  // namespace lagint

#endif
