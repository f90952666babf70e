#ifndef LAGINT_VERIFY_HPP
#define LAGINT_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "lagint/identity.hpp"

// Numerical verification of integral identities: adaptive Gauss-Kronrod
// quadrature of the integrand against the antiderivative difference, plus a
// finite-difference check that F' reproduces g pointwise.

namespace lagint {

struct Tolerance {
    double abs = 1e-8;    // |quad - (F(b)-F(a))| allowance
    double rel = 1e-7;    // ... relative to |F(b)-F(a)|
    double deriv = 1e-6;  // |F'_fd - g| / (1 + |g|) allowance
};

// Tolerance{} with optional environment overrides LAGINT_TOL_ABS,
// LAGINT_TOL_REL, LAGINT_TOL_DERIV applied (each parsed as double if set).
Tolerance default_tolerance();

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int intervals = 0;  // subintervals the adaptive bisection ended with
};

// Adaptive Gauss-Kronrod (15-point Kronrod / 7-point Gauss) bisection.
// Throws std::runtime_error if the integrand returns a non-finite value or
// the subinterval budget (10^4) is exhausted before reaching
//   |error| <= max(abs_tol, rel_tol * |value|).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol = 1e-12,
                              double rel_tol = 1e-12);

struct IntervalCheck {
    double a = 0.0, b = 0.0;
    double quad = 0.0;      // adaptive quadrature of g
    double quad_err = 0.0;  // its error estimate
    double delta_f = 0.0;   // F(b) - F(a)
    double abs_err = 0.0;   // |quad - delta_f|
    double rel_err = 0.0;   // abs_err / |delta_f| (0 when delta_f == 0)
    bool pass = false;
};

struct DerivCheck {
    int points = 0;
    double max_resid = 0.0;  // max over points of |F'_fd - g| / (1 + |g|)
    bool pass = false;
};

struct VerifyReport {
    std::string id;
    std::vector<IntervalCheck> intervals;
    DerivCheck deriv;
    bool pass = false;
    double runtime_ms = 0.0;
    std::vector<std::string> notes;
};

// Verify an identity over each [a, b]: adaptive quadrature of g against
// F(b) - F(a) at the given tolerance, then the derivative check at n_deriv
// Chebyshev points per interval.  Intervals must be nondegenerate and lie
// inside the identity's domain with a 1e-3 margin; violations throw
// std::invalid_argument.
VerifyReport verify_identity(const Identity& ident,
                             const std::vector<std::pair<double, double>>& intervals,
                             const Tolerance& tol = {}, int n_deriv = 25);

// The derivative check alone (25 Chebyshev points by default).
DerivCheck derivative_check(const Identity& ident, double a, double b,
                            const Tolerance& tol = {}, int n_points = 25);

}  // namespace lagint

#endif
