#ifndef LAGINT_ODECAT_HPP
#define LAGINT_ODECAT_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lagint/specfun.hpp"

// Catalog of second-order linear ODE families in self-adjoint-normalisable
// form y'' + p(x) y' + q(x) y = 0, each packaged with its integrating factor
// f = exp(int p) in closed form, known singular points, and named solution
// closures returning value/first/second derivatives.

namespace lagint {

using Params = std::map<std::string, double>;

// A named solution of a catalog equation.
struct SolutionFn {
    std::string name;
    std::function<sf::FnEval(double)> eval;
};

struct LinearODE2 {
    std::string id;  // family name plus bound parameters, e.g. "bessel[n=1,alpha=2]"
    std::function<double(double)> p;
    std::function<double(double)> q;
    // Integrating factor f with f' = p f, in closed form for every family here.
    std::function<double(double)> f;
    // d/dx (f q) analytically where the family provides it; verification falls
    // back to a central difference otherwise.
    std::optional<std::function<double(double)>> d_fq;
    // p' where the family provides it (needed for multiplier/curvature work).
    std::optional<std::function<double(double)>> p_deriv;
    double dom_lo = 0.0, dom_hi = 0.0;  // open interval the closures accept
    std::vector<double> singular;       // points quadrature must stay away from
    std::vector<SolutionFn> solutions;  // at least one; independent pair where known
};

// Family names accepted by make_ode, in catalog order.
const std::vector<std::string>& ode_family_ids();

// Instantiate a family with bound parameters.  Unknown family or missing /
// out-of-range parameters throw std::invalid_argument.  Families and their
// parameters:
//   legendre              nu
//   assoc_legendre        nu, mu
//   assoc_legendre_gauged nu, mu   (first-derivative coefficient -2(x-mu)/(1-x^2))
//   bessel                n, alpha (argument scaling: solutions J_n(alpha x), Y_n(alpha x))
//   modified_bessel       n, alpha (I_n(alpha x), K_n(alpha x))
//   airy                  alpha    (y'' = (x - alpha) y; Ai/Bi(x - alpha))
//   hyp2f1                alpha, beta, gamma
//   elliptic_K                      (K(k), K(k'))
//   elliptic_E                      (E(k), E(k') - K(k'))
//   elliptic_K_gauged               (k'K(k), k'K(k'))
//   elliptic_K_sqrtk                (sqrt(k) K(k), sqrt(k) K(k'))
//   elliptic_E_gauged               (E(k)/k', (E(k')-K(k'))/k')
//   elliptic_E_sqrtk                (sqrt(k) E(k)/k', sqrt(k)(E(k')-K(k'))/k')
LinearODE2 make_ode(const std::string& family, const Params& params = {});

// Convenience: find a solution by name; throws std::invalid_argument if absent.
const SolutionFn& find_solution(const LinearODE2& ode, const std::string& name);

// Residual of a solution in the equation, normalised by the size of its
// terms: |y'' + p y' + q y| / max(1, |y''| + |p y'| + |q y|).  The solution
// must expose a second derivative.
double ode_residual(const LinearODE2& ode, const SolutionFn& y, double x);

}  // namespace lagint

#endif
