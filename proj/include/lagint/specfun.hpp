#ifndef LAGINT_SPECFUN_HPP
#define LAGINT_SPECFUN_HPP

#include <optional>
#include <string>
#include <vector>

// Self-contained real-argument evaluators for the special functions the
// identity catalog is built on.  Every evaluator returns the value together
// with an analytic first derivative (recurrence- or series-based, never a
// finite difference), and a second derivative where gauge construction needs
// one.  Domains are validated; out-of-range arguments throw std::domain_error,
// unsupported orders/parameters throw std::invalid_argument.

namespace lagint::sf {

struct FnEval {
    double value = 0.0;
    double d1 = 0.0;                // d/dx
    std::optional<double> d2;       // d^2/dx^2 where cheaply available
};

// --- Bessel functions, integer order |n| <= 20 ---------------------------
// J, Y on 0 < x <= 30 (J also at x = 0); I, K on 0 < x <= 30 (I also at 0).
// Accuracy target 1e-10 relative (1e-12 absolute near zeros).
FnEval bessel_j(int n, double x);
FnEval bessel_y(int n, double x);
FnEval bessel_i(int n, double x);
FnEval bessel_k(int n, double x);

// --- Airy and Scorer functions, |x| <= 15 ---------------------------------
FnEval airy_ai(double x);
FnEval airy_bi(double x);
// Scorer functions: Gi'' - x Gi = -1/pi, Hi'' - x Hi = +1/pi, seeded by
// Gi(0) = Bi(0)/3, Hi(0) = 2 Bi(0)/3.
FnEval scorer_gi(double x);
FnEval scorer_hi(double x);

// --- Legendre functions on the cut (-1, 1), real degree -------------------
// Ferrers functions with the Condon-Shortley phase:
//   P^m_nu(x) = (-1)^m (1-x^2)^{m/2} d^m/dx^m P_nu(x),  same pattern for Q.
// P_nu is evaluated through its hypergeometric representation
//   P_nu(x) = 2F1(-nu, nu+1; 1; (1-x)/2);
// Q_nu through the P_nu(+-x) connection formula (integer degrees by
// recurrence from Q_0 = artanh x).  Accuracy target 1e-10 for |x| <= 0.95,
// degrees |nu| <= 10.  Orders mu in {0, 1, 2}.
FnEval legendre_p(double nu, double x);
FnEval legendre_q(double nu, double x);
FnEval assoc_legendre_p(double nu, int mu, double x);
FnEval assoc_legendre_q(double nu, int mu, double x);

// --- Gauss hypergeometric 2F1(a, b; c; x) on -1 < x < 1 --------------------
// d1 = (ab/c) 2F1(a+1, b+1; c+1; x).
FnEval hyp2f1(double a, double b, double c, double x);

// --- Complete elliptic integrals, modulus argument, 0 <= k < 1 -------------
// AGM evaluation; dK/dk = E/(k k'^2) - K/k and dE/dk = (E - K)/k with the
// k -> 0 limit handled by series.
FnEval elliptic_k(double k);
FnEval elliptic_e(double k);

// --- Struve H_n and Lommel s_{m,n}, x <= 10 --------------------------------
FnEval struve_h(int n, double x);
// Lommel s_{m,n}: particular solution of y'' + y'/x + (1 - n^2/x^2) y = x^{m-1};
// requires (m+1+2j)^2 != n^2 for all j >= 0.
FnEval lommel_s(double m, double n, double x);

// --- Gamma ------------------------------------------------------------------
FnEval gamma_fn(double x);
double digamma(double x);

// Dispatch by evaluator name for the CLI `eval` subcommand.  Names:
//   bessel_j/bessel_y/bessel_i/bessel_k (params: n), airy_ai, airy_bi,
//   scorer_gi, scorer_hi, legendre_p/legendre_q (params: nu),
//   assoc_legendre_p/assoc_legendre_q (params: nu, mu),
//   hyp2f1 (params: a, b, c), elliptic_k, elliptic_e, struve_h (params: n),
//   lommel_s (params: m, n), gamma.
FnEval eval_by_name(const std::string& fn, const std::vector<double>& params, double x);

// Names accepted by eval_by_name, for `list`-style help output.
const std::vector<std::string>& evaluator_names();

}  // namespace lagint::sf

#endif
