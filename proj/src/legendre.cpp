#include <cmath>
#include <stdexcept>

#include "lagint/specfun.hpp"

// Ferrers functions of the first and second kind on the cut (-1, 1), real
// degree nu, integer order mu in {0, 1, 2}, with the Condon-Shortley phase:
//   P^m_nu(x) = (-1)^m (1 - x^2)^{m/2} d^m/dx^m P_nu(x)   (same for Q).
//
// P_nu goes through its hypergeometric form, Q_nu through the P_nu(+-x)
// reflection formula (non-integer degree) or the upward recurrence from
// Q_0 = artanh x (integer degree).  Higher x-derivatives come from the
// Legendre equation, so every returned slot is analytic, not differenced.

namespace lagint::sf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMaxX = 0.95;
constexpr double kMaxDeg = 10.0;

struct VDD {
    double v, d1, d2;
};

void check_args(double nu, double x, const char* fn) {
    if (std::abs(x) > kMaxX)
        throw std::domain_error(std::string(fn) + ": x out of range, need |x| <= 0.95");
    if (std::abs(nu) > kMaxDeg)
        throw std::invalid_argument(std::string(fn) + ": degree out of range, need |nu| <= 10");
}

// P_nu, P_nu', P_nu'' via 2F1(-nu, nu+1; 1; (1-x)/2) and the Legendre ODE.
VDD p_base(double nu, double x) {
    const double z = (1.0 - x) / 2.0;
    VDD r;
    r.v = hyp2f1(-nu, nu + 1.0, 1.0, z).value;
    r.d1 = (nu * (nu + 1.0) / 2.0) * hyp2f1(1.0 - nu, nu + 2.0, 2.0, z).value;
    r.d2 = (2.0 * x * r.d1 - nu * (nu + 1.0) * r.v) / (1.0 - x * x);
    return r;
}

// Q_nu, Q_nu', Q_nu''.  Integer degrees by recurrence, otherwise
//   Q_nu(x) = pi / (2 sin(nu pi)) [cos(nu pi) P_nu(x) - P_nu(-x)].
VDD q_base(double nu, double x) {
    VDD r;
    if (nu == std::floor(nu)) {
        const int n = static_cast<int>(nu);
        if (n < 0)
            throw std::invalid_argument("legendre_q: negative integer degree is undefined");
        // Q_0 = artanh x, Q_1 = x Q_0 - 1, (m+1) Q_{m+1} = (2m+1) x Q_m - m Q_{m-1}.
        double qm1 = std::atanh(x), q = x * qm1 - 1.0;
        if (n == 0) {
            r.v = qm1;
            r.d1 = 1.0 / (1.0 - x * x);
        } else {
            for (int m = 1; m < n; ++m) {
                const double qn = ((2.0 * m + 1.0) * x * q - m * qm1) / (m + 1.0);
                qm1 = q;
                q = qn;
            }
            r.v = q;
            r.d1 = n * (qm1 - x * q) / (1.0 - x * x);
        }
    } else {
        const VDD pp = p_base(nu, x);
        const VDD pm = p_base(nu, -x);
        const double s = kPi / (2.0 * std::sin(nu * kPi));
        const double c = std::cos(nu * kPi);
        r.v = s * (c * pp.v - pm.v);
        r.d1 = s * (c * pp.d1 + pm.d1);
    }
    r.d2 = (2.0 * x * r.d1 - nu * (nu + 1.0) * r.v) / (1.0 - x * x);
    return r;
}

// Assemble the order-mu Ferrers function and its derivative from the base
// function's value/first/second derivatives; d2 of the result comes from the
// associated Legendre equation.
FnEval attach_order(const VDD& b, double nu, int mu, double x, const char* fn) {
    if (mu < 0 || mu > 2)
        throw std::invalid_argument(std::string(fn) + ": order out of range, need mu in {0,1,2}");
    FnEval r;
    const double s2 = 1.0 - x * x;
    if (mu == 0) {
        r.value = b.v;
        r.d1 = b.d1;
        r.d2 = b.d2;
        return r;
    }
    if (mu == 1) {
        const double root = std::sqrt(s2);
        r.value = -root * b.d1;
        r.d1 = x / root * b.d1 - root * b.d2;
    } else {
        r.value = 2.0 * x * b.d1 - nu * (nu + 1.0) * b.v;  // (1-x^2) d2, via the ODE
        r.d1 = (2.0 - nu * (nu + 1.0)) * b.d1 + 2.0 * x * b.d2;
    }
    r.d2 = (2.0 * x * r.d1 - (nu * (nu + 1.0) - mu * mu / s2) * r.value) / s2;
    return r;
}

}  // namespace

FnEval legendre_p(double nu, double x) {
    check_args(nu, x, "legendre_p");
    const VDD b = p_base(nu, x);
    return {b.v, b.d1, b.d2};
}

FnEval legendre_q(double nu, double x) {
    check_args(nu, x, "legendre_q");
    const VDD b = q_base(nu, x);
    return {b.v, b.d1, b.d2};
}

FnEval assoc_legendre_p(double nu, int mu, double x) {
    check_args(nu, x, "assoc_legendre_p");
    return attach_order(p_base(nu, x), nu, mu, x, "assoc_legendre_p");
}

FnEval assoc_legendre_q(double nu, int mu, double x) {
    check_args(nu, x, "assoc_legendre_q");
    return attach_order(q_base(nu, x), nu, mu, x, "assoc_legendre_q");
}

}  // namespace lagint::sf
