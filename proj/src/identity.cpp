#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lagint/identity.hpp"
#include "lagint/verify.hpp"

namespace lagint {

namespace {

sf::FnEval eval_solution(const SolutionFn& y, double x) {
    sf::FnEval e = y.eval(x);
    if (!std::isfinite(e.value) || !std::isfinite(e.d1))
        throw std::runtime_error(y.name + ": non-finite value at x = " + std::to_string(x));
    return e;
}

std::string fmt_const(double c) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", c);
    return buf;
}

}  // namespace

Identity make_identity(const LinearODE2& ode, const SolutionFn& y, const GaugeFn& h) {
    Identity ident;
    ident.id = ode.id + "/" + y.name + "/h=" + h.name;
    ident.note = "g = f (h'' + h' p + h q) y,  F = f (h' y - h y')";
    ident.dom_lo = ode.dom_lo;
    ident.dom_hi = ode.dom_hi;
    ident.integrand = [ode, y, h](double x) {
        const GaugeEval g = h.eval(x);
        const sf::FnEval e = eval_solution(y, x);
        return ode.f(x) * (g.d2 + g.d1 * ode.p(x) + g.h * ode.q(x)) * e.value;
    };
    ident.antiderivative = [ode, y, h](double x) {
        const GaugeEval g = h.eval(x);
        const sf::FnEval e = eval_solution(y, x);
        return ode.f(x) * (g.d1 * e.value - g.h * e.d1);
    };
    return ident;
}

Identity second_integral(const LinearODE2& ode, const SolutionFn& y) {
    Identity ident;
    ident.id = ode.id + "/" + y.name + "/h=1";
    ident.note = "g = f q y,  F = -f y'";
    ident.dom_lo = ode.dom_lo;
    ident.dom_hi = ode.dom_hi;
    ident.integrand = [ode, y](double x) {
        return ode.f(x) * ode.q(x) * eval_solution(y, x).value;
    };
    ident.antiderivative = [ode, y](double x) {
        return -ode.f(x) * eval_solution(y, x).d1;
    };
    return ident;
}

Identity energy_identity(const LinearODE2& ode, const SolutionFn& y) {
    Identity ident;
    ident.id = ode.id + "/" + y.name + "/energy";
    ident.note = "g = (fq)' y^2 - f' y'^2,  F = f (y'^2 + q y^2)";
    ident.dom_lo = ode.dom_lo;
    ident.dom_hi = ode.dom_hi;
    auto dfq = [ode](double x) {
        if (ode.d_fq) return (*ode.d_fq)(x);
        const double step = 1e-6 * (1.0 + std::abs(x));
        return (ode.f(x + step) * ode.q(x + step) - ode.f(x - step) * ode.q(x - step)) /
               (2.0 * step);
    };
    ident.integrand = [ode, y, dfq](double x) {
        const sf::FnEval e = eval_solution(y, x);
        const double fprime = ode.p(x) * ode.f(x);
        return dfq(x) * e.value * e.value - fprime * e.d1 * e.d1;
    };
    ident.antiderivative = [ode, y](double x) {
        const sf::FnEval e = eval_solution(y, x);
        return ode.f(x) * (e.d1 * e.d1 + ode.q(x) * e.value * e.value);
    };
    return ident;
}

Identity conjugate_identity(const LinearODE2& a, const LinearODE2& b,
                            const SolutionFn& y, const SolutionFn& h) {
    const double lo = std::max(a.dom_lo, b.dom_lo);
    const double hi = std::min(a.dom_hi, b.dom_hi);
    if (!(lo < hi))
        throw std::invalid_argument("conjugate_identity: " + a.id + " and " + b.id +
                                    " have disjoint domains");
    // The construction requires the two equations to share p.
    for (double t : {0.25, 0.5, 0.75}) {
        const double x = lo + t * (hi - lo);
        const double pa = a.p(x), pb = b.p(x);
        if (std::abs(pa - pb) > 1e-9 * (1.0 + std::abs(pa)))
            throw std::invalid_argument("conjugate_identity: " + a.id + " and " + b.id +
                                        " differ in p at x = " + std::to_string(x));
    }
    Identity ident;
    ident.id = a.id + "/" + y.name + "/conj=" + b.id + ":" + h.name;
    ident.note = "g = f (q_a - q_b) h y,  F = f (h' y - h y')";
    ident.dom_lo = lo;
    ident.dom_hi = hi;
    ident.integrand = [a, b, y, h](double x) {
        const sf::FnEval ye = eval_solution(y, x);
        const sf::FnEval he = eval_solution(h, x);
        return a.f(x) * (a.q(x) - b.q(x)) * he.value * ye.value;
    };
    ident.antiderivative = [a, y, h](double x) {
        const sf::FnEval ye = eval_solution(y, x);
        const sf::FnEval he = eval_solution(h, x);
        return a.f(x) * (he.d1 * ye.value - he.value * ye.d1);
    };
    return ident;
}

double gauge_multiplier(const LinearODE2& source, const LinearODE2& target,
                        double x0, double x) {
    auto half_dp = [&source, &target](double t) {
        return 0.5 * (source.p(t) - target.p(t));
    };
    const QuadResult q = integrate_adaptive(half_dp, x0, x, 1e-13, 1e-13);
    return std::exp(q.value);
}

double riccati_q(const LinearODE2& source, const LinearODE2& target, double x) {
    if (!source.p_deriv || !target.p_deriv)
        throw std::invalid_argument("riccati_q: both equations must provide p_deriv");
    const double ps = source.p(x), pt = target.p(x);
    return 0.5 * ((*target.p_deriv)(x) - (*source.p_deriv)(x)) +
           0.25 * (pt * pt - ps * ps) + source.q(x);
}

double wronskian(const LinearODE2& ode, const SolutionFn& y1, const SolutionFn& y2,
                 double x) {
    const sf::FnEval a = eval_solution(y1, x);
    const sf::FnEval b = eval_solution(y2, x);
    return ode.f(x) * (a.value * b.d1 - a.d1 * b.value);
}

GaugeFn gauge_from_solution(const SolutionFn& y) {
    return {y.name, [y](double x) {
                const sf::FnEval e = y.eval(x);
                if (!e.d2)
                    throw std::runtime_error(y.name +
                                             ": solution lacks d2, cannot act as gauge");
                return GaugeEval{e.value, e.d1, *e.d2};
            }};
}

GaugeFn scale_gauge(const GaugeFn& g, double c) {
    return {fmt_const(c) + "*" + g.name, [g, c](double x) {
                GaugeEval e = g.eval(x);
                e.h *= c;
                e.d1 *= c;
                e.d2 *= c;
                return e;
            }};
}

}  // namespace lagint
