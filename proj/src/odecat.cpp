#include <cmath>
#include <stdexcept>

#include "lagint/odecat.hpp"

// Equation families.  Every family fixes p, q, the closed-form integrating
// factor f (checked in the tests against exp(quadrature of p)), the analytic
// d/dx(fq) and p', and its solution closures.  Solution second derivatives
// are taken from the underlying evaluators, never from the equation being
// instantiated, so residual checks stay meaningful.

namespace lagint {

namespace {

double get(const Params& p, const std::string& key, const std::string& family) {
    auto it = p.find(key);
    if (it == p.end())
        throw std::invalid_argument(family + ": missing parameter '" + key + "'");
    return it->second;
}

int get_int(const Params& p, const std::string& key, const std::string& family) {
    const double v = get(p, key, family);
    if (v != std::floor(v))
        throw std::invalid_argument(family + ": parameter '" + key + "' must be an integer");
    return static_cast<int>(v);
}

std::string fmt(double v) {
    char buf[32];
    if (v == std::floor(v) && std::abs(v) < 1e6)
        std::snprintf(buf, sizeof buf, "%d", static_cast<int>(v));
    else
        std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// value/d1/d2 triple with product and chain helpers, for assembling solution
// closures like sqrt(k) K(k') / k'.
struct Trip {
    double v, d1, d2;
};

Trip as_trip(const sf::FnEval& e, const char* who) {
    if (!e.d2) throw std::logic_error(std::string(who) + ": missing second derivative");
    return {e.value, e.d1, *e.d2};
}

Trip mul(const Trip& a, const Trip& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

// Reparametrise u(k') as a function of k (k' = sqrt(1-k^2)).
Trip complement_chain(const Trip& u, double k) {
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    return {u.v, -u.d1 * k / kp, u.d2 * k * k / (kp * kp) - u.d1 / (kp * kp * kp)};
}

sf::FnEval to_eval(const Trip& t) { return {t.v, t.d1, t.d2}; }

// k' as a Trip in k.
Trip kprime_trip(double k) {
    const double kp = std::sqrt((1.0 - k) * (1.0 + k));
    return {kp, -k / kp, -1.0 / (kp * kp * kp)};
}

Trip sqrtk_trip(double k) {
    const double r = std::sqrt(k);
    return {r, 0.5 / r, -0.25 / (r * k)};
}

Trip inv_kprime_trip(double k) {
    const double kp2 = (1.0 - k) * (1.0 + k);
    const double kp = std::sqrt(kp2);
    return {1.0 / kp, k / (kp2 * kp), (1.0 + 2.0 * k * k) / (kp2 * kp2 * kp)};
}

// E(k') - K(k') as a Trip in its own argument.
Trip ec_minus_kc(double m) {
    const sf::FnEval e = sf::elliptic_e(m);
    const sf::FnEval k = sf::elliptic_k(m);
    return {e.value - k.value, e.d1 - k.d1, *e.d2 - *k.d2};
}

LinearODE2 make_legendre(const Params& params, bool associated) {
    const std::string family = associated ? "assoc_legendre" : "legendre";
    const double nu = get(params, "nu", family);
    const int mu = associated ? get_int(params, "mu", family) : 0;
    LinearODE2 ode;
    ode.id = family + "[nu=" + fmt(nu) + (associated ? ",mu=" + fmt(mu) : "") + "]";
    ode.p = [](double x) { return -2.0 * x / (1.0 - x * x); };
    ode.q = [nu, mu](double x) {
        const double s2 = 1.0 - x * x;
        return (nu * (nu + 1.0) - mu * mu / s2) / s2;
    };
    ode.f = [](double x) { return 1.0 - x * x; };
    ode.d_fq = [mu](double x) {
        const double s2 = 1.0 - x * x;
        return -2.0 * mu * mu * x / (s2 * s2);
    };
    ode.p_deriv = [](double x) {
        const double s2 = 1.0 - x * x;
        return -2.0 * (1.0 + x * x) / (s2 * s2);
    };
    ode.dom_lo = -0.95;
    ode.dom_hi = 0.95;
    ode.singular = {-1.0, 1.0};
    ode.solutions.push_back(
        {"P", [nu, mu](double x) { return sf::assoc_legendre_p(nu, mu, x); }});
    if (!(nu == std::floor(nu) && nu < 0.0))
        ode.solutions.push_back(
            {"Q", [nu, mu](double x) { return sf::assoc_legendre_q(nu, mu, x); }});
    return ode;
}

LinearODE2 make_assoc_legendre_gauged(const Params& params) {
    const std::string family = "assoc_legendre_gauged";
    const double nu = get(params, "nu", family);
    const int mu = get_int(params, "mu", family);
    LinearODE2 ode;
    ode.id = family + "[nu=" + fmt(nu) + ",mu=" + fmt(mu) + "]";
    ode.p = [mu](double x) { return -2.0 * (x - mu) / (1.0 - x * x); };
    ode.q = [nu](double x) { return nu * (nu + 1.0) / (1.0 - x * x); };
    ode.f = [mu](double x) {
        return (1.0 - x * x) * std::pow((1.0 + x) / (1.0 - x), mu);
    };
    ode.d_fq = [nu, mu](double x) {
        return nu * (nu + 1.0) * std::pow((1.0 + x) / (1.0 - x), mu) * 2.0 * mu /
               (1.0 - x * x);
    };
    ode.p_deriv = [mu](double x) {
        const double s2 = 1.0 - x * x;
        return -2.0 * (1.0 + x * x - 2.0 * mu * x) / (s2 * s2);
    };
    ode.dom_lo = -0.95;
    ode.dom_hi = 0.95;
    ode.singular = {-1.0, 1.0};
    // Solutions: ((1-x)/(1+x))^{mu/2} times the Ferrers pair.
    auto gauged = [nu, mu](double x, bool second) {
        const sf::FnEval u = second ? sf::assoc_legendre_q(nu, mu, x)
                                    : sf::assoc_legendre_p(nu, mu, x);
        const double s2 = 1.0 - x * x;
        const double r = std::pow((1.0 - x) / (1.0 + x), mu / 2.0);
        const double rp = r * (-mu / s2);
        const double rpp = r * mu * (mu - 2.0 * x) / (s2 * s2);
        return to_eval(mul({r, rp, rpp}, as_trip(u, "assoc_legendre")));
    };
    ode.solutions.push_back({"gP", [gauged](double x) { return gauged(x, false); }});
    ode.solutions.push_back({"gQ", [gauged](double x) { return gauged(x, true); }});
    return ode;
}

LinearODE2 make_bessel(const Params& params, bool modified) {
    const std::string family = modified ? "modified_bessel" : "bessel";
    const int n = get_int(params, "n", family);
    const double alpha = get(params, "alpha", family);
    if (alpha <= 0.0)
        throw std::invalid_argument(family + ": alpha must be positive");
    LinearODE2 ode;
    ode.id = family + "[n=" + fmt(n) + ",alpha=" + fmt(alpha) + "]";
    const double sgn = modified ? -1.0 : 1.0;
    ode.p = [](double x) { return 1.0 / x; };
    ode.q = [n, alpha, sgn](double x) {
        return sgn * alpha * alpha - static_cast<double>(n) * n / (x * x);
    };
    ode.f = [](double x) { return x; };
    ode.d_fq = [n, alpha, sgn](double x) {
        return sgn * alpha * alpha + static_cast<double>(n) * n / (x * x);
    };
    ode.p_deriv = [](double x) { return -1.0 / (x * x); };
    ode.dom_lo = 0.0;
    ode.dom_hi = 30.0 / alpha;
    ode.singular = {0.0};
    auto scaled = [alpha](sf::FnEval e) {
        e.d1 *= alpha;
        if (e.d2) *e.d2 *= alpha * alpha;
        return e;
    };
    if (modified) {
        ode.solutions.push_back(
            {"I", [n, alpha, scaled](double x) { return scaled(sf::bessel_i(n, alpha * x)); }});
        ode.solutions.push_back(
            {"K", [n, alpha, scaled](double x) { return scaled(sf::bessel_k(n, alpha * x)); }});
    } else {
        ode.solutions.push_back(
            {"J", [n, alpha, scaled](double x) { return scaled(sf::bessel_j(n, alpha * x)); }});
        ode.solutions.push_back(
            {"Y", [n, alpha, scaled](double x) { return scaled(sf::bessel_y(n, alpha * x)); }});
    }
    return ode;
}

LinearODE2 make_airy(const Params& params) {
    const double alpha = get(params, "alpha", "airy");
    LinearODE2 ode;
    ode.id = "airy[alpha=" + fmt(alpha) + "]";
    ode.p = [](double) { return 0.0; };
    ode.q = [alpha](double x) { return -(x - alpha); };
    ode.f = [](double) { return 1.0; };
    ode.d_fq = [](double) { return -1.0; };
    ode.p_deriv = [](double) { return 0.0; };
    ode.dom_lo = alpha - 15.0;
    ode.dom_hi = alpha + 15.0;
    ode.solutions.push_back({"Ai", [alpha](double x) { return sf::airy_ai(x - alpha); }});
    ode.solutions.push_back({"Bi", [alpha](double x) { return sf::airy_bi(x - alpha); }});
    return ode;
}

LinearODE2 make_hyp2f1(const Params& params) {
    const std::string family = "hyp2f1";
    const double a = get(params, "alpha", family);
    const double b = get(params, "beta", family);
    const double c = get(params, "gamma", family);
    if (c <= 0.0 && c == std::floor(c))
        throw std::invalid_argument("hyp2f1: gamma must not be a nonpositive integer");
    LinearODE2 ode;
    ode.id = "hyp2f1[alpha=" + fmt(a) + ",beta=" + fmt(b) + ",gamma=" + fmt(c) + "]";
    ode.p = [a, b, c](double x) { return c / x + (c - a - b - 1.0) / (1.0 - x); };
    ode.q = [a, b](double x) { return -a * b / (x * (1.0 - x)); };
    ode.f = [a, b, c](double x) {
        return std::pow(x, c) * std::pow(1.0 - x, a + b - c + 1.0);
    };
    ode.d_fq = [a, b, c](double x) {
        return -a * b * std::pow(x, c - 2.0) * std::pow(1.0 - x, a + b - c - 1.0) *
               ((c - 1.0) * (1.0 - x) - (a + b - c) * x);
    };
    ode.p_deriv = [a, b, c](double x) {
        return -c / (x * x) + (c - a - b - 1.0) / ((1.0 - x) * (1.0 - x));
    };
    ode.dom_lo = 0.0;
    ode.dom_hi = 0.975;
    ode.singular = {0.0, 1.0};
    ode.solutions.push_back({"F", [a, b, c](double x) { return sf::hyp2f1(a, b, c, x); }});
    if (c != std::floor(c)) {
        // Second Frobenius solution x^{1-gamma} 2F1(a-c+1, b-c+1; 2-c; x).
        ode.solutions.push_back({"F2", [a, b, c](double x) {
            const Trip u = as_trip(sf::hyp2f1(a - c + 1.0, b - c + 1.0, 2.0 - c, x), "hyp2f1");
            const double w = std::pow(x, 1.0 - c);
            const Trip xs = {w, (1.0 - c) * w / x, (1.0 - c) * (-c) * w / (x * x)};
            return to_eval(mul(xs, u));
        }});
    }
    return ode;
}

// Shared scaffolding for the six elliptic-modulus families.
LinearODE2 elliptic_base(const std::string& id) {
    LinearODE2 ode;
    ode.id = id;
    ode.dom_lo = 0.0;
    ode.dom_hi = 1.0;
    ode.singular = {0.0, 1.0};
    return ode;
}

LinearODE2 make_elliptic_K() {
    LinearODE2 ode = elliptic_base("elliptic_K");
    ode.p = [](double k) { return 1.0 / k - 2.0 * k / (1.0 - k * k); };
    ode.q = [](double k) { return -1.0 / (1.0 - k * k); };
    ode.f = [](double k) { return k * (1.0 - k * k); };
    ode.d_fq = [](double) { return -1.0; };
    ode.p_deriv = [](double k) {
        const double s = 1.0 - k * k;
        return -1.0 / (k * k) - 2.0 * (1.0 + k * k) / (s * s);
    };
    ode.solutions.push_back({"K", [](double k) { return sf::elliptic_k(k); }});
    ode.solutions.push_back({"Kc", [](double k) {
        const double kp = std::sqrt((1.0 - k) * (1.0 + k));
        return to_eval(complement_chain(as_trip(sf::elliptic_k(kp), "elliptic_k"), k));
    }});
    return ode;
}

LinearODE2 make_elliptic_E() {
    LinearODE2 ode = elliptic_base("elliptic_E");
    ode.p = [](double k) { return 1.0 / k; };
    ode.q = [](double k) { return 1.0 / (1.0 - k * k); };
    ode.f = [](double k) { return k; };
    ode.d_fq = [](double k) {
        const double s = 1.0 - k * k;
        return (1.0 + k * k) / (s * s);
    };
    ode.p_deriv = [](double k) { return -1.0 / (k * k); };
    ode.solutions.push_back({"E", [](double k) { return sf::elliptic_e(k); }});
    ode.solutions.push_back({"Ec", [](double k) {
        const double kp = std::sqrt((1.0 - k) * (1.0 + k));
        return to_eval(complement_chain(ec_minus_kc(kp), k));
    }});
    return ode;
}

LinearODE2 make_elliptic_K_gauged() {
    LinearODE2 ode = elliptic_base("elliptic_K_gauged");
    ode.p = [](double k) { return 1.0 / k; };
    ode.q = [](double k) {
        const double s = 1.0 - k * k;
        return 1.0 / (s * s);
    };
    ode.f = [](double k) { return k; };
    ode.d_fq = [](double k) {
        const double s = 1.0 - k * k;
        return (1.0 + 3.0 * k * k) / (s * s * s);
    };
    ode.p_deriv = [](double k) { return -1.0 / (k * k); };
    ode.solutions.push_back({"kpK", [](double k) {
        return to_eval(mul(kprime_trip(k), as_trip(sf::elliptic_k(k), "elliptic_k")));
    }});
    ode.solutions.push_back({"kpKc", [](double k) {
        const double kp = std::sqrt((1.0 - k) * (1.0 + k));
        const Trip kc = complement_chain(as_trip(sf::elliptic_k(kp), "elliptic_k"), k);
        return to_eval(mul(kprime_trip(k), kc));
    }});
    return ode;
}

LinearODE2 make_elliptic_K_sqrtk() {
    LinearODE2 ode = elliptic_base("elliptic_K_sqrtk");
    ode.p = [](double k) { return -2.0 * k / (1.0 - k * k); };
    ode.q = [](double k) { return 1.0 / (4.0 * k * k); };
    ode.f = [](double k) { return 1.0 - k * k; };
    ode.d_fq = [](double k) { return -1.0 / (2.0 * k * k * k); };
    ode.p_deriv = [](double k) {
        const double s = 1.0 - k * k;
        return -2.0 * (1.0 + k * k) / (s * s);
    };
    ode.solutions.push_back({"sqrtkK", [](double k) {
        return to_eval(mul(sqrtk_trip(k), as_trip(sf::elliptic_k(k), "elliptic_k")));
    }});
    ode.solutions.push_back({"sqrtkKc", [](double k) {
        const double kp = std::sqrt((1.0 - k) * (1.0 + k));
        const Trip kc = complement_chain(as_trip(sf::elliptic_k(kp), "elliptic_k"), k);
        return to_eval(mul(sqrtk_trip(k), kc));
    }});
    return ode;
}

LinearODE2 make_elliptic_E_gauged() {
    LinearODE2 ode = elliptic_base("elliptic_E_gauged");
    ode.p = [](double k) { return 1.0 / k - 2.0 * k / (1.0 - k * k); };
    ode.q = [](double k) {
        const double s = 1.0 - k * k;
        return -1.0 / (s * s);
    };
    ode.f = [](double k) { return k * (1.0 - k * k); };
    ode.d_fq = [](double k) {
        const double s = 1.0 - k * k;
        return -(1.0 + k * k) / (s * s);
    };
    ode.p_deriv = [](double k) {
        const double s = 1.0 - k * k;
        return -1.0 / (k * k) - 2.0 * (1.0 + k * k) / (s * s);
    };
    ode.solutions.push_back({"E_over_kp", [](double k) {
        return to_eval(mul(inv_kprime_trip(k), as_trip(sf::elliptic_e(k), "elliptic_e")));
    }});
    ode.solutions.push_back({"Ec_over_kp", [](double k) {
        const double kp = std::sqrt((1.0 - k) * (1.0 + k));
        const Trip ec = complement_chain(ec_minus_kc(kp), k);
        return to_eval(mul(inv_kprime_trip(k), ec));
    }});
    return ode;
}

LinearODE2 make_elliptic_E_sqrtk() {
    LinearODE2 ode = elliptic_base("elliptic_E_sqrtk");
    ode.p = [](double k) { return -2.0 * k / (1.0 - k * k); };
    ode.q = [](double k) {
        const double s = 1.0 - k * k;
        return 1.0 / (4.0 * k * k) + 1.0 / s - 1.0 / (s * s);
    };
    ode.f = [](double k) { return 1.0 - k * k; };
    ode.d_fq = [](double k) {
        const double s = 1.0 - k * k;
        return -1.0 / (2.0 * k * k * k) - 2.0 * k / (s * s);
    };
    ode.p_deriv = [](double k) {
        const double s = 1.0 - k * k;
        return -2.0 * (1.0 + k * k) / (s * s);
    };
    ode.solutions.push_back({"sqrtkE_over_kp", [](double k) {
        const Trip pre = mul(sqrtk_trip(k), inv_kprime_trip(k));
        return to_eval(mul(pre, as_trip(sf::elliptic_e(k), "elliptic_e")));
    }});
    ode.solutions.push_back({"sqrtkEc_over_kp", [](double k) {
        const double kp = std::sqrt((1.0 - k) * (1.0 + k));
        const Trip pre = mul(sqrtk_trip(k), inv_kprime_trip(k));
        return to_eval(mul(pre, complement_chain(ec_minus_kc(kp), k)));
    }});
    return ode;
}

}  // namespace

const std::vector<std::string>& ode_family_ids() {
    static const std::vector<std::string> ids = {
        "legendre", "assoc_legendre", "assoc_legendre_gauged",
        "bessel", "modified_bessel", "airy", "hyp2f1",
        "elliptic_K", "elliptic_E", "elliptic_K_gauged", "elliptic_K_sqrtk",
        "elliptic_E_gauged", "elliptic_E_sqrtk",
    };
    return ids;
}

LinearODE2 make_ode(const std::string& family, const Params& params) {
    if (family == "legendre") return make_legendre(params, false);
    if (family == "assoc_legendre") return make_legendre(params, true);
    if (family == "assoc_legendre_gauged") return make_assoc_legendre_gauged(params);
    if (family == "bessel") return make_bessel(params, false);
    if (family == "modified_bessel") return make_bessel(params, true);
    if (family == "airy") return make_airy(params);
    if (family == "hyp2f1") return make_hyp2f1(params);
    if (family == "elliptic_K") return make_elliptic_K();
    if (family == "elliptic_E") return make_elliptic_E();
    if (family == "elliptic_K_gauged") return make_elliptic_K_gauged();
    if (family == "elliptic_K_sqrtk") return make_elliptic_K_sqrtk();
    if (family == "elliptic_E_gauged") return make_elliptic_E_gauged();
    if (family == "elliptic_E_sqrtk") return make_elliptic_E_sqrtk();
    throw std::invalid_argument("make_ode: unknown family '" + family + "'");
}

const SolutionFn& find_solution(const LinearODE2& ode, const std::string& name) {
    for (const auto& s : ode.solutions)
        if (s.name == name) return s;
    throw std::invalid_argument(ode.id + ": no solution named '" + name + "'");
}

double ode_residual(const LinearODE2& ode, const SolutionFn& y, double x) {
    const sf::FnEval e = y.eval(x);
    if (!e.d2)
        throw std::invalid_argument(y.name + ": solution does not expose a second derivative");
    const double t1 = *e.d2, t2 = ode.p(x) * e.d1, t3 = ode.q(x) * e.value;
    const double scale = std::max(1.0, std::abs(t1) + std::abs(t2) + std::abs(t3));
    return std::abs(t1 + t2 + t3) / scale;
}

}  // namespace lagint
