#include <cmath>
#include <stdexcept>
#include <string>

#include "corpus_detail.hpp"
#include "gauges.hpp"
#include "lagint/specfun.hpp"

// One builder per catalog entry.  Each pairs the general construction (an ODE
// from the catalog, a solution branch, a gauge h) with the hand-reduced closed
// form the construction collapses to; run_entry holds the two routes against
// each other before any quadrature runs.

namespace lagint {

namespace {

constexpr double kPi = 3.14159265358979323846;

double arg(const ManifestEntry& m, const std::string& key) {
    const auto it = m.params.find(key);
    if (it == m.params.end())
        throw std::runtime_error("entry " + m.id + ": manifest lacks parameter '" + key + "'");
    return it->second;
}

int iarg(const ManifestEntry& m, const std::string& key) {
    const double v = arg(m, key);
    const int n = static_cast<int>(std::lround(v));
    if (std::abs(v - n) > 1e-9)
        throw std::runtime_error("entry " + m.id + ": parameter '" + key + "' must be an integer");
    return n;
}

Identity reduced_form(std::string note, std::function<double(double)> g,
                      std::function<double(double)> F) {
    Identity r;
    r.note = std::move(note);
    r.integrand = std::move(g);
    r.antiderivative = std::move(F);
    return r;
}

void clamp(Identity& ident, double lo, double hi) {
    ident.dom_lo = std::max(ident.dom_lo, lo);
    ident.dom_hi = std::min(ident.dom_hi, hi);
}

// Value/derivative shorthands for the reduced closed forms.
double jn(int n, double x) { return sf::bessel_j(n, x).value; }
double jnd(int n, double x) { return sf::bessel_j(n, x).d1; }
double yn(int n, double x) { return sf::bessel_y(n, x).value; }
double ynd(int n, double x) { return sf::bessel_y(n, x).d1; }
double kn(int n, double x) { return sf::bessel_k(n, x).value; }
double knd(int n, double x) { return sf::bessel_k(n, x).d1; }
double ai(double x) { return sf::airy_ai(x).value; }
double aid(double x) { return sf::airy_ai(x).d1; }
double bi(double x) { return sf::airy_bi(x).value; }
double bid(double x) { return sf::airy_bi(x).d1; }
double gi(double x) { return sf::scorer_gi(x).value; }
double gid(double x) { return sf::scorer_gi(x).d1; }
double hip(double x) { return sf::scorer_hi(x).value; }
double hipd(double x) { return sf::scorer_hi(x).d1; }
double legp(double nu, double x) { return sf::legendre_p(nu, x).value; }
double legpd(double nu, double x) { return sf::legendre_p(nu, x).d1; }
double legq(double nu, double x) { return sf::legendre_q(nu, x).value; }
double apm(double nu, int mu, double x) { return sf::assoc_legendre_p(nu, mu, x).value; }
double apmd(double nu, int mu, double x) { return sf::assoc_legendre_p(nu, mu, x).d1; }
double aqm(double nu, int mu, double x) { return sf::assoc_legendre_q(nu, mu, x).value; }
double f21(double a, double b, double c, double x) { return sf::hyp2f1(a, b, c, x).value; }
double ek(double k) { return sf::elliptic_k(k).value; }
double ee(double k) { return sf::elliptic_e(k).value; }
double sh(int n, double x) { return sf::struve_h(n, x).value; }
double sl(double m, double n, double x) { return sf::lommel_s(m, n, x).value; }
double sld(double m, double n, double x) { return sf::lommel_s(m, n, x).d1; }
double kprime(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

GaugeFn lommel_gauge(double m, double n) {
    return gauges::from_eval("s[" + gauges::fmt(m) + "," + gauges::fmt(n) + "]",
                             [m, n](double x) { return sf::lommel_s(m, n, x); });
}

GaugeFn scorer_gi_gauge() {
    return gauges::from_eval("Gi", [](double x) { return sf::scorer_gi(x); });
}

GaugeFn scorer_hi_gauge() {
    return gauges::from_eval("Hi", [](double x) { return sf::scorer_hi(x); });
}

// --- Legendre -------------------------------------------------------------

CorpusEntry eq36(const ManifestEntry& m) {
    const double nu = arg(m, "nu");
    const LinearODE2 ode = make_ode("legendre", {{"nu", nu}});
    CorpusEntry e;
    e.description = "Legendre P integrates to (x^2-1)/(nu(nu+1)) times its derivative";
    e.tags = {"legendre"};
    e.constructed = make_identity(ode, find_solution(ode, "P"),
                                  gauges::constant(1.0 / (nu * (nu + 1.0))));
    e.reduced = reduced_form(
        "g = P_nu,  F = (x^2-1) P_nu' / (nu(nu+1))",
        [nu](double x) { return legp(nu, x); },
        [nu](double x) { return (x * x - 1.0) * legpd(nu, x) / (nu * (nu + 1.0)); });
    return e;
}

CorpusEntry eq39(const ManifestEntry& m) {
    const double nu = arg(m, "nu");
    const LinearODE2 ode = make_ode("legendre", {{"nu", nu}});
    CorpusEntry e;
    e.description = "Legendre Q integral via the upward contiguous recurrence";
    e.tags = {"legendre"};
    e.constructed = make_identity(ode, find_solution(ode, "Q"),
                                  gauges::constant(1.0 / (nu * (nu + 1.0))));
    e.reduced = reduced_form(
        "g = Q_nu,  F = (Q_{nu+1} - x Q_nu) / nu",
        [nu](double x) { return legq(nu, x); },
        [nu](double x) { return (legq(nu + 1.0, x) - x * legq(nu, x)) / nu; });
    return e;
}

CorpusEntry eq40(const ManifestEntry& m) {
    const double nu = arg(m, "nu");
    const LinearODE2 ode = make_ode("legendre", {{"nu", nu}});
    CorpusEntry e;
    e.description = "Legendre P integral via the downward contiguous recurrence";
    e.tags = {"legendre"};
    e.constructed = make_identity(ode, find_solution(ode, "P"),
                                  gauges::constant(1.0 / (nu * (nu + 1.0))));
    e.reduced = reduced_form(
        "g = P_nu,  F = (x P_nu - P_{nu-1}) / (nu+1)",
        [nu](double x) { return legp(nu, x); },
        [nu](double x) { return (x * legp(nu, x) - legp(nu - 1.0, x)) / (nu + 1.0); });
    return e;
}

// --- Bessel with Lommel / Struve gauges ------------------------------------

CorpusEntry eq44(const ManifestEntry& me) {
    const int m = iarg(me, "m"), n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "power-weighted Bessel integral via the Lommel function";
    e.tags = {"bessel", "lommel"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), lommel_gauge(m, n));
    clamp(e.constructed, 0.0, 10.0);  // Lommel series range
    e.reduced = reduced_form(
        "g = x^m J_n,  F = x (s_{m,n}' J_n - s_{m,n} J_n')",
        [m, n](double x) { return std::pow(x, m) * jn(n, x); },
        [m, n](double x) { return x * (sld(m, n, x) * jn(n, x) - sl(m, n, x) * jnd(n, x)); });
    return e;
}

CorpusEntry eq48(const ManifestEntry& me) {
    const int m = iarg(me, "m"), n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "power-weighted Bessel integral, Lommel recurrence form";
    e.tags = {"bessel", "lommel"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), lommel_gauge(m, n));
    clamp(e.constructed, 0.0, 10.0);
    e.reduced = reduced_form(
        "g = x^m J_n,  F = x ((m+n-1) s_{m-1,n-1} J_n - s_{m,n} J_{n-1})",
        [m, n](double x) { return std::pow(x, m) * jn(n, x); },
        [m, n](double x) {
            return x * ((m + n - 1.0) * sl(m - 1, n - 1, x) * jn(n, x) -
                        sl(m, n, x) * jn(n - 1, x));
        });
    return e;
}

CorpusEntry eq51(const ManifestEntry& me) {
    const int n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "x^n J_n integral expressed through Struve functions";
    e.tags = {"bessel", "struve"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), lommel_gauge(n, n));
    clamp(e.constructed, 0.0, 10.0);
    const double c = std::sqrt(kPi) * std::pow(2.0, n - 1.0) * sf::gamma_fn(n + 0.5).value;
    e.reduced = reduced_form(
        "g = x^n J_n,  F = sqrt(pi) 2^{n-1} Gamma(n+1/2) x (H_{n-1} J_n - H_n J_{n-1})",
        [n](double x) { return std::pow(x, n) * jn(n, x); },
        [n, c](double x) {
            return c * x * (sh(n - 1, x) * jn(n, x) - sh(n, x) * jn(n - 1, x));
        });
    return e;
}

// --- Airy with Scorer gauges ------------------------------------------------

CorpusEntry eq51c(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("airy", {{"alpha", 0.0}});
    CorpusEntry e;
    e.description = "Airy Ai integral through the Scorer Gi function";
    e.tags = {"airy", "scorer"};
    e.constructed =
        make_identity(ode, find_solution(ode, "Ai"), scale_gauge(scorer_gi_gauge(), -kPi));
    e.reduced = reduced_form(
        "g = Ai,  F = pi (Ai' Gi - Ai Gi')",
        [](double x) { return ai(x); },
        [](double x) { return kPi * (aid(x) * gi(x) - ai(x) * gid(x)); });
    return e;
}

CorpusEntry eq51d(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("airy", {{"alpha", 0.0}});
    CorpusEntry e;
    e.description = "Airy Bi integral through the Scorer Hi function";
    e.tags = {"airy", "scorer"};
    e.constructed =
        make_identity(ode, find_solution(ode, "Bi"), scale_gauge(scorer_hi_gauge(), kPi));
    e.reduced = reduced_form(
        "g = Bi,  F = pi (Bi Hi' - Bi' Hi)",
        [](double x) { return bi(x); },
        [](double x) { return kPi * (bi(x) * hipd(x) - bid(x) * hip(x)); });
    return e;
}

// --- Conjugate-equation products --------------------------------------------

CorpusEntry eq60(const ManifestEntry& me) {
    const int n = iarg(me, "n"), mm = iarg(me, "m");
    const double al = arg(me, "alpha"), be = arg(me, "beta");
    const LinearODE2 a = make_ode("bessel", {{"n", n}, {"alpha", al}});
    const LinearODE2 b = make_ode("bessel", {{"n", mm}, {"alpha", be}});
    CorpusEntry e;
    e.description = "product of two Bessel functions of different order and scale";
    e.tags = {"bessel"};
    e.constructed = conjugate_identity(a, b, find_solution(a, "J"), find_solution(b, "Y"));
    e.reduced = reduced_form(
        "g = ((a^2-b^2) x - (n^2-m^2)/x) J_n(ax) Y_m(bx),  "
        "F = x (b Y_m'(bx) J_n(ax) - Y_m(bx) a J_n'(ax))",
        [n, mm, al, be](double x) {
            return ((al * al - be * be) * x -
                    (static_cast<double>(n) * n - static_cast<double>(mm) * mm) / x) *
                   jn(n, al * x) * yn(mm, be * x);
        },
        [n, mm, al, be](double x) {
            return x * (be * ynd(mm, be * x) * jn(n, al * x) -
                        yn(mm, be * x) * al * jnd(n, al * x));
        });
    return e;
}

CorpusEntry eq62(const ManifestEntry& me) {
    const int n = iarg(me, "n"), mm = iarg(me, "m");
    const double al = arg(me, "alpha"), be = arg(me, "beta");
    const LinearODE2 a = make_ode("bessel", {{"n", n}, {"alpha", al}});
    const LinearODE2 b = make_ode("modified_bessel", {{"n", mm}, {"alpha", be}});
    CorpusEntry e;
    e.description = "product of a Bessel and a modified Bessel function";
    e.tags = {"bessel", "modified-bessel"};
    e.constructed = conjugate_identity(a, b, find_solution(a, "J"), find_solution(b, "K"));
    e.reduced = reduced_form(
        "g = ((a^2+b^2) x - (n^2-m^2)/x) J_n(ax) K_m(bx),  "
        "F = x (b K_m'(bx) J_n(ax) - K_m(bx) a J_n'(ax))",
        [n, mm, al, be](double x) {
            return ((al * al + be * be) * x -
                    (static_cast<double>(n) * n - static_cast<double>(mm) * mm) / x) *
                   jn(n, al * x) * kn(mm, be * x);
        },
        [n, mm, al, be](double x) {
            return x * (be * knd(mm, be * x) * jn(n, al * x) -
                        kn(mm, be * x) * al * jnd(n, al * x));
        });
    return e;
}

CorpusEntry eq63(const ManifestEntry& me) {
    const int n = iarg(me, "n");
    const double al = arg(me, "alpha");
    const LinearODE2 a = make_ode("bessel", {{"n", n}, {"alpha", al}});
    const LinearODE2 b = make_ode("elliptic_E");
    CorpusEntry e;
    e.description = "Bessel function against the complete elliptic integral E";
    e.tags = {"bessel", "elliptic"};
    e.constructed = conjugate_identity(a, b, find_solution(a, "J"), find_solution(b, "E"));
    e.reduced = reduced_form(
        "g = x (a^2 - n^2/x^2 - 1/(1-x^2)) J_n(ax) E,  "
        "F = (E - K) J_n(ax) - x E a J_n'(ax)",
        [n, al](double x) {
            return x * (al * al - static_cast<double>(n) * n / (x * x) - 1.0 / (1.0 - x * x)) *
                   jn(n, al * x) * ee(x);
        },
        [n, al](double x) {
            return (ee(x) - ek(x)) * jn(n, al * x) - x * ee(x) * al * jnd(n, al * x);
        });
    return e;
}

CorpusEntry eq65(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("bessel", {{"n", 0}, {"alpha", 1.0}});
    const LinearODE2 b = make_ode("elliptic_E");
    CorpusEntry e;
    e.description = "J_0 against E with the weight x^3/(1-x^2)";
    e.tags = {"bessel", "elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "J"),
                                  scale_gauge(gauge_from_solution(find_solution(b, "E")), -1.0));
    clamp(e.constructed, 0.0, 1.0);
    e.reduced = reduced_form(
        "g = x^3 J_0 E / (1-x^2),  F = J_0 (K - E) - x J_1 E",
        [](double x) { return x * x * x * jn(0, x) * ee(x) / (1.0 - x * x); },
        [](double x) { return jn(0, x) * (ek(x) - ee(x)) - x * jn(1, x) * ee(x); });
    return e;
}

CorpusEntry eq78(const ManifestEntry&) {
    const LinearODE2 a = make_ode("bessel", {{"n", 0}, {"alpha", 1.0}});
    const LinearODE2 b = make_ode("elliptic_K_gauged");
    CorpusEntry e;
    e.description = "J_0 against K through the comodulus-weighted K equation";
    e.tags = {"bessel", "elliptic"};
    e.constructed = conjugate_identity(a, b, find_solution(a, "J"), find_solution(b, "kpK"));
    e.reduced = reduced_form(
        "g = x x' (1 - 1/x'^4) J_0 K,  F = J_0 (E - K)/x' + x x' K J_1",
        [](double x) {
            const double kp = kprime(x);
            return x * kp * (1.0 - 1.0 / (kp * kp * kp * kp)) * jn(0, x) * ek(x);
        },
        [](double x) {
            const double kp = kprime(x);
            return jn(0, x) * (ee(x) - ek(x)) / kp + x * kp * ek(x) * jn(1, x);
        });
    return e;
}

CorpusEntry eq80(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("bessel", {{"n", 0}, {"alpha", 1.0}});
    const LinearODE2 b = make_ode("elliptic_K_gauged");
    CorpusEntry e;
    e.description = "Y_0 against K with the weight x^3 (2-x^2)/x'^3";
    e.tags = {"bessel", "elliptic"};
    e.constructed =
        make_identity(ode, find_solution(ode, "Y"),
                      scale_gauge(gauge_from_solution(find_solution(b, "kpK")), -1.0));
    clamp(e.constructed, 0.0, 1.0);
    e.reduced = reduced_form(
        "g = x^3 (2-x^2)/x'^3 Y_0 K,  F = Y_0 (K - E)/x' - x x' Y_1 K",
        [](double x) {
            const double kp = kprime(x);
            return x * x * x * (2.0 - x * x) / (kp * kp * kp) * yn(0, x) * ek(x);
        },
        [](double x) {
            const double kp = kprime(x);
            return yn(0, x) * (ek(x) - ee(x)) / kp - x * kp * yn(1, x) * ek(x);
        });
    return e;
}

CorpusEntry eq81(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_E");
    const LinearODE2 b = make_ode("elliptic_K_gauged");
    CorpusEntry e;
    e.description = "E against K with the weight (x/x')^3";
    e.tags = {"elliptic"};
    e.constructed =
        make_identity(ode, find_solution(ode, "E"),
                      scale_gauge(gauge_from_solution(find_solution(b, "kpK")), -1.0));
    e.reduced = reduced_form(
        "g = (x/x')^3 E K,  F = (K - E)(E/x' - x' K)",
        [](double x) {
            const double r = x / kprime(x);
            return r * r * r * ee(x) * ek(x);
        },
        [](double x) {
            const double kp = kprime(x);
            return (ek(x) - ee(x)) * (ee(x) / kp - kp * ek(x));
        });
    return e;
}

// --- Associated Legendre under the order gauge ------------------------------

CorpusEntry eq105(const ManifestEntry& me) {
    const double nu = arg(me, "nu");
    const int mu = iarg(me, "mu");
    const LinearODE2 ode = make_ode("assoc_legendre_gauged", {{"nu", nu}, {"mu", mu}});
    CorpusEntry e;
    e.description = "order-weighted associated Legendre P, derivative form";
    e.tags = {"legendre"};
    e.constructed = make_identity(ode, find_solution(ode, "gP"),
                                  gauges::constant(1.0 / (nu * (nu + 1.0))));
    e.reduced = reduced_form(
        "g = ((1+x)/(1-x))^{mu/2} P^mu_nu,  "
        "F = ((1+x)/(1-x))^{mu/2} (mu P^mu_nu + (x^2-1) P^mu_nu') / (nu(nu+1))",
        [nu, mu](double x) {
            return std::pow((1.0 + x) / (1.0 - x), mu / 2.0) * apm(nu, mu, x);
        },
        [nu, mu](double x) {
            return std::pow((1.0 + x) / (1.0 - x), mu / 2.0) *
                   (mu * apm(nu, mu, x) + (x * x - 1.0) * apmd(nu, mu, x)) /
                   (nu * (nu + 1.0));
        });
    return e;
}

CorpusEntry eq107(const ManifestEntry& me) {
    const double nu = arg(me, "nu");
    const int mu = iarg(me, "mu");
    const LinearODE2 ode = make_ode("assoc_legendre_gauged", {{"nu", nu}, {"mu", mu}});
    CorpusEntry e;
    e.description = "order-weighted associated Legendre Q, recurrence form";
    e.tags = {"legendre"};
    e.constructed = make_identity(ode, find_solution(ode, "gQ"),
                                  gauges::constant(1.0 / (nu * (nu + 1.0))));
    e.reduced = reduced_form(
        "g = ((1+x)/(1-x))^{mu/2} Q^mu_nu,  "
        "F = ((1+x)/(1-x))^{mu/2} ((nu x + mu) Q^mu_nu - (nu+mu) Q^mu_{nu-1}) / (nu(nu+1))",
        [nu, mu](double x) {
            return std::pow((1.0 + x) / (1.0 - x), mu / 2.0) * aqm(nu, mu, x);
        },
        [nu, mu](double x) {
            return std::pow((1.0 + x) / (1.0 - x), mu / 2.0) *
                   ((nu * x + mu) * aqm(nu, mu, x) - (nu + mu) * aqm(nu - 1.0, mu, x)) /
                   (nu * (nu + 1.0));
        });
    return e;
}

CorpusEntry eq109(const ManifestEntry& me) {
    const double nu = arg(me, "nu");
    const int mu = iarg(me, "mu");
    const LinearODE2 ode = make_ode("assoc_legendre_gauged", {{"nu", nu}, {"mu", mu}});
    CorpusEntry e;
    e.description = "inverse order-weighted associated Legendre P";
    e.tags = {"legendre"};
    e.notes = {"the lower-degree term keeps the order mu of the rest of the antiderivative"};
    e.constructed =
        make_identity(ode, find_solution(ode, "gP"),
                      scale_gauge(gauges::ratio_power(mu), 1.0 / (nu * (nu + 1.0))));
    e.reduced = reduced_form(
        "g = ((1-x)/(1+x))^{mu/2} P^mu_nu,  "
        "F = ((1-x)/(1+x))^{mu/2} ((nu x - mu) P^mu_nu - (nu+mu) P^mu_{nu-1}) / (nu(nu+1))",
        [nu, mu](double x) {
            return std::pow((1.0 - x) / (1.0 + x), mu / 2.0) * apm(nu, mu, x);
        },
        [nu, mu](double x) {
            return std::pow((1.0 - x) / (1.0 + x), mu / 2.0) *
                   ((nu * x - mu) * apm(nu, mu, x) - (nu + mu) * apm(nu - 1.0, mu, x)) /
                   (nu * (nu + 1.0));
        });
    return e;
}

CorpusEntry eq112(const ManifestEntry& me) {
    const double nu = arg(me, "nu");
    const int mu = iarg(me, "mu");
    const double s = nu * (nu + 1.0) / 2.0;
    const LinearODE2 ode = make_ode("assoc_legendre_gauged", {{"nu", nu}, {"mu", mu}});
    CorpusEntry e;
    e.description = "associated Legendre P against the polynomial weight (x-mu)^{s-2}";
    e.tags = {"legendre"};
    e.notes = {"restricted: the gauge power (x-mu)^s needs intervals clear of x = mu"};
    e.constructed =
        make_identity(ode, find_solution(ode, "gP"),
                      scale_gauge(gauges::linear_power(-mu, 1.0, s), 1.0 / (s * (s - 1.0))));
    const double c1 = 2.0 / ((nu - 1.0) * (nu + 2.0));
    const double c2 = 4.0 / ((nu - 1.0) * nu * (nu + 1.0) * (nu + 2.0));
    e.reduced = reduced_form(
        "g = (x-mu)^{s-2} (1-x^2) ((1+x)/(1-x))^{mu/2} P^mu_nu,  "
        "F = (x-mu)^s ((1+x)/(1-x))^{mu/2} (2(1-x^2) P^mu_nu/((nu-1)(nu+2)(x-mu))"
        " + 4 ((nu x+mu) P^mu_nu - (nu+mu) P^mu_{nu-1})/((nu-1)nu(nu+1)(nu+2)))",
        [nu, mu, s](double x) {
            return std::pow(x - mu, s - 2.0) * (1.0 - x * x) *
                   std::pow((1.0 + x) / (1.0 - x), mu / 2.0) * apm(nu, mu, x);
        },
        [nu, mu, s, c1, c2](double x) {
            const double p = apm(nu, mu, x);
            return std::pow(x - mu, s) * std::pow((1.0 + x) / (1.0 - x), mu / 2.0) *
                   (c1 * (1.0 - x * x) * p / (x - mu) +
                    c2 * ((nu * x + mu) * p - (nu + mu) * apm(nu - 1.0, mu, x)));
        });
    return e;
}

// --- Bessel with elementary gauges ------------------------------------------

CorpusEntry eq114(const ManifestEntry& me) {
    const int m = iarg(me, "m"), n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "Bessel integral from the power gauge x^m, derivative form";
    e.tags = {"bessel"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), gauges::monomial(m));
    e.reduced = reduced_form(
        "g = x^{m+1} (1 + (m^2-n^2)/x^2) J_n,  F = x^{m+1} (m J_n/x - J_n')",
        [m, n](double x) {
            return std::pow(x, m + 1.0) *
                   (1.0 + (static_cast<double>(m) * m - static_cast<double>(n) * n) / (x * x)) *
                   jn(n, x);
        },
        [m, n](double x) {
            return std::pow(x, m + 1.0) * (m * jn(n, x) / x - jnd(n, x));
        });
    return e;
}

CorpusEntry eq116(const ManifestEntry& me) {
    const int m = iarg(me, "m"), n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "Bessel integral from the power gauge x^m, symmetric-difference form";
    e.tags = {"bessel"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), gauges::monomial(m));
    e.reduced = reduced_form(
        "g = x^{m+1} (1 + (m^2-n^2)/x^2) J_n,  "
        "F = x^{m+1} (m J_n/x + (J_{n+1} - J_{n-1})/2)",
        [m, n](double x) {
            return std::pow(x, m + 1.0) *
                   (1.0 + (static_cast<double>(m) * m - static_cast<double>(n) * n) / (x * x)) *
                   jn(n, x);
        },
        [m, n](double x) {
            return std::pow(x, m + 1.0) *
                   (m * jn(n, x) / x + 0.5 * (jn(n + 1, x) - jn(n - 1, x)));
        });
    return e;
}

CorpusEntry eq118(const ManifestEntry& me) {
    const int n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "the classical raising integral of x^{n+1} J_n";
    e.tags = {"bessel"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), gauges::monomial(n));
    e.reduced = reduced_form(
        "g = x^{n+1} J_n,  F = x^{n+1} J_{n+1}",
        [n](double x) { return std::pow(x, n + 1.0) * jn(n, x); },
        [n](double x) { return std::pow(x, n + 1.0) * jn(n + 1, x); });
    return e;
}

CorpusEntry eq119(const ManifestEntry& me) {
    const int n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "the classical lowering integral of x^{-n+1} J_n";
    e.tags = {"bessel"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), gauges::monomial(-n));
    e.reduced = reduced_form(
        "g = x^{-n+1} J_n,  F = -x^{-n+1} J_{n-1}",
        [n](double x) { return std::pow(x, 1.0 - n) * jn(n, x); },
        [n](double x) { return -std::pow(x, 1.0 - n) * jn(n - 1, x); });
    return e;
}

CorpusEntry eq120(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("bessel", {{"n", 0}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "(1+x^2) J_0 from the linear gauge";
    e.tags = {"bessel"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), gauges::monomial(1.0));
    e.reduced = reduced_form(
        "g = (1+x^2) J_0,  F = x J_0 + x^2 J_1",
        [](double x) { return (1.0 + x * x) * jn(0, x); },
        [](double x) { return x * jn(0, x) + x * x * jn(1, x); });
    return e;
}

CorpusEntry eq121(const ManifestEntry& me) {
    const int m = iarg(me, "m"), n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "trigonometric-weighted Bessel integral from the gauge x^m sin x";
    e.tags = {"bessel"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), gauges::monomial_trig(m, true));
    e.reduced = reduced_form(
        "g = ((m^2-n^2) x^{m-1} sin + (2m+1) x^m cos) J_n,  "
        "F = x^{m+1} ((m J_n/x - J_n') sin + J_n cos)",
        [m, n](double x) {
            return (static_cast<double>(m) * m - static_cast<double>(n) * n) *
                       std::pow(x, m - 1.0) * std::sin(x) * jn(n, x) +
                   (2.0 * m + 1.0) * std::pow(x, m) * std::cos(x) * jn(n, x);
        },
        [m, n](double x) {
            return std::pow(x, m + 1.0) * ((m * jn(n, x) / x - jnd(n, x)) * std::sin(x) +
                                           jn(n, x) * std::cos(x));
        });
    return e;
}

CorpusEntry eq123(const ManifestEntry& me) {
    const int n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "x^n sin(x) J_n collapses to a two-term antiderivative";
    e.tags = {"bessel"};
    e.constructed = make_identity(
        ode, find_solution(ode, "J"),
        scale_gauge(gauges::monomial_trig(n, false), -1.0 / (2.0 * n + 1.0)));
    e.reduced = reduced_form(
        "g = x^n sin(x) J_n,  F = x^{n+1} (J_n sin - J_{n+1} cos) / (2n+1)",
        [n](double x) { return std::pow(x, n) * std::sin(x) * jn(n, x); },
        [n](double x) {
            return std::pow(x, n + 1.0) * (jn(n, x) * std::sin(x) - jn(n + 1, x) * std::cos(x)) /
                   (2.0 * n + 1.0);
        });
    return e;
}

CorpusEntry eq124(const ManifestEntry& me) {
    const int n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "x^{-3/2} cos(x) J_n with a half-integer power gauge";
    e.tags = {"bessel"};
    e.notes = {"corrects sign errors present in some published tables of this integral"};
    e.constructed = make_identity(
        ode, find_solution(ode, "J"),
        scale_gauge(gauges::monomial_trig(-0.5, false), 1.0 / (0.25 - static_cast<double>(n) * n)));
    e.reduced = reduced_form(
        "g = x^{-3/2} cos(x) J_n,  F = (J_n/((n-1/2) sqrt(x)) - sqrt(x) J_{n+1}/(n^2-1/4)) cos"
        " + sqrt(x) J_n sin/(n^2-1/4)",
        [n](double x) { return std::pow(x, -1.5) * std::cos(x) * jn(n, x); },
        [n](double x) {
            const double d = static_cast<double>(n) * n - 0.25;
            const double rx = std::sqrt(x);
            return (jn(n, x) / ((n - 0.5) * rx) - rx * jn(n + 1, x) / d) * std::cos(x) +
                   rx * jn(n, x) * std::sin(x) / d;
        });
    return e;
}

CorpusEntry eq126(const ManifestEntry& me) {
    const int n = iarg(me, "n");
    const LinearODE2 ode = make_ode("bessel", {{"n", n}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "logarithmic-weighted Bessel integral from the gauge x^n ln x";
    e.tags = {"bessel"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), gauges::monomial_log(n));
    e.reduced = reduced_form(
        "g = (2n x^{n-1} + x^{n+1} ln x) J_n,  F = x^n J_n + x^{n+1} ln(x) J_{n+1}",
        [n](double x) {
            return (2.0 * n * std::pow(x, n - 1.0) + std::pow(x, n + 1.0) * std::log(x)) *
                   jn(n, x);
        },
        [n](double x) {
            return std::pow(x, n) * jn(n, x) +
                   std::pow(x, n + 1.0) * std::log(x) * jn(n + 1, x);
        });
    return e;
}

CorpusEntry eq127(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("bessel", {{"n", 0}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "x ln(x) J_0 from the plain logarithm gauge";
    e.tags = {"bessel"};
    e.constructed = make_identity(ode, find_solution(ode, "J"), gauges::logarithm());
    e.reduced = reduced_form(
        "g = x ln(x) J_0,  F = J_0 + x ln(x) J_1",
        [](double x) { return x * std::log(x) * jn(0, x); },
        [](double x) { return jn(0, x) + x * std::log(x) * jn(1, x); });
    return e;
}

// --- Airy with elementary gauges ---------------------------------------------

CorpusEntry eq128(const ManifestEntry& me) {
    const int n = iarg(me, "n");
    const LinearODE2 ode = make_ode("airy", {{"alpha", 0.0}});
    CorpusEntry e;
    e.description = "power-weighted Airy integral from the gauge x^n";
    e.tags = {"airy"};
    e.constructed = make_identity(ode, find_solution(ode, "Ai"), gauges::monomial(n));
    e.reduced = reduced_form(
        "g = (n(n-1) x^{n-2} - x^{n+1}) Ai,  F = n x^{n-1} Ai - x^n Ai'",
        [n](double x) {
            return (n * (n - 1.0) * std::pow(x, n - 2.0) - std::pow(x, n + 1.0)) * ai(x);
        },
        [n](double x) { return n * std::pow(x, n - 1.0) * ai(x) - std::pow(x, n) * aid(x); });
    return e;
}

CorpusEntry eq128d(const ManifestEntry& me) {
    const int n = iarg(me, "n");
    if (n != 0)
        throw std::runtime_error("entry eq128d: the seed recursion step is encoded for n = 0");
    const LinearODE2 ode = make_ode("airy", {{"alpha", 0.0}});
    CorpusEntry e;
    e.description = "the x^3 Ai integral obtained by one step of the power recursion";
    e.tags = {"airy", "scorer"};
    e.constructed = make_identity(
        ode, find_solution(ode, "Ai"),
        gauges::sum(scale_gauge(gauges::monomial(2.0), -1.0),
                    scale_gauge(scorer_gi_gauge(), -2.0 * kPi)));
    e.reduced = reduced_form(
        "g = x^3 Ai,  F = 2 pi (Gi Ai' - Gi' Ai) - 2x Ai + x^2 Ai'",
        [](double x) { return x * x * x * ai(x); },
        [](double x) {
            return 2.0 * kPi * (gi(x) * aid(x) - gid(x) * ai(x)) - 2.0 * x * ai(x) +
                   x * x * aid(x);
        });
    return e;
}

CorpusEntry eq132(const ManifestEntry& me) {
    const double phi = arg(me, "phi");
    const LinearODE2 ode = make_ode("airy", {{"alpha", 1.0}});
    CorpusEntry e;
    e.description = "x sin(x+phi) against the shifted Airy function";
    e.tags = {"airy"};
    e.constructed = make_identity(ode, find_solution(ode, "Ai"),
                                  scale_gauge(gauges::sin_shift(phi), -1.0));
    e.reduced = reduced_form(
        "g = x sin(x+phi) Ai(x-1),  F = sin(x+phi) Ai'(x-1) - cos(x+phi) Ai(x-1)",
        [phi](double x) { return x * std::sin(x + phi) * ai(x - 1.0); },
        [phi](double x) {
            return std::sin(x + phi) * aid(x - 1.0) - std::cos(x + phi) * ai(x - 1.0);
        });
    return e;
}

CorpusEntry eq133(const ManifestEntry& me) {
    const double s = arg(me, "sign");
    if (s * s != 1.0)
        throw std::runtime_error("entry eq133: parameter 'sign' must be +1 or -1");
    const LinearODE2 ode = make_ode("airy", {{"alpha", -1.0}});
    CorpusEntry e;
    e.description = "x e^{x} against the shifted Airy function";
    e.tags = {"airy"};
    e.constructed = make_identity(ode, find_solution(ode, "Ai"),
                                  scale_gauge(gauges::exponential(s), -1.0));
    e.reduced = reduced_form(
        "g = x e^{sx} Ai(x+1),  F = e^{sx} (Ai'(x+1) - s Ai(x+1))",
        [s](double x) { return x * std::exp(s * x) * ai(x + 1.0); },
        [s](double x) { return std::exp(s * x) * (aid(x + 1.0) - s * ai(x + 1.0)); });
    return e;
}

CorpusEntry eq134(const ManifestEntry& me) {
    const double al = arg(me, "alpha"), be = arg(me, "beta");
    const LinearODE2 a = make_ode("airy", {{"alpha", al}});
    const LinearODE2 b = make_ode("airy", {{"alpha", be}});
    CorpusEntry e;
    e.description = "product of two shifted Ai functions";
    e.tags = {"airy"};
    e.constructed = make_identity(
        a, find_solution(a, "Ai"),
        scale_gauge(gauge_from_solution(find_solution(b, "Ai")), 1.0 / (al - be)));
    clamp(e.constructed, be - 15.0, be + 15.0);
    e.reduced = reduced_form(
        "g = Ai(x-b) Ai(x-a),  F = (Ai'(x-b) Ai(x-a) - Ai(x-b) Ai'(x-a)) / (a-b)",
        [al, be](double x) { return ai(x - be) * ai(x - al); },
        [al, be](double x) {
            return (aid(x - be) * ai(x - al) - ai(x - be) * aid(x - al)) / (al - be);
        });
    return e;
}

CorpusEntry eq135(const ManifestEntry& me) {
    const double al = arg(me, "alpha"), be = arg(me, "beta");
    const LinearODE2 a = make_ode("airy", {{"alpha", al}});
    const LinearODE2 b = make_ode("airy", {{"alpha", be}});
    CorpusEntry e;
    e.description = "product of two shifted Bi functions";
    e.tags = {"airy"};
    e.constructed = make_identity(
        a, find_solution(a, "Bi"),
        scale_gauge(gauge_from_solution(find_solution(b, "Bi")), 1.0 / (al - be)));
    clamp(e.constructed, be - 15.0, be + 15.0);
    e.reduced = reduced_form(
        "g = Bi(x-b) Bi(x-a),  F = (Bi'(x-b) Bi(x-a) - Bi(x-b) Bi'(x-a)) / (a-b)",
        [al, be](double x) { return bi(x - be) * bi(x - al); },
        [al, be](double x) {
            return (bid(x - be) * bi(x - al) - bi(x - be) * bid(x - al)) / (al - be);
        });
    return e;
}

// --- Gauss hypergeometric -----------------------------------------------------

CorpusEntry eq138(const ManifestEntry& me) {
    const double a = arg(me, "alpha"), b = arg(me, "beta"), c = arg(me, "gamma");
    const LinearODE2 ode = make_ode("hyp2f1", {{"alpha", a}, {"beta", b}, {"gamma", c}});
    CorpusEntry e;
    e.description = "Euler-weighted 2F1 integrates to the parameter-shifted 2F1";
    e.tags = {"hyp2f1"};
    e.constructed = make_identity(ode, find_solution(ode, "F"),
                                  gauges::constant(-1.0 / (a * b)));
    e.reduced = reduced_form(
        "g = x^{c-1} (1-x)^{a+b-c} F(a,b;c),  "
        "F = x^c (1-x)^{a+b-c+1} F(a+1,b+1;c+1) / c",
        [a, b, c](double x) {
            return std::pow(x, c - 1.0) * std::pow(1.0 - x, a + b - c) * f21(a, b, c, x);
        },
        [a, b, c](double x) {
            return std::pow(x, c) * std::pow(1.0 - x, a + b - c + 1.0) *
                   f21(a + 1.0, b + 1.0, c + 1.0, x) / c;
        });
    return e;
}

CorpusEntry eq141(const ManifestEntry& me) {
    const double a = arg(me, "alpha"), b = arg(me, "beta"), c = arg(me, "gamma");
    const double s = a + b + 1.0;
    const double r = a * b / s;
    const LinearODE2 ode = make_ode("hyp2f1", {{"alpha", a}, {"beta", b}, {"gamma", c}});
    CorpusEntry e;
    e.description = "2F1 against the resonance-free power of (gamma - (a+b+1)x)";
    e.tags = {"hyp2f1"};
    e.constructed = make_identity(
        ode, find_solution(ode, "F"),
        scale_gauge(gauges::linear_power(c, -s, -r), 1.0 / (r * (r + 1.0) * s * s)));
    e.reduced = reduced_form(
        "g = x^c (1-x)^{a+b-c+1} (c-sx)^{-r-2} F(a,b;c),  "
        "F = x^c (1-x)^{a+b+1-c} (c-sx)^{-r} (F(a,b;c)/(c-sx) - F(a+1,b+1;c+1)/c) / (ab+s)",
        [a, b, c, s, r](double x) {
            return std::pow(x, c) * std::pow(1.0 - x, a + b - c + 1.0) *
                   std::pow(c - s * x, -r - 2.0) * f21(a, b, c, x);
        },
        [a, b, c, s, r](double x) {
            return std::pow(x, c) * std::pow(1.0 - x, a + b + 1.0 - c) *
                   std::pow(c - s * x, -r) *
                   (f21(a, b, c, x) / (c - s * x) - f21(a + 1.0, b + 1.0, c + 1.0, x) / c) /
                   (a * b + s);
        });
    return e;
}

CorpusEntry eq145(const ManifestEntry& me) {
    const double a = arg(me, "alpha"), b = arg(me, "beta"), c = arg(me, "gamma");
    const double d = arg(me, "delta");
    const LinearODE2 oa = make_ode("hyp2f1", {{"alpha", a}, {"beta", b}, {"gamma", c}});
    const LinearODE2 ob = make_ode("hyp2f1", {{"alpha", a + d}, {"beta", b - d}, {"gamma", c}});
    CorpusEntry e;
    e.description = "product of two 2F1 functions with shifted upper parameters";
    e.tags = {"hyp2f1"};
    e.constructed = make_identity(
        oa, find_solution(oa, "F"),
        scale_gauge(gauge_from_solution(find_solution(ob, "F")), -c));
    e.reduced = reduced_form(
        "g = c d (a-b+d) x^{c-1} (1-x)^{a+b-c} F(a+d,b-d;c) F(a,b;c),  "
        "F = x^c (1-x)^{a+b-c+1} (ab F(a+d,b-d;c) F(a+1,b+1;c+1)"
        " - (a+d)(b-d) F(a+d+1,b-d+1;c+1) F(a,b;c))",
        [a, b, c, d](double x) {
            return c * d * (a - b + d) * std::pow(x, c - 1.0) * std::pow(1.0 - x, a + b - c) *
                   f21(a + d, b - d, c, x) * f21(a, b, c, x);
        },
        [a, b, c, d](double x) {
            return std::pow(x, c) * std::pow(1.0 - x, a + b - c + 1.0) *
                   (a * b * f21(a + d, b - d, c, x) * f21(a + 1.0, b + 1.0, c + 1.0, x) -
                    (a + d) * (b - d) * f21(a + d + 1.0, b - d + 1.0, c + 1.0, x) *
                        f21(a, b, c, x));
        });
    return e;
}

// --- Complete elliptic integral K under elementary gauges ---------------------

CorpusEntry eq159(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "the classical k K integral";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "K"), gauges::constant(-1.0));
    e.reduced = reduced_form(
        "g = k K,  F = E - (1-k^2) K",
        [](double k) { return k * ek(k); },
        [](double k) { return ee(k) - (1.0 - k * k) * ek(k); });
    return e;
}

CorpusEntry eq173(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "k ln(k/k') K from the modulus-ratio logarithm gauge";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "K"),
                                  scale_gauge(gauges::log_modulus_ratio(), -1.0));
    e.reduced = reduced_form(
        "g = k ln(k/k') K,  F = ln(k/k')(E - (1-k^2) K) - K",
        [](double k) { return k * std::log(k / kprime(k)) * ek(k); },
        [](double k) {
            const double lg = std::log(k / kprime(k));
            return lg * (ee(k) - (1.0 - k * k) * ek(k)) - ek(k);
        });
    return e;
}

CorpusEntry eq174(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "k (2 + ln k) K from the logarithm gauge";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "K"),
                                  scale_gauge(gauges::logarithm(), -1.0));
    e.reduced = reduced_form(
        "g = k (2 + ln k) K,  F = ln(k) E - (1-k^2)(1 + ln k) K",
        [](double k) { return k * (2.0 + std::log(k)) * ek(k); },
        [](double k) {
            const double lg = std::log(k);
            return lg * ee(k) - (1.0 - k * k) * (1.0 + lg) * ek(k);
        });
    return e;
}

CorpusEntry eq175(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "(1 - k atanh k) K from the inverse tangent integral gauge";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "K"), gauges::atanh_fn());
    e.reduced = reduced_form(
        "g = (1 - k atanh k) K,  F = k K - atanh(k)(E - (1-k^2) K)",
        [](double k) { return (1.0 - k * std::atanh(k)) * ek(k); },
        [](double k) {
            return k * ek(k) - std::atanh(k) * (ee(k) - (1.0 - k * k) * ek(k));
        });
    return e;
}

CorpusEntry eq176(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "K against the (3k^2-1)^{-13/6} weight";
    e.tags = {"elliptic"};
    e.notes = {"defined for k > 1/sqrt(3), where 3k^2 - 1 > 0"};
    e.constructed = make_identity(ode, find_solution(ode, "K"),
                                  gauges::modulus_fragment({0.0, 0.0, 0.0, -1.0 / 6.0}));
    e.reduced = reduced_form(
        "g = k (1-k^2)(1+4k^2)(3k^2-1)^{-13/6} K,  "
        "F = (2k^2-1)(1-k^2)(3k^2-1)^{-7/6} K - (3k^2-1)^{-1/6} E",
        [](double k) {
            const double v = 3.0 * k * k - 1.0;
            return k * (1.0 - k * k) * (1.0 + 4.0 * k * k) * std::pow(v, -13.0 / 6.0) * ek(k);
        },
        [](double k) {
            const double v = 3.0 * k * k - 1.0;
            return (2.0 * k * k - 1.0) * (1.0 - k * k) * std::pow(v, -7.0 / 6.0) * ek(k) -
                   std::pow(v, -1.0 / 6.0) * ee(k);
        });
    return e;
}

CorpusEntry eq177(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "k K / k'^3 from the reciprocal comodulus gauge";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "K"),
                                  gauges::modulus_fragment({0.0, 0.0, -1.0, 0.0}));
    e.reduced = reduced_form(
        "g = k K / k'^3,  F = (K - E) / k'",
        [](double k) {
            const double kp = kprime(k);
            return k * ek(k) / (kp * kp * kp);
        },
        [](double k) { return (ek(k) - ee(k)) / kprime(k); });
    return e;
}

CorpusEntry eq178(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "k'^2 k^{-3/2} K from the inverse square-root gauge";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "K"),
                                  scale_gauge(gauges::monomial(-0.5), 4.0));
    e.reduced = reduced_form(
        "g = k'^2 k^{-3/2} K,  F = (2 k'^2 K - 4 E) / sqrt(k)",
        [](double k) { return (1.0 - k * k) * std::pow(k, -1.5) * ek(k); },
        [](double k) {
            return (2.0 * (1.0 - k * k) * ek(k) - 4.0 * ee(k)) / std::sqrt(k);
        });
    return e;
}

CorpusEntry eq197(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    const LinearODE2 b = make_ode("modified_bessel", {{"n", 0}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "K against the modified Bessel function K_0 as gauge";
    e.tags = {"elliptic", "modified-bessel"};
    e.constructed = make_identity(ode, find_solution(ode, "K"),
                                  gauge_from_solution(find_solution(b, "K")));
    e.reduced = reduced_form(
        "g = k^2 (2 K_1(k) - k K_0(k)) K,  F = (1-k^2)(K_0(k) - k K_1(k)) K - K_0(k) E",
        [](double k) { return k * k * (2.0 * kn(1, k) - k * kn(0, k)) * ek(k); },
        [](double k) {
            return (1.0 - k * k) * (kn(0, k) - k * kn(1, k)) * ek(k) - kn(0, k) * ee(k);
        });
    return e;
}

CorpusEntry eq198(const ManifestEntry& me) {
    const double s = arg(me, "sign");
    if (s * s != 1.0)
        throw std::runtime_error("entry eq198: parameter 'sign' must be +1 or -1");
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "exponentially weighted K integral";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "K"),
                                  scale_gauge(gauges::exponential(s), s));
    e.reduced = reduced_form(
        "g = (1 - 3k^2 - s k^3) e^{sk} K,  F = ((k+s)(1-k^2) K - s E) e^{sk}",
        [s](double k) { return (1.0 - 3.0 * k * k - s * k * k * k) * std::exp(s * k) * ek(k); },
        [s](double k) {
            return ((k + s) * (1.0 - k * k) * ek(k) - s * ee(k)) * std::exp(s * k);
        });
    return e;
}

CorpusEntry eq199(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "K against e^{k^2/6} (3k^2-1)^{-1/9} and its derived weight";
    e.tags = {"elliptic"};
    e.notes = {"defined for k > 1/sqrt(3), where 3k^2 - 1 > 0"};
    e.constructed = make_identity(
        ode, find_solution(ode, "K"),
        gauges::modulus_fragment({1.0 / 6.0, 0.0, 0.0, -1.0 / 9.0}));
    e.reduced = reduced_form(
        "g = k (1 - k^2 + 6k^4 - 9k^6 - k^8)(3k^2-1)^{-19/9} e^{k^2/6} K,  "
        "F = ((1-k^2)(k^4+2k^2-1)(3k^2-1)^{-1} K - E) e^{k^2/6} (3k^2-1)^{-1/9}",
        [](double k) {
            const double k2 = k * k, v = 3.0 * k2 - 1.0;
            const double poly =
                1.0 + k2 * (-1.0 + k2 * (6.0 + k2 * (-9.0 + k2 * (-1.0))));
            return k * poly * std::pow(v, -19.0 / 9.0) * std::exp(k2 / 6.0) * ek(k);
        },
        [](double k) {
            const double k2 = k * k, v = 3.0 * k2 - 1.0;
            return ((1.0 - k2) * (k2 * k2 + 2.0 * k2 - 1.0) / v * ek(k) - ee(k)) *
                   std::exp(k2 / 6.0) * std::pow(v, -1.0 / 9.0);
        });
    return e;
}

CorpusEntry eq200(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "K against e^{k^2/4} k^{-1/2} and its derived weight";
    e.tags = {"elliptic"};
    e.constructed = make_identity(
        ode, find_solution(ode, "K"),
        scale_gauge(gauges::modulus_fragment({0.25, -0.5, 0.0, 0.0}), 4.0));
    e.reduced = reduced_form(
        "g = (1 + k^2 - 5k^4 - k^6) e^{k^2/4} k^{-3/2} K,  "
        "F = (2(1-k^4) K - 4 E) e^{k^2/4} / sqrt(k)",
        [](double k) {
            const double k2 = k * k;
            const double poly = 1.0 + k2 * (1.0 + k2 * (-5.0 + k2 * (-1.0)));
            return poly * std::exp(k2 / 4.0) * std::pow(k, -1.5) * ek(k);
        },
        [](double k) {
            const double k2 = k * k;
            return (2.0 * (1.0 - k2 * k2) * ek(k) - 4.0 * ee(k)) * std::exp(k2 / 4.0) /
                   std::sqrt(k);
        });
    return e;
}

CorpusEntry eq201(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "k (k^4 + 3k^2 - 1) e^{k^2/2} K";
    e.tags = {"elliptic"};
    e.constructed = make_identity(
        ode, find_solution(ode, "K"),
        scale_gauge(gauges::modulus_fragment({0.5, 0.0, 0.0, 0.0}), -1.0));
    e.reduced = reduced_form(
        "g = k (k^4 + 3k^2 - 1) e^{k^2/2} K,  F = e^{k^2/2} (E - (1-k^4) K)",
        [](double k) {
            const double k2 = k * k;
            return k * (k2 * k2 + 3.0 * k2 - 1.0) * std::exp(k2 / 2.0) * ek(k);
        },
        [](double k) {
            const double k2 = k * k;
            return std::exp(k2 / 2.0) * (ee(k) - (1.0 - k2 * k2) * ek(k));
        });
    return e;
}

CorpusEntry eq202(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "K against e^{-k^2/6} (3k^2-1)^{-1/18} and its derived weight";
    e.tags = {"elliptic"};
    e.notes = {"defined for k > 1/sqrt(3), where 3k^2 - 1 > 0"};
    e.constructed = make_identity(
        ode, find_solution(ode, "K"),
        scale_gauge(gauges::modulus_fragment({-1.0 / 6.0, 0.0, 0.0, -1.0 / 18.0}), -1.0));
    e.reduced = reduced_form(
        "g = k (1-k^2)(1 - 9k^2 + 12k^4 - k^6)(3k^2-1)^{-37/18} e^{-k^2/6} K,  "
        "F = ((1-k^2)(1 - 3k^2 + k^4)(3k^2-1)^{-1} K + E) e^{-k^2/6} (3k^2-1)^{-1/18}",
        [](double k) {
            const double k2 = k * k, v = 3.0 * k2 - 1.0;
            const double poly = 1.0 + k2 * (-9.0 + k2 * (12.0 + k2 * (-1.0)));
            return k * (1.0 - k2) * poly * std::pow(v, -37.0 / 18.0) * std::exp(-k2 / 6.0) *
                   ek(k);
        },
        [](double k) {
            const double k2 = k * k, v = 3.0 * k2 - 1.0;
            return ((1.0 - k2) * (1.0 + k2 * (-3.0 + k2)) / v * ek(k) + ee(k)) *
                   std::exp(-k2 / 6.0) * std::pow(v, -1.0 / 18.0);
        });
    return e;
}

CorpusEntry eq203(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "k k'^2 (k^2/4 - 2) e^{-k^2/4} K";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "K"),
                                  gauges::modulus_fragment({-0.25, 0.0, 0.0, 0.0}));
    e.reduced = reduced_form(
        "g = k (1-k^2)(k^2/4 - 2) e^{-k^2/4} K,  F = e^{-k^2/4} ((1 - k^2/2)(1-k^2) K - E)",
        [](double k) {
            const double k2 = k * k;
            return k * (1.0 - k2) * (k2 / 4.0 - 2.0) * std::exp(-k2 / 4.0) * ek(k);
        },
        [](double k) {
            const double k2 = k * k;
            return std::exp(-k2 / 4.0) * ((1.0 - k2 / 2.0) * (1.0 - k2) * ek(k) - ee(k));
        });
    return e;
}

CorpusEntry eq204(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_K");
    CorpusEntry e;
    e.description = "K against e^{-k^2/2}/k' and its derived weight";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "K"),
                                  gauges::modulus_fragment({-0.5, 0.0, -1.0, 0.0}));
    e.reduced = reduced_form(
        "g = k (5k^2 - 4k^4 + k^6 - 1) k'^{-3} e^{-k^2/2} K,  "
        "F = e^{-k^2/2} ((k^4 - k^2 + 1) K - E) / k'",
        [](double k) {
            const double k2 = k * k, kp = kprime(k);
            const double poly = -1.0 + k2 * (5.0 + k2 * (-4.0 + k2));
            return k * poly * std::exp(-k2 / 2.0) / (kp * kp * kp) * ek(k);
        },
        [](double k) {
            const double k2 = k * k;
            return std::exp(-k2 / 2.0) * ((k2 * k2 - k2 + 1.0) * ek(k) - ee(k)) / kprime(k);
        });
    return e;
}

// --- Complete elliptic integral E under elementary gauges ---------------------

CorpusEntry eq206(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_E");
    CorpusEntry e;
    e.description = "the classical k E / k'^2 integral";
    e.tags = {"elliptic"};
    e.constructed = second_integral(ode, find_solution(ode, "E"));
    e.reduced = reduced_form(
        "g = k E / (1-k^2),  F = K - E",
        [](double k) { return k * ee(k) / (1.0 - k * k); },
        [](double k) { return ek(k) - ee(k); });
    return e;
}

CorpusEntry eq223(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_E");
    CorpusEntry e;
    e.description = "k ln(k) E / k'^2 from the logarithm gauge";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "E"), gauges::logarithm());
    e.reduced = reduced_form(
        "g = k ln(k) E / (1-k^2),  F = (1 - ln k) E + ln(k) K",
        [](double k) { return k * std::log(k) * ee(k) / (1.0 - k * k); },
        [](double k) {
            const double lg = std::log(k);
            return (1.0 - lg) * ee(k) + lg * ek(k);
        });
    return e;
}

CorpusEntry eq225(const ManifestEntry& me) {
    const double nu = arg(me, "nu");  // golden degree: nu (nu+1) = 1
    const LinearODE2 ode = make_ode("elliptic_E");
    CorpusEntry e;
    e.description = "Legendre function of golden degree against E";
    e.tags = {"elliptic", "legendre", "golden"};
    e.constructed = make_identity(ode, find_solution(ode, "E"), gauges::comodulus_p1(nu));
    clamp(e.constructed, 0.0, 0.95);
    const double phi = nu + 1.0;
    e.reduced = reduced_form(
        "g = P_nu(k) E,  F = (k' K + (phi k^2 - 1) E/k') P^1_nu - (phi-1) k E/k' P^1_{nu+1}",
        [nu](double k) { return legp(nu, k) * ee(k); },
        [nu, phi](double k) {
            const double kp = kprime(k);
            return (kp * ek(k) + (phi * k * k - 1.0) * ee(k) / kp) * apm(nu, 1, k) -
                   (phi - 1.0) * k * ee(k) / kp * apm(nu + 1.0, 1, k);
        });
    return e;
}

CorpusEntry eq226(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_E");
    const LinearODE2 b = make_ode("bessel", {{"n", 0}, {"alpha", 1.0}});
    CorpusEntry e;
    e.description = "k^3 J_0 E / k'^2 with the Bessel function as gauge";
    e.tags = {"elliptic", "bessel"};
    e.constructed = make_identity(ode, find_solution(ode, "E"),
                                  gauge_from_solution(find_solution(b, "J")));
    e.reduced = reduced_form(
        "g = k^3 J_0(k) E / (1-k^2),  F = J_0(k)(K - E) - k J_1(k) E",
        [](double k) { return k * k * k * jn(0, k) * ee(k) / (1.0 - k * k); },
        [](double k) { return jn(0, k) * (ek(k) - ee(k)) - k * jn(1, k) * ee(k); });
    return e;
}

CorpusEntry eq227(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_E");
    CorpusEntry e;
    e.description = "trigonometric-weighted E integral from the sine gauge";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "E"), gauges::sin_shift(0.0));
    e.reduced = reduced_form(
        "g = (cos k + k^3 sin k / (1-k^2)) E,  F = k cos(k) E - sin(k)(E - K)",
        [](double k) {
            return (std::cos(k) + k * k * k * std::sin(k) / (1.0 - k * k)) * ee(k);
        },
        [](double k) {
            return k * std::cos(k) * ee(k) - std::sin(k) * (ee(k) - ek(k));
        });
    return e;
}

CorpusEntry eq228(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_E");
    CorpusEntry e;
    e.description = "k E / k'^3 from the comodulus gauge";
    e.tags = {"elliptic"};
    e.constructed = make_identity(
        ode, find_solution(ode, "E"),
        scale_gauge(gauges::modulus_fragment({0.0, 0.0, 1.0, 0.0}), -1.0));
    e.reduced = reduced_form(
        "g = k E / k'^3,  F = E / k' - k' K",
        [](double k) {
            const double kp = kprime(k);
            return k * ee(k) / (kp * kp * kp);
        },
        [](double k) {
            const double kp = kprime(k);
            return ee(k) / kp - kp * ek(k);
        });
    return e;
}

CorpusEntry eq229(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_E");
    CorpusEntry e;
    e.description = "E against k' e^{k^2/2} and its derived weight";
    e.tags = {"elliptic"};
    e.constructed = make_identity(ode, find_solution(ode, "E"),
                                  gauges::modulus_fragment({0.5, 0.0, 1.0, 0.0}));
    e.reduced = reduced_form(
        "g = k k' (1 + k^2 (k^4 + k^2 - 3)/k'^4) e^{k^2/2} E,  "
        "F = e^{k^2/2} (k' K - (k' + k^4/k') E)",
        [](double k) {
            const double k2 = k * k, kp = kprime(k), kp4 = (1.0 - k2) * (1.0 - k2);
            return k * kp * (1.0 + k2 * (k2 * k2 + k2 - 3.0) / kp4) * std::exp(k2 / 2.0) *
                   ee(k);
        },
        [](double k) {
            const double k2 = k * k, kp = kprime(k);
            return std::exp(k2 / 2.0) * (kp * ek(k) - (kp + k2 * k2 / kp) * ee(k));
        });
    return e;
}

CorpusEntry eq230(const ManifestEntry&) {
    const LinearODE2 ode = make_ode("elliptic_E");
    CorpusEntry e;
    e.description = "k (1 - 3k^2 + k^4) e^{-k^2/2} E / k'^2";
    e.tags = {"elliptic"};
    e.constructed = make_identity(
        ode, find_solution(ode, "E"),
        scale_gauge(gauges::modulus_fragment({-0.5, 0.0, 0.0, 0.0}), -1.0));
    e.reduced = reduced_form(
        "g = k (1 - 3k^2 + k^4) e^{-k^2/2} E / (1-k^2),  F = e^{-k^2/2} ((1+k^2) E - K)",
        [](double k) {
            const double k2 = k * k;
            return k * (1.0 + k2 * (-3.0 + k2)) * std::exp(-k2 / 2.0) * ee(k) / (1.0 - k2);
        },
        [](double k) {
            const double k2 = k * k;
            return std::exp(-k2 / 2.0) * ((1.0 + k2) * ee(k) - ek(k));
        });
    return e;
}

// --- Golden-degree Legendre forms over the transformed E equation -------------

CorpusEntry eq235(const ManifestEntry& me) {
    const double nu = arg(me, "nu");
    const LinearODE2 ode = make_ode("elliptic_E_sqrtk");
    const LinearODE2 leg = make_ode("assoc_legendre", {{"nu", nu}, {"mu", 1}});
    CorpusEntry e;
    e.description = "first-order golden Legendre function against sqrt(k) E / k'";
    e.tags = {"elliptic", "legendre", "golden"};
    e.constructed = make_identity(
        ode, find_solution(ode, "sqrtkE_over_kp"),
        scale_gauge(gauge_from_solution(find_solution(leg, "P")), 4.0));
    clamp(e.constructed, 0.0, 0.95);
    const double phi = nu + 1.0;
    e.reduced = reduced_form(
        "g = k' k^{-3/2} P^1_nu(k) E,  F = (4 sqrt(k)/k') ((phi k - (3-k^2)/(2k)) E P^1_nu"
        " + (k'^2/k) K P^1_nu - (phi-1) E P^1_{nu+1})",
        [nu](double k) {
            return kprime(k) * std::pow(k, -1.5) * apm(nu, 1, k) * ee(k);
        },
        [nu, phi](double k) {
            const double kp = kprime(k);
            const double p1 = apm(nu, 1, k);
            return 4.0 * std::sqrt(k) / kp *
                   ((phi * k - (3.0 - k * k) / (2.0 * k)) * ee(k) * p1 +
                    kp * kp / k * ek(k) * p1 - (phi - 1.0) * ee(k) * apm(nu + 1.0, 1, k));
        });
    return e;
}

CorpusEntry eq236(const ManifestEntry& me) {
    const double nu = arg(me, "nu");
    const LinearODE2 ode = make_ode("elliptic_E_sqrtk");
    const LinearODE2 leg = make_ode("legendre", {{"nu", nu}});
    CorpusEntry e;
    e.description = "golden Legendre function against sqrt(k) E / k' and a quartic weight";
    e.tags = {"elliptic", "legendre", "golden"};
    e.constructed = make_identity(
        ode, find_solution(ode, "sqrtkE_over_kp"),
        scale_gauge(gauge_from_solution(find_solution(leg, "P")), 4.0));
    clamp(e.constructed, 0.0, 0.95);
    const double phi = nu + 1.0;
    e.reduced = reduced_form(
        "g = (1 - 6k^2 + k^4) k^{-3/2} k'^{-3} P_nu(k) E,  "
        "F = (4 sqrt(k)/k') (((phi k - (3-k^2)/(2k)) E + (k'^2/k) K) P_nu - phi E P_{nu+1})",
        [nu](double k) {
            const double k2 = k * k, kp = kprime(k);
            return (1.0 + k2 * (-6.0 + k2)) * std::pow(k, -1.5) / (kp * kp * kp) *
                   legp(nu, k) * ee(k);
        },
        [nu, phi](double k) {
            const double kp = kprime(k);
            return 4.0 * std::sqrt(k) / kp *
                   (((phi * k - (3.0 - k * k) / (2.0 * k)) * ee(k) + kp * kp / k * ek(k)) *
                        legp(nu, k) -
                    phi * ee(k) * legp(nu + 1.0, k));
        });
    return e;
}

using Builder = CorpusEntry (*)(const ManifestEntry&);

struct Row {
    const char* id;
    Builder build;
};

constexpr Row kRows[] = {
    {"eq36", eq36},    {"eq39", eq39},    {"eq40", eq40},    {"eq44", eq44},
    {"eq48", eq48},    {"eq51", eq51},    {"eq51c", eq51c},  {"eq51d", eq51d},
    {"eq60", eq60},    {"eq62", eq62},    {"eq63", eq63},    {"eq65", eq65},
    {"eq78", eq78},    {"eq80", eq80},    {"eq81", eq81},    {"eq105", eq105},
    {"eq107", eq107},  {"eq109", eq109},  {"eq112", eq112},  {"eq114", eq114},
    {"eq116", eq116},  {"eq118", eq118},  {"eq119", eq119},  {"eq120", eq120},
    {"eq121", eq121},  {"eq123", eq123},  {"eq124", eq124},  {"eq126", eq126},
    {"eq127", eq127},  {"eq128", eq128},  {"eq128d", eq128d}, {"eq132", eq132},
    {"eq133", eq133},  {"eq134", eq134},  {"eq135", eq135},  {"eq138", eq138},
    {"eq141", eq141},  {"eq145", eq145},  {"eq159", eq159},  {"eq173", eq173},
    {"eq174", eq174},  {"eq175", eq175},  {"eq176", eq176},  {"eq177", eq177},
    {"eq178", eq178},  {"eq197", eq197},  {"eq198", eq198},  {"eq199", eq199},
    {"eq200", eq200},  {"eq201", eq201},  {"eq202", eq202},  {"eq203", eq203},
    {"eq204", eq204},  {"eq206", eq206},  {"eq223", eq223},  {"eq225", eq225},
    {"eq226", eq226},  {"eq227", eq227},  {"eq228", eq228},  {"eq229", eq229},
    {"eq230", eq230},  {"eq235", eq235},  {"eq236", eq236},
};

}  // namespace

CorpusEntry make_corpus_entry(const ManifestEntry& m) {
    for (const Row& row : kRows) {
        if (m.id != row.id) continue;
        CorpusEntry e = row.build(m);
        e.id = m.id;
        e.intervals = m.intervals;
        e.reduced.id = m.id + "/reduced";
        e.reduced.dom_lo = e.constructed.dom_lo;
        e.reduced.dom_hi = e.constructed.dom_hi;
        return e;
    }
    throw std::invalid_argument("unknown corpus entry id: " + m.id);
}

}  // namespace lagint
