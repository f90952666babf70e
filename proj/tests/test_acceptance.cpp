// Acceptance gate: every headline property the artifact promises, one
// pass/fail line each.  Run by ctest like the unit suites, but organised as
// a checklist rather than as doctest cases so the protocol is visible at a
// glance in the log.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lagint/cli.hpp"
#include "lagint/corpus.hpp"
#include "lagint/identity.hpp"
#include "lagint/verify.hpp"

using namespace lagint;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGoldenNu = 0.61803398874989485;  // (sqrt(5)-1)/2

int g_failures = 0;

void report(int i, int total, const std::string& what, bool ok, const std::string& detail) {
    std::printf("[%d/%d] %-28s %s  (%s)\n", i, total, what.c_str(), ok ? "PASS" : "FAIL",
                detail.c_str());
    if (!ok) ++g_failures;
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// ---- 1. full corpus sweep under the default tolerance ----------------------

void criterion_corpus_sweep() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<VerifyReport> reports = run_all(default_tolerance());
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = reports.size() >= 50;
    int passed = 0;
    for (const VerifyReport& r : reports) {
        if (r.pass) ++passed;
        ok = ok && r.pass && r.intervals.size() >= 2;
        for (std::size_t i = 1; i < r.intervals.size(); ++i)
            ok = ok && r.intervals[i - 1].b < r.intervals[i].a;
    }
    // End-to-end through the CLI as well: exit code 0.
    std::ostringstream out, err;
    ok = ok && run_cli({"corpus", "--all"}, out, err) == 0;
    ok = ok && secs <= 120.0;
    std::ostringstream d;
    d << passed << "/" << reports.size() << " entries, >=2 disjoint intervals, "
      << fmt("%.2f", secs) << " s of 120 s";
    report(1, 9, "corpus sweep", ok, d.str());
}

// ---- 2. derivative residuals on every entry ---------------------------------

void criterion_derivative_suite() {
    bool ok = true;
    double worst = 0.0;
    std::string worst_id;
    for (const ManifestEntry& m : builtin_manifest()) {
        const VerifyReport r = run_entry(build_entry(m), default_tolerance());
        if (r.deriv.max_resid > worst) {
            worst = r.deriv.max_resid;
            worst_id = r.id;
        }
        ok = ok && r.deriv.pass && r.deriv.points >= 25 && r.deriv.max_resid <= 1e-6;
    }
    report(2, 9, "derivative suite", ok,
           "worst residual " + fmt("%.2e", worst) + " (" + worst_id + "), bound 1e-6");
}

// ---- 3. every catalog evaluator satisfies its equation ----------------------

void criterion_ode_residuals() {
    const std::vector<std::pair<std::string, Params>> instances = {
        {"legendre", {{"nu", 2.5}}},
        {"assoc_legendre", {{"nu", 2.0}, {"mu", 1.0}}},
        {"assoc_legendre_gauged", {{"nu", 2.0}, {"mu", 1.0}}},
        {"bessel", {{"n", 1.0}, {"alpha", 1.0}}},
        {"modified_bessel", {{"n", 1.0}, {"alpha", 1.0}}},
        {"airy", {{"alpha", 0.0}}},
        {"hyp2f1", {{"alpha", 0.4}, {"beta", 0.6}, {"gamma", 1.5}}},
        {"elliptic_K", {}},
        {"elliptic_E", {}},
        {"elliptic_K_gauged", {}},
        {"elliptic_K_sqrtk", {}},
        {"elliptic_E_gauged", {}},
        {"elliptic_E_sqrtk", {}},
    };
    bool ok = true;
    double worst = 0.0;
    std::string worst_at;
    for (const auto& [family, params] : instances) {
        const LinearODE2 ode = make_ode(family, params);
        const double a = ode.dom_lo + 0.05 * (ode.dom_hi - ode.dom_lo);
        const double b = ode.dom_hi - 0.05 * (ode.dom_hi - ode.dom_lo);
        for (const SolutionFn& y : ode.solutions) {
            for (int i = 0; i < 20; ++i) {
                const double x = a + i * (b - a) / 19.0;
                const double r = ode_residual(ode, y, x);
                if (r > worst) {
                    worst = r;
                    worst_at = ode.id + "/" + y.name;
                }
                ok = ok && r <= 1e-5;
            }
        }
    }
    report(3, 9, "evaluator ODE residuals", ok,
           "13 families, worst " + fmt("%.2e", worst) + " (" + worst_at + "), bound 1e-5");
}

// ---- 4. weighted Wronskians are the known constants --------------------------

void criterion_wronskians() {
    struct Row {
        const char* family;
        Params params;
        const char* y1;
        const char* y2;
        double expect;
        double a, b;
    };
    const std::vector<Row> rows = {
        {"bessel", {{"n", 0.0}, {"alpha", 1.0}}, "J", "Y", 2.0 / kPi, 0.3, 12.0},
        {"airy", {{"alpha", 0.0}}, "Ai", "Bi", 1.0 / kPi, -6.0, 6.0},
        {"legendre", {{"nu", kGoldenNu}}, "P", "Q", 1.0, -0.8, 0.8},
        {"elliptic_K", {}, "K", "Kc", -kPi / 2.0, 0.05, 0.95},
    };
    bool ok = true;
    double worst = 0.0;
    for (const Row& row : rows) {
        const LinearODE2 ode = make_ode(row.family, row.params);
        const SolutionFn& y1 = find_solution(ode, row.y1);
        const SolutionFn& y2 = find_solution(ode, row.y2);
        for (int i = 0; i < 20; ++i) {
            const double x = row.a + i * (row.b - row.a) / 19.0;
            const double w = wronskian(ode, y1, y2, x);
            const double rel = std::abs(w - row.expect) / std::abs(row.expect);
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-8;
        }
    }
    report(4, 9, "weighted Wronskians", ok,
           "4 solution pairs, worst deviation " + fmt("%.2e", worst) + ", bound 1e-8");
}

// ---- 5. conjugate construction is gauge invariant ----------------------------

// Transport an equation and one of its solutions to first-derivative-free
// form: y-hat = sqrt(f) y satisfies y'' + (q - p'/2 - p^2/4) y = 0 with unit
// weight.  The conjugate integrand and antiderivative must not change.
SolutionFn hat_solution(const SolutionFn& y, std::function<double(double)> f,
                        std::function<double(double)> p,
                        std::function<double(double)> q_hat) {
    return {y.name + "-hat", [y, f, p, q_hat](double x) {
                const sf::FnEval v = y.eval(x);
                const double m = std::sqrt(f(x));
                sf::FnEval out;
                out.value = m * v.value;
                out.d1 = m * (v.d1 + 0.5 * p(x) * v.value);
                out.d2 = -q_hat(x) * out.value;
                return out;
            }};
}

void criterion_gauge_invariance() {
    const LinearODE2 a = make_ode("bessel", {{"n", 0.0}, {"alpha", 1.0}});
    const LinearODE2 b = make_ode("elliptic_K_gauged");
    const Identity plain =
        conjugate_identity(a, b, find_solution(a, "J"), find_solution(b, "kpK"));

    // Both equations share p = 1/x, so both normal forms add 1/(4x^2) to q.
    const auto q_hat_a = [&a](double x) { return a.q(x) + 0.25 / (x * x); };
    const auto q_hat_b = [&b](double x) { return b.q(x) + 0.25 / (x * x); };
    const auto unit = [](double) { return 1.0; };
    const auto zero = [](double) { return 0.0; };
    LinearODE2 ah;
    ah.id = a.id + "-normal";
    ah.p = zero;
    ah.q = q_hat_a;
    ah.f = unit;
    ah.p_deriv = zero;
    ah.dom_lo = a.dom_lo;
    ah.dom_hi = a.dom_hi;
    ah.solutions = {hat_solution(find_solution(a, "J"), a.f, a.p, q_hat_a)};
    LinearODE2 bh;
    bh.id = b.id + "-normal";
    bh.p = zero;
    bh.q = q_hat_b;
    bh.f = unit;
    bh.p_deriv = zero;
    bh.dom_lo = b.dom_lo;
    bh.dom_hi = b.dom_hi;
    bh.solutions = {hat_solution(find_solution(b, "kpK"), b.f, b.p, q_hat_b)};
    const Identity hatted = conjugate_identity(ah, bh, ah.solutions[0], bh.solutions[0]);

    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double x = 0.1 + i * (0.9 - 0.1) / 19.0;
        const double g0 = plain.integrand(x), g1 = hatted.integrand(x);
        const double f0 = plain.antiderivative(x), f1 = hatted.antiderivative(x);
        worst = std::max({worst, std::abs(g0 - g1) / std::max(1.0, std::abs(g0)),
                          std::abs(f0 - f1) / std::max(1.0, std::abs(f0))});
        ok = ok && close_rel(g0, g1, 1e-8) && close_rel(f0, f1, 1e-8);
    }
    report(5, 9, "gauge invariance", ok,
           "normal-form transport, 20 matched points, worst " + fmt("%.2e", worst) +
               ", bound 1e-8");
}

// ---- 6. the q-profile demanded by the gauge transport ------------------------

void criterion_riccati() {
    const double nu = 2.0, mu = 1.0;
    const LinearODE2 source = make_ode("assoc_legendre", {{"nu", nu}, {"mu", mu}});
    const LinearODE2 target = make_ode("assoc_legendre_gauged", {{"nu", nu}, {"mu", mu}});
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 41; ++i) {
        const double x = -0.8 + i * 1.6 / 40.0;
        const double got = riccati_q(source, target, x);
        const double want = nu * (nu + 1.0) / (1.0 - x * x);
        worst = std::max(worst, std::abs(got - want) / std::abs(want));
        ok = ok && close_rel(got, want, 1e-8);
    }
    report(6, 9, "transported q-profile", ok,
           "nu=2 mu=1 on [-0.8, 0.8], worst deviation " + fmt("%.2e", worst) +
               ", bound 1e-8");
}

// ---- 7. power-weighted Airy integrals close under upward recursion -----------

void criterion_airy_recursion() {
    using Fn = std::function<double(double)>;
    const auto ai = [](double x) { return sf::airy_ai(x).value; };
    const auto aid = [](double x) { return sf::airy_ai(x).d1; };
    const auto gi = [](double x) { return sf::scorer_gi(x).value; };
    const auto gid = [](double x) { return sf::scorer_gi(x).d1; };
    // Antiderivatives of x^n Ai: three seeds, then F_{n+3} in terms of F_n.
    std::vector<Fn> F;
    F.push_back([=](double x) { return kPi * (aid(x) * gi(x) - ai(x) * gid(x)); });
    F.push_back([=](double x) { return aid(x); });
    F.push_back([=](double x) { return x * aid(x) - ai(x); });
    for (int n = 0; n + 3 < 9; ++n) {
        const Fn prev = F[n];
        F.push_back([=](double x) {
            return std::pow(x, n + 2) * aid(x) - (n + 2) * std::pow(x, n + 1) * ai(x) +
                   (n + 2) * (n + 1.0) * prev(x);
        });
    }
    bool ok = true;
    double worst = 0.0;
    for (int n = 0; n <= 5; ++n) {
        for (const auto& [a, b] : {std::pair{0.2, 1.4}, std::pair{1.6, 2.8}}) {
            const QuadResult q = integrate_adaptive(
                [&, n](double x) { return std::pow(x, n) * ai(x); }, a, b);
            const double dF = F[n](b) - F[n](a);
            const double rel = std::abs(q.value - dF) / std::max(1.0, std::abs(dF));
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-7;
        }
    }
    report(7, 9, "Airy power recursion", ok,
           "n = 0..5 against quadrature, worst " + fmt("%.2e", worst) + ", bound 1e-7");
}

// ---- 8. both construction routes agree on every entry ------------------------

void criterion_dual_construction() {
    bool ok = true;
    double worst = 0.0;
    std::string worst_id;
    for (const ManifestEntry& m : builtin_manifest()) {
        const CorpusEntry e = build_entry(m);
        for (const auto& iv : e.intervals) {
            for (int i = 0; i < 20; ++i) {
                const double x = iv.first + (i + 0.5) * (iv.second - iv.first) / 20.0;
                const double gc = e.constructed.integrand(x);
                const double gr = e.reduced.integrand(x);
                const double rel =
                    std::abs(gc - gr) / std::max({1.0, std::abs(gc), std::abs(gr)});
                if (rel > worst) {
                    worst = rel;
                    worst_id = e.id;
                }
                ok = ok && rel <= 1e-8;
            }
        }
    }
    report(8, 9, "dual-construction agreement", ok,
           "all entries, 20 pts/interval, worst " + fmt("%.2e", worst) + " (" + worst_id +
               "), bound 1e-8");
}

// ---- 9. parallel sweeps are deterministic ------------------------------------

void criterion_determinism() {
    std::ostringstream out1, out8, err;
    const int c1 = run_cli({"corpus", "--all", "--jobs", "1", "--format", "json"}, out1, err);
    const int c8 = run_cli({"corpus", "--all", "--jobs", "8", "--format", "json"}, out8, err);
    bool ok = c1 == 0 && c8 == 0;
    int n = 0;
    if (ok) {
        const json a = json::parse(out1.str()), b = json::parse(out8.str());
        ok = a.size() == b.size();
        for (std::size_t i = 0; ok && i < a.size(); ++i)
            ok = a[i]["id"] == b[i]["id"] && a[i]["pass"] == b[i]["pass"];
        n = static_cast<int>(a.size());
    }
    std::ostringstream d;
    d << "--jobs 1 vs --jobs 8, " << n << " reports, identical pass vectors";
    report(9, 9, "determinism", ok, d.str());
}

}  // namespace

int main() {
    criterion_corpus_sweep();
    criterion_derivative_suite();
    criterion_ode_residuals();
    criterion_wronskians();
    criterion_gauge_invariance();
    criterion_riccati();
    criterion_airy_recursion();
    criterion_dual_construction();
    criterion_determinism();
    if (g_failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d of 9 criteria FAILED\n", g_failures);
    return 1;
}
