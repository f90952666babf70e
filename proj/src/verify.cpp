#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <stdexcept>

#include "lagint/verify.hpp"

namespace lagint {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15
// abscissae/weights, symmetric half listed).  The Gauss nodes are the
// odd-indexed Kronrod nodes.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct PanelResult {
    double value = 0.0;
    double error = 0.0;
};

double eval_checked(const std::function<double(double)>& f, double x) {
    const double v = f(x);
    if (!std::isfinite(v))
        throw std::runtime_error("integrand is not finite at x = " + std::to_string(x));
    return v;
}

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = eval_checked(f, center);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    double fv[7][2];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        fv[i][0] = eval_checked(f, center - dx);
        fv[i][1] = eval_checked(f, center + dx);
        const double sum = fv[i][0] + fv[i][1];
        resk += kWgk[i] * sum;
        resabs += kWgk[i] * (std::abs(fv[i][0]) + std::abs(fv[i][1]));
        if (i % 2 == 1) resg += kWg[(i - 1) / 2] * sum;
    }
    // QUADPACK error heuristic: scale |K15 - G7| by the variation of f about
    // its mean so nearly-constant panels are not over-refined.
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::abs(fv[i][0] - reskh) + std::abs(fv[i][1] - reskh));
    resasc *= std::abs(half);
    resabs *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double epmach = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * epmach))
        err = std::max(err, 50.0 * epmach * resabs);
    return {resk * half, err};
}

struct Segment {
    double err, a, b, value;
    bool operator<(const Segment& o) const { return err < o.err; }
};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, double rel_tol) {
    if (a == b) return {0.0, 0.0, 0};
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    constexpr int kBudget = 10000;
    std::priority_queue<Segment> segs;
    PanelResult first = gk15(f, a, b);
    segs.push({first.error, a, b, first.value});
    double total = first.value;
    double total_err = first.error;
    int count = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (count >= kBudget)
            throw std::runtime_error("integrate_adaptive: budget of 10000 subintervals "
                                     "exhausted before convergence");
        const Segment worst = segs.top();
        segs.pop();
        total -= worst.value;
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        for (const auto& [lo, hi] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
            const PanelResult part = gk15(f, lo, hi);
            segs.push({part.error, lo, hi, part.value});
            total += part.value;
            total_err += part.error;
        }
        ++count;
    }
    return {sign * total, total_err, count};
}

Tolerance default_tolerance() {
    Tolerance tol;
    auto load = [](const char* name, double& slot) {
        if (const char* s = std::getenv(name)) {
            char* end = nullptr;
            const double v = std::strtod(s, &end);
            if (end != s && std::isfinite(v) && v > 0.0) slot = v;
        }
    };
    load("LAGINT_TOL_ABS", tol.abs);
    load("LAGINT_TOL_REL", tol.rel);
    load("LAGINT_TOL_DERIV", tol.deriv);
    return tol;
}

DerivCheck derivative_check(const Identity& ident, double a, double b,
                            const Tolerance& tol, int n_points) {
    DerivCheck check;
    check.points = n_points;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < n_points; ++i) {
        const double x = mid + half * std::cos(M_PI * (2.0 * i + 1.0) / (2.0 * n_points));
        const double step = 1e-5 * (1.0 + std::abs(x));
        const double fd = (ident.antiderivative(x + step) - ident.antiderivative(x - step)) /
                          (2.0 * step);
        const double g = ident.integrand(x);
        const double resid = std::abs(fd - g) / (1.0 + std::abs(g));
        check.max_resid = std::max(check.max_resid, resid);
    }
    check.pass = check.max_resid <= tol.deriv;
    return check;
}

VerifyReport verify_identity(const Identity& ident,
                             const std::vector<std::pair<double, double>>& intervals,
                             const Tolerance& tol, int n_deriv) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport report;
    report.id = ident.id;
    if (intervals.empty())
        throw std::invalid_argument(ident.id + ": no intervals to verify");
    constexpr double kMargin = 1e-3;
    bool all_pass = true;
    report.deriv.points = 0;
    report.deriv.pass = true;
    for (const auto& [a, b] : intervals) {
        if (!(a < b))
            throw std::invalid_argument(ident.id + ": interval must satisfy a < b");
        if (a < ident.dom_lo + kMargin || b > ident.dom_hi - kMargin)
            throw std::invalid_argument(
                ident.id + ": interval [" + std::to_string(a) + ", " + std::to_string(b) +
                "] leaves the domain (" + std::to_string(ident.dom_lo) + ", " +
                std::to_string(ident.dom_hi) + ") with margin " + std::to_string(kMargin));
        IntervalCheck check;
        check.a = a;
        check.b = b;
        // Drive the quadrature an order below the acceptance tolerance so its
        // own error does not eat the budget.
        const QuadResult quad =
            integrate_adaptive(ident.integrand, a, b, tol.abs / 10.0, tol.rel / 10.0);
        check.quad = quad.value;
        check.quad_err = quad.error_estimate;
        check.delta_f = ident.antiderivative(b) - ident.antiderivative(a);
        check.abs_err = std::abs(check.quad - check.delta_f);
        check.rel_err = check.delta_f != 0.0 ? check.abs_err / std::abs(check.delta_f) : 0.0;
        check.pass = check.abs_err <= tol.abs || check.rel_err <= tol.rel;
        all_pass = all_pass && check.pass;
        report.intervals.push_back(check);
        const DerivCheck dc = derivative_check(ident, a, b, tol, n_deriv);
        report.deriv.points += dc.points;
        report.deriv.max_resid = std::max(report.deriv.max_resid, dc.max_resid);
        report.deriv.pass = report.deriv.pass && dc.pass;
    }
    report.pass = all_pass && report.deriv.pass;
    const auto t1 = std::chrono::steady_clock::now();
    report.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

}  // namespace lagint
