#include "internal.hpp"

#include <map>
#include <stdexcept>

namespace lagint::sf::detail {

namespace {

// Build an n-point Gauss-Legendre rule: roots of P_n found by Newton from the
// Chebyshev-like initial guess, weights 2 / ((1 - x^2) P_n'(x)^2).
GaussRule build_rule(int n) {
    if (n < 2) throw std::invalid_argument("gauss_rule: order must be >= 2");
    GaussRule r;
    r.x.assign(n, 0.0);
    r.w.assign(n, 0.0);
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Upward recurrence for P_n(z) and P_{n-1}(z).
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (z * p1 - p0) / (z * z - 1.0);
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        double w = 2.0 / ((1.0 - z * z) * pp * pp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

}  // namespace

const GaussRule& gauss_rule(int n) {
    static std::map<int, GaussRule> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int panels, int order) {
    const GaussRule& r = gauss_rule(order);
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        double acc = 0.0;
        for (std::size_t i = 0; i < r.x.size(); ++i)
            acc += r.w[i] * f(mid + 0.5 * h * r.x[i]);
        total += acc * 0.5 * h;
    }
    return total;
}

}  // namespace lagint::sf::detail
