#include <cmath>
#include <stdexcept>

#include "lagint/specfun.hpp"

// Complete elliptic integrals K(k) and E(k) in the modulus convention,
// evaluated with the arithmetic-geometric mean:
//   K = (pi/2) / agm(1, k'),   E = K (1 - sum 2^{n-1} c_n^2),  c_0 = k.
// Derivatives use dK/dk = (E - k'^2 K)/(k k'^2) and dE/dk = (E - K)/k; for
// very small k those quotients cancel, so a short Maclaurin series takes
// over below k = 5e-3.  Second derivatives come from the Legendre ODEs the
// two integrals satisfy.

namespace lagint::sf {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct KE {
    double k_val, e_val;
};

KE agm_ke(double k) {
    const double kp2 = (1.0 - k) * (1.0 + k);
    long double a = 1.0L, g = std::sqrt(static_cast<long double>(kp2));
    long double c = k;
    long double csum = 0.5L * c * c;  // 2^{n-1} c_n^2 accumulated, n = 0 term
    long double pow2 = 1.0L;
    for (int i = 0; i < 60 && std::abs(a - g) > 1e-20L * a; ++i) {
        const long double an = 0.5L * (a + g);
        const long double gn = std::sqrt(a * g);
        c = 0.5L * (a - g);
        a = an;
        g = gn;
        csum += pow2 * c * c;
        pow2 *= 2.0L;
    }
    const long double kk = (kPi / 2.0L) / a;
    return {static_cast<double>(kk), static_cast<double>(kk * (1.0L - csum))};
}

}  // namespace

FnEval elliptic_k(double k) {
    if (k < 0.0 || k >= 1.0)
        throw std::domain_error("elliptic_k: modulus out of range, need 0 <= k < 1");
    const KE v = agm_ke(k);
    FnEval r;
    r.value = v.k_val;
    const double kp2 = (1.0 - k) * (1.0 + k);
    if (k < 5e-3) {
        const double k2 = k * k;
        r.d1 = (kPi / 2.0) * k * (0.5 + k2 * (9.0 / 16.0 + k2 * (75.0 / 128.0)));
        r.d2 = (kPi / 2.0) * (0.5 + k2 * (27.0 / 16.0 + k2 * (375.0 / 128.0)));
    } else {
        r.d1 = (v.e_val - kp2 * v.k_val) / (k * kp2);
        // k k'^2 K'' + (1 - 3k^2) K' - k K = 0
        r.d2 = (k * v.k_val - (1.0 - 3.0 * k * k) * r.d1) / (k * kp2);
    }
    return r;
}

FnEval elliptic_e(double k) {
    if (k < 0.0 || k >= 1.0)
        throw std::domain_error("elliptic_e: modulus out of range, need 0 <= k < 1");
    const KE v = agm_ke(k);
    FnEval r;
    r.value = v.e_val;
    if (k < 5e-3) {
        const double k2 = k * k;
        r.d1 = -(kPi / 2.0) * k * (0.5 + k2 * (3.0 / 16.0 + k2 * (15.0 / 128.0)));
        r.d2 = -(kPi / 2.0) * (0.5 + k2 * (9.0 / 16.0 + k2 * (75.0 / 128.0)));
    } else {
        r.d1 = (v.e_val - v.k_val) / k;
        // k E'' + E' + k E / k'^2 = 0
        r.d2 = -(r.d1 + k * v.e_val / ((1.0 - k) * (1.0 + k))) / k;
    }
    return r;
}

}  // namespace lagint::sf
