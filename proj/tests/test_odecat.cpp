#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lagint/odecat.hpp"
#include "oracles.hpp"

using namespace lagint;

namespace {

// Every catalog instantiation the remaining tests sweep, with a grid window
// that stays inside the family domain and clear of evaluator-accuracy edges.
struct Case {
    std::string family;
    Params params;
    double lo, hi;
};

const std::vector<Case>& catalog_cases() {
    static const std::vector<Case> cases = {
        {"legendre", {{"nu", 3.0}}, -0.8, 0.8},
        {"legendre", {{"nu", 0.6180339887498949}}, -0.8, 0.8},
        {"assoc_legendre", {{"nu", 2.0}, {"mu", 1.0}}, -0.8, 0.8},
        {"assoc_legendre", {{"nu", 3.5}, {"mu", 2.0}}, -0.8, 0.8},
        {"assoc_legendre_gauged", {{"nu", 2.0}, {"mu", 1.0}}, -0.8, 0.8},
        {"bessel", {{"n", 0.0}, {"alpha", 1.0}}, 0.2, 3.0},
        {"bessel", {{"n", 1.0}, {"alpha", 2.0}}, 0.2, 3.0},
        {"modified_bessel", {{"n", 1.0}, {"alpha", 1.0}}, 0.2, 3.0},
        {"airy", {{"alpha", 0.0}}, -5.0, 3.0},
        {"airy", {{"alpha", 1.0}}, -4.0, 3.5},
        {"hyp2f1", {{"alpha", 0.4}, {"beta", 0.6}, {"gamma", 2.5}}, 0.05, 0.9},
        {"hyp2f1", {{"alpha", 0.5}, {"beta", 0.8}, {"gamma", 1.3}}, 0.05, 0.9},
        {"elliptic_K", {}, 0.05, 0.95},
        {"elliptic_E", {}, 0.05, 0.95},
        {"elliptic_K_gauged", {}, 0.05, 0.95},
        {"elliptic_K_sqrtk", {}, 0.05, 0.95},
        {"elliptic_E_gauged", {}, 0.05, 0.95},
        {"elliptic_E_sqrtk", {}, 0.05, 0.95},
    };
    return cases;
}

std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) xs.push_back(lo + (hi - lo) * i / (n - 1));
    return xs;
}

}  // namespace

TEST_CASE("every family id instantiates") {
    CHECK(ode_family_ids().size() == 13);
    for (const auto& c : catalog_cases()) {
        const LinearODE2 ode = make_ode(c.family, c.params);
        INFO(ode.id);
        CHECK(ode.id.rfind(c.family, 0) == 0);
        CHECK(!ode.solutions.empty());
        CHECK(ode.dom_lo < ode.dom_hi);
    }
}

TEST_CASE("integrating factor satisfies f' = p f") {
    for (const auto& c : catalog_cases()) {
        const LinearODE2 ode = make_ode(c.family, c.params);
        for (double x : grid(c.lo, c.hi, 9)) {
            if (std::abs(x) < 0.02) continue;  // FD step would straddle x = 0 poles
            const double h = 1e-6 * (1.0 + std::abs(x));
            const double fp = oracles::fd1(ode.f, x, h);
            const double want = ode.p(x) * ode.f(x);
            INFO(ode.id << " at x=" << x << " fd=" << fp << " pf=" << want);
            CHECK(std::abs(fp - want) <= 1e-7 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("analytic d(fq)/dx and p' match finite differences") {
    for (const auto& c : catalog_cases()) {
        const LinearODE2 ode = make_ode(c.family, c.params);
        for (double x : grid(c.lo, c.hi, 9)) {
            if (std::abs(x) < 0.02) continue;
            const double h = 1e-6 * (1.0 + std::abs(x));
            if (ode.d_fq) {
                const double fd = oracles::fd1(
                    [&ode](double t) { return ode.f(t) * ode.q(t); }, x, h);
                const double got = (*ode.d_fq)(x);
                INFO(ode.id << " d_fq at x=" << x << " got=" << got << " fd=" << fd);
                CHECK(std::abs(got - fd) <= 1e-5 * (1.0 + std::abs(got)));
            }
            if (ode.p_deriv) {
                const double fd = oracles::fd1(ode.p, x, h);
                const double got = (*ode.p_deriv)(x);
                INFO(ode.id << " p' at x=" << x << " got=" << got << " fd=" << fd);
                CHECK(std::abs(got - fd) <= 1e-5 * (1.0 + std::abs(got)));
            }
        }
    }
}

TEST_CASE("solution closures wire d1/d2 consistently") {
    for (const auto& c : catalog_cases()) {
        const LinearODE2 ode = make_ode(c.family, c.params);
        for (const auto& sol : ode.solutions) {
            for (double x : grid(c.lo + 0.07, c.hi - 0.07, 5)) {
                const double h = 1e-5 * (1.0 + std::abs(x));
                const sf::FnEval at = sol.eval(x);
                const double fd = (sol.eval(x + h).value - sol.eval(x - h).value) / (2.0 * h);
                INFO(ode.id << "/" << sol.name << " at x=" << x << " d1=" << at.d1
                            << " fd=" << fd);
                CHECK(std::abs(at.d1 - fd) <= 1e-6 * (1.0 + std::abs(at.d1)));
                REQUIRE(at.d2.has_value());
                const double fd2 = (sol.eval(x + h).d1 - sol.eval(x - h).d1) / (2.0 * h);
                INFO(ode.id << "/" << sol.name << " at x=" << x << " d2=" << *at.d2
                            << " fd=" << fd2);
                CHECK(std::abs(*at.d2 - fd2) <= 1e-5 * (1.0 + std::abs(*at.d2)));
            }
        }
    }
}

TEST_CASE("every catalog solution satisfies its equation") {
    for (const auto& c : catalog_cases()) {
        const LinearODE2 ode = make_ode(c.family, c.params);
        for (const auto& sol : ode.solutions) {
            for (double x : grid(c.lo, c.hi, 20)) {
                const double r = ode_residual(ode, sol, x);
                INFO(ode.id << "/" << sol.name << " residual " << r << " at x=" << x);
                CHECK(r <= 1e-8);
            }
        }
    }
}

TEST_CASE("bessel solutions scale the argument") {
    const LinearODE2 ode = make_ode("bessel", {{"n", 1.0}, {"alpha", 2.0}});
    const SolutionFn& j = find_solution(ode, "J");
    const sf::FnEval at = j.eval(0.7);
    const sf::FnEval raw = sf::bessel_j(1, 1.4);
    CHECK(at.value == raw.value);
    CHECK(at.d1 == 2.0 * raw.d1);
    CHECK(*at.d2 == 4.0 * *raw.d2);
}

TEST_CASE("complementary-modulus solutions really solve the same equation") {
    // K(k') is the independent partner of K(k); spot a value against the
    // oracle to make sure the chain rule did not silently reflect the modulus.
    const LinearODE2 ode = make_ode("elliptic_K");
    const SolutionFn& kc = find_solution(ode, "Kc");
    const double k = 0.6;
    const double kp = std::sqrt(1.0 - k * k);
    CHECK(std::abs(kc.eval(k).value - oracles::elliptic_k(kp)) <= 1e-10);
    const double h = 1e-6;
    const double fd = (kc.eval(k + h).value - kc.eval(k - h).value) / (2.0 * h);
    CHECK(std::abs(kc.eval(k).d1 - fd) <= 1e-6);
}

TEST_CASE("gauged legendre solutions carry the modulating weight") {
    const LinearODE2 ode = make_ode("assoc_legendre_gauged", {{"nu", 2.0}, {"mu", 1.0}});
    const SolutionFn& gp = find_solution(ode, "gP");
    const double x = 0.3;
    const double weight = std::sqrt((1.0 - x) / (1.0 + x));
    const double plain = sf::assoc_legendre_p(2.0, 1, x).value;
    CHECK(std::abs(gp.eval(x).value - weight * plain) <= 1e-14);
}

TEST_CASE("catalog rejects bad requests") {
    CHECK_THROWS_AS(make_ode("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(make_ode("legendre"), std::invalid_argument);          // missing nu
    CHECK_THROWS_AS(make_ode("bessel", {{"n", 0.5}, {"alpha", 1.0}}),      // fractional n
                    std::invalid_argument);
    CHECK_THROWS_AS(make_ode("bessel", {{"n", 1.0}, {"alpha", -2.0}}),     // bad scaling
                    std::invalid_argument);
    CHECK_THROWS_AS(make_ode("hyp2f1", {{"alpha", 1.0}, {"beta", 1.0}, {"gamma", 0.0}}),
                    std::invalid_argument);
    const LinearODE2 ode = make_ode("elliptic_K");
    CHECK_THROWS_AS(find_solution(ode, "no-such"), std::invalid_argument);
}

TEST_CASE("negative integer degree drops the Q partner") {
    const LinearODE2 ode = make_ode("legendre", {{"nu", -3.0}});
    CHECK(ode.solutions.size() == 1);
    CHECK(ode.solutions[0].name == "P");
    // gamma an integer drops the x^{1-gamma} Frobenius partner.
    const LinearODE2 f1 = make_ode("hyp2f1", {{"alpha", 0.3}, {"beta", 0.7}, {"gamma", 2.0}});
    CHECK(f1.solutions.size() == 1);
    const LinearODE2 f2 = make_ode("hyp2f1", {{"alpha", 0.3}, {"beta", 0.7}, {"gamma", 2.5}});
    CHECK(f2.solutions.size() == 2);
}
