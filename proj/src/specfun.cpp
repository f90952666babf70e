#include <cmath>
#include <stdexcept>

#include "lagint/specfun.hpp"

// Name-keyed dispatch used by the CLI `eval` subcommand.

namespace lagint::sf {

namespace {

int as_int(double v, const char* what) {
    if (v != std::floor(v))
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return static_cast<int>(v);
}

void need(const std::vector<double>& p, std::size_t n, const char* fn) {
    if (p.size() != n)
        throw std::invalid_argument(std::string(fn) + ": expected " + std::to_string(n) +
                                    " parameter(s), got " + std::to_string(p.size()));
}

}  // namespace

FnEval eval_by_name(const std::string& fn, const std::vector<double>& params, double x) {
    if (fn == "bessel_j") { need(params, 1, "bessel_j"); return bessel_j(as_int(params[0], "n"), x); }
    if (fn == "bessel_y") { need(params, 1, "bessel_y"); return bessel_y(as_int(params[0], "n"), x); }
    if (fn == "bessel_i") { need(params, 1, "bessel_i"); return bessel_i(as_int(params[0], "n"), x); }
    if (fn == "bessel_k") { need(params, 1, "bessel_k"); return bessel_k(as_int(params[0], "n"), x); }
    if (fn == "airy_ai") { need(params, 0, "airy_ai"); return airy_ai(x); }
    if (fn == "airy_bi") { need(params, 0, "airy_bi"); return airy_bi(x); }
    if (fn == "scorer_gi") { need(params, 0, "scorer_gi"); return scorer_gi(x); }
    if (fn == "scorer_hi") { need(params, 0, "scorer_hi"); return scorer_hi(x); }
    if (fn == "legendre_p") { need(params, 1, "legendre_p"); return legendre_p(params[0], x); }
    if (fn == "legendre_q") { need(params, 1, "legendre_q"); return legendre_q(params[0], x); }
    if (fn == "assoc_legendre_p") {
        need(params, 2, "assoc_legendre_p");
        return assoc_legendre_p(params[0], as_int(params[1], "mu"), x);
    }
    if (fn == "assoc_legendre_q") {
        need(params, 2, "assoc_legendre_q");
        return assoc_legendre_q(params[0], as_int(params[1], "mu"), x);
    }
    if (fn == "hyp2f1") { need(params, 3, "hyp2f1"); return hyp2f1(params[0], params[1], params[2], x); }
    if (fn == "elliptic_k") { need(params, 0, "elliptic_k"); return elliptic_k(x); }
    if (fn == "elliptic_e") { need(params, 0, "elliptic_e"); return elliptic_e(x); }
    if (fn == "struve_h") { need(params, 1, "struve_h"); return struve_h(as_int(params[0], "n"), x); }
    if (fn == "lommel_s") { need(params, 2, "lommel_s"); return lommel_s(params[0], params[1], x); }
    if (fn == "gamma") { need(params, 0, "gamma"); return gamma_fn(x); }
    throw std::invalid_argument("unknown evaluator '" + fn + "'");
}

const std::vector<std::string>& evaluator_names() {
    static const std::vector<std::string> names = {
        "bessel_j", "bessel_y", "bessel_i", "bessel_k",
        "airy_ai", "airy_bi", "scorer_gi", "scorer_hi",
        "legendre_p", "legendre_q", "assoc_legendre_p", "assoc_legendre_q",
        "hyp2f1", "elliptic_k", "elliptic_e",
        "struve_h", "lommel_s", "gamma",
    };
    return names;
}

}  // namespace lagint::sf
