#include "lagint/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "corpus_detail.hpp"

namespace lagint {

namespace {

// The canonical manifest.  data/corpus_manifest.txt carries the same text;
// a test holds the two copies against each other.
const char kBuiltinManifest[] = R"(# Corpus manifest: parameter bindings and default verification intervals.
#
# Format:
#   entry <id>
#     param <name> <value>
#     interval <a> <b>

entry eq36
  param nu 2.5
  interval -0.8 -0.1
  interval 0.1 0.8

entry eq39
  param nu 2.5
  interval -0.8 -0.1
  interval 0.1 0.8

entry eq40
  param nu 2.5
  interval -0.8 -0.1
  interval 0.1 0.8

entry eq44
  param m 2
  param n 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq48
  param m 3
  param n 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq51
  param n 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq51c
  interval 0.1 1.4
  interval 1.6 3.0

entry eq51d
  interval 0.1 1.4
  interval 1.6 3.0

entry eq60
  param n 1
  param alpha 1
  param m 0
  param beta 2
  interval 0.1 1.4
  interval 1.6 3.0

entry eq62
  param n 0
  param alpha 1
  param m 1
  param beta 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq63
  param n 1
  param alpha 2
  interval 0.1 0.45
  interval 0.5 0.9

entry eq65
  interval 0.1 0.45
  interval 0.5 0.9

entry eq78
  interval 0.1 0.45
  interval 0.5 0.9

entry eq80
  interval 0.1 0.45
  interval 0.5 0.9

entry eq81
  interval 0.1 0.45
  interval 0.5 0.9

entry eq105
  param nu 2
  param mu 1
  interval -0.8 -0.1
  interval 0.1 0.8

entry eq107
  param nu 2
  param mu 1
  interval -0.8 -0.1
  interval 0.1 0.8

entry eq109
  param nu 2
  param mu 1
  interval -0.8 -0.1
  interval 0.1 0.8

entry eq112
  param nu 2
  param mu 1
  interval -0.8 -0.1
  interval 0.1 0.8

entry eq114
  param m 3
  param n 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq116
  param m 2
  param n 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq118
  param n 2
  interval 0.1 1.4
  interval 1.6 3.0

entry eq119
  param n 2
  interval 0.1 1.4
  interval 1.6 3.0

entry eq120
  interval 0.1 1.4
  interval 1.6 3.0

entry eq121
  param m 2
  param n 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq123
  param n 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq124
  param n 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq126
  param n 2
  interval 0.1 1.4
  interval 1.6 3.0

entry eq127
  interval 0.1 1.4
  interval 1.6 3.0

entry eq128
  param n 3
  interval 0.1 1.4
  interval 1.6 3.0

entry eq128d
  param n 0
  interval 0.1 1.4
  interval 1.6 3.0

entry eq132
  param phi 0.5
  interval 0.1 1.4
  interval 1.6 3.0

entry eq133
  param sign 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq134
  param alpha 0
  param beta 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq135
  param alpha 0
  param beta 1
  interval 0.1 1.4
  interval 1.6 3.0

entry eq138
  param alpha 0.4
  param beta 0.6
  param gamma 1.5
  interval 0.05 0.45
  interval 0.5 0.9

entry eq141
  param alpha 0.4
  param beta 0.6
  param gamma 2.5
  interval 0.05 0.45
  interval 0.5 0.9

entry eq145
  param alpha 0.5
  param beta 0.8
  param gamma 1.3
  param delta 0.5
  interval 0.05 0.45
  interval 0.5 0.9

entry eq159
  interval 0.1 0.45
  interval 0.5 0.9

entry eq173
  interval 0.1 0.45
  interval 0.5 0.9

entry eq174
  interval 0.1 0.45
  interval 0.5 0.9

entry eq175
  interval 0.1 0.45
  interval 0.5 0.9

entry eq176
  interval 0.64 0.76
  interval 0.78 0.9

entry eq177
  interval 0.1 0.45
  interval 0.5 0.9

entry eq178
  interval 0.1 0.45
  interval 0.5 0.9

entry eq197
  interval 0.1 0.45
  interval 0.5 0.9

entry eq198
  param sign 1
  interval 0.1 0.45
  interval 0.5 0.9

entry eq199
  interval 0.64 0.76
  interval 0.78 0.9

entry eq200
  interval 0.1 0.45
  interval 0.5 0.9

entry eq201
  interval 0.1 0.45
  interval 0.5 0.9

entry eq202
  interval 0.64 0.76
  interval 0.78 0.9

entry eq203
  interval 0.1 0.45
  interval 0.5 0.9

entry eq204
  interval 0.1 0.45
  interval 0.5 0.9

entry eq206
  interval 0.1 0.45
  interval 0.5 0.9

entry eq223
  interval 0.1 0.45
  interval 0.5 0.9

entry eq225
  param nu 0.61803398874989485
  interval 0.1 0.45
  interval 0.5 0.9

entry eq226
  interval 0.1 0.45
  interval 0.5 0.9

entry eq227
  interval 0.1 0.45
  interval 0.5 0.9

entry eq228
  interval 0.1 0.45
  interval 0.5 0.9

entry eq229
  interval 0.1 0.45
  interval 0.5 0.9

entry eq230
  interval 0.1 0.45
  interval 0.5 0.9

entry eq235
  param nu 0.61803398874989485
  interval 0.1 0.45
  interval 0.5 0.9

entry eq236
  param nu 0.61803398874989485
  interval 0.1 0.45
  interval 0.5 0.9
)";

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Pointwise agreement of the two routes: integrands at 20 midpoints per
// interval, antiderivative increments across each interval.  Returns an
// explanatory note on the first disagreement, an empty string otherwise.
std::string routes_disagree(const CorpusEntry& entry) {
    for (const auto& iv : entry.intervals) {
        for (int i = 0; i < 20; ++i) {
            const double x = iv.first + (i + 0.5) * (iv.second - iv.first) / 20.0;
            const double gc = entry.constructed.integrand(x);
            const double gr = entry.reduced.integrand(x);
            if (std::abs(gc - gr) > 1e-8 * std::max({1.0, std::abs(gc), std::abs(gr)}))
                return "route disagreement: integrand at x = " + num(x) +
                       " is " + num(gc) + " constructed vs " + num(gr) + " reduced";
        }
        const double dc =
            entry.constructed.antiderivative(iv.second) - entry.constructed.antiderivative(iv.first);
        const double dr =
            entry.reduced.antiderivative(iv.second) - entry.reduced.antiderivative(iv.first);
        if (std::abs(dc - dr) > 1e-8 * std::max({1.0, std::abs(dc), std::abs(dr)}))
            return "route disagreement: antiderivative increment over [" + num(iv.first) +
                   ", " + num(iv.second) + "] is " + num(dc) + " constructed vs " + num(dr) +
                   " reduced";
    }
    return {};
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(const std::string& text) {
    std::vector<ManifestEntry> rows;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto where = [lineno] { return "manifest line " + std::to_string(lineno); };
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "entry") {
            std::string id;
            if (!(ls >> id))
                throw std::runtime_error(where() + ": 'entry' needs an id");
            rows.push_back(ManifestEntry{id, {}, {}});
        } else if (word == "param") {
            if (rows.empty())
                throw std::runtime_error(where() + ": 'param' before any 'entry'");
            std::string name;
            double value;
            if (!(ls >> name >> value))
                throw std::runtime_error(where() + ": expected 'param <name> <value>'");
            rows.back().params[name] = value;
        } else if (word == "interval") {
            if (rows.empty())
                throw std::runtime_error(where() + ": 'interval' before any 'entry'");
            double a, b;
            if (!(ls >> a >> b))
                throw std::runtime_error(where() + ": expected 'interval <a> <b>'");
            if (!(a < b))
                throw std::runtime_error(where() + ": interval bounds must satisfy a < b");
            rows.back().intervals.emplace_back(a, b);
        } else {
            throw std::runtime_error(where() + ": unknown directive '" + word + "'");
        }
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error(where() + ": unexpected trailing token '" + extra + "'");
    }
    return rows;
}

const std::vector<ManifestEntry>& builtin_manifest() {
    static const std::vector<ManifestEntry> rows = parse_manifest(kBuiltinManifest);
    return rows;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open manifest: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_manifest(buf.str());
}

std::vector<std::string> corpus_ids() {
    std::vector<std::string> ids;
    ids.reserve(builtin_manifest().size());
    for (const ManifestEntry& m : builtin_manifest()) ids.push_back(m.id);
    return ids;
}

CorpusEntry build_entry(const ManifestEntry& manifest) { return make_corpus_entry(manifest); }

CorpusEntry build_entry(const std::string& id) {
    for (const ManifestEntry& m : builtin_manifest())
        if (m.id == id) return make_corpus_entry(m);
    throw std::invalid_argument("unknown corpus entry id: " + id);
}

VerifyReport run_entry(const CorpusEntry& entry, const Tolerance& tol) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.id = entry.id;
    rep.notes = entry.notes;
    rep.pass = false;
    try {
        const std::string mismatch = routes_disagree(entry);
        if (!mismatch.empty()) {
            rep.notes.push_back(mismatch);
        } else {
            VerifyReport inner = verify_identity(entry.constructed, entry.intervals, tol);
            rep.intervals = std::move(inner.intervals);
            rep.deriv = inner.deriv;
            rep.pass = inner.pass;
            for (std::string& n : inner.notes) rep.notes.push_back(std::move(n));
            // On failure, say how far the quadrature sits from the reduced
            // route as well, to separate a bad identity from bad quadrature.
            if (!rep.pass) {
                for (const IntervalCheck& iv : rep.intervals) {
                    if (iv.pass) continue;
                    const double dr = entry.reduced.antiderivative(iv.b) -
                                      entry.reduced.antiderivative(iv.a);
                    rep.notes.push_back("reduced route on [" + num(iv.a) + ", " + num(iv.b) +
                                        "]: |quad - dF| = " + num(std::abs(iv.quad - dr)));
                }
            }
        }
    } catch (const std::domain_error& err) {
        // Evaluator does not support the requested range: skipped, not failed.
        rep.pass = true;
        rep.notes.push_back(std::string("skipped: ") + err.what());
    } catch (const std::invalid_argument& err) {
        rep.pass = true;
        rep.notes.push_back(std::string("skipped: ") + err.what());
    } catch (const std::exception& err) {
        rep.pass = false;
        rep.notes.push_back(std::string("error: ") + err.what());
    }
    rep.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

VerifyReport run_entry(const std::string& id, const Tolerance& tol) {
    return run_entry(build_entry(id), tol);
}

std::vector<VerifyReport> run_entries(const std::vector<ManifestEntry>& rows,
                                      const Tolerance& tol, int jobs) {
    std::vector<VerifyReport> reports(rows.size());
    const auto work = [&](std::size_t i) {
        try {
            reports[i] = run_entry(build_entry(rows[i]), tol);
        } catch (const std::exception& err) {
            reports[i].id = rows[i].id;
            reports[i].pass = false;
            reports[i].notes.push_back(std::string("error: ") + err.what());
        }
    };
    if (jobs <= 1 || rows.size() < 2) {
        for (std::size_t i = 0; i < rows.size(); ++i) work(i);
        return reports;
    }
    const std::size_t n_threads = std::min<std::size_t>(jobs, rows.size());
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < rows.size(); i += n_threads) work(i);
        });
    for (std::thread& th : pool) th.join();
    return reports;
}

std::vector<VerifyReport> run_all(const Tolerance& tol, int jobs) {
    return run_entries(builtin_manifest(), tol, jobs);
}

}  // namespace lagint
