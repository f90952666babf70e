#include "lagint/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lagint/corpus.hpp"
#include "lagint/specfun.hpp"

namespace lagint {

namespace {

// 17 significant digits: enough for exact double round-trips in the report.
std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string g3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void json_string(std::ostream& o, const std::string& s) {
    o << '"';
    for (const char c : s) {
        switch (c) {
            case '"': o << "\\\""; break;
            case '\\': o << "\\\\"; break;
            case '\n': o << "\\n"; break;
            case '\r': o << "\\r"; break;
            case '\t': o << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    o << buf;
                } else {
                    o << c;
                }
        }
    }
    o << '"';
}

void json_report(std::ostream& o, const VerifyReport& r) {
    o << "{\"id\":";
    json_string(o, r.id);
    o << ",\"intervals\":[";
    for (std::size_t i = 0; i < r.intervals.size(); ++i) {
        const IntervalCheck& iv = r.intervals[i];
        if (i) o << ',';
        o << "{\"a\":" << g17(iv.a) << ",\"b\":" << g17(iv.b) << ",\"quad\":" << g17(iv.quad)
          << ",\"quad_err\":" << g17(iv.quad_err) << ",\"delta_f\":" << g17(iv.delta_f)
          << ",\"abs_err\":" << g17(iv.abs_err) << ",\"rel_err\":" << g17(iv.rel_err)
          << ",\"pass\":" << (iv.pass ? "true" : "false") << '}';
    }
    o << "],\"deriv\":{\"points\":" << r.deriv.points
      << ",\"max_resid\":" << g17(r.deriv.max_resid)
      << ",\"pass\":" << (r.deriv.pass ? "true" : "false") << "},\"pass\":"
      << (r.pass ? "true" : "false") << ",\"runtime_ms\":" << g17(r.runtime_ms)
      << ",\"notes\":[";
    for (std::size_t i = 0; i < r.notes.size(); ++i) {
        if (i) o << ',';
        json_string(o, r.notes[i]);
    }
    o << "]}";
}

void json_reports(std::ostream& o, const std::vector<VerifyReport>& reports) {
    o << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        o << "  ";
        json_report(o, reports[i]);
        o << (i + 1 < reports.size() ? ",\n" : "\n");
    }
    o << "]\n";
}

bool is_skipped(const VerifyReport& r) {
    return r.pass && std::any_of(r.notes.begin(), r.notes.end(), [](const std::string& n) {
               return n.rfind("skipped:", 0) == 0;
           });
}

void text_reports(std::ostream& o, const std::vector<VerifyReport>& reports) {
    int passed = 0, failed = 0, skipped = 0;
    for (const VerifyReport& r : reports) {
        const bool skip = is_skipped(r);
        o << r.id << ": " << (skip ? "SKIP" : r.pass ? "PASS" : "FAIL") << " ("
          << g3(r.runtime_ms) << " ms)\n";
        for (const IntervalCheck& iv : r.intervals)
            o << "  [" << g3(iv.a) << ", " << g3(iv.b) << "]  quad " << g17(iv.quad)
              << "  dF " << g17(iv.delta_f) << "  abs " << g3(iv.abs_err) << "  rel "
              << g3(iv.rel_err) << "  " << (iv.pass ? "pass" : "FAIL") << "\n";
        if (r.deriv.points > 0)
            o << "  deriv " << r.deriv.points << " pts  max resid " << g3(r.deriv.max_resid)
              << "  " << (r.deriv.pass ? "pass" : "FAIL") << "\n";
        for (const std::string& n : r.notes) o << "  note: " << n << "\n";
        (skip ? skipped : r.pass ? passed : failed) += 1;
    }
    o << "summary: " << passed << " passed, " << failed << " failed, " << skipped
      << " skipped\n";
}

// Locate manifest rows for explicit ids; unknown ids are usage errors.
std::vector<ManifestEntry> rows_for_ids(const std::vector<std::string>& ids) {
    std::vector<ManifestEntry> rows;
    rows.reserve(ids.size());
    for (const std::string& id : ids) {
        const auto& all = builtin_manifest();
        const auto it = std::find_if(all.begin(), all.end(),
                                     [&](const ManifestEntry& m) { return m.id == id; });
        if (it == all.end()) throw CLI::ValidationError("unknown corpus entry id: " + id);
        rows.push_back(*it);
    }
    return rows;
}

std::vector<ManifestEntry> rows_for_tag(const std::string& tag) {
    std::vector<ManifestEntry> rows;
    for (const ManifestEntry& m : builtin_manifest()) {
        const CorpusEntry e = build_entry(m);
        if (std::find(e.tags.begin(), e.tags.end(), tag) != e.tags.end()) rows.push_back(m);
    }
    return rows;
}

int emit_and_report(const std::vector<VerifyReport>& reports, const std::string& format,
                    const std::string& report_path, std::ostream& out, std::ostream& err) {
    if (format == "json")
        json_reports(out, reports);
    else
        text_reports(out, reports);
    if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) {
            err << "cannot write report: " << report_path << "\n";
            return 2;
        }
        json_reports(f, reports);
    }
    const bool all_pass = std::all_of(reports.begin(), reports.end(),
                                      [](const VerifyReport& r) { return r.pass; });
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"construct and verify integral identities of second-order ODE solutions"};
    app.name("lagint");
    app.require_subcommand(1);

    // list
    auto* list_cmd = app.add_subcommand("list", "print the corpus catalog");
    std::string list_filter;
    list_cmd->add_option("--filter", list_filter, "only entries carrying this tag");

    // shared verification knobs
    Tolerance tol = default_tolerance();
    std::vector<std::string> entry_ids;
    double iv_a = 0.0, iv_b = 0.0;
    std::string report_path, format = "text";
    int jobs = 1;
    bool all = false;
    std::string corpus_filter;

    auto* verify_cmd = app.add_subcommand("verify", "verify chosen entries");
    verify_cmd->add_option("--entry", entry_ids, "corpus entry id (repeatable)")->required();
    auto* opt_a = verify_cmd->add_option("--a", iv_a, "interval start (overrides defaults)");
    auto* opt_b = verify_cmd->add_option("--b", iv_b, "interval end");
    opt_a->needs(opt_b);
    opt_b->needs(opt_a);

    auto* corpus_cmd = app.add_subcommand("corpus", "batch-verify the corpus");
    corpus_cmd->add_flag("--all", all, "run every entry");
    corpus_cmd->add_option("--entry", entry_ids, "corpus entry id (repeatable)");
    corpus_cmd->add_option("--filter", corpus_filter, "run entries carrying this tag");
    corpus_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    for (CLI::App* sub : {verify_cmd, corpus_cmd}) {
        sub->add_option("--tol-abs", tol.abs, "absolute tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--tol-rel", tol.rel, "relative tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--tol-deriv", tol.deriv, "derivative-check tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--report", report_path, "write a JSON report to this path");
        sub->add_option("--format", format, "stdout format")
            ->check(CLI::IsMember({"text", "json"}));
    }

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a special function");
    std::string fn;
    double x = 0.0;
    std::vector<double> fn_params;
    eval_cmd->add_option("--fn", fn, "function name, e.g. elliptic_k, bessel_j")->required();
    eval_cmd->add_option("--x", x, "evaluation point")->required();
    eval_cmd->add_option("--param", fn_params, "function parameter (repeatable, in order)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*list_cmd) {
            for (const ManifestEntry& m : builtin_manifest()) {
                const CorpusEntry e = build_entry(m);
                if (!list_filter.empty() &&
                    std::find(e.tags.begin(), e.tags.end(), list_filter) == e.tags.end())
                    continue;
                std::string tags;
                for (const std::string& t : e.tags) tags += (tags.empty() ? "" : ",") + t;
                out << std::left << std::setw(8) << e.id << "  " << std::setw(26) << tags
                    << "  " << e.description << "\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            std::vector<ManifestEntry> rows = rows_for_ids(entry_ids);
            if (opt_a->count()) {
                if (!(iv_a < iv_b)) {
                    err << "--a must be less than --b\n";
                    return 2;
                }
                for (ManifestEntry& m : rows) m.intervals = {{iv_a, iv_b}};
            }
            return emit_and_report(run_entries(rows, tol), format, report_path, out, err);
        }

        if (*corpus_cmd) {
            std::vector<ManifestEntry> rows;
            if (all)
                rows = builtin_manifest();
            else if (!entry_ids.empty())
                rows = rows_for_ids(entry_ids);
            else if (!corpus_filter.empty())
                rows = rows_for_tag(corpus_filter);
            else {
                err << "corpus: one of --all, --entry, --filter is required\n";
                return 2;
            }
            return emit_and_report(run_entries(rows, tol, jobs), format, report_path, out, err);
        }

        // eval
        const sf::FnEval v = sf::eval_by_name(fn, fn_params, x);
        out << g17(v.value) << "\n";
        return 0;
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
}

}  // namespace lagint
