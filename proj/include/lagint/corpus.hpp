#ifndef LAGINT_CORPUS_HPP
#define LAGINT_CORPUS_HPP

#include <string>
#include <vector>

#include "lagint/identity.hpp"
#include "lagint/verify.hpp"

// The curated corpus: each entry is one integral identity built twice --
// once through the general constructors (make_identity / second_integral /
// conjugate_identity over the ODE catalog) and once from hand-reduced closed
// forms -- together with the intervals it is verified on.  The two routes
// must agree pointwise; that agreement is itself part of the test surface.

namespace lagint {

struct CorpusEntry {
    std::string id;                 // stable identifier, e.g. "eq118"
    std::string description;        // what the identity says, in words
    std::vector<std::string> tags;  // family tags for filtering, e.g. "bessel"
    Identity constructed;           // built by the general machinery
    Identity reduced;               // hand-reduced closed forms
    std::vector<std::pair<double, double>> intervals;  // default verification spans
    std::vector<std::string> notes;  // caveats worth surfacing in reports
};

// Manifest: the id -> parameters -> intervals table.  The canonical copy is
// embedded in the library; data/corpus_manifest.txt carries the same text for
// inspection and for overriding via load_manifest.
struct ManifestEntry {
    std::string id;
    Params params;
    std::vector<std::pair<double, double>> intervals;
};

// Parse manifest text (format: "entry <id>" lines, each followed by indented
// "param <name> <value>" and "interval <a> <b>" lines; '#' starts a comment).
// Throws std::runtime_error on malformed input.
std::vector<ManifestEntry> parse_manifest(const std::string& text);

// The embedded manifest.
const std::vector<ManifestEntry>& builtin_manifest();

// Read and parse a manifest file.
std::vector<ManifestEntry> load_manifest(const std::string& path);

// All corpus ids in manifest order.
std::vector<std::string> corpus_ids();

// Build one entry from its manifest row.  Unknown id throws
// std::invalid_argument.
CorpusEntry build_entry(const ManifestEntry& manifest);

// Convenience: build by id from the embedded manifest.
CorpusEntry build_entry(const std::string& id);

// Verify one entry on its intervals (both routes must already agree; the
// quadrature runs against the constructed form, the reduced form supplies an
// extra cross-check note on failure).
VerifyReport run_entry(const CorpusEntry& entry, const Tolerance& tol);

// Convenience: build from the embedded manifest and verify.
VerifyReport run_entry(const std::string& id, const Tolerance& tol);

// Verify a batch of manifest rows, fanning out across `jobs` threads
// (entries are independent and all shared state is read-only).  Reports come
// back in row order regardless of parallelism; a row whose builder throws
// yields a failed report rather than an exception.
std::vector<VerifyReport> run_entries(const std::vector<ManifestEntry>& rows,
                                      const Tolerance& tol, int jobs = 1);

// The whole embedded manifest.
std::vector<VerifyReport> run_all(const Tolerance& tol, int jobs = 1);

}  // namespace lagint

#endif
