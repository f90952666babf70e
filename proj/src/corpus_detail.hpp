#ifndef LAGINT_SRC_CORPUS_DETAIL_HPP
#define LAGINT_SRC_CORPUS_DETAIL_HPP

#include "lagint/corpus.hpp"

// Internal seam between the manifest plumbing (corpus.cpp) and the entry
// builders (corpus_entries.cpp).

namespace lagint {

// Build the entry for manifest row `m` (both routes, description, tags,
// notes); id and intervals are copied from the row.  Unknown id throws
// std::invalid_argument.
CorpusEntry make_corpus_entry(const ManifestEntry& m);

}  // namespace lagint

#endif
