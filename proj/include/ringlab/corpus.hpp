#pragma once

#include <string>
#include <vector>

namespace ringlab {

struct CorpusEntry {
    std::string expr;
    std::size_t declared_cardinality = 0;  // 0 when unknown (file-loaded corpora)
};

/// Versioned, deterministic list of ring expressions the theorem registry
/// runs over.
struct Corpus {
    std::string version;
    std::vector<CorpusEntry> entries;
};

/// The built-in corpus: small modular rings, finite fields, matrix and
/// triangular rings, truncated polynomial rings, trivial extensions, direct
/// sums, group rings over 2- and 3-groups, a generated subring, a quotient,
/// and the big formal triangular ring.
Corpus default_corpus();

/// One ring expression per line; '#' starts a comment, blank lines skipped.
Corpus load_corpus_file(const std::string& path);

}  // namespace ringlab
