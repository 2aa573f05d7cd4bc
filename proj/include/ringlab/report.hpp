#pragma once

#include <string>

#include "ringlab/classify.hpp"
#include "ringlab/corpus.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

inline constexpr int kSchemaVersion = 1;

/// JSON report for a classification run. Key order is fixed by the schema so
/// byte-identical reruns are guaranteed (elapsed_ms is the one field allowed
/// to differ). Elements are rendered as {"ref": "#k", "literal": ...}.
std::string classify_report_json(const FiniteRing& ring, const ClassificationReport& report,
                                 const std::string& command_echo, bool include_witnesses);

/// JSON report for a single-element witness run: full profile plus all
/// decomposition witnesses up to `limit`.
std::string witness_report_json(const FiniteRing& ring, Elem a, const std::string& command_echo,
                                std::size_t limit, double elapsed_ms);

/// One verdict as a single JSON line (the verify stream format).
std::string verdict_json(const TheoremVerdict& verdict);

/// Final summary record of a verify run. Timing data lives under "timing"
/// and is excluded from the determinism guarantee along with elapsed_ms.
std::string verify_summary_json(const VerifySummary& summary, const std::string& command_echo,
                                const std::string& corpus_version);

/// Corpus listing.
std::string corpus_json(const Corpus& corpus, const std::string& command_echo);

}  // namespace ringlab
