#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/classify.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/corpus.hpp"

namespace ringlab {

/// Outcome of one (theorem, ring) check. A failing verdict always carries a
/// counterexample description whose element references ("#k") re-validate
/// against the rebuilt ring.
struct TheoremVerdict {
    std::string theorem_id;
    std::string ring;  // canonical expression text
    bool pass = false;
    bool skipped = false;
    std::string skip_reason;
    std::string counterexample;  // nonempty iff pass is false
    double elapsed_ms = 0.0;
};

struct VerifySummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::vector<TheoremVerdict> verdicts;
};

struct TheoremInfo {
    std::string id;
    std::string statement;
};

/// The frozen check registry, in registry order.
const std::vector<TheoremInfo>& theorem_registry();

bool is_known_theorem(const std::string& id);

struct CheckOutcome {
    bool pass = true;
    std::string counterexample;  // nonempty iff pass is false
};

/// Three-way equivalence (units nil-clean) <=> (nil-clean) <=> (J nil and
/// R/J semisimple with Boolean center), evaluated purely from a report.
/// Exposed as a seam so tests can feed tampered reports through the checker.
CheckOutcome t214_equivalence(const ClassificationReport& report);

/// Runs registry checks over a corpus. Rings, classifications, torsion
/// splits, and auxiliary base rings are built once per engine and shared
/// across theorems.
class VerifyEngine {
public:
    struct Options {
        BuildOptions build;
        ClassifyOptions classify;
        std::uint64_t seed = 0;
    };

    VerifyEngine();
    explicit VerifyEngine(Options opts);
    ~VerifyEngine();
    VerifyEngine(const VerifyEngine&) = delete;
    VerifyEngine& operator=(const VerifyEngine&) = delete;

    struct Impl;  // internal context cache, exposed for the check routines

    /// Verdicts for one theorem over every applicable corpus ring, in corpus
    /// order. Throws domain_error for an unknown id.
    std::vector<TheoremVerdict> verify(const std::string& theorem_id, const Corpus& corpus);

    /// Every registry id over the corpus, with aggregate counts.
    VerifySummary verify_all(const Corpus& corpus);

private:
    std::unique_ptr<Impl> impl_;
};

}  // namespace ringlab
