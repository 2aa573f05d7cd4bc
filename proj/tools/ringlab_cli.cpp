// Command-line front end: classify ring expressions, profile elements,
// run the theorem registry, list the corpus. All payload output is JSON on
// stdout; errors go to stderr with the documented exit codes
// (1 parse, 2 internal/axiom, 3 resource limit).

#include <chrono>
#include <iostream>

#include <CLI11.hpp>

#include "ringlab/construct.hpp"
#include "ringlab/report.hpp"
#include "ringlab/theorems.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitInternal = 2;
constexpr int kExitLimit = 3;

struct CommonOpts {
    std::size_t max_card = 0;  // 0 = defaults (4096 tabulated / 65536 structural)
    std::uint64_t seed = 0;
    bool json = true;
};

ringlab::BuildOptions build_options(const CommonOpts& common) {
    ringlab::BuildOptions opts;
    opts.seed = common.seed;
    if (common.max_card) {
        opts.structural_limit = common.max_card;
        opts.tabulated_limit = std::min<std::size_t>(4096, common.max_card);
    }
    return opts;
}

std::string echo(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += " ";
        out += p;
    }
    return out;
}

int run_classify(const std::string& expr, const CommonOpts& common, bool witnesses) {
    const auto ring = ringlab::build_ring(expr, build_options(common));
    const auto report = ringlab::ring_class_flags(ring);
    std::vector<std::string> cmd{"classify", expr};
    if (witnesses) cmd.push_back("--witnesses");
    std::cout << ringlab::classify_report_json(ring, report, echo(cmd), witnesses);
    return kExitOk;
}

int run_witness(const std::string& expr, const std::string& elem_text, const CommonOpts& common,
                std::size_t limit) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ring = ringlab::build_ring(expr, build_options(common));
    ringlab::Elem a;
    try {
        a = ringlab::parse_element(ring, elem_text);
    } catch (const ringlab::parse_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitParse;
    } catch (const ringlab::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitParse;
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << ringlab::witness_report_json(ring, a, echo({"witness", expr, elem_text}),
                                              limit, elapsed);
    return kExitOk;
}

int run_verify(const std::string& theorem, bool all, const std::string& corpus_path,
               const CommonOpts& common) {
    ringlab::Corpus corpus = corpus_path == "default" ? ringlab::default_corpus()
                                                      : ringlab::load_corpus_file(corpus_path);
    ringlab::VerifyEngine::Options opts;
    opts.build = build_options(common);
    opts.seed = common.seed;
    ringlab::VerifyEngine engine(opts);

    ringlab::VerifySummary summary;
    std::vector<std::string> cmd{"verify"};
    if (all) {
        cmd.push_back("--all");
        summary = engine.verify_all(corpus);
    } else {
        cmd.push_back("--theorem");
        cmd.push_back(theorem);
        if (!ringlab::is_known_theorem(theorem)) {
            std::cerr << "error: unknown theorem id " << theorem << "\n";
            return kExitParse;
        }
        auto verdicts = engine.verify(theorem, corpus);
        for (auto& v : verdicts) {
            summary.total += 1;
            if (v.skipped)
                summary.skipped += 1;
            else if (v.pass)
                summary.passed += 1;
            else
                summary.failed += 1;
            summary.verdicts.push_back(std::move(v));
        }
    }
    if (corpus_path != "default") {
        cmd.push_back("--corpus");
        cmd.push_back(corpus_path);
    }
    for (const auto& v : summary.verdicts) std::cout << ringlab::verdict_json(v) << "\n";
    std::cout << ringlab::verify_summary_json(summary, echo(cmd), corpus.version) << "\n";
    return summary.failed == 0 ? kExitOk : kExitInternal;
}

int run_corpus(const std::string& corpus_path) {
    ringlab::Corpus corpus = corpus_path == "default" ? ringlab::default_corpus()
                                                      : ringlab::load_corpus_file(corpus_path);
    std::cout << ringlab::corpus_json(corpus, "corpus");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring classification toolkit"};
    app.require_subcommand(1);

    CommonOpts common;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", common.json, "emit JSON (default; kept for compatibility)");
        sub->add_option("--max-card", common.max_card,
                        "cardinality cap (default 4096 tabulated / 65536 structural)");
        sub->add_option("--seed", common.seed, "seed for randomized property checks");
    };

    std::string expr, elem_text, theorem, corpus_path = "default";
    bool witnesses = false, all = false;
    std::size_t limit = 16;

    auto* classify = app.add_subcommand("classify", "classify a ring expression");
    classify->add_option("expr", expr, "ring expression")->required();
    classify->add_flag("--witnesses", witnesses, "include witness decompositions");
    add_common(classify);

    auto* witness = app.add_subcommand("witness", "profile one element");
    witness->add_option("expr", expr, "ring expression")->required();
    witness->add_option("element", elem_text, "element literal")->required();
    witness->add_option("--limit", limit, "witness count cap (default 16)");
    add_common(witness);

    auto* verify = app.add_subcommand("verify", "run the theorem registry");
    auto* theorem_opt = verify->add_option("--theorem", theorem, "theorem id (e.g. T2.14)");
    verify->add_flag("--all", all, "run every registry entry");
    verify->add_option("--corpus", corpus_path, "corpus file path or 'default'");
    add_common(verify);

    auto* corpus_cmd = app.add_subcommand("corpus", "list the corpus");
    corpus_cmd->add_option("--corpus", corpus_path, "corpus file path or 'default'");
    add_common(corpus_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify(expr, common, witnesses);
        if (witness->parsed()) return run_witness(expr, elem_text, common, limit);
        if (verify->parsed()) {
            if (!all && theorem_opt->count() == 0) {
                std::cerr << "error: verify needs --theorem ID or --all\n";
                return kExitParse;
            }
            return run_verify(theorem, all, corpus_path, common);
        }
        if (corpus_cmd->parsed()) return run_corpus(corpus_path);
    } catch (const ringlab::parse_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitParse;
    } catch (const ringlab::domain_error& err) {
        // Bad user input: malformed descriptor arguments, unknown ids.
        std::cerr << "error: " << err.what() << "\n";
        return kExitParse;
    } catch (const ringlab::limit_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitLimit;
    } catch (const ringlab::axiom_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInternal;
    } catch (const ringlab::error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInternal;
    }
    return kExitParse;
}
