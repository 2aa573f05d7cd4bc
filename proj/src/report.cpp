#include "ringlab/report.hpp"

#include <json.hpp>

#include "ringlab/construct.hpp"

namespace ringlab {

namespace {

using json = nlohmann::ordered_json;

json elem_json(const FiniteRing& R, Elem a) {
    json out;
    out["ref"] = element_ref(a);
    if (auto lit = element_literal(R, a)) out["literal"] = *lit;
    return out;
}

json evidence_json(const FiniteRing& R, const Evidence& ev) {
    json out;
    out["elements"] = json::array();
    for (const Elem& e : ev.elements) out["elements"].push_back(elem_json(R, e));
    out["note"] = ev.note;
    return out;
}

json flag_value(const FlagResult& f) {
    switch (f.value) {
        case Tri::True: return json(true);
        case Tri::False: return json(false);
        case Tri::Unknown: return json("unknown");
    }
    return json("unknown");
}

json witness_json(const FiniteRing& R, const NilCleanWitness& w) {
    json out;
    out["idempotent"] = elem_json(R, w.idempotent);
    if (w.extra_idempotent) out["extra_idempotent"] = elem_json(R, *w.extra_idempotent);
    out["nilpotent"] = elem_json(R, w.nilpotent);
    out["nil_index"] = w.nil_index;
    out["commuting"] = w.commuting;
    if (w.extra_idempotent) out["pairwise_commuting"] = w.pairwise_commuting;
    return out;
}

}  // namespace

std::string classify_report_json(const FiniteRing& ring, const ClassificationReport& rep,
                                 const std::string& command_echo, bool include_witnesses) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command_echo;
    out["ring"] = rep.ring_label;
    out["cardinality"] = rep.cardinality;
    out["characteristic"] = rep.characteristic;
    out["degenerate"] = rep.degenerate;

    json flags;
    for (const auto& view : report_flags(rep)) {
        if (std::string_view(view.name) == "center_of_R_mod_J_boolean") {
            flags["J_card"] = rep.j_card;
            if (rep.j_nil_index)
                flags["J_nil_index"] = *rep.j_nil_index;
            else
                flags["J_nil_index"] = nullptr;
        }
        flags[view.name] = flag_value(*view.flag);
    }
    out["flags"] = std::move(flags);

    json witnesses = json::object();
    json counterexamples = json::object();
    for (const auto& view : report_flags(rep)) {
        if (include_witnesses && view.flag->witness)
            witnesses[view.name] = evidence_json(ring, *view.flag->witness);
        if (view.flag->counterexample)
            counterexamples[view.name] = evidence_json(ring, *view.flag->counterexample);
    }
    out["witnesses"] = std::move(witnesses);
    out["counterexamples"] = std::move(counterexamples);
    out["elapsed_ms"] = rep.elapsed_ms;
    return out.dump(2) + "\n";
}

std::string witness_report_json(const FiniteRing& ring, Elem a, const std::string& command_echo,
                                std::size_t limit, double elapsed_ms) {
    const ElementProfile profile = element_profile(ring, a);
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command_echo;
    out["ring"] = ring.label();
    out["cardinality"] = ring.cardinality();
    out["characteristic"] = ring.characteristic();
    out["element"] = elem_json(ring, a);

    json prof;
    prof["is_unit"] = profile.is_unit;
    prof["is_idempotent"] = profile.is_idempotent;
    prof["is_nilpotent"] = profile.nilpotency_index.has_value();
    if (profile.nilpotency_index)
        prof["nilpotency_index"] = *profile.nilpotency_index;
    else
        prof["nilpotency_index"] = nullptr;
    prof["is_unipotent"] = profile.is_unipotent;
    prof["is_tripotent"] = profile.is_tripotent;
    prof["nil_clean_witness_count"] = profile.nil_clean_witness_count;
    prof["strongly_nil_clean"] = profile.strongly_nil_clean;
    prof["uniquely_nil_clean"] = profile.uniquely_nil_clean;
    out["profile"] = std::move(prof);

    json list = json::array();
    for (const auto& w : nil_clean_witnesses(ring, a, limit)) list.push_back(witness_json(ring, w));
    out["nil_clean_witnesses"] = std::move(list);

    const auto strongly = strongly_nil_clean_elem(ring, a);
    out["strongly_nil_clean_witness"] = strongly ? witness_json(ring, *strongly) : json(nullptr);
    const auto three = sum_nilpotent_two_idem(ring, a, false);
    out["sum_nilpotent_two_idem"] = three ? witness_json(ring, *three) : json(nullptr);
    const auto three_c = sum_nilpotent_two_idem(ring, a, true);
    out["sum_nilpotent_two_idem_commuting"] =
        three_c ? witness_json(ring, *three_c) : json(nullptr);
    const auto two = sum_two_idem(ring, a, false);
    out["sum_two_idem"] = two ? witness_json(ring, *two) : json(nullptr);
    const auto two_c = sum_two_idem(ring, a, true);
    out["sum_two_idem_commuting"] = two_c ? witness_json(ring, *two_c) : json(nullptr);

    out["elapsed_ms"] = elapsed_ms;
    return out.dump(2) + "\n";
}

std::string verdict_json(const TheoremVerdict& v) {
    json out;
    out["theorem"] = v.theorem_id;
    out["ring"] = v.ring;
    out["pass"] = v.skipped ? json(nullptr) : json(v.pass);
    out["skipped"] = v.skipped;
    out["skip_reason"] = v.skip_reason;
    out["counterexample"] = v.counterexample.empty() ? json(nullptr) : json(v.counterexample);
    out["elapsed_ms"] = v.elapsed_ms;
    return out.dump();
}

std::string verify_summary_json(const VerifySummary& summary, const std::string& command_echo,
                                const std::string& corpus_version) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command_echo;
    out["corpus_version"] = corpus_version;
    out["total"] = summary.total;
    out["passed"] = summary.passed;
    out["failed"] = summary.failed;
    out["skipped"] = summary.skipped;

    // Slowest verdicts: timing data, excluded from the determinism contract.
    std::vector<const TheoremVerdict*> by_time;
    for (const auto& v : summary.verdicts) by_time.push_back(&v);
    std::stable_sort(by_time.begin(), by_time.end(),
                     [](const TheoremVerdict* a, const TheoremVerdict* b) {
                         return a->elapsed_ms > b->elapsed_ms;
                     });
    json slowest = json::array();
    for (std::size_t i = 0; i < by_time.size() && i < 3; ++i) {
        json entry;
        entry["theorem"] = by_time[i]->theorem_id;
        entry["ring"] = by_time[i]->ring;
        entry["elapsed_ms"] = by_time[i]->elapsed_ms;
        slowest.push_back(std::move(entry));
    }
    out["timing"]["slowest"] = std::move(slowest);
    return out.dump();
}

std::string corpus_json(const Corpus& corpus, const std::string& command_echo) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["command"] = command_echo;
    out["version"] = corpus.version;
    json entries = json::array();
    for (const auto& entry : corpus.entries) {
        json e;
        e["ring"] = entry.expr;
        if (entry.declared_cardinality)
            e["cardinality"] = entry.declared_cardinality;
        else
            e["cardinality"] = nullptr;
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    return out.dump(2) + "\n";
}

}  // namespace ringlab
