#include "ringlab/classify.hpp"

#include <algorithm>
#include <array>
#include <chrono>

#include "internal.hpp"

namespace ringlab {

namespace {

std::uint32_t idx_of(const FiniteRing& R, Elem a) {
    if (!R.owns(a)) throw domain_error("element does not belong to this ring");
    return a.index;
}

bool commute(const FiniteRing& R, std::uint32_t x, std::uint32_t y) {
    return R.mul_i(x, y) == R.mul_i(y, x);
}

NilCleanWitness make_witness(const FiniteRing& R, std::uint32_t e, std::uint32_t b) {
    NilCleanWitness w;
    w.idempotent = R.wrap(e);
    w.nilpotent = R.wrap(b);
    w.nil_index = *R.nilpotents().index_of(b);
    w.commuting = commute(R, e, b);
    return w;
}

}  // namespace

bool verify_witness(const FiniteRing& R, Elem a, const NilCleanWitness& w) {
    const std::uint32_t e = idx_of(R, w.idempotent);
    const std::uint32_t b = idx_of(R, w.nilpotent);
    if (R.mul_i(e, e) != e) return false;
    const auto nil = R.nilpotents().index_of(b);
    if (!nil || *nil != w.nil_index) return false;
    std::uint32_t sum = R.add_i(e, b);
    if (w.extra_idempotent) {
        const std::uint32_t f = idx_of(R, *w.extra_idempotent);
        if (R.mul_i(f, f) != f) return false;
        sum = R.add_i(sum, f);
        const bool pairwise = commute(R, e, b) && commute(R, e, f) && commute(R, f, b);
        if (w.pairwise_commuting != pairwise) return false;
    }
    if (sum != idx_of(R, a)) return false;
    if (w.commuting != commute(R, e, b)) return false;
    return true;
}

std::vector<NilCleanWitness> nil_clean_witnesses(const FiniteRing& R, Elem a, std::size_t limit) {
    const std::uint32_t ai = idx_of(R, a);
    const auto& nil = R.nilpotents();
    std::vector<NilCleanWitness> out;
    for (std::uint32_t e : R.idempotent_indices()) {
        if (out.size() >= limit) break;
        const std::uint32_t b = R.sub_i(ai, e);
        if (nil.contains(b)) out.push_back(make_witness(R, e, b));
    }
    return out;
}

std::optional<NilCleanWitness> strongly_nil_clean_elem(const FiniteRing& R, Elem a) {
    const std::uint32_t ai = idx_of(R, a);
    const auto& nil = R.nilpotents();
    const bool criterion = nil.contains(R.sub_i(ai, R.mul_i(ai, ai)));
    std::optional<NilCleanWitness> found;
    for (std::uint32_t e : R.idempotent_indices()) {
        const std::uint32_t b = R.sub_i(ai, e);
        if (nil.contains(b) && commute(R, e, b)) {
            found = make_witness(R, e, b);
            break;
        }
    }
    if (criterion != found.has_value())
        throw axiom_error("a - a^2 criterion disagrees with the commuting witness search");
    return found;
}

std::optional<NilCleanWitness> sum_nilpotent_two_idem(const FiniteRing& R, Elem a,
                                                      bool require_commuting) {
    const std::uint32_t ai = idx_of(R, a);
    const auto& nil = R.nilpotents();
    const auto& idem = R.idempotent_indices();
    for (std::uint32_t e : idem) {
        const std::uint32_t rest = R.sub_i(ai, e);
        for (std::uint32_t f : idem) {
            const std::uint32_t b = R.sub_i(rest, f);
            if (!nil.contains(b)) continue;
            if (require_commuting &&
                !(commute(R, e, f) && commute(R, e, b) && commute(R, f, b)))
                continue;
            NilCleanWitness w = make_witness(R, e, b);
            w.extra_idempotent = R.wrap(f);
            w.pairwise_commuting = commute(R, e, b) && commute(R, e, f) && commute(R, f, b);
            return w;
        }
    }
    return std::nullopt;
}

std::optional<NilCleanWitness> sum_two_idem(const FiniteRing& R, Elem a, bool require_commuting) {
    const std::uint32_t ai = idx_of(R, a);
    for (std::uint32_t e : R.idempotent_indices()) {
        const std::uint32_t f = R.sub_i(ai, e);
        if (R.mul_i(f, f) != f) continue;
        if (require_commuting && !commute(R, e, f)) continue;
        NilCleanWitness w = make_witness(R, e, R.zero_i());
        w.extra_idempotent = R.wrap(f);
        w.pairwise_commuting = commute(R, e, f);
        return w;
    }
    return std::nullopt;
}

ElementProfile element_profile(const FiniteRing& R, Elem a) {
    const std::uint32_t ai = idx_of(R, a);
    ElementProfile p;
    p.element = a;
    p.is_unit = R.units().contains(ai);
    p.is_idempotent = R.is_idempotent_index(ai);
    p.nilpotency_index = R.nilpotents().index_of(ai);
    p.is_unipotent = R.nilpotents().contains(R.sub_i(ai, R.one_i()));
    const std::uint32_t sq = R.mul_i(ai, ai);
    p.is_tripotent = R.mul_i(sq, ai) == ai;
    const auto& nil = R.nilpotents();
    for (std::uint32_t e : R.idempotent_indices())
        if (nil.contains(R.sub_i(ai, e))) ++p.nil_clean_witness_count;
    p.strongly_nil_clean = nil.contains(R.sub_i(ai, sq));
    p.uniquely_nil_clean = p.nil_clean_witness_count == 1;
    return p;
}

// ---------------------------------------------------------------------------
// Ring-level flags

namespace {

class Budget {
public:
    explicit Budget(std::uint64_t ops) : remaining_(ops) {}

    bool charge(std::uint64_t cost) {
        if (cost > remaining_) {
            remaining_ = 0;
            return false;
        }
        remaining_ -= cost;
        return true;
    }

private:
    std::uint64_t remaining_;
};

Evidence elem_evidence(const FiniteRing& R, std::initializer_list<std::uint32_t> idx,
                       std::string note) {
    Evidence ev;
    for (auto i : idx) ev.elements.push_back(R.wrap(i));
    ev.note = std::move(note);
    return ev;
}

void mark_unknown(FlagResult& flag, const char* reason) {
    flag.value = Tri::Unknown;
    flag.unknown_reason = reason;
}

// Sample element for witness reporting: first element of the domain that is
// neither 0 nor 1, else 1, else the first element.
std::optional<std::uint32_t> sample_of(const FiniteRing& R,
                                       const std::vector<std::uint32_t>& domain) {
    if (domain.empty()) return std::nullopt;
    for (std::uint32_t x : domain)
        if (x != R.zero_i() && x != R.one_i()) return x;
    for (std::uint32_t x : domain)
        if (x == R.one_i()) return x;
    return domain.front();
}

std::string ref(std::uint32_t i) { return "#" + std::to_string(i); }

}  // namespace

ModJProfile quotient_mod_J_profile(const FiniteRing& R) {
    ModJProfile profile;
    const QuotientMap q = quotient(R, R.jacobson_radical());
    const FiniteRing& Q = q.ring;
    profile.quotient_cardinality = Q.cardinality();
    profile.j_of_quotient_zero = detail::jacobson_data(Q).set.indices.size() == 1;
    profile.quotient_boolean = true;
    for (std::uint32_t x = 0; x < Q.cardinality() && profile.quotient_boolean; ++x)
        profile.quotient_boolean = Q.mul_i(x, x) == x;
    profile.center_boolean = true;
    for (std::uint32_t c : detail::center_set(Q).indices)
        if (Q.mul_i(c, c) != c) {
            profile.center_boolean = false;
            break;
        }
    profile.subdirect_z3 = Q.characteristic() == 3;
    for (std::uint32_t x = 0; x < Q.cardinality() && profile.subdirect_z3; ++x)
        profile.subdirect_z3 = Q.mul_i(Q.mul_i(x, x), x) == x;
    return profile;
}

ClassificationReport ring_class_flags(const FiniteRing& R, const ClassifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    ClassificationReport rep;
    rep.ring_label = R.label();
    rep.cardinality = R.cardinality();
    rep.characteristic = R.characteristic();

    auto finish = [&]() -> ClassificationReport& {
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return rep;
    };

    auto all_flags = [&rep]() {
        return std::array<FlagResult*, 19>{
            &rep.uu,        &rep.unc,           &rep.nil_clean,   &rep.strongly_nil_clean,
            &rep.unii,      &rep.strong_unii,   &rep.uii,         &rep.strong_uii,
            &rep.strongly_2_nil_clean, &rep.boolean_ring, &rep.reduced, &rep.clean,
            &rep.two_primal, &rep.semipotent,   &rep.u_eq_1,      &rep.u_eq_1_plus_idem,
            &rep.u_eq_1_plus_j, &rep.center_mod_j_boolean, &rep.subdirect_z3};
    };

    if (R.is_zero_ring()) {
        rep.degenerate = true;
        for (FlagResult* f : all_flags()) mark_unknown(*f, "degenerate (zero ring)");
        rep.j_card = 1;
        rep.j_nil_index = 1;
        rep.mod_j.quotient_cardinality = 1;
        return finish();
    }

    const std::size_t n = R.cardinality();
    Budget budget(opts.op_budget);

    // The cached structure sets back every flag; their cost is charged once.
    if (!budget.charge(4ull * n * n)) {
        for (FlagResult* f : all_flags()) mark_unknown(*f, "resource limit exceeded");
        return finish();
    }
    const auto& units = R.units();
    const auto& idem = R.idempotent_indices();
    const auto& idem_mask = detail::idempotent_set(R).mask;
    const auto& nil = R.nilpotents();
    const auto& jac = detail::jacobson_data(R);
    rep.j_card = jac.set.indices.size();
    rep.j_nil_index = jac.nil_index;

    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;

    auto set_bool = [&](FlagResult& flag, bool value) { flag.value = value ? Tri::True : Tri::False; };

    // --- pointwise scans ---------------------------------------------------
    if (budget.charge(n)) {
        bool ok = true;
        for (std::uint32_t x = 0; x < n && ok; ++x) ok = idem_mask[x];
        set_bool(rep.boolean_ring, ok);
        if (!ok) {
            std::uint32_t bad = 0;
            while (idem_mask[bad]) ++bad;
            rep.boolean_ring.counterexample =
                elem_evidence(R, {bad}, ref(bad) + " is not idempotent");
        }
    } else {
        mark_unknown(rep.boolean_ring, "resource limit exceeded");
    }

    set_bool(rep.reduced, nil.size() == 1);
    if (!rep.reduced.truthy()) {
        const std::uint32_t bad =
            nil.entries()[0].first == R.zero_i() ? nil.entries()[1].first : nil.entries()[0].first;
        rep.reduced.counterexample =
            elem_evidence(R, {bad}, ref(bad) + " is a nonzero nilpotent");
    }

    set_bool(rep.u_eq_1, units.size() == 1);
    if (!rep.u_eq_1.truthy()) {
        const std::uint32_t u =
            units.indices()[0] == R.one_i() ? units.indices()[1] : units.indices()[0];
        rep.u_eq_1.counterexample = elem_evidence(R, {u}, ref(u) + " is a unit other than 1");
    }

    // --- set-equality flags -------------------------------------------------
    auto set_equality = [&](FlagResult& flag, const std::vector<std::uint32_t>& image,
                            const char* image_name) {
        std::vector<bool> mark(n, false);
        for (std::uint32_t b : image) mark[R.add_i(R.one_i(), b)] = true;
        std::optional<std::uint32_t> unit_not_in_image;
        std::optional<std::uint32_t> image_not_unit;
        for (std::uint32_t u : units.indices())
            if (!mark[u]) {
                unit_not_in_image = u;
                break;
            }
        for (std::uint32_t b : image) {
            const std::uint32_t x = R.add_i(R.one_i(), b);
            if (!units.contains(x)) {
                image_not_unit = x;
                break;
            }
        }
        const bool equal = !unit_not_in_image && !image_not_unit;
        set_bool(flag, equal);
        if (!equal) {
            if (unit_not_in_image)
                flag.counterexample = elem_evidence(
                    R, {*unit_not_in_image},
                    "unit " + ref(*unit_not_in_image) + " is not of the form 1+" + image_name);
            else
                flag.counterexample = elem_evidence(
                    R, {*image_not_unit},
                    ref(*image_not_unit) + " = 1+" + image_name + " is not a unit");
        }
    };

    if (budget.charge(2ull * n)) {
        std::vector<std::uint32_t> nil_elems;
        nil_elems.reserve(nil.size());
        for (const auto& [x, k] : nil.entries()) nil_elems.push_back(x);
        set_equality(rep.uu, nil_elems, "nilpotent");
    } else {
        mark_unknown(rep.uu, "resource limit exceeded");
    }
    if (budget.charge(2ull * n)) {
        set_equality(rep.u_eq_1_plus_idem, idem, "idempotent");
    } else {
        mark_unknown(rep.u_eq_1_plus_idem, "resource limit exceeded");
    }
    if (budget.charge(2ull * n)) {
        set_equality(rep.u_eq_1_plus_j, jac.set.indices, "element-of-J");
    } else {
        mark_unknown(rep.u_eq_1_plus_j, "resource limit exceeded");
    }

    {
        std::optional<std::uint32_t> bad;
        for (const auto& [x, k] : nil.entries())
            if (!jac.set.mask[x]) {
                bad = x;
                break;
            }
        set_bool(rep.two_primal, !bad);
        if (bad)
            rep.two_primal.counterexample =
                elem_evidence(R, {*bad}, "nilpotent " + ref(*bad) + " lies outside J");
    }

    {
        const SemipotenceReport sp = is_semipotent(R);
        set_bool(rep.semipotent, sp.semipotent);
        if (!sp.semipotent && sp.violator)
            rep.semipotent.counterexample = elem_evidence(
                R, {sp.violator->index},
                "principal right ideal of " + ref(sp.violator->index) +
                    " avoids nonzero idempotents");
    }

    // --- decomposition searches ----------------------------------------------
    const auto& unit_idx = units.indices();

    // forall x in domain: exists idempotent e with pred(x, e). Returns the
    // violating element, if any, plus a sample witness pair.
    auto search_one_idem = [&](const std::vector<std::uint32_t>& domain, auto&& pred,
                               FlagResult& flag, const char* what) {
        if (!budget.charge(static_cast<std::uint64_t>(domain.size()) * (idem.size() + 1))) {
            mark_unknown(flag, "resource limit exceeded");
            return;
        }
        std::optional<std::uint32_t> violator;
        for (std::uint32_t x : domain) {
            bool ok = false;
            for (std::uint32_t e : idem)
                if (pred(x, e)) {
                    ok = true;
                    break;
                }
            if (!ok) {
                violator = x;
                break;
            }
        }
        set_bool(flag, !violator);
        if (violator) {
            flag.counterexample =
                elem_evidence(R, {*violator}, ref(*violator) + " admits no " + what);
        } else if (auto s = sample_of(R, domain)) {
            for (std::uint32_t e : idem)
                if (pred(*s, e)) {
                    flag.witness = elem_evidence(R, {*s, e},
                                                 "sample: " + ref(*s) + " decomposes with " +
                                                     "idempotent " + ref(e));
                    break;
                }
        }
    };

    search_one_idem(
        unit_idx, [&](std::uint32_t u, std::uint32_t e) { return nil.contains(R.sub_i(u, e)); },
        rep.unc, "nil-clean decomposition");
    search_one_idem(
        all, [&](std::uint32_t a, std::uint32_t e) { return nil.contains(R.sub_i(a, e)); },
        rep.nil_clean, "nil-clean decomposition");
    search_one_idem(
        all, [&](std::uint32_t a, std::uint32_t e) { return units.contains(R.sub_i(a, e)); },
        rep.clean, "unit-plus-idempotent decomposition");
    search_one_idem(
        unit_idx, [&](std::uint32_t u, std::uint32_t e) { return idem_mask[R.sub_i(u, e)]; },
        rep.uii, "two-idempotent decomposition");
    search_one_idem(
        unit_idx,
        [&](std::uint32_t u, std::uint32_t e) {
            const std::uint32_t f = R.sub_i(u, e);
            return idem_mask[f] && commute(R, e, f);
        },
        rep.strong_uii, "commuting two-idempotent decomposition");

    // strongly nil-clean ring via the a - a^2 criterion (the element-level
    // equivalence with the commuting-witness search is re-verified by the
    // theorem registry).
    if (budget.charge(2ull * n)) {
        std::optional<std::uint32_t> bad;
        for (std::uint32_t a = 0; a < n; ++a)
            if (!nil.contains(R.sub_i(a, R.mul_i(a, a)))) {
                bad = a;
                break;
            }
        set_bool(rep.strongly_nil_clean, !bad);
        if (bad)
            rep.strongly_nil_clean.counterexample =
                elem_evidence(R, {*bad}, ref(*bad) + " - its square is not nilpotent");
    } else {
        mark_unknown(rep.strongly_nil_clean, "resource limit exceeded");
    }

    // forall x in domain: exists (e, f) idempotents with x - e - f nilpotent
    // (pairwise commuting when strong).
    auto search_two_idem = [&](const std::vector<std::uint32_t>& domain, bool strong,
                               FlagResult& flag, const char* what) {
        const std::uint64_t cost = static_cast<std::uint64_t>(domain.size()) * idem.size() *
                                   (idem.size() + 1);
        if (!budget.charge(cost)) {
            mark_unknown(flag, "resource limit exceeded");
            return;
        }
        std::optional<std::uint32_t> violator;
        std::optional<std::array<std::uint32_t, 3>> sample_parts;
        auto find = [&](std::uint32_t x) -> std::optional<std::array<std::uint32_t, 3>> {
            for (std::uint32_t e : idem) {
                const std::uint32_t rest = R.sub_i(x, e);
                for (std::uint32_t f : idem) {
                    const std::uint32_t b = R.sub_i(rest, f);
                    if (!nil.contains(b)) continue;
                    if (strong &&
                        !(commute(R, e, f) && commute(R, e, b) && commute(R, f, b)))
                        continue;
                    return std::array<std::uint32_t, 3>{e, f, b};
                }
            }
            return std::nullopt;
        };
        for (std::uint32_t x : domain) {
            if (!find(x)) {
                violator = x;
                break;
            }
        }
        set_bool(flag, !violator);
        if (violator) {
            flag.counterexample =
                elem_evidence(R, {*violator}, ref(*violator) + " admits no " + what);
        } else if (auto s = sample_of(R, domain)) {
            sample_parts = find(*s);
            if (sample_parts)
                flag.witness = elem_evidence(
                    R, {*s, (*sample_parts)[0], (*sample_parts)[1], (*sample_parts)[2]},
                    "sample: " + ref(*s) + " = e + f + b");
        }
    };

    search_two_idem(unit_idx, false, rep.unii, "nilpotent-plus-two-idempotents decomposition");
    search_two_idem(unit_idx, true, rep.strong_unii,
                    "commuting nilpotent-plus-two-idempotents decomposition");
    search_two_idem(all, true, rep.strongly_2_nil_clean,
                    "commuting nilpotent-plus-two-idempotents decomposition");

    // --- R/J profile ----------------------------------------------------------
    const std::size_t m = n / rep.j_card;
    if (budget.charge(4ull * m * m + n)) {
        rep.mod_j = quotient_mod_J_profile(R);
        set_bool(rep.center_mod_j_boolean, rep.mod_j.center_boolean);
    } else {
        mark_unknown(rep.center_mod_j_boolean, "resource limit exceeded");
    }

    if (budget.charge(2ull * n)) {
        bool ok = R.characteristic() == 3;
        std::optional<std::uint32_t> bad;
        if (ok)
            for (std::uint32_t x = 0; x < n; ++x)
                if (R.mul_i(R.mul_i(x, x), x) != x) {
                    bad = x;
                    ok = false;
                    break;
                }
        set_bool(rep.subdirect_z3, ok);
        if (bad)
            rep.subdirect_z3.counterexample =
                elem_evidence(R, {*bad}, ref(*bad) + "^3 differs from it");
        else if (!ok)
            rep.subdirect_z3.counterexample =
                elem_evidence(R, {}, "characteristic is not 3");
    } else {
        mark_unknown(rep.subdirect_z3, "resource limit exceeded");
    }

    return finish();
}

std::vector<FlagView> report_flags(const ClassificationReport& r) {
    return {
        {"UU", &r.uu},
        {"UNC", &r.unc},
        {"nil_clean_ring", &r.nil_clean},
        {"strongly_nil_clean_ring", &r.strongly_nil_clean},
        {"UNII", &r.unii},
        {"strong_UNII", &r.strong_unii},
        {"UII", &r.uii},
        {"strong_UII", &r.strong_uii},
        {"strongly_2_nil_clean", &r.strongly_2_nil_clean},
        {"boolean", &r.boolean_ring},
        {"reduced", &r.reduced},
        {"clean", &r.clean},
        {"two_primal", &r.two_primal},
        {"semipotent", &r.semipotent},
        {"U_eq_1", &r.u_eq_1},
        {"U_eq_1_plus_idem", &r.u_eq_1_plus_idem},
        {"U_eq_1_plus_J", &r.u_eq_1_plus_j},
        {"center_of_R_mod_J_boolean", &r.center_mod_j_boolean},
        {"subdirect_Z3", &r.subdirect_z3},
    };
}

}  // namespace ringlab
