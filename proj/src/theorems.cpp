#include "ringlab/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "internal.hpp"
#include "ringlab/group.hpp"
#include "ringlab/matrix.hpp"
#include "ringlab/rng.hpp"
#include "ringlab/subset_carriers.hpp"

namespace ringlab {

namespace {

// Raised by checks when a needed flag is Unknown (classification budget).
struct TheoremSkip {
    std::string reason;
};

bool truth(const FlagResult& f) {
    if (f.value == Tri::Unknown)
        throw TheoremSkip{f.unknown_reason.value_or("flag unknown")};
    return f.value == Tri::True;
}

std::string ref(std::uint32_t i) { return "#" + std::to_string(i); }

std::string elem_text(const FiniteRing& R, std::uint32_t i) {
    auto lit = R.carrier().literal(i);
    return lit ? ref(i) + " (" + *lit + ")" : ref(i);
}

CheckOutcome ok() { return CheckOutcome{}; }
CheckOutcome fail(std::string counterexample) { return CheckOutcome{false, std::move(counterexample)}; }

bool commute_i(const FiniteRing& R, std::uint32_t x, std::uint32_t y) {
    return R.mul_i(x, y) == R.mul_i(y, x);
}

// Lightweight "every unit nil-clean" decision for quotient rings.
bool ring_is_unc(const FiniteRing& R) {
    const auto& nil = R.nilpotents();
    for (std::uint32_t u : R.units().indices()) {
        bool clean = false;
        for (std::uint32_t e : R.idempotent_indices())
            if (nil.contains(R.sub_i(u, e))) {
                clean = true;
                break;
            }
        if (!clean) return false;
    }
    return true;
}

// Commuting nil-clean witness existence, straight from the definition.
bool has_commuting_witness(const FiniteRing& R, std::uint32_t a) {
    const auto& nil = R.nilpotents();
    for (std::uint32_t e : R.idempotent_indices()) {
        const std::uint32_t b = R.sub_i(a, e);
        if (nil.contains(b) && commute_i(R, e, b)) return true;
    }
    return false;
}

// Commuting nilpotent-plus-tripotent decomposition of every unit.
std::optional<std::uint32_t> unit_lacking_tripotent_decomp(const FiniteRing& R) {
    const auto& nil = R.nilpotents();
    for (std::uint32_t u : R.units().indices()) {
        bool found = false;
        for (std::uint32_t t : R.tripotent_indices()) {
            const std::uint32_t b = R.sub_i(u, t);
            if (nil.contains(b) && commute_i(R, t, b)) {
                found = true;
                break;
            }
        }
        if (!found) return u;
    }
    return std::nullopt;
}

std::optional<std::uint32_t> unit_with_one_minus_square_not_nil(const FiniteRing& R) {
    const auto& nil = R.nilpotents();
    for (std::uint32_t u : R.units().indices())
        if (!nil.contains(R.sub_i(R.one_i(), R.mul_i(u, u)))) return u;
    return std::nullopt;
}

}  // namespace

CheckOutcome t214_equivalence(const ClassificationReport& rep) {
    if (rep.unc.value == Tri::Unknown || rep.nil_clean.value == Tri::Unknown)
        throw domain_error("t214_equivalence needs fully computed flags");
    const bool b1 = rep.unc.truthy();
    const bool b2 = rep.nil_clean.truthy();
    const bool b3 =
        rep.j_nil_index.has_value() && rep.mod_j.j_of_quotient_zero && rep.mod_j.center_boolean;
    if (b1 == b2 && b2 == b3) return ok();
    std::string note = "equivalence legs disagree: units-nil-clean=" + std::to_string(b1) +
                       ", nil-clean=" + std::to_string(b2) +
                       ", semisimple-mod-J-with-Boolean-center=" + std::to_string(b3);
    const FlagResult* src = !b1 && b2 ? &rep.unc : (!b2 && b1 ? &rep.nil_clean : nullptr);
    if (src && src->counterexample && !src->counterexample->elements.empty())
        note += "; element " + ref(src->counterexample->elements.front().index);
    return fail(note);
}

// ---------------------------------------------------------------------------

struct VerifyEngine::Impl {
    struct Part {
        unsigned prime = 0;
        FiniteRing ring;
        ClassificationReport report;
        ModJProfile profile;
    };

    struct Ctx {
        std::string expr;
        RingDescriptorPtr desc;
        FiniteRing ring;
        std::optional<ClassificationReport> report;
        std::optional<std::vector<Part>> parts;
        std::optional<Subring> center_sub;
        std::optional<ClassificationReport> center_report;
    };

    Options opts;
    std::map<std::string, std::unique_ptr<Ctx>> cache;

    explicit Impl(Options o) : opts(std::move(o)) {}

    Ctx& context(const std::string& expr) {
        auto it = cache.find(expr);
        if (it != cache.end()) return *it->second;
        auto ctx = std::make_unique<Ctx>();
        ctx->expr = expr;
        ctx->desc = parse_ring_expr(expr);
        BuildOptions build = opts.build;
        build.seed = opts.seed;
        ctx->ring = build_ring(*ctx->desc, build);
        return *cache.emplace(expr, std::move(ctx)).first->second;
    }

    const ClassificationReport& flags(Ctx& ctx) {
        if (!ctx.report) ctx.report = ring_class_flags(ctx.ring, opts.classify);
        return *ctx.report;
    }

    const std::vector<Part>& torsion_parts(Ctx& ctx) {
        if (!ctx.parts) {
            std::vector<Part> parts;
            for (auto& factor : torsion_split(ctx.ring)) {
                Part part;
                part.prime = factor.prime;
                part.ring = factor.ring;
                part.report = ring_class_flags(factor.ring, opts.classify);
                part.profile = quotient_mod_J_profile(factor.ring);
                parts.push_back(std::move(part));
            }
            ctx.parts = std::move(parts);
        }
        return *ctx.parts;
    }

    const ClassificationReport& center_flags(Ctx& ctx) {
        if (!ctx.center_report) {
            ctx.center_sub = ctx.ring.center();
            ctx.center_report = ring_class_flags(ctx.center_sub->view(), opts.classify);
        }
        return *ctx.center_report;
    }

    const Part* part_for_prime(Ctx& ctx, unsigned p) {
        for (const auto& part : torsion_parts(ctx))
            if (part.prime == p) return &part;
        return nullptr;
    }

    bool parts_within_23(Ctx& ctx) {
        for (const auto& part : torsion_parts(ctx))
            if (part.prime != 2 && part.prime != 3) return false;
        return true;
    }
};

namespace {

using Impl = VerifyEngine::Impl;
using Ctx = Impl::Ctx;

struct RegEntry {
    const char* id;
    const char* statement;
    std::function<bool(Impl&, Ctx&)> applicable;
    std::function<CheckOutcome(Impl&, Ctx&)> run;
};

bool nontrivial(Ctx& ctx) { return !ctx.ring.is_zero_ring(); }

CheckOutcome check_l24(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    if (!truth(rep.unc)) return ok();
    const FiniteRing& R = ctx.ring;
    const bool j_nil = rep.j_nil_index.has_value();
    const Elem two = R.from_integer(2);
    const bool two_in_j = detail::jacobson_data(R).set.mask[two.index];
    if (j_nil && two_in_j) return ok();
    return fail(std::string("units are nil-clean but ") +
                (j_nil ? "2*1 = " + elem_text(R, two.index) + " lies outside J"
                       : "J is not nilpotent"));
}

CheckOutcome check_p22(Impl& eng, Ctx& ctx) {
    (void)eng;
    const FiniteRing& R = ctx.ring;
    const auto& nil = R.nilpotents();
    for (std::uint32_t u : R.units().indices()) {
        const bool unipotent = nil.contains(R.sub_i(u, R.one_i()));
        const bool strongly = has_commuting_witness(R, u);
        if (unipotent != strongly)
            return fail("unit " + elem_text(R, u) + ": unipotent=" + std::to_string(unipotent) +
                        " but strongly-nil-clean=" + std::to_string(strongly));
    }
    return ok();
}

CheckOutcome check_t25(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const bool r_unc = truth(rep.unc);
    const FiniteRing& R = ctx.ring;

    std::vector<Ideal> ideals;
    auto push_unique = [&](Ideal ideal) {
        for (const auto& have : ideals)
            if (have.member_indices() == ideal.member_indices()) return;
        ideals.push_back(std::move(ideal));
    };
    push_unique(R.jacobson_radical());
    for (const auto& [a, k] : R.nilpotents().entries()) {
        const Elem gen = R.wrap(a);
        Ideal ideal = ideal_generated(R, std::span<const Elem>(&gen, 1));
        const auto info = ideal_nil_index(R, ideal);
        if (info.nil) push_unique(std::move(ideal));
    }
    if (is_group_ring(R)) {
        Ideal delta = augmentation_ideal(R);
        if (ideal_nil_index(R, delta).nil) push_unique(std::move(delta));
    }

    for (const Ideal& ideal : ideals) {
        const QuotientMap q = quotient(R, ideal);
        const bool q_unc = ring_is_unc(q.ring);
        if (q_unc != r_unc)
            return fail("nil ideal of size " + std::to_string(ideal.size()) +
                        ": units-nil-clean(R)=" + std::to_string(r_unc) +
                        " but units-nil-clean(R/I)=" + std::to_string(q_unc));
    }
    return ok();
}

CheckOutcome check_c26(Impl& eng, Ctx& ctx) {
    using K = RingDescriptor::Kind;
    const auto& rep = eng.flags(ctx);
    const bool here = truth(rep.unc);
    auto base_unc = [&](const std::string& expr) {
        return truth(eng.flags(eng.context(expr)).unc);
    };
    bool expected = false;
    switch (ctx.desc->kind) {
        case K::trivial_extension:
        case K::truncated_poly:
        case K::triangular:
        case K::block_triangular:
            expected = base_unc(render(*ctx.desc->args[0]));
            break;
        case K::ex27:
            expected = base_unc("M(" + std::to_string(ctx.desc->a) + ",Z(2))") &&
                       base_unc("TP(Z(2)," + std::to_string(ctx.desc->b) + ")");
            break;
        default:
            return ok();
    }
    if (here == expected) return ok();
    return fail("constructor claim: units-nil-clean should be " + std::to_string(expected) +
                ", classified " + std::to_string(here));
}

CheckOutcome check_l28(Impl&, Ctx& ctx) {
    const FiniteRing& R = ctx.ring;
    const auto& nil = R.nilpotents();
    for (std::uint32_t a = 0; a < R.cardinality(); ++a) {
        const bool criterion = nil.contains(R.sub_i(a, R.mul_i(a, a)));
        const bool witness = has_commuting_witness(R, a);
        if (criterion != witness)
            return fail("element " + elem_text(R, a) + ": a-a^2 nilpotent=" +
                        std::to_string(criterion) + " but commuting witness=" +
                        std::to_string(witness));
    }
    return ok();
}

CheckOutcome check_c29(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const auto& crep = eng.center_flags(ctx);
    if (truth(rep.nil_clean) && !truth(crep.strongly_nil_clean))
        return fail("ring is nil-clean but its center is not strongly nil-clean");
    if (truth(rep.unc) && !truth(crep.uu))
        return fail("units are nil-clean but the center is not unit-unipotent");
    return ok();
}

bool two_in_j(Impl&, Ctx& ctx) {
    if (ctx.ring.is_zero_ring()) return false;
    const Elem two = ctx.ring.from_integer(2);
    return detail::jacobson_data(ctx.ring).set.mask[two.index];
}

CheckOutcome check_c210(Impl&, Ctx& ctx) {
    const FiniteRing& R = ctx.ring;
    const auto& nil = R.nilpotents();
    for (std::uint32_t a = 0; a < R.cardinality(); ++a) {
        const bool strongly = nil.contains(R.sub_i(a, R.mul_i(a, a)));
        bool one_sided = false;
        for (std::uint32_t e : R.idempotent_indices()) {
            const std::uint32_t b = R.sub_i(a, e);
            if (!nil.contains(b)) continue;
            const std::uint32_t eb = R.mul_i(e, b);
            if (eb == R.mul_i(eb, e)) {
                one_sided = true;
                break;
            }
        }
        if (strongly != one_sided)
            return fail("element " + elem_text(R, a) + ": strongly-nil-clean=" +
                        std::to_string(strongly) + " but eb=ebe decomposition=" +
                        std::to_string(one_sided));
    }
    return ok();
}

bool two_primal_ring(Impl& eng, Ctx& ctx) {
    if (ctx.ring.is_zero_ring()) return false;
    return truth(eng.flags(ctx).two_primal);
}

CheckOutcome check_t211(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const FiniteRing& R = ctx.ring;
    const bool b3 = truth(rep.uu);
    const bool b4 = truth(rep.unc);
    std::vector<std::uint32_t> nil_elems;
    for (const auto& [x, k] : R.nilpotents().entries()) nil_elems.push_back(x);
    const bool j_eq_nil = detail::jacobson_data(R).set.indices == nil_elems;
    const bool b5 = j_eq_nil && truth(rep.u_eq_1_plus_j);
    if (b3 == b4 && b4 == b5) return ok();
    return fail("equivalence legs disagree: unit-unipotent=" + std::to_string(b3) +
                ", units-nil-clean=" + std::to_string(b4) +
                ", (J=Nil and U=1+J)=" + std::to_string(b5));
}

CheckOutcome check_t214(Impl& eng, Ctx& ctx) { return t214_equivalence(eng.flags(ctx)); }

bool det_base(Impl&, Ctx& ctx) {
    return ctx.expr == "Z(2)" || ctx.expr == "Z(4)" || ctx.expr == "Z(6)";
}

CheckOutcome check_l31(Impl& eng, Ctx& ctx) {
    const FiniteRing& R = ctx.ring;
    Rng rng(eng.opts.seed ^ (0x5851f42d4c957f2dull * R.characteristic()));
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng.below(3);  // sizes 2..4
        Matrix a(R, n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                a.set(r, c, R.element(rng.below(R.cardinality())));
        const std::size_t i = 1 + rng.below(n);
        const std::size_t j = 1 + rng.below(n);
        const Elem x = R.element(rng.below(R.cardinality()));
        Matrix xe(R, n, n);
        xe.set(i - 1, j - 1, x);
        const Elem lhs = det(xe.add(a));
        const Elem rhs = R.add(R.mul(x, cofactor(a, i, j)), det(a));
        if (!(lhs == rhs))
            return fail("trial " + std::to_string(trial) + ": det(xE+A) != x*cof+det(A) at size " +
                        std::to_string(n) + ", position (" + std::to_string(i) + "," +
                        std::to_string(j) + "), x=" + ref(x.index));
    }
    return ok();
}

bool matrix_over_commutative(Impl& eng, Ctx& ctx) {
    if (ctx.desc->kind != RingDescriptor::Kind::matrix || ctx.desc->a < 2) return false;
    return is_commutative(eng.context(render(*ctx.desc->args[0])).ring);
}

CheckOutcome check_t32(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    auto& base = eng.context(render(*ctx.desc->args[0]));
    const auto& base_rep = eng.flags(base);
    const bool rhs = base_rep.j_nil_index.has_value() && base_rep.mod_j.quotient_boolean;
    const bool lhs = truth(rep.unc);
    if (lhs == rhs) return ok();
    return fail("units-nil-clean(M_n)=" + std::to_string(lhs) +
                " but (J(base) nil and base/J Boolean)=" + std::to_string(rhs));
}

const char* kEx34Expr = "SUB(M(3,Z(2));[[0,0,1],[1,0,0],[0,1,0]])";

CheckOutcome check_ex34(Impl& eng, Ctx& ctx) {
    const FiniteRing& S = ctx.ring;
    auto& ambient = eng.context("M(3,Z(2))");
    const FiniteRing& M = ambient.ring;
    const Elem u = parse_element(M, "[[0,0,1],[1,0,0],[0,1,0]]");
    const Elem u2 = M.mul(u, u);
    const Elem one = M.one();
    std::vector<std::uint32_t> expected = {
        M.zero_i(),          one.index,
        u.index,             u2.index,
        M.add(one, u).index, M.add(one, u2).index,
        M.add(u, u2).index,  M.add(one, M.add(u, u2)).index};
    std::sort(expected.begin(), expected.end());
    const auto* sc = dynamic_cast<const SubsetCarrier*>(&S.carrier());
    if (!sc) return fail("corpus entry is not a subring view");
    if (sc->member_parent_indices() != expected)
        return fail("generated subring does not match the 8 listed elements");
    const auto& rep = eng.flags(ctx);
    if (!truth(rep.reduced)) return fail("generated subring is not reduced");
    const Elem u_local = S.element(*sc->local_of_parent(u.index));
    if (!nil_clean_witnesses(S, u_local, 1).empty())
        return fail("the 3-cycle generator is nil-clean inside the subring");
    if (truth(rep.unc)) return fail("subring classified units-nil-clean; it must not be");
    if (!truth(eng.flags(ambient).unc))
        return fail("ambient M(3,Z(2)) must classify units-nil-clean");
    return ok();
}

CheckOutcome check_ex224(Impl& eng, Ctx& ctx) {
    (void)eng;
    const FiniteRing& R = ctx.ring;
    const Elem a = parse_element(R, "[[0,1,1],[0,0,1],[0,0,0]]");
    const Elem b = parse_element(R, "[[0,0,0],[1,0,0],[1,1,0]]");
    const Elem e = R.add(a, b);
    const auto& nil = R.nilpotents();
    if (!nil.contains(a.index) || !nil.contains(b.index))
        return fail("A or its transpose is not nilpotent");
    if (R.mul(e, e) != e || e == R.zero()) return fail("A + A^T is not a nonzero idempotent");
    const Elem unit = R.sub(R.one(), a);
    const Elem ie = R.sub(R.one(), e);
    if (R.mul(ie, ie) != ie) return fail("I - E is not idempotent");
    if (!(R.add(ie, b) == unit)) return fail("I - A != (I - E) + A^T");
    if (!nil.contains(R.sub(unit, R.one()).index)) return fail("I - A is not unipotent");
    const auto witnesses = nil_clean_witnesses(R, unit, R.idempotent_indices().size());
    if (witnesses.size() < 2)
        return fail("I - A has fewer than 2 nil-clean witnesses (" +
                    std::to_string(witnesses.size()) + ")");
    const bool has_ie = std::any_of(witnesses.begin(), witnesses.end(),
                                    [&](const NilCleanWitness& w) { return w.idempotent == ie; });
    if (!has_ie) return fail("no witness uses the idempotent I - (A + A^T)");
    return ok();
}

CheckOutcome check_t223(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const FiniteRing& R = ctx.ring;
    const bool lhs = truth(rep.uu);
    const auto& nil = R.nilpotents();
    bool all_unique = true;
    std::uint32_t violator = 0;
    std::size_t violator_count = 0;
    for (std::uint32_t u : R.units().indices()) {
        std::size_t count = 0;
        for (std::uint32_t e : R.idempotent_indices()) {
            if (nil.contains(R.sub_i(u, e)) && ++count > 1) break;
        }
        if (count != 1) {
            all_unique = false;
            violator = u;
            violator_count = count;
            break;
        }
    }
    if (lhs == all_unique) return ok();
    if (!all_unique)
        return fail("unit " + elem_text(R, violator) + " has " + std::to_string(violator_count) +
                    " nil-clean idempotents while unit-unipotent=" + std::to_string(lhs));
    return fail("every unit is uniquely nil-clean but unit-unipotent=false");
}

CheckOutcome check_t225(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const bool lhs = truth(rep.strongly_nil_clean);
    const bool rhs = truth(rep.semipotent) && truth(rep.uu);
    if (lhs == rhs) return ok();
    return fail("strongly-nil-clean=" + std::to_string(lhs) + " but semipotent-and-UU=" +
                std::to_string(rhs));
}

CheckOutcome check_c226(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const bool lhs = truth(rep.semipotent) && truth(rep.u_eq_1);
    const bool rhs = truth(rep.boolean_ring);
    if (lhs == rhs) return ok();
    return fail("semipotent-with-U={1}=" + std::to_string(lhs) + " but Boolean=" +
                std::to_string(rhs));
}

CheckOutcome check_l32(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const bool lhs = truth(rep.strong_unii);
    bool rhs = eng.parts_within_23(ctx);
    if (rhs) {
        for (const auto& part : eng.torsion_parts(ctx)) {
            const FiniteRing& A = part.ring;
            const Elem p_elem = A.from_integer(part.prime);
            const bool p_nil = A.nilpotents().contains(p_elem.index);
            const bool p_in_j = detail::jacobson_data(A).set.mask[p_elem.index];
            rhs = rhs && truth(part.report.strong_unii) && p_nil && p_in_j;
            if (!rhs) break;
        }
    }
    if (lhs == rhs) return ok();
    return fail("strong-UNII=" + std::to_string(lhs) + " but 2/3-torsion split condition=" +
                std::to_string(rhs));
}

bool two_nilpotent(Impl&, Ctx& ctx) {
    if (ctx.ring.is_zero_ring()) return false;
    return ctx.ring.nilpotents().contains(ctx.ring.from_integer(2).index);
}

bool three_nilpotent(Impl&, Ctx& ctx) {
    if (ctx.ring.is_zero_ring()) return false;
    return ctx.ring.nilpotents().contains(ctx.ring.from_integer(3).index);
}

CheckOutcome check_l33(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const bool s1 = truth(rep.strong_unii);
    const auto bad_unit = unit_lacking_tripotent_decomp(ctx.ring);
    const bool s2 = !bad_unit.has_value();
    const bool s3 = truth(rep.uu);
    if (s1 == s2 && s2 == s3) return ok();
    return fail("legs disagree: strong-UNII=" + std::to_string(s1) +
                ", nilpotent-plus-tripotent=" + std::to_string(s2) + ", unit-unipotent=" +
                std::to_string(s3) +
                (bad_unit ? "; unit " + elem_text(ctx.ring, *bad_unit) : ""));
}

CheckOutcome check_l34(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const bool s1 = truth(rep.strong_unii);
    const bool s2 = !unit_lacking_tripotent_decomp(ctx.ring).has_value();
    const auto bad = unit_with_one_minus_square_not_nil(ctx.ring);
    const bool s3 = !bad.has_value();
    if (s1 == s2 && s2 == s3) return ok();
    return fail("legs disagree: strong-UNII=" + std::to_string(s1) +
                ", nilpotent-plus-tripotent=" + std::to_string(s2) + ", 1-u^2 nilpotent=" +
                std::to_string(s3) + (bad ? "; unit " + elem_text(ctx.ring, *bad) : ""));
}

CheckOutcome check_t35(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const FiniteRing& R = ctx.ring;
    const bool s1 = truth(rep.strong_unii);
    const auto bad = unit_with_one_minus_square_not_nil(R);
    const bool six_nil = R.nilpotents().contains(R.from_integer(6).index);
    const bool s2 = !bad.has_value() && six_nil;
    if (s1 == s2) return ok();
    return fail("strong-UNII=" + std::to_string(s1) + " but (1-u^2 always nilpotent and 6 nilpotent)=" +
                std::to_string(s2) + (bad ? "; unit " + elem_text(R, *bad) : ""));
}

CheckOutcome check_t36(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const bool lhs = truth(rep.semipotent) && truth(rep.strong_unii);
    bool rhs = eng.parts_within_23(ctx);
    if (rhs) {
        for (const auto& part : eng.torsion_parts(ctx)) {
            const bool j_nil = part.report.j_nil_index.has_value();
            if (part.prime == 2)
                rhs = rhs && j_nil && part.profile.quotient_boolean;
            else
                rhs = rhs && j_nil && part.profile.subdirect_z3;
            if (!rhs) break;
        }
    }
    if (lhs == rhs) return ok();
    return fail("semipotent-strong-UNII=" + std::to_string(lhs) +
                " but (2-part Boolean mod J, 3-part x^3=x mod J)=" + std::to_string(rhs));
}

CheckOutcome check_t312(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const bool lhs = truth(rep.strong_uii);
    bool rhs = truth(rep.u_eq_1) || truth(rep.u_eq_1_plus_idem);
    if (!rhs) {
        const auto* a = eng.part_for_prime(ctx, 2);
        const auto* b = eng.part_for_prime(ctx, 3);
        if (a && b && eng.parts_within_23(ctx) && eng.torsion_parts(ctx).size() == 2)
            rhs = truth(a->report.u_eq_1) && truth(b->report.u_eq_1_plus_idem);
    }
    if (lhs == rhs) return ok();
    return fail("strong-UII=" + std::to_string(lhs) + " but characterization=" +
                std::to_string(rhs));
}

CheckOutcome check_l310(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const bool lhs = truth(rep.strong_uii);
    const bool rhs = truth(rep.u_eq_1);
    if (lhs == rhs) return ok();
    return fail("characteristic 2: strong-UII=" + std::to_string(lhs) + " but U={1}=" +
                std::to_string(rhs));
}

CheckOutcome check_l311(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    const bool lhs = truth(rep.strong_uii);
    const bool rhs = truth(rep.u_eq_1_plus_idem);
    if (lhs == rhs) return ok();
    return fail("characteristic 3: strong-UII=" + std::to_string(lhs) + " but U=1+idem=" +
                std::to_string(rhs));
}

CheckOutcome check_c313(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    if (!truth(rep.strong_uii)) return ok();
    if (rep.j_card == 1 && truth(rep.reduced)) return ok();
    return fail("strong-UII ring with |J|=" + std::to_string(rep.j_card) + ", reduced=" +
                std::to_string(rep.reduced.truthy()));
}

bool group_ring_desc(Impl&, Ctx& ctx) {
    return ctx.desc->kind == RingDescriptor::Kind::group_ring;
}

bool nontrivial_group_ring(Impl& eng, Ctx& ctx) {
    return group_ring_desc(eng, ctx) && group_ring_group(ctx.ring).order() >= 2;
}

bool nilpotent_group_ring(Impl& eng, Ctx& ctx) {
    return group_ring_desc(eng, ctx) && is_nilpotent_group(group_ring_group(ctx.ring));
}

CheckOutcome check_p315(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    auto& base = eng.context(render(*ctx.desc->args[0]));
    const FiniteGroup g = group_ring_group(ctx.ring);
    const bool rhs = truth(eng.flags(base).u_eq_1_plus_idem) && exponent(g) == 2;
    const bool lhs = truth(rep.strong_uii);
    if (lhs == rhs) return ok();
    return fail("strong-UII(RG)=" + std::to_string(lhs) +
                " but (U(R)=1+idem and exponent-2 G)=" + std::to_string(rhs));
}

CheckOutcome check_t43(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    auto& base = eng.context(render(*ctx.desc->args[0]));
    const FiniteGroup g = group_ring_group(ctx.ring);
    const bool rhs = truth(eng.flags(base).unc) && is_p_group(g, 2);
    const bool lhs = truth(rep.unc);
    if (lhs == rhs) return ok();
    return fail("units-nil-clean(RG)=" + std::to_string(lhs) +
                " but (units-nil-clean(R) and 2-group G)=" + std::to_string(rhs));
}

CheckOutcome check_t44(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    auto& base = eng.context(render(*ctx.desc->args[0]));
    const FiniteGroup g = group_ring_group(ctx.ring);
    const bool rhs = truth(eng.flags(base).uu) && is_p_group(g, 2);
    const bool lhs = truth(rep.uu);
    if (lhs == rhs) return ok();
    return fail("unit-unipotent(RG)=" + std::to_string(lhs) +
                " but (unit-unipotent(R) and 2-group G)=" + std::to_string(rhs));
}

CheckOutcome check_t42(Impl& eng, Ctx& ctx) {
    const auto& rep = eng.flags(ctx);
    if (!truth(rep.unc)) return ok();
    const FiniteGroup g = group_ring_group(ctx.ring);
    if (is_p_elements(g, hypercenter(g), 2)) return ok();
    return fail("units are nil-clean but the hypercenter is not a 2-group");
}

const std::vector<RegEntry>& registry_impl() {
    static const std::vector<RegEntry> registry = {
        {"L2.4", "if every unit is nil-clean then J(R) is nil and 2 lies in J(R)",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_l24},
        {"P2.2", "a unit is strongly nil-clean iff it is unipotent",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_p22},
        {"T2.5", "for each sampled nil ideal I: units nil-clean in R iff in R/I",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_t25},
        {"C2.6",
         "triangular rings, truncated polynomials, trivial extensions and the formal triangular "
         "ring preserve the units-nil-clean property of their bases",
         [](Impl&, Ctx& c) {
             using K = RingDescriptor::Kind;
             switch (c.desc->kind) {
                 case K::trivial_extension:
                 case K::truncated_poly:
                 case K::triangular:
                 case K::block_triangular:
                 case K::ex27: return nontrivial(c);
                 default: return false;
             }
         },
         check_c26},
        {"L2.8", "a - a^2 is nilpotent iff a has a commuting nil-clean decomposition",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_l28},
        {"C2.9",
         "nil-clean rings have strongly nil-clean centers; rings with nil-clean units have "
         "unit-unipotent centers",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_c29},
        {"C2.10",
         "with 2 in J(R): a is strongly nil-clean iff a = e + b with e idempotent, b nilpotent "
         "and eb = ebe",
         two_in_j, check_c210},
        {"T2.11",
         "on 2-primal rings: unit-unipotent iff units nil-clean iff (J = Nil and U = 1 + J)",
         two_primal_ring, check_t211},
        {"T2.14",
         "units nil-clean iff nil-clean iff J nil and R/J semisimple with Boolean center",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_t214},
        {"L3.1", "det(x E_ij + A) = x cof_ij(A) + det(A) over commutative bases", det_base,
         check_l31},
        {"T3.2",
         "M_n(R) for n >= 2 and commutative R has nil-clean units iff J(R) is nil and R/J(R) is "
         "Boolean",
         matrix_over_commutative, check_t32},
        {"EX3.4",
         "the subring of M_3(Z2) generated by the 3-cycle has exactly 8 elements, is reduced, its "
         "generator is not nil-clean, and the subring is not units-nil-clean while M_3(Z2) is",
         [](Impl&, Ctx& c) { return c.expr == kEx34Expr; }, check_ex34},
        {"EX2.24",
         "in M_3(Z2) the unipotent I - A admits at least two nil-clean decompositions, one with "
         "idempotent I - (A + A^T)",
         [](Impl&, Ctx& c) { return c.expr == "M(3,Z(2))"; }, check_ex224},
        {"T2.23", "unit-unipotent iff every unit is uniquely nil-clean",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_t223},
        {"T2.25", "strongly nil-clean iff semipotent with unipotent units",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_t225},
        {"C2.26", "semipotent with U = {1} iff Boolean",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_c226},
        {"L3.2",
         "strong-UNII iff the 2- and 3-torsion parts are strong-UNII with 2 in J(A) and 3 in "
         "J(B) nilpotent",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_l32},
        {"L3.3",
         "with 2 nilpotent: strong-UNII iff every unit is a commuting nilpotent-plus-tripotent "
         "iff unit-unipotent",
         two_nilpotent, check_l33},
        {"L3.4",
         "with 3 nilpotent: strong-UNII iff every unit is a commuting nilpotent-plus-tripotent "
         "iff 1 - u^2 is nilpotent for every unit",
         three_nilpotent, check_l34},
        {"T3.5", "strong-UNII iff 1 - u^2 is nilpotent for every unit and 6 is nilpotent",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_t35},
        {"T3.6",
         "semipotent strong-UNII iff the 2-part is Boolean mod its nil radical and the 3-part "
         "satisfies x^3 = x mod its nil radical",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_t36},
        {"T3.12", "strong-UII iff U = {1}, or U = 1 + idem, or R splits into parts realizing each",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_t312},
        {"L3.10", "characteristic 2: strong-UII iff U = {1}",
         [](Impl&, Ctx& c) { return nontrivial(c) && c.ring.characteristic() == 2; }, check_l310},
        {"L3.11", "characteristic 3: strong-UII iff U = 1 + idem",
         [](Impl&, Ctx& c) { return nontrivial(c) && c.ring.characteristic() == 3; }, check_l311},
        {"C3.13", "strong-UII implies J = 0 and no nonzero nilpotents",
         [](Impl&, Ctx& c) { return nontrivial(c); }, check_c313},
        {"P3.15",
         "for nontrivial G: R[G] is strong-UII iff U(R) = 1 + idem(R) and G has exponent 2",
         nontrivial_group_ring, check_p315},
        {"T4.3", "for nilpotent G: R[G] has nil-clean units iff R does and G is a 2-group",
         nilpotent_group_ring, check_t43},
        {"T4.4", "R[G] is unit-unipotent iff R is and G is a 2-group", group_ring_desc, check_t44},
        {"T4.2", "if R[G] has nil-clean units then the hypercenter of G is a 2-group",
         group_ring_desc, check_t42},
    };
    return registry;
}

}  // namespace

const std::vector<TheoremInfo>& theorem_registry() {
    static const std::vector<TheoremInfo> infos = [] {
        std::vector<TheoremInfo> out;
        for (const auto& entry : registry_impl()) out.push_back({entry.id, entry.statement});
        return out;
    }();
    return infos;
}

bool is_known_theorem(const std::string& id) {
    for (const auto& entry : registry_impl())
        if (id == entry.id) return true;
    return false;
}

VerifyEngine::VerifyEngine() : VerifyEngine(Options{}) {}
VerifyEngine::VerifyEngine(Options opts) : impl_(std::make_unique<Impl>(std::move(opts))) {}
VerifyEngine::~VerifyEngine() = default;

namespace {

TheoremVerdict run_entry(Impl& impl, const RegEntry& entry, Impl::Ctx& ctx) {
    TheoremVerdict verdict;
    verdict.theorem_id = entry.id;
    verdict.ring = ctx.expr;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const CheckOutcome outcome = entry.run(impl, ctx);
        verdict.pass = outcome.pass;
        verdict.counterexample = outcome.counterexample;
    } catch (const TheoremSkip& skip) {
        verdict.skipped = true;
        verdict.skip_reason = skip.reason;
    } catch (const limit_error& err) {
        verdict.skipped = true;
        verdict.skip_reason = err.what();
    }
    verdict.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return verdict;
}

}  // namespace

std::vector<TheoremVerdict> VerifyEngine::verify(const std::string& theorem_id,
                                                 const Corpus& corpus) {
    const RegEntry* entry = nullptr;
    for (const auto& candidate : registry_impl())
        if (theorem_id == candidate.id) {
            entry = &candidate;
            break;
        }
    if (!entry) throw domain_error("unknown theorem id " + theorem_id);

    std::vector<TheoremVerdict> verdicts;
    for (const auto& corpus_entry : corpus.entries) {
        auto& ctx = impl_->context(corpus_entry.expr);
        if (!entry->applicable(*impl_, ctx)) continue;
        verdicts.push_back(run_entry(*impl_, *entry, ctx));
    }
    return verdicts;
}

VerifySummary VerifyEngine::verify_all(const Corpus& corpus) {
    VerifySummary summary;
    for (const auto& info : theorem_registry()) {
        auto verdicts = verify(info.id, corpus);
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
    return summary;
}

}  // namespace ringlab
