#include <algorithm>
#include <numeric>

#include "internal.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/subset_carriers.hpp"

namespace ringlab {

namespace {

constexpr std::uint32_t npos = 0xffffffffu;

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<bool> mask_of(const std::vector<std::uint32_t>& members, std::size_t n) {
    std::vector<bool> m(n, false);
    for (auto i : members) m[i] = true;
    return m;
}

// Minimal k with I^k = {0}, where I^{k+1} is the additive span of I^k * I.
// Ideal powers form a descending chain, so the loop stops at {0} or at the
// first repeat; the cap only guards against misuse with a non-ideal.
std::optional<unsigned> power_nil_index(const FiniteRing& R,
                                        const std::vector<std::uint32_t>& members) {
    const std::uint32_t z = R.zero_i();
    std::vector<std::uint32_t> current = members;  // I^1; sorted and additively closed
    for (unsigned k = 1; k <= R.cardinality() + 2; ++k) {
        if (current.size() == 1 && current[0] == z) return k;
        std::vector<std::uint32_t> products{z};
        for (auto x : current)
            for (auto y : members) products.push_back(R.mul_i(x, y));
        auto next = detail::additive_closure(R, sorted_unique(std::move(products)));
        if (next == current) return std::nullopt;  // stabilized above zero
        current = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

namespace detail {

std::vector<std::uint32_t> additive_closure(const FiniteRing& R,
                                            const std::vector<std::uint32_t>& start) {
    const std::size_t n = R.cardinality();
    std::vector<bool> in(n, false);
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> queue;
    auto push = [&](std::uint32_t x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            queue.push_back(x);
        }
    };
    push(R.zero_i());
    for (auto x : start) push(x);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::uint32_t x = queue[qi];
        push(R.neg_i(x));
        for (std::size_t mi = 0; mi < members.size(); ++mi) push(R.add_i(x, members[mi]));
    }
    std::sort(members.begin(), members.end());
    return members;
}

const IndexSet& center_set(const FiniteRing& R) {
    return R.state_ptr()->center_members.get([&] {
        const std::size_t n = R.cardinality();
        IndexSet set;
        set.mask.assign(n, false);
        for (std::uint32_t a = 0; a < n; ++a) {
            bool central = true;
            for (std::uint32_t r = 0; r < n && central; ++r)
                central = R.mul_i(a, r) == R.mul_i(r, a);
            if (central) {
                set.indices.push_back(a);
                set.mask[a] = true;
            }
        }
        return set;
    });
}

const JacobsonData& jacobson_data(const FiniteRing& R) {
    return R.state_ptr()->jacobson.get([&] {
        const std::size_t n = R.cardinality();
        const auto& units = R.units();
        JacobsonData data;
        data.set.mask.assign(n, false);
        // Left quasi-regularity: a is in J(R) iff 1 - r a is a unit for all r.
        for (std::uint32_t a = 0; a < n; ++a) {
            bool in_radical = true;
            for (std::uint32_t r = 0; r < n && in_radical; ++r)
                in_radical = units.contains(R.sub_i(R.one_i(), R.mul_i(r, a)));
            if (in_radical) {
                data.set.indices.push_back(a);
                data.set.mask[a] = true;
            }
        }
        // The quasi-regularity criterion must have produced a two-sided
        // ideal; anything else is a carrier bug.
        for (auto x : data.set.indices) {
            if (!data.set.mask[R.neg_i(x)])
                throw axiom_error("radical is not closed under negation");
            for (auto y : data.set.indices)
                if (!data.set.mask[R.add_i(x, y)])
                    throw axiom_error("radical is not closed under addition");
            for (std::uint32_t r = 0; r < n; ++r)
                if (!data.set.mask[R.mul_i(r, x)] || !data.set.mask[R.mul_i(x, r)])
                    throw axiom_error("radical is not a two-sided ideal");
        }
        data.nil_index = power_nil_index(R, data.set.indices);
        if (!data.nil_index)
            throw axiom_error("radical of a finite ring failed to be nilpotent");
        return data;
    });
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Ideal / Subring

Ideal Ideal::checked(const FiniteRing& parent, std::vector<std::uint32_t> member_indices) {
    const std::size_t n = parent.cardinality();
    auto members = sorted_unique(std::move(member_indices));
    for (auto i : members)
        if (i >= n) throw domain_error("ideal member index out of range");
    auto mask = mask_of(members, n);
    if (!mask[parent.zero_i()]) throw domain_error("ideal must contain zero");
    for (auto x : members) {
        if (!mask[parent.neg_i(x)]) throw domain_error("ideal is not closed under negation");
        for (auto y : members)
            if (!mask[parent.add_i(x, y)]) throw domain_error("ideal is not closed under addition");
        for (std::uint32_t r = 0; r < n; ++r)
            if (!mask[parent.mul_i(r, x)] || !mask[parent.mul_i(x, r)])
                throw domain_error("ideal is not closed under ring multiplication");
    }
    auto data = std::make_shared<Data>();
    data->set.indices = std::move(members);
    data->set.mask = std::move(mask);
    return Ideal(parent, std::move(data));
}

Ideal Ideal::trusted(const FiniteRing& parent, detail::IndexSet set) {
    auto data = std::make_shared<Data>();
    data->set = std::move(set);
    return Ideal(parent, std::move(data));
}

std::vector<Elem> Ideal::members() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (auto i : member_indices()) out.push_back(parent_.wrap(i));
    return out;
}

Subring Subring::checked(const FiniteRing& parent, std::vector<std::uint32_t> member_indices) {
    const std::size_t n = parent.cardinality();
    auto members = sorted_unique(std::move(member_indices));
    for (auto i : members)
        if (i >= n) throw domain_error("subring member index out of range");
    auto mask = mask_of(members, n);
    if (!mask[parent.zero_i()] || !mask[parent.one_i()])
        throw domain_error("subring must contain 0 and 1");
    for (auto x : members) {
        if (!mask[parent.neg_i(x)]) throw domain_error("subring is not closed under negation");
        for (auto y : members)
            if (!mask[parent.add_i(x, y)] || !mask[parent.mul_i(x, y)])
                throw domain_error("subring is not closed under ring operations");
    }
    auto data = std::make_shared<Data>();
    data->set.indices = std::move(members);
    data->set.mask = std::move(mask);
    return Subring(parent, std::move(data));
}

const FiniteRing& Subring::view() const {
    return data_->view.get([&] {
        auto carrier = std::make_unique<SubsetCarrier>(parent_, data_->set.indices,
                                                       parent_.zero_i(), parent_.one_i());
        const std::string label =
            "SUB#" + std::to_string(data_->set.indices.size()) + "(" + parent_.label() + ")";
        return FiniteRing::seal(std::move(carrier), label, parent_.build_options());
    });
}

Elem Subring::to_parent(Elem view_elem) const {
    const FiniteRing& v = view();
    if (!v.owns(view_elem)) throw domain_error("element does not belong to this subring view");
    return parent_.wrap(data_->set.indices[view_elem.index]);
}

std::optional<Elem> Subring::from_parent(Elem parent_elem) const {
    if (!parent_.owns(parent_elem)) throw domain_error("element does not belong to this ring");
    if (!data_->set.mask[parent_elem.index]) return std::nullopt;
    const auto& m = data_->set.indices;
    const auto it = std::lower_bound(m.begin(), m.end(), parent_elem.index);
    return view().element(static_cast<std::size_t>(it - m.begin()));
}

Subring FiniteRing::center() const {
    const auto& set = detail::center_set(*this);
    return Subring::checked(*this, set.indices);
}

Ideal FiniteRing::jacobson_radical() const {
    const auto& data = detail::jacobson_data(*this);
    return Ideal::trusted(*this, data.set);
}

// ---------------------------------------------------------------------------
// SubsetCarrier / QuotientCarrier

SubsetCarrier::SubsetCarrier(FiniteRing parent, std::vector<std::uint32_t> members_sorted,
                             std::uint32_t zero_parent, std::uint32_t one_parent)
    : parent_(std::move(parent)), members_(std::move(members_sorted)) {
    rank_.assign(parent_.cardinality(), npos);
    for (std::uint32_t i = 0; i < members_.size(); ++i) rank_[members_[i]] = i;
    if (rank_[zero_parent] == npos || rank_[one_parent] == npos)
        throw domain_error("designated zero/one lies outside the subset");
    zero_local_ = rank_[zero_parent];
    one_local_ = rank_[one_parent];
}

QuotientCarrier::QuotientCarrier(FiniteRing parent, const Ideal& ideal)
    : parent_(std::move(parent)) {
    const std::size_t n = parent_.cardinality();
    coset_rep_.assign(n, npos);
    // Ascending scan makes each first-seen element the minimal member of its
    // additive coset.
    for (std::uint32_t a = 0; a < n; ++a) {
        if (coset_rep_[a] != npos) continue;
        reps_.push_back(a);
        for (auto i : ideal.member_indices()) {
            const std::uint32_t x = parent_.add_i(a, i);
            if (coset_rep_[x] != npos && coset_rep_[x] != a)
                throw axiom_error("ideal cosets do not partition the ring");
            coset_rep_[x] = a;
        }
    }
    if (reps_.size() * ideal.size() != n)
        throw axiom_error("|R| != |I| * |R/I| for the computed cosets");
    rank_.assign(n, npos);
    for (std::uint32_t i = 0; i < reps_.size(); ++i) rank_[reps_[i]] = i;
    zero_local_ = rank_[coset_rep_[parent_.zero_i()]];
    one_local_ = rank_[coset_rep_[parent_.one_i()]];
}

// ---------------------------------------------------------------------------
// Operations

Ideal ideal_generated(const FiniteRing& R, std::span<const Elem> gens) {
    const std::size_t n = R.cardinality();
    std::vector<bool> in(n, false);
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> queue;
    auto push = [&](std::uint32_t x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            queue.push_back(x);
        }
    };
    push(R.zero_i());
    for (const Elem& g : gens) {
        if (!R.owns(g)) throw domain_error("generator does not belong to this ring");
        push(g.index);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::uint32_t x = queue[qi];
        push(R.neg_i(x));
        for (std::uint32_t r = 0; r < n; ++r) {
            push(R.mul_i(r, x));
            push(R.mul_i(x, r));
        }
        for (std::size_t mi = 0; mi < members.size(); ++mi) push(R.add_i(x, members[mi]));
    }
    std::sort(members.begin(), members.end());
    detail::IndexSet set;
    set.mask = mask_of(members, n);
    set.indices = std::move(members);
    return Ideal::trusted(R, std::move(set));
}

NilIdealReport ideal_nil_index(const FiniteRing& R, const Ideal& ideal) {
    if (!R.same_ring(ideal.parent())) throw domain_error("ideal belongs to a different ring");
    NilIdealReport report;
    const auto& nil = R.nilpotents();
    report.nil = std::all_of(ideal.member_indices().begin(), ideal.member_indices().end(),
                             [&](std::uint32_t i) { return nil.contains(i); });
    report.nilpotency_index = power_nil_index(R, ideal.member_indices());
    // Finite rings: nil and nilpotent ideals coincide.
    if (report.nil != report.nilpotency_index.has_value())
        throw axiom_error("nil/nilpotent disagreement for an ideal of a finite ring");
    return report;
}

QuotientMap quotient(const FiniteRing& R, const Ideal& ideal) {
    if (!R.same_ring(ideal.parent())) throw domain_error("ideal belongs to a different ring");
    if (ideal.size() == 1) {
        // Quotient by {0} is the ring itself (identity relabeling).
        std::vector<std::uint32_t> proj(R.cardinality());
        std::iota(proj.begin(), proj.end(), 0u);
        return QuotientMap{R, R, std::move(proj)};
    }
    auto carrier = std::make_unique<QuotientCarrier>(R, ideal);
    const QuotientCarrier* raw = carrier.get();
    const std::string label =
        R.label() + "/(#" + std::to_string(ideal.size()) + ")";
    FiniteRing q = FiniteRing::seal(std::move(carrier), label, R.build_options());
    std::vector<std::uint32_t> proj(R.cardinality());
    for (std::uint32_t a = 0; a < R.cardinality(); ++a) proj[a] = raw->project_parent(a);
    return QuotientMap{R, std::move(q), std::move(proj)};
}

Subring subring_generated(const FiniteRing& R, std::span<const Elem> gens) {
    const std::size_t n = R.cardinality();
    std::vector<bool> in(n, false);
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> queue;
    auto push = [&](std::uint32_t x) {
        if (!in[x]) {
            in[x] = true;
            members.push_back(x);
            queue.push_back(x);
        }
    };
    push(R.zero_i());
    push(R.one_i());
    for (const Elem& g : gens) {
        if (!R.owns(g)) throw domain_error("generator does not belong to this ring");
        push(g.index);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::uint32_t x = queue[qi];
        push(R.neg_i(x));
        for (std::size_t mi = 0; mi < members.size(); ++mi) {
            const std::uint32_t y = members[mi];
            push(R.add_i(x, y));
            push(R.mul_i(x, y));
            push(R.mul_i(y, x));
        }
    }
    return Subring::checked(R, std::move(members));
}

SemipotenceReport is_semipotent(const FiniteRing& R) {
    SemipotenceReport report;
    if (R.is_zero_ring()) {
        report.degenerate = true;
        return report;
    }
    const auto& data = R.state_ptr()->semipotence.get([&] {
        const std::size_t n = R.cardinality();
        const auto& jac = detail::jacobson_data(R).set;
        const auto& idem_mask = detail::idempotent_set(R).mask;
        detail::SemipotenceData out;
        for (std::uint32_t a = 0; a < n; ++a) {
            if (jac.mask[a]) continue;
            bool found = false;
            for (std::uint32_t r = 0; r < n && !found; ++r) {
                const std::uint32_t x = R.mul_i(a, r);
                found = x != R.zero_i() && idem_mask[x];
            }
            if (!found) {
                out.semipotent = false;
                out.violator = a;
                return out;
            }
        }
        return out;
    });
    report.semipotent = data.semipotent;
    if (data.violator) report.violator = R.wrap(*data.violator);
    return report;
}

namespace {

FiniteRing corner_ring(const FiniteRing& R, std::uint32_t e, std::vector<std::uint32_t>* proj) {
    const std::size_t n = R.cardinality();
    std::vector<std::uint32_t> members;
    members.reserve(n);
    for (std::uint32_t r = 0; r < n; ++r) members.push_back(R.mul_i(R.mul_i(e, r), e));
    members = sorted_unique(std::move(members));
    auto carrier = std::make_unique<SubsetCarrier>(R, members, R.zero_i(), e);
    const SubsetCarrier* raw = carrier.get();
    const std::string label =
        "CORNER#" + std::to_string(e) + "(" + R.label() + ")";
    FiniteRing part = FiniteRing::seal(std::move(carrier), label, R.build_options());
    if (proj) {
        proj->assign(n, 0);
        for (std::uint32_t r = 0; r < n; ++r)
            (*proj)[r] = *raw->local_of_parent(R.mul_i(R.mul_i(e, r), e));
    }
    return part;
}

}  // namespace

CentralSplit central_idempotent_split(const FiniteRing& R, Elem e) {
    if (!R.owns(e)) throw domain_error("element does not belong to this ring");
    if (R.mul_i(e.index, e.index) != e.index) throw domain_error("e is not idempotent");
    for (std::uint32_t r = 0; r < R.cardinality(); ++r)
        if (R.mul_i(e.index, r) != R.mul_i(r, e.index))
            throw domain_error("e is not central");
    if (e.index == R.zero_i() || e.index == R.one_i())
        throw domain_error("e must be a nontrivial idempotent");

    const std::uint32_t f = R.sub_i(R.one_i(), e.index);
    CentralSplit split;
    split.idempotent = e;
    split.complement = R.wrap(f);
    split.first = corner_ring(R, e.index, &split.first_projection);
    split.second = corner_ring(R, f, &split.second_projection);
    if (split.first.cardinality() * split.second.cardinality() != R.cardinality())
        throw axiom_error("central split cardinalities do not multiply to |R|");
    return split;
}

std::vector<TorsionFactor> torsion_split(const FiniteRing& R) {
    std::vector<TorsionFactor> factors;
    std::size_t ch = R.characteristic();
    if (ch == 1) return factors;  // zero ring

    std::vector<std::pair<unsigned, std::size_t>> prime_powers;  // (p, p^a)
    std::size_t rest = ch;
    for (std::size_t p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        std::size_t q = 1;
        while (rest % p == 0) {
            rest /= p;
            q *= p;
        }
        prime_powers.emplace_back(static_cast<unsigned>(p), q);
    }
    if (rest > 1) prime_powers.emplace_back(static_cast<unsigned>(rest), rest);

    if (prime_powers.size() == 1) {
        std::vector<std::uint32_t> proj(R.cardinality());
        std::iota(proj.begin(), proj.end(), 0u);
        factors.push_back(TorsionFactor{prime_powers[0].first, R, R.one(), std::move(proj)});
        return factors;
    }

    for (const auto& [p, q] : prime_powers) {
        const std::size_t m = ch / q;  // coprime complement
        // e_p = c*m*1 with c*m = 1 mod q; the CRT idempotent for this factor.
        std::size_t c = 1;
        while ((c * m) % q != 1) ++c;
        const Elem e = R.from_integer(static_cast<std::int64_t>((c * m) % ch));
        if (R.mul_i(e.index, e.index) != e.index)
            throw axiom_error("torsion split produced a non-idempotent");
        TorsionFactor factor;
        factor.prime = p;
        factor.idempotent = e;
        factor.ring = corner_ring(R, e.index, &factor.projection);
        factors.push_back(std::move(factor));
    }

    std::size_t product = 1;
    for (const auto& f : factors) product *= f.ring.cardinality();
    if (product != R.cardinality())
        throw axiom_error("torsion factors do not reassemble to |R|");
    return factors;
}

}  // namespace ringlab
