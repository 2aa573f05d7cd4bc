#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/detail/lazy.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

class FiniteRing;
class Ideal;
class Subring;

namespace detail {
struct RingState;
}

/// Handle to an element of a sealed FiniteRing. Handles are canonical: two
/// handles compare equal iff they denote the same element of the same ring.
/// Arithmetic on an element with a foreign parent is a domain_error.
struct Elem {
    const detail::RingState* parent = nullptr;
    std::uint32_t index = 0;

    bool operator==(const Elem&) const = default;
};

/// Defines a finite unital ring on the index set 0..size()-1. Concrete
/// carriers fix the canonical element form (and therefore the element
/// order); everything above them works with indices only.
class Carrier {
public:
    virtual ~Carrier() = default;

    virtual std::size_t size() const = 0;
    virtual std::uint32_t zero() const = 0;
    virtual std::uint32_t one() const = 0;
    virtual std::uint32_t add(std::uint32_t a, std::uint32_t b) const = 0;
    virtual std::uint32_t neg(std::uint32_t a) const = 0;
    virtual std::uint32_t mul(std::uint32_t a, std::uint32_t b) const = 0;

    /// Human-readable literal for an element, when the construction defines
    /// one (residues, matrix grids, group-ring sums). Universal "#k" form is
    /// always available and is not produced here.
    virtual std::optional<std::string> literal(std::uint32_t) const { return std::nullopt; }

    // Literal-encoding hooks. Return nullopt when the literal form is not
    // supported by this construction; throw domain_error when it is
    // supported but the payload is invalid for this ring.
    virtual std::optional<std::uint32_t> encode_integer(long long) const { return std::nullopt; }
    virtual std::optional<std::uint32_t> encode_matrix(
        const std::vector<std::vector<std::uint32_t>>&) const {
        return std::nullopt;
    }
    virtual std::optional<std::uint32_t> encode_group_sum(
        const std::vector<std::pair<std::uint32_t, unsigned>>&) const {
        return std::nullopt;
    }
    /// Base ring whose elements appear inside matrix/group-sum literals.
    virtual const FiniteRing* literal_base() const { return nullptr; }
    /// Parent ring for constructions whose literals are read in parent
    /// coordinates (subring views, quotients).
    virtual const FiniteRing* literal_parent() const { return nullptr; }
    /// Maps a parent element into this ring (subset membership or coset
    /// projection); nullopt when the element has no image.
    virtual std::optional<std::uint32_t> from_parent_index(std::uint32_t) const {
        return std::nullopt;
    }
};

struct BuildOptions {
    std::size_t tabulated_limit = 4096;    // full op tables at or below this size
    std::size_t structural_limit = 65536;  // hard cardinality cap
    bool force_structural = false;         // skip tables (backend-agreement tests)
    std::uint64_t seed = 0;                // sampled axiom checks
    std::size_t axiom_exhaustive_limit = 256;
    std::size_t axiom_sample_count = 100000;
};

/// Two-sided invertible elements with their (total) inverse map.
class UnitSet {
public:
    UnitSet() = default;
    UnitSet(std::vector<std::uint32_t> indices, std::vector<std::uint32_t> inverse,
            std::vector<bool> member)
        : indices_(std::move(indices)), inverse_(std::move(inverse)), member_(std::move(member)) {}

    const std::vector<std::uint32_t>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool contains(std::uint32_t i) const { return member_[i]; }
    std::uint32_t inverse(std::uint32_t i) const {
        if (!member_[i]) throw domain_error("inverse requested for a non-unit");
        return inverse_[i];
    }

private:
    std::vector<std::uint32_t> indices_;  // sorted
    std::vector<std::uint32_t> inverse_;  // total on units, undefined elsewhere
    std::vector<bool> member_;
};

/// Nilpotent elements mapped to their minimal nilpotency index.
class NilpotentMap {
public:
    NilpotentMap() = default;
    NilpotentMap(std::vector<std::pair<std::uint32_t, unsigned>> entries,
                 std::vector<unsigned> index_by_elem, std::vector<bool> member)
        : entries_(std::move(entries)),
          index_by_elem_(std::move(index_by_elem)),
          member_(std::move(member)) {}

    const std::vector<std::pair<std::uint32_t, unsigned>>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool contains(std::uint32_t i) const { return member_[i]; }
    std::optional<unsigned> index_of(std::uint32_t i) const {
        if (!member_[i]) return std::nullopt;
        return index_by_elem_[i];
    }

private:
    std::vector<std::pair<std::uint32_t, unsigned>> entries_;  // sorted by element index
    std::vector<unsigned> index_by_elem_;
    std::vector<bool> member_;
};

namespace detail {

struct IndexSet {
    std::vector<std::uint32_t> indices;  // sorted
    std::vector<bool> mask;
};

struct JacobsonData {
    IndexSet set;
    std::optional<unsigned> nil_index;  // minimal k with J^k = 0; finite rings always have one
};

struct SemipotenceData {
    bool semipotent = true;
    std::optional<std::uint32_t> violator;
};

struct RingState {
    std::unique_ptr<const Carrier> carrier;
    std::string label;
    std::size_t n = 0;
    std::uint32_t zero_idx = 0;
    std::uint32_t one_idx = 0;
    bool tabulated = false;
    BuildOptions opts;
    std::vector<std::uint16_t> add_tab;
    std::vector<std::uint16_t> mul_tab;
    std::vector<std::uint16_t> neg_tab;

    // Structure-set caches: plain data only, so no ownership cycles form
    // through cached ring handles. Computed at most once, then immutable.
    Lazy<std::size_t> characteristic;
    Lazy<UnitSet> units;
    Lazy<IndexSet> idempotents;
    Lazy<NilpotentMap> nilpotents;
    Lazy<std::vector<std::uint32_t>> tripotents;
    Lazy<IndexSet> center_members;
    Lazy<JacobsonData> jacobson;
    Lazy<SemipotenceData> semipotence;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return tabulated ? add_tab[a * n + b] : carrier->add(a, b);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return tabulated ? mul_tab[a * n + b] : carrier->mul(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const { return tabulated ? neg_tab[a] : carrier->neg(a); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
};

}  // namespace detail

/// A finite unital ring, sealed and immutable after construction.
///
/// Sealing verifies the ring axioms: exhaustively for cardinality <=
/// BuildOptions::axiom_exhaustive_limit, on seeded random triples above it.
/// Structure sets (units, idempotents, nilpotents, center, Jacobson radical)
/// are computed on first demand and cached write-once; concurrent first
/// access is safe.
class FiniteRing {
public:
    FiniteRing() = default;

    /// Wrap and verify a carrier. Throws limit_error when the carrier is
    /// larger than the configured limits and axiom_error when verification
    /// fails (a constructor bug).
    static FiniteRing seal(std::unique_ptr<const Carrier> carrier, std::string label,
                           const BuildOptions& opts = {});

    bool valid() const { return state_ != nullptr; }
    std::size_t cardinality() const { return state_->n; }
    bool is_zero_ring() const { return state_->n == 1; }
    const std::string& label() const { return state_->label; }
    bool tabulated() const { return state_->tabulated; }
    const BuildOptions& build_options() const { return state_->opts; }
    const Carrier& carrier() const { return *state_->carrier; }

    bool same_ring(const FiniteRing& other) const { return state_.get() == other.state_.get(); }
    bool owns(Elem a) const { return a.parent == state_.get(); }

    Elem element(std::size_t index) const {
        if (index >= state_->n) throw domain_error("element index out of range");
        return Elem{state_.get(), static_cast<std::uint32_t>(index)};
    }
    Elem zero() const { return Elem{state_.get(), state_->zero_idx}; }
    Elem one() const { return Elem{state_.get(), state_->one_idx}; }

    Elem add(Elem a, Elem b) const { return wrap(st().add(check(a), check(b))); }
    Elem sub(Elem a, Elem b) const { return wrap(st().sub(check(a), check(b))); }
    Elem neg(Elem a) const { return wrap(st().neg(check(a))); }
    Elem mul(Elem a, Elem b) const { return wrap(st().mul(check(a), check(b))); }
    Elem pow(Elem a, std::uint64_t k) const;

    /// k * 1 for any integer k (reduced modulo the characteristic).
    Elem from_integer(std::int64_t k) const;

    /// Additive order of 1.
    std::size_t characteristic() const;

    const UnitSet& units() const;
    const std::vector<std::uint32_t>& idempotent_indices() const;
    bool is_idempotent_index(std::uint32_t i) const;
    const NilpotentMap& nilpotents() const;
    /// Elements t with t^3 = t.
    const std::vector<std::uint32_t>& tripotent_indices() const;
    Subring center() const;
    Ideal jacobson_radical() const;
    /// Minimal k with J(R)^k = 0 (always present on finite rings).
    std::optional<unsigned> jacobson_nil_index() const;

    // Index-level ops for hot loops; no parent checks.
    std::uint32_t add_i(std::uint32_t a, std::uint32_t b) const { return st().add(a, b); }
    std::uint32_t sub_i(std::uint32_t a, std::uint32_t b) const { return st().sub(a, b); }
    std::uint32_t neg_i(std::uint32_t a) const { return st().neg(a); }
    std::uint32_t mul_i(std::uint32_t a, std::uint32_t b) const { return st().mul(a, b); }
    std::uint32_t zero_i() const { return state_->zero_idx; }
    std::uint32_t one_i() const { return state_->one_idx; }
    Elem wrap(std::uint32_t i) const { return Elem{state_.get(), i}; }

    const detail::RingState* state_ptr() const { return state_.get(); }

private:
    explicit FiniteRing(std::shared_ptr<detail::RingState> state) : state_(std::move(state)) {}

    detail::RingState& st() const { return *state_; }
    std::uint32_t check(Elem a) const {
        if (a.parent != state_.get())
            throw domain_error("element does not belong to this ring");
        return a.index;
    }

    std::shared_ptr<detail::RingState> state_;

    friend class Ideal;
    friend class Subring;
};

/// Two-sided ideal of a parent ring: contains zero, closed under addition,
/// negation, and multiplication by arbitrary ring elements on both sides.
/// Verified on construction.
class Ideal {
public:
    struct Data {
        detail::IndexSet set;
    };

    /// Verifies the closure invariants; throws domain_error on violation.
    static Ideal checked(const FiniteRing& parent, std::vector<std::uint32_t> member_indices);

    const FiniteRing& parent() const { return parent_; }
    std::size_t size() const { return data_->set.indices.size(); }
    const std::vector<std::uint32_t>& member_indices() const { return data_->set.indices; }
    bool contains_index(std::uint32_t i) const { return data_->set.mask[i]; }
    bool contains(Elem a) const {
        if (!parent_.owns(a)) throw domain_error("element does not belong to this ring");
        return data_->set.mask[a.index];
    }
    std::vector<Elem> members() const;

private:
    Ideal(FiniteRing parent, std::shared_ptr<const Data> data)
        : parent_(std::move(parent)), data_(std::move(data)) {}

    // Trusted path for already-verified member sets (cached radical).
    static Ideal trusted(const FiniteRing& parent, detail::IndexSet set);

    FiniteRing parent_;
    std::shared_ptr<const Data> data_;

    friend class FiniteRing;
    friend Ideal ideal_generated(const FiniteRing&, std::span<const Elem>);
};

/// Unital subring of a parent ring (contains 0 and 1, closed under +, -, x),
/// with an induced FiniteRing view built on first use.
class Subring {
public:
    /// Verifies the closure invariants; throws domain_error on violation.
    static Subring checked(const FiniteRing& parent, std::vector<std::uint32_t> member_indices);

    const FiniteRing& parent() const { return parent_; }
    std::size_t size() const { return data_->set.indices.size(); }
    const std::vector<std::uint32_t>& member_indices() const { return data_->set.indices; }
    bool contains_index(std::uint32_t i) const { return data_->set.mask[i]; }
    bool contains(Elem a) const {
        if (!parent_.owns(a)) throw domain_error("element does not belong to this ring");
        return data_->set.mask[a.index];
    }

    /// Induced ring on the member set; element i of the view is member i in
    /// sorted parent-index order. Sealed (and axiom-verified) on first use.
    const FiniteRing& view() const;
    /// Embedding of a view element into the parent.
    Elem to_parent(Elem view_elem) const;
    /// Preimage of a parent element under the embedding, when it lies in the
    /// subring.
    std::optional<Elem> from_parent(Elem parent_elem) const;

private:
    struct Data {
        detail::IndexSet set;
        detail::Lazy<FiniteRing> view;
    };

    Subring(FiniteRing parent, std::shared_ptr<Data> data)
        : parent_(std::move(parent)), data_(std::move(data)) {}

    FiniteRing parent_;
    std::shared_ptr<Data> data_;

    friend class FiniteRing;
};

/// Smallest two-sided ideal containing `gens` (closure iteration to fixpoint).
Ideal ideal_generated(const FiniteRing& ring, std::span<const Elem> gens);

struct NilIdealReport {
    bool nil = false;                          // every member nilpotent
    std::optional<unsigned> nilpotency_index;  // minimal k with I^k = {0}
};

/// Whether I is nil / nilpotent, and the minimal k with I^k = {0} when it
/// exists. On finite rings nil and nilpotent coincide; that equivalence is
/// asserted.
NilIdealReport ideal_nil_index(const FiniteRing& ring, const Ideal& ideal);

struct QuotientMap {
    FiniteRing source;
    FiniteRing ring;                         // the quotient
    std::vector<std::uint32_t> projection;   // source index -> quotient index

    Elem operator()(Elem a) const {
        if (!source.owns(a)) throw domain_error("element does not belong to this ring");
        return ring.element(projection[a.index]);
    }
};

/// Quotient ring on minimal-index coset representatives, with the projection
/// homomorphism. |R| = |I| * |R/I| is asserted.
QuotientMap quotient(const FiniteRing& ring, const Ideal& ideal);

/// Smallest unital subring containing {0,1} and `gens`.
Subring subring_generated(const FiniteRing& ring, std::span<const Elem> gens);

struct SemipotenceReport {
    bool degenerate = false;  // zero ring: predicate undefined
    bool semipotent = false;
    std::optional<Elem> violator;  // an a outside J(R) with aR free of nonzero idempotents
};

/// Semipotence test: every principal right ideal aR with a outside J(R) must
/// contain a nonzero idempotent. (A right ideal I not inside J contains some
/// a outside J, and aR is a subset of I, so principal right ideals decide the
/// general condition.)
SemipotenceReport is_semipotent(const FiniteRing& ring);

struct CentralSplit {
    FiniteRing first;   // e R e, unity e
    FiniteRing second;  // (1-e) R (1-e), unity 1-e
    Elem idempotent;
    Elem complement;
    std::vector<std::uint32_t> first_projection;   // parent index -> index of e r e in first
    std::vector<std::uint32_t> second_projection;  // parent index -> index of (1-e) r (1-e) in second
};

/// Peirce splitting along a nontrivial central idempotent.
CentralSplit central_idempotent_split(const FiniteRing& ring, Elem e);

struct TorsionFactor {
    unsigned prime = 0;
    FiniteRing ring;
    Elem idempotent;                          // the central idempotent carving the factor
    std::vector<std::uint32_t> projection;    // parent index -> factor index
};

/// Splits R along the prime-power factorization of its characteristic via the
/// central idempotents of the coprime decomposition of 1. A prime-power
/// characteristic yields the singleton [(p, R)].
std::vector<TorsionFactor> torsion_split(const FiniteRing& ring);

}  // namespace ringlab
