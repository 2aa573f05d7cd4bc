#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Ring structure induced on a subset of a parent ring that is closed under
/// the parent operations: subring views, corner rings e R e. Element i is
/// member i in sorted parent-index order; zero/one are designated parent
/// elements (a corner ring's identity is its idempotent, not the parent's 1).
class SubsetCarrier : public Carrier {
public:
    SubsetCarrier(FiniteRing parent, std::vector<std::uint32_t> members_sorted,
                  std::uint32_t zero_parent, std::uint32_t one_parent);

    std::size_t size() const override { return members_.size(); }
    std::uint32_t zero() const override { return zero_local_; }
    std::uint32_t one() const override { return one_local_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        return local(parent_.add_i(members_[a], members_[b]));
    }
    std::uint32_t neg(std::uint32_t a) const override { return local(parent_.neg_i(members_[a])); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        return local(parent_.mul_i(members_[a], members_[b]));
    }
    std::optional<std::string> literal(std::uint32_t a) const override {
        return parent_.carrier().literal(members_[a]);
    }

    const FiniteRing& parent_ring() const { return parent_; }
    const std::vector<std::uint32_t>& member_parent_indices() const { return members_; }
    /// Local index of a parent element, or nullopt when outside the subset.
    std::optional<std::uint32_t> local_of_parent(std::uint32_t parent_index) const {
        const std::uint32_t r = rank_[parent_index];
        if (r == npos) return std::nullopt;
        return r;
    }

    const FiniteRing* literal_parent() const override { return &parent_; }
    std::optional<std::uint32_t> from_parent_index(std::uint32_t p) const override {
        return local_of_parent(p);
    }

private:
    static constexpr std::uint32_t npos = 0xffffffffu;

    std::uint32_t local(std::uint32_t parent_index) const {
        const std::uint32_t r = rank_[parent_index];
        if (r == npos)
            throw axiom_error("subset is not closed under the parent operations");
        return r;
    }

    FiniteRing parent_;
    std::vector<std::uint32_t> members_;
    std::vector<std::uint32_t> rank_;
    std::uint32_t zero_local_ = 0;
    std::uint32_t one_local_ = 0;
};

/// Quotient ring on minimal-index coset representatives of a two-sided ideal.
class QuotientCarrier : public Carrier {
public:
    QuotientCarrier(FiniteRing parent, const Ideal& ideal);

    std::size_t size() const override { return reps_.size(); }
    std::uint32_t zero() const override { return zero_local_; }
    std::uint32_t one() const override { return one_local_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        return rank_[coset_rep_[parent_.add_i(reps_[a], reps_[b])]];
    }
    std::uint32_t neg(std::uint32_t a) const override {
        return rank_[coset_rep_[parent_.neg_i(reps_[a])]];
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        return rank_[coset_rep_[parent_.mul_i(reps_[a], reps_[b])]];
    }
    std::optional<std::string> literal(std::uint32_t a) const override {
        return parent_.carrier().literal(reps_[a]);
    }

    const FiniteRing& parent_ring() const { return parent_; }
    const std::vector<std::uint32_t>& rep_parent_indices() const { return reps_; }
    std::uint32_t project_parent(std::uint32_t parent_index) const {
        return rank_[coset_rep_[parent_index]];
    }

    const FiniteRing* literal_parent() const override { return &parent_; }
    std::optional<std::uint32_t> from_parent_index(std::uint32_t p) const override {
        return project_parent(p);
    }

private:
    FiniteRing parent_;
    std::vector<std::uint32_t> reps_;       // sorted; each is minimal in its coset
    std::vector<std::uint32_t> coset_rep_;  // parent index -> rep parent index
    std::vector<std::uint32_t> rank_;       // rep parent index -> local index
    std::uint32_t zero_local_ = 0;
    std::uint32_t one_local_ = 0;
};

}  // namespace ringlab
