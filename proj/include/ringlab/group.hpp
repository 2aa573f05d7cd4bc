#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

/// Finite group given by its Cayley table. Immutable after construction;
/// the group axioms are verified exhaustively. Element 0 is the identity,
/// the remaining order is fixed by the constructor.
class FiniteGroup {
public:
    /// table[a][b] = a*b. The identity must sit at index 0. Throws
    /// axiom_error when the table is not a group.
    static FiniteGroup from_cayley(const std::vector<std::vector<unsigned>>& table,
                                   std::string label = {});

    std::size_t order() const { return state_->n; }
    unsigned identity() const { return 0; }
    unsigned op(unsigned a, unsigned b) const { return state_->table[a * state_->n + b]; }
    unsigned inverse(unsigned a) const { return state_->inverse[a]; }
    unsigned element_order(unsigned a) const { return state_->element_order[a]; }
    const std::string& label() const { return state_->label; }

    bool same_group(const FiniteGroup& other) const { return state_ == other.state_; }

private:
    struct State {
        std::size_t n = 0;
        std::string label;
        std::vector<unsigned> table;
        std::vector<unsigned> inverse;
        std::vector<unsigned> element_order;
    };

    explicit FiniteGroup(std::shared_ptr<const State> state) : state_(std::move(state)) {}

    std::shared_ptr<const State> state_;
};

FiniteGroup cyclic(unsigned n);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Dihedral group on n vertices (order 2n): indices 0..n-1 are rotations,
/// n..2n-1 reflections.
FiniteGroup dihedral(unsigned n);
/// Quaternion group of order 8 in the order 1, -1, i, -i, j, -j, k, -k.
FiniteGroup quaternion8();

/// Sorted indices of the elements commuting with everything.
std::vector<unsigned> group_center(const FiniteGroup& g);

/// Ascending chain 1 = Z0 < Z1 < ... up to stabilization; the last entry is
/// the hypercenter. Each entry is a sorted index set.
std::vector<std::vector<unsigned>> upper_central_series(const FiniteGroup& g);

std::vector<unsigned> hypercenter(const FiniteGroup& g);
bool is_nilpotent_group(const FiniteGroup& g);
bool is_p_group(const FiniteGroup& g, unsigned p);
/// Whether every listed element has p-power order (for subgroup tests).
bool is_p_elements(const FiniteGroup& g, const std::vector<unsigned>& elems, unsigned p);
/// lcm of the element orders.
unsigned exponent(const FiniteGroup& g);

}  // namespace ringlab
