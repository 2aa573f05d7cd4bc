#pragma once

#include "ringlab/ring.hpp"

// Cross-translation-unit access to the cached structure sets.
namespace ringlab::detail {

const IndexSet& idempotent_set(const FiniteRing& ring);
const IndexSet& center_set(const FiniteRing& ring);
const JacobsonData& jacobson_data(const FiniteRing& ring);

// Sorted additive closure of a set of element indices.
std::vector<std::uint32_t> additive_closure(const FiniteRing& ring,
                                            const std::vector<std::uint32_t>& start);

}  // namespace ringlab::detail
