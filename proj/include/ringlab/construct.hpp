#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/descriptor.hpp"
#include "ringlab/group.hpp"
#include "ringlab/matrix.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Ring constructors. Each seals (and therefore axiom-verifies) its carrier
// and fixes the canonical element order documented with the carrier.

/// Z/nZ with elements 0..n-1. n = 1 builds the zero ring.
FiniteRing zmod(unsigned n, const BuildOptions& opts = {});

/// (Z/2Z)^k with bitmask elements; every element is idempotent.
FiniteRing boolean_power(unsigned k, const BuildOptions& opts = {});

/// Finite field of order p^k for p^k in {2,3,4,5,7,8,9,11,13,16}: prime
/// fields directly, extensions through the fixed irreducible polynomials
/// x^2+x+1 (4), x^3+x+1 (8), x^2+x+2 (9), x^4+x+1 (16). Element index is the
/// base-p digit string of the coefficient vector.
FiniteRing gf(unsigned p, unsigned k, const BuildOptions& opts = {});

/// n x n matrices over `base`, row-major entry vector as the canonical form.
FiniteRing matrix_ring(unsigned n, const FiniteRing& base, const BuildOptions& opts = {});

/// Upper triangular n x n matrices over `base`.
FiniteRing triangular_ring(unsigned n, const FiniteRing& base, const BuildOptions& opts = {});

/// 2x2-block upper triangular matrices with diagonal blocks n x n and m x m
/// over the same base (embedded in (n+m) x (n+m) matrices).
FiniteRing block_triangular(const FiniteRing& base, unsigned n, unsigned m,
                            const BuildOptions& opts = {});

/// Componentwise product of the parts (component 0 is the least significant
/// digit of the canonical index).
FiniteRing direct_sum(const std::vector<FiniteRing>& parts, const BuildOptions& opts = {});

/// base[t]/(t^k), coefficient vector c0..c(k-1) as the canonical form.
FiniteRing truncated_poly(const FiniteRing& base, unsigned k, const BuildOptions& opts = {});

/// Trivial extension of base by itself: pairs (r, n) with
/// (r,n)(r',n') = (rr', rn' + nr').
FiniteRing trivial_extension(const FiniteRing& base, const BuildOptions& opts = {});

/// Group ring base[G]: coefficient vectors in the group's canonical element
/// order with convolution product.
FiniteRing group_ring(const FiniteRing& base, const FiniteGroup& g, const BuildOptions& opts = {});

/// Formal triangular ring of M_n(Z2) acting on columns of S^n with
/// S = Z2[t]/(t^k): elements (A, v, s) multiplying as
/// (A,v,s)(A',v',s') = (AA', Av' + v s', s s').
FiniteRing ex27(unsigned n, unsigned k, const BuildOptions& opts = {});

/// Builds the ring denoted by a descriptor / expression text. The ring's
/// label is the canonical rendering of the descriptor.
FiniteRing build_ring(const RingDescriptor& desc, const BuildOptions& opts = {});
FiniteRing build_ring(std::string_view expr, const BuildOptions& opts = {});

FiniteGroup build_group(const GroupDescriptor& desc);

// Element literals.

/// Resolves a parsed literal against a ring. Throws domain_error when the
/// literal form is not supported by the ring's construction or the payload
/// is invalid.
Elem resolve_literal(const FiniteRing& ring, const ElemLiteral& lit);

/// Parses and resolves in one step.
Elem parse_element(const FiniteRing& ring, std::string_view text);

/// Universal "#k" rendering.
std::string element_ref(Elem a);

/// Human-readable literal when the construction defines one.
std::optional<std::string> element_literal(const FiniteRing& ring, Elem a);

// Matrix-ring bridging.

/// Packs a free Matrix (over the matrix ring's base) into a ring element.
Elem matrix_to_element(const FiniteRing& mat_ring, const Matrix& m);

/// Unpacks a matrix-ring element into a free Matrix over the base.
Matrix element_to_matrix(const FiniteRing& mat_ring, Elem a);

// Group-ring structure.

bool is_group_ring(const FiniteRing& ring);
FiniteRing group_ring_base(const FiniteRing& rg);
FiniteGroup group_ring_group(const FiniteRing& rg);

/// Coefficient-sum homomorphism into the base ring.
Elem augmentation_map(const FiniteRing& rg, Elem x);

/// Kernel of the augmentation map, as a verified ideal.
Ideal augmentation_ideal(const FiniteRing& rg);

/// Group-ring element with a single term c*g.
Elem group_ring_term(const FiniteRing& rg, Elem base_coeff, unsigned group_elem);

}  // namespace ringlab
