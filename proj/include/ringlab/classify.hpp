#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Tri-state flag value: Unknown marks a predicate skipped for resource
/// limits or undefined on the zero ring.
enum class Tri : unsigned char { False = 0, True = 1, Unknown = 2 };

/// Certificate for a = e + b (+ f) decompositions. Constructed only by the
/// search routines; verify_witness re-checks every stated property.
struct NilCleanWitness {
    Elem idempotent;
    Elem nilpotent;
    unsigned nil_index = 1;
    bool commuting = false;  // e b == b e
    std::optional<Elem> extra_idempotent;
    bool pairwise_commuting = false;  // e, f, b commute pairwise (when extra set)
};

/// Re-checks a witness against its element: parts sum to a, e (and f) are
/// idempotent, b is nilpotent of the stated index, commuting flags truthful.
bool verify_witness(const FiniteRing& R, Elem a, const NilCleanWitness& w);

struct ElementProfile {
    Elem element;
    bool is_unit = false;
    bool is_idempotent = false;
    std::optional<unsigned> nilpotency_index;
    bool is_unipotent = false;
    bool is_tripotent = false;
    std::size_t nil_clean_witness_count = 0;
    bool strongly_nil_clean = false;
    bool uniquely_nil_clean = false;
};

/// One witness per idempotent e (canonical order) with a - e nilpotent,
/// stopping after `limit` witnesses. Nilpotency tests hit the cached
/// nilpotent set, so the cost per element is O(#idempotents).
std::vector<NilCleanWitness> nil_clean_witnesses(const FiniteRing& R, Elem a, std::size_t limit);

/// Strongly nil-clean decision: the a - a^2 criterion decides, then a
/// commuting witness is located; the two must agree (asserted).
std::optional<NilCleanWitness> strongly_nil_clean_elem(const FiniteRing& R, Elem a);

/// a = e + f + b with e, f idempotent and b nilpotent; pairwise commuting
/// when requested. Pairs searched in canonical order.
std::optional<NilCleanWitness> sum_nilpotent_two_idem(const FiniteRing& R, Elem a,
                                                      bool require_commuting);

/// a = e + f with e, f idempotent (commuting when requested).
std::optional<NilCleanWitness> sum_two_idem(const FiniteRing& R, Elem a, bool require_commuting);

ElementProfile element_profile(const FiniteRing& R, Elem a);

struct Evidence {
    std::vector<Elem> elements;
    std::string note;
};

struct FlagResult {
    Tri value = Tri::Unknown;
    std::optional<Evidence> witness;         // sample decomposition for true searches
    std::optional<Evidence> counterexample;  // always present for false flags
    std::optional<std::string> unknown_reason;

    bool truthy() const { return value == Tri::True; }
};

/// Profile of R/J(R): semisimplicity of the quotient, Boolean tests, and the
/// characteristic-3 x^3 = x test.
struct ModJProfile {
    std::size_t quotient_cardinality = 0;
    bool j_of_quotient_zero = false;
    bool quotient_boolean = false;
    bool center_boolean = false;
    bool subdirect_z3 = false;
};

struct ClassifyOptions {
    /// Elementary-operation budget for the quantifier searches; flags whose
    /// estimated cost exceeds the remaining budget come back Unknown.
    std::uint64_t op_budget = 1ull << 30;
};

struct ClassificationReport {
    std::string ring_label;
    std::size_t cardinality = 0;
    std::size_t characteristic = 0;
    bool degenerate = false;  // zero ring; flags are Unknown

    FlagResult uu, unc, nil_clean, strongly_nil_clean, unii, strong_unii, uii, strong_uii,
        strongly_2_nil_clean, boolean_ring, reduced, clean, two_primal, semipotent, u_eq_1,
        u_eq_1_plus_idem, u_eq_1_plus_j;
    std::size_t j_card = 0;
    std::optional<unsigned> j_nil_index;
    FlagResult center_mod_j_boolean, subdirect_z3;
    ModJProfile mod_j;
    double elapsed_ms = 0.0;
};

/// Full taxonomy classification. Unit-quantified classes scan units(R),
/// element-quantified classes scan all of R; searches run in canonical
/// element order so reports are deterministic.
ClassificationReport ring_class_flags(const FiniteRing& R, const ClassifyOptions& opts = {});

ModJProfile quotient_mod_J_profile(const FiniteRing& R);

/// Flags of the report in the fixed schema order (booleans only).
struct FlagView {
    const char* name;
    const FlagResult* flag;
};
std::vector<FlagView> report_flags(const ClassificationReport& report);

}  // namespace ringlab
