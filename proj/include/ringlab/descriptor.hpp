#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/error.hpp"

namespace ringlab {

/// Parsed element literal, not yet resolved against a ring.
///
/// Forms: plain integer (canonical index of Z/B/GF rings), "#k" canonical
/// index (any ring), "[[...],[...]]" matrix grid, "{c*g0+c*g1}" group-ring
/// sum whose words g0, g1, ... name the group elements in canonical order.
struct ElemLiteral {
    enum class Kind { integer, canonical, matrix, group_sum };

    Kind kind = Kind::integer;
    long long value = 0;                          // integer / canonical
    std::vector<std::vector<ElemLiteral>> rows;   // matrix
    std::vector<ElemLiteral> term_coeffs;         // group_sum
    std::vector<unsigned> term_words;             // group_sum, parallel to term_coeffs

    bool operator==(const ElemLiteral&) const = default;
};

struct GroupDescriptor {
    enum class Kind { cyclic, product, dihedral4, quaternion8 };

    Kind kind = Kind::cyclic;
    unsigned n = 0;  // cyclic order
    std::shared_ptr<const GroupDescriptor> left, right;

    bool equals(const GroupDescriptor& other) const;
};

using GroupDescriptorPtr = std::shared_ptr<const GroupDescriptor>;

/// Abstract syntax tree of a ring expression; the serializable identity of
/// every corpus entry. render/parse round-trip losslessly.
struct RingDescriptor {
    enum class Kind {
        zmod,             // Z(n)
        boolean_power,    // B(k)
        gf,               // GF(p,k)
        matrix,           // M(n, R)
        triangular,       // T(n, R)
        block_triangular, // BT(R, n, m)
        direct_sum,       // DS(R1, ..., Rk)
        truncated_poly,   // TP(R, k)
        trivial_extension,// TE(R)
        group_ring,       // GR(R, G)
        subring,          // SUB(R; e1, ...)
        quotient,         // Q(R; e1, ...)
        ex27              // EX27(n, k)
    };

    Kind kind = Kind::zmod;
    unsigned a = 0, b = 0;  // numeric arguments
    std::vector<std::shared_ptr<const RingDescriptor>> args;
    GroupDescriptorPtr group;
    std::vector<ElemLiteral> gens;  // SUB/Q generators

    bool equals(const RingDescriptor& other) const;
};

using RingDescriptorPtr = std::shared_ptr<const RingDescriptor>;

/// Parses the canonical (whitespace-insensitive) ring-expression grammar.
/// Throws parse_error carrying the byte offset of the failure.
RingDescriptorPtr parse_ring_expr(std::string_view text);

/// Parses a stand-alone element literal.
ElemLiteral parse_elem_literal(std::string_view text);

std::string render(const RingDescriptor& desc);
std::string render(const GroupDescriptor& group);
std::string render(const ElemLiteral& lit);

}  // namespace ringlab
