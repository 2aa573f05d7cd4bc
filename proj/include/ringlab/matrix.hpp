#pragma once

#include <cstdint>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Dense matrix with entries in a base ring. Free-standing value type used
/// for determinant identities and for building matrix-ring elements; the
/// matrix-ring carriers themselves work on packed indices.
class Matrix {
public:
    Matrix(FiniteRing base, std::size_t rows, std::size_t cols);
    static Matrix identity(const FiniteRing& base, std::size_t n);
    /// E_ij: single 1 at row i, column j (1-based, matching the classical
    /// cofactor notation used throughout this header).
    static Matrix unit(const FiniteRing& base, std::size_t n, std::size_t i, std::size_t j);

    const FiniteRing& base() const { return base_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t r, std::size_t c) const;           // 0-based
    void set(std::size_t r, std::size_t c, Elem value);    // 0-based

    Matrix add(const Matrix& other) const;
    Matrix mul(const Matrix& other) const;
    Matrix transpose() const;

    bool operator==(const Matrix& other) const;

private:
    FiniteRing base_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> entries_;  // row-major indices into the base ring
};

/// Whether the base ring is commutative (cached through the center).
bool is_commutative(const FiniteRing& ring);

/// Determinant by cofactor expansion along the first row. The base ring must
/// be commutative; throws domain_error otherwise.
Elem det(const Matrix& a);

/// (i,j) cofactor, 1-based: (-1)^(i+j) times the minor determinant.
Elem cofactor(const Matrix& a, std::size_t i, std::size_t j);

}  // namespace ringlab
