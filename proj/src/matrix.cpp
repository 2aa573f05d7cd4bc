#include "ringlab/matrix.hpp"

#include "internal.hpp"

namespace ringlab {

Matrix::Matrix(FiniteRing base, std::size_t rows, std::size_t cols)
    : base_(std::move(base)), rows_(rows), cols_(cols), entries_(rows * cols, base_.zero_i()) {
    if (rows == 0 || cols == 0) throw domain_error("matrix dimensions must be positive");
}

Matrix Matrix::identity(const FiniteRing& base, std::size_t n) {
    Matrix m(base, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = base.one_i();
    return m;
}

Matrix Matrix::unit(const FiniteRing& base, std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > n || j > n) throw domain_error("unit matrix position out of range");
    Matrix m(base, n, n);
    m.entries_[(i - 1) * n + (j - 1)] = base.one_i();
    return m;
}

Elem Matrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw domain_error("matrix position out of range");
    return base_.wrap(entries_[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, Elem value) {
    if (r >= rows_ || c >= cols_) throw domain_error("matrix position out of range");
    if (!base_.owns(value)) throw domain_error("entry does not belong to the base ring");
    entries_[r * cols_ + c] = value.index;
}

Matrix Matrix::add(const Matrix& other) const {
    if (!base_.same_ring(other.base_) || rows_ != other.rows_ || cols_ != other.cols_)
        throw domain_error("matrix shapes/bases do not match");
    Matrix out(base_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = base_.add_i(entries_[i], other.entries_[i]);
    return out;
}

Matrix Matrix::mul(const Matrix& other) const {
    if (!base_.same_ring(other.base_) || cols_ != other.rows_)
        throw domain_error("matrix shapes/bases do not match");
    Matrix out(base_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j) {
            std::uint32_t acc = base_.zero_i();
            for (std::size_t k = 0; k < cols_; ++k)
                acc = base_.add_i(acc,
                                  base_.mul_i(entries_[i * cols_ + k],
                                              other.entries_[k * other.cols_ + j]));
            out.entries_[i * other.cols_ + j] = acc;
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(base_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.entries_[j * rows_ + i] = entries_[i * cols_ + j];
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return base_.same_ring(other.base_) && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

bool is_commutative(const FiniteRing& ring) {
    return detail::center_set(ring).indices.size() == ring.cardinality();
}

namespace {

std::uint32_t det_rec(const FiniteRing& base, const std::vector<std::uint32_t>& m,
                      std::size_t n) {
    if (n == 1) return m[0];
    std::uint32_t acc = base.zero_i();
    std::vector<std::uint32_t> minor((n - 1) * (n - 1));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t mc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[(r - 1) * (n - 1) + mc++] = m[r * n + c];
            }
        }
        std::uint32_t term = base.mul_i(m[j], det_rec(base, minor, n - 1));
        acc = (j % 2 == 0) ? base.add_i(acc, term) : base.sub_i(acc, term);
    }
    return acc;
}

}  // namespace

Elem det(const Matrix& a) {
    if (a.rows() != a.cols()) throw domain_error("determinant of a non-square matrix");
    if (!is_commutative(a.base())) throw domain_error("determinant requires a commutative base");
    const std::size_t n = a.rows();
    std::vector<std::uint32_t> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a.at(i, j).index;
    return a.base().wrap(det_rec(a.base(), m, n));
}

Elem cofactor(const Matrix& a, std::size_t i, std::size_t j) {
    if (a.rows() != a.cols()) throw domain_error("cofactor of a non-square matrix");
    if (!is_commutative(a.base())) throw domain_error("cofactor requires a commutative base");
    const std::size_t n = a.rows();
    if (i < 1 || j < 1 || i > n || j > n) throw domain_error("cofactor position out of range");
    if (n == 1) return a.base().one();
    Matrix minor(a.base(), n - 1, n - 1);
    std::size_t mr = 0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == i - 1) continue;
        std::size_t mc = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (c == j - 1) continue;
            minor.set(mr, mc++, a.at(r, c));
        }
        ++mr;
    }
    Elem d = det(minor);
    return ((i + j) % 2 == 0) ? d : a.base().neg(d);
}

}  // namespace ringlab
