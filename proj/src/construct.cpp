#include "ringlab/construct.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ringlab/subset_carriers.hpp"

namespace ringlab {

namespace {

constexpr std::size_t kMaxComponents = 64;

std::size_t checked_pow(std::size_t q, std::size_t e, std::size_t limit, const char* what) {
    std::size_t acc = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (q == 0 || acc > limit / q)
            throw limit_error(std::string(what) + " exceeds the cardinality limit " +
                              std::to_string(limit));
        acc *= q;
    }
    return acc;
}

using Digits = std::array<std::uint32_t, kMaxComponents>;

// ---------------------------------------------------------------------------

class ZmodCarrier final : public Carrier {
public:
    explicit ZmodCarrier(unsigned n) : n_(n) {
        if (n == 0) throw domain_error("Z(n) requires n >= 1");
    }

    std::size_t size() const override { return n_; }
    std::uint32_t zero() const override { return 0; }
    std::uint32_t one() const override { return n_ == 1 ? 0 : 1; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override { return (a + b) % n_; }
    std::uint32_t neg(std::uint32_t a) const override { return (n_ - a) % n_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % n_);
    }
    std::optional<std::string> literal(std::uint32_t a) const override {
        return std::to_string(a);
    }
    std::optional<std::uint32_t> encode_integer(long long v) const override {
        if (v < 0 || v >= static_cast<long long>(n_))
            throw domain_error("integer literal out of range for Z(" + std::to_string(n_) + ")");
        return static_cast<std::uint32_t>(v);
    }

private:
    std::uint64_t n_;
};

class BoolPowerCarrier final : public Carrier {
public:
    explicit BoolPowerCarrier(unsigned k, std::size_t limit) : k_(k) {
        if (k == 0) throw domain_error("B(k) requires k >= 1");
        n_ = checked_pow(2, k, limit, "B(k)");
    }

    std::size_t size() const override { return n_; }
    std::uint32_t zero() const override { return 0; }
    std::uint32_t one() const override { return static_cast<std::uint32_t>(n_ - 1); }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override { return a ^ b; }
    std::uint32_t neg(std::uint32_t a) const override { return a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override { return a & b; }
    std::optional<std::string> literal(std::uint32_t a) const override {
        return std::to_string(a);
    }
    std::optional<std::uint32_t> encode_integer(long long v) const override {
        if (v < 0 || v >= static_cast<long long>(n_))
            throw domain_error("integer literal out of range for B(" + std::to_string(k_) + ")");
        return static_cast<std::uint32_t>(v);
    }

private:
    unsigned k_;
    std::size_t n_;
};

class GfCarrier final : public Carrier {
public:
    GfCarrier(unsigned p, unsigned k) : p_(p), k_(k) {
        // Fixed irreducible polynomials keep the element order deterministic.
        static const struct {
            unsigned p, k;
            std::array<unsigned, 4> irr;  // low-degree coefficients of the monic modulus
        } table[] = {
            {2, 2, {1, 1, 0, 0}},  // x^2 + x + 1
            {2, 3, {1, 1, 0, 0}},  // x^3 + x + 1
            {3, 2, {2, 1, 0, 0}},  // x^2 + x + 2
            {2, 4, {1, 1, 0, 0}},  // x^4 + x + 1
        };
        if (k == 1) {
            if (!is_prime(p)) throw domain_error("GF(p,1) requires a prime p");
            n_ = p;
        } else {
            const auto* entry = [&]() -> decltype(&table[0]) {
                for (const auto& t : table)
                    if (t.p == p && t.k == k) return &t;
                return nullptr;
            }();
            if (!entry)
                throw domain_error("unsupported field size GF(" + std::to_string(p) + "," +
                                   std::to_string(k) + ")");
            irr_ = entry->irr;
            n_ = 1;
            for (unsigned i = 0; i < k; ++i) n_ *= p;
        }
        if (n_ > 16) throw domain_error("unsupported field size (p^k must be at most 16)");
        build_tables();
    }

    std::size_t size() const override { return n_; }
    std::uint32_t zero() const override { return 0; }
    std::uint32_t one() const override { return 1; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        return add_[a * n_ + b];
    }
    std::uint32_t neg(std::uint32_t a) const override { return neg_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        return mul_[a * n_ + b];
    }
    std::optional<std::string> literal(std::uint32_t a) const override {
        return std::to_string(a);
    }
    std::optional<std::uint32_t> encode_integer(long long v) const override {
        if (v < 0 || v >= static_cast<long long>(n_))
            throw domain_error("integer literal out of range for the field");
        return static_cast<std::uint32_t>(v);
    }

private:
    static bool is_prime(unsigned p) {
        if (p < 2) return false;
        for (unsigned d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    void digits_of(std::uint32_t v, unsigned* out) const {
        for (unsigned i = 0; i < k_; ++i) {
            out[i] = v % p_;
            v /= p_;
        }
    }
    std::uint32_t pack(const unsigned* d) const {
        std::uint32_t v = 0;
        for (unsigned i = k_; i-- > 0;) v = v * p_ + d[i];
        return v;
    }

    void build_tables() {
        add_.resize(n_ * n_);
        mul_.resize(n_ * n_);
        neg_.resize(n_);
        if (k_ == 1) {
            for (std::uint32_t a = 0; a < n_; ++a) {
                neg_[a] = static_cast<std::uint32_t>((n_ - a) % n_);
                for (std::uint32_t b = 0; b < n_; ++b) {
                    add_[a * n_ + b] = static_cast<std::uint32_t>((a + b) % n_);
                    mul_[a * n_ + b] = static_cast<std::uint32_t>((a * b) % n_);
                }
            }
            return;
        }
        for (std::uint32_t a = 0; a < n_; ++a) {
            unsigned da[8], db[8];
            digits_of(a, da);
            unsigned dn[8];
            for (unsigned i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
            neg_[a] = pack(dn);
            for (std::uint32_t b = 0; b < n_; ++b) {
                digits_of(b, db);
                unsigned ds[8];
                for (unsigned i = 0; i < k_; ++i) ds[i] = (da[i] + db[i]) % p_;
                add_[a * n_ + b] = pack(ds);
                // Polynomial product then reduction by the monic modulus.
                unsigned prod[16] = {0};
                for (unsigned i = 0; i < k_; ++i)
                    for (unsigned j = 0; j < k_; ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                for (unsigned j = 2 * k_ - 2; j >= k_; --j) {
                    const unsigned c = prod[j];
                    if (c) {
                        prod[j] = 0;
                        for (unsigned i = 0; i < k_; ++i)
                            prod[j - k_ + i] = (prod[j - k_ + i] + (p_ - 1) * c * irr_[i]) % p_;
                    }
                    if (j == k_) break;
                }
                mul_[a * n_ + b] = pack(prod);
            }
        }
    }

    unsigned p_, k_;
    std::size_t n_ = 0;
    std::array<unsigned, 4> irr_{};
    std::vector<std::uint32_t> add_, mul_, neg_;
};

// ---------------------------------------------------------------------------

// Full and masked matrix rings share the packing: stored positions are
// little-endian digits base |R| in row-major order of the stored cells.
class MatrixBaseCarrier : public Carrier {
public:
    MatrixBaseCarrier(FiniteRing base, unsigned dim, std::vector<std::pair<unsigned, unsigned>> cells,
                      std::size_t limit, const char* what)
        : base_(std::move(base)), dim_(dim), cells_(std::move(cells)) {
        if (dim_ == 0) throw domain_error("matrix dimension must be positive");
        if (cells_.size() > kMaxComponents)
            throw limit_error("matrix ring has too many stored entries");
        q_ = base_.cardinality();
        n_ = checked_pow(q_, cells_.size(), limit, what);
        cell_of_.assign(dim_ * dim_, npos);
        for (unsigned i = 0; i < cells_.size(); ++i)
            cell_of_[cells_[i].first * dim_ + cells_[i].second] = i;
    }

    std::size_t size() const override { return n_; }
    std::uint32_t zero() const override { return 0; }
    std::uint32_t one() const override {
        Digits d{};
        for (unsigned i = 0; i < cells_.size(); ++i)
            d[i] = cells_[i].first == cells_[i].second ? base_.one_i() : base_.zero_i();
        return pack(d);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        Digits da, db;
        decode(a, da);
        decode(b, db);
        for (unsigned i = 0; i < cells_.size(); ++i) da[i] = base_.add_i(da[i], db[i]);
        return pack(da);
    }
    std::uint32_t neg(std::uint32_t a) const override {
        Digits da;
        decode(a, da);
        for (unsigned i = 0; i < cells_.size(); ++i) da[i] = base_.neg_i(da[i]);
        return pack(da);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        Digits da, db;
        decode(a, da);
        decode(b, db);
        // Work on full grids; masked-out cells hold zero and must stay zero.
        std::array<std::uint32_t, 256> ga{}, gb{};
        to_grid(da, ga.data());
        to_grid(db, gb.data());
        Digits out{};
        for (unsigned i = 0; i < cells_.size(); ++i) {
            const auto [r, c] = cells_[i];
            std::uint32_t acc = base_.zero_i();
            for (unsigned t = 0; t < dim_; ++t)
                acc = base_.add_i(acc, base_.mul_i(ga[r * dim_ + t], gb[t * dim_ + c]));
            out[i] = acc;
        }
        if (is_masked()) check_masked_product(ga.data(), gb.data());
        return pack(out);
    }

    std::optional<std::string> literal(std::uint32_t a) const override {
        Digits d;
        decode(a, d);
        std::string out = "[";
        for (unsigned r = 0; r < dim_; ++r) {
            out += r ? ",[" : "[";
            for (unsigned c = 0; c < dim_; ++c) {
                if (c) out += ",";
                const unsigned cell = cell_of_[r * dim_ + c];
                const std::uint32_t idx = cell == npos ? base_.zero_i() : d[cell];
                auto lit = base_.carrier().literal(idx);
                if (!lit) return std::nullopt;
                out += *lit;
            }
            out += "]";
        }
        return out + "]";
    }

    std::optional<std::uint32_t> encode_matrix(
        const std::vector<std::vector<std::uint32_t>>& rows) const override {
        if (rows.size() != dim_)
            throw domain_error("matrix literal has wrong dimensions");
        for (const auto& row : rows)
            if (row.size() != dim_) throw domain_error("matrix literal has wrong dimensions");
        Digits d{};
        for (unsigned r = 0; r < dim_; ++r)
            for (unsigned c = 0; c < dim_; ++c) {
                const unsigned cell = cell_of_[r * dim_ + c];
                if (cell == npos) {
                    if (rows[r][c] != base_.zero_i())
                        throw domain_error(
                            "matrix literal has a nonzero entry at a structurally zero cell");
                } else {
                    d[cell] = rows[r][c];
                }
            }
        return pack(d);
    }

    const FiniteRing* literal_base() const override { return &base_; }

    const FiniteRing& base_ring() const { return base_; }
    unsigned dim() const { return dim_; }
    bool cell_stored(unsigned r, unsigned c) const { return cell_of_[r * dim_ + c] != npos; }
    std::uint32_t entry(std::uint32_t packed, unsigned r, unsigned c) const {
        Digits d;
        decode(packed, d);
        const unsigned cell = cell_of_[r * dim_ + c];
        return cell == npos ? base_.zero_i() : d[cell];
    }

protected:
    virtual bool is_masked() const { return cells_.size() != dim_ * dim_; }

    void decode(std::uint32_t v, Digits& out) const {
        std::size_t x = v;
        for (unsigned i = 0; i < cells_.size(); ++i) {
            out[i] = static_cast<std::uint32_t>(x % q_);
            x /= q_;
        }
    }
    std::uint32_t pack(const Digits& d) const {
        std::size_t v = 0;
        for (unsigned i = static_cast<unsigned>(cells_.size()); i-- > 0;) v = v * q_ + d[i];
        return static_cast<std::uint32_t>(v);
    }
    void to_grid(const Digits& d, std::uint32_t* grid) const {
        for (unsigned r = 0; r < dim_; ++r)
            for (unsigned c = 0; c < dim_; ++c) {
                const unsigned cell = cell_of_[r * dim_ + c];
                grid[r * dim_ + c] = cell == npos ? base_.zero_i() : d[cell];
            }
    }
    void check_masked_product(const std::uint32_t* ga, const std::uint32_t* gb) const {
        for (unsigned r = 0; r < dim_; ++r)
            for (unsigned c = 0; c < dim_; ++c) {
                if (cell_of_[r * dim_ + c] != npos) continue;
                std::uint32_t acc = base_.zero_i();
                for (unsigned t = 0; t < dim_; ++t)
                    acc = base_.add_i(acc, base_.mul_i(ga[r * dim_ + t], gb[t * dim_ + c]));
                if (acc != base_.zero_i())
                    throw axiom_error("matrix mask is not closed under multiplication");
            }
    }

    static constexpr unsigned npos = 0xffffffffu;

    FiniteRing base_;
    unsigned dim_;
    std::vector<std::pair<unsigned, unsigned>> cells_;
    std::vector<unsigned> cell_of_;
    std::size_t q_ = 0, n_ = 0;
};

std::vector<std::pair<unsigned, unsigned>> full_cells(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) cells.emplace_back(r, c);
    return cells;
}

std::vector<std::pair<unsigned, unsigned>> upper_cells(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = r; c < n; ++c) cells.emplace_back(r, c);
    return cells;
}

std::vector<std::pair<unsigned, unsigned>> block_cells(unsigned n, unsigned m) {
    // Block upper triangular: everything except the lower-left m x n block.
    std::vector<std::pair<unsigned, unsigned>> cells;
    const unsigned s = n + m;
    for (unsigned r = 0; r < s; ++r)
        for (unsigned c = 0; c < s; ++c)
            if (!(r >= n && c < n)) cells.emplace_back(r, c);
    return cells;
}

// ---------------------------------------------------------------------------

class DirectSumCarrier final : public Carrier {
public:
    DirectSumCarrier(std::vector<FiniteRing> parts, std::size_t limit)
        : parts_(std::move(parts)) {
        if (parts_.empty()) throw domain_error("direct sum needs at least one component");
        if (parts_.size() > kMaxComponents) throw limit_error("direct sum has too many components");
        n_ = 1;
        for (const auto& p : parts_) {
            if (p.cardinality() == 0 || n_ > limit / p.cardinality())
                throw limit_error("direct sum exceeds the cardinality limit");
            n_ *= p.cardinality();
        }
    }

    std::size_t size() const override { return n_; }
    std::uint32_t zero() const override {
        Digits d;
        for (std::size_t i = 0; i < parts_.size(); ++i) d[i] = parts_[i].zero_i();
        return pack(d);
    }
    std::uint32_t one() const override {
        Digits d;
        for (std::size_t i = 0; i < parts_.size(); ++i) d[i] = parts_[i].one_i();
        return pack(d);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        Digits da, db;
        decode(a, da);
        decode(b, db);
        for (std::size_t i = 0; i < parts_.size(); ++i) da[i] = parts_[i].add_i(da[i], db[i]);
        return pack(da);
    }
    std::uint32_t neg(std::uint32_t a) const override {
        Digits da;
        decode(a, da);
        for (std::size_t i = 0; i < parts_.size(); ++i) da[i] = parts_[i].neg_i(da[i]);
        return pack(da);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        Digits da, db;
        decode(a, da);
        decode(b, db);
        for (std::size_t i = 0; i < parts_.size(); ++i) da[i] = parts_[i].mul_i(da[i], db[i]);
        return pack(da);
    }

    const std::vector<FiniteRing>& parts() const { return parts_; }
    void decode(std::uint32_t v, Digits& out) const {
        std::size_t x = v;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            out[i] = static_cast<std::uint32_t>(x % parts_[i].cardinality());
            x /= parts_[i].cardinality();
        }
    }
    std::uint32_t pack(const Digits& d) const {
        std::size_t v = 0;
        for (std::size_t i = parts_.size(); i-- > 0;) v = v * parts_[i].cardinality() + d[i];
        return static_cast<std::uint32_t>(v);
    }

private:
    std::vector<FiniteRing> parts_;
    std::size_t n_ = 0;
};

class TruncPolyCarrier final : public Carrier {
public:
    TruncPolyCarrier(FiniteRing base, unsigned k, std::size_t limit)
        : base_(std::move(base)), k_(k) {
        if (k == 0) throw domain_error("TP(R,k) requires k >= 1");
        if (k > kMaxComponents) throw limit_error("TP(R,k) has too many coefficients");
        q_ = base_.cardinality();
        n_ = checked_pow(q_, k_, limit, "TP(R,k)");
    }

    std::size_t size() const override { return n_; }
    std::uint32_t zero() const override { return 0; }
    std::uint32_t one() const override {
        Digits d{};
        for (unsigned i = 0; i < k_; ++i) d[i] = base_.zero_i();
        d[0] = base_.one_i();
        return pack(d);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        Digits da, db;
        decode(a, da);
        decode(b, db);
        for (unsigned i = 0; i < k_; ++i) da[i] = base_.add_i(da[i], db[i]);
        return pack(da);
    }
    std::uint32_t neg(std::uint32_t a) const override {
        Digits da;
        decode(a, da);
        for (unsigned i = 0; i < k_; ++i) da[i] = base_.neg_i(da[i]);
        return pack(da);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        Digits da, db, out;
        decode(a, da);
        decode(b, db);
        for (unsigned i = 0; i < k_; ++i) out[i] = base_.zero_i();
        for (unsigned i = 0; i < k_; ++i)
            for (unsigned j = 0; i + j < k_; ++j)
                out[i + j] = base_.add_i(out[i + j], base_.mul_i(da[i], db[j]));
        return pack(out);
    }

private:
    void decode(std::uint32_t v, Digits& out) const {
        std::size_t x = v;
        for (unsigned i = 0; i < k_; ++i) {
            out[i] = static_cast<std::uint32_t>(x % q_);
            x /= q_;
        }
    }
    std::uint32_t pack(const Digits& d) const {
        std::size_t v = 0;
        for (unsigned i = k_; i-- > 0;) v = v * q_ + d[i];
        return static_cast<std::uint32_t>(v);
    }

    FiniteRing base_;
    unsigned k_;
    std::size_t q_ = 0, n_ = 0;
};

class TrivExtCarrier final : public Carrier {
public:
    TrivExtCarrier(FiniteRing base, std::size_t limit) : base_(std::move(base)) {
        q_ = base_.cardinality();
        n_ = checked_pow(q_, 2, limit, "TE(R)");
    }

    std::size_t size() const override { return n_; }
    std::uint32_t zero() const override { return pack(base_.zero_i(), base_.zero_i()); }
    std::uint32_t one() const override { return pack(base_.one_i(), base_.zero_i()); }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        return pack(base_.add_i(r_of(a), r_of(b)), base_.add_i(m_of(a), m_of(b)));
    }
    std::uint32_t neg(std::uint32_t a) const override {
        return pack(base_.neg_i(r_of(a)), base_.neg_i(m_of(a)));
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        // (r, n)(r', n') = (r r', r n' + n r')
        const std::uint32_t rr = base_.mul_i(r_of(a), r_of(b));
        const std::uint32_t mm =
            base_.add_i(base_.mul_i(r_of(a), m_of(b)), base_.mul_i(m_of(a), r_of(b)));
        return pack(rr, mm);
    }

private:
    std::uint32_t r_of(std::uint32_t v) const { return static_cast<std::uint32_t>(v % q_); }
    std::uint32_t m_of(std::uint32_t v) const { return static_cast<std::uint32_t>(v / q_); }
    std::uint32_t pack(std::uint32_t r, std::uint32_t m) const {
        return static_cast<std::uint32_t>(r + q_ * m);
    }

    FiniteRing base_;
    std::size_t q_ = 0, n_ = 0;
};

class GroupRingCarrier final : public Carrier {
public:
    GroupRingCarrier(FiniteRing base, FiniteGroup g, std::size_t limit)
        : base_(std::move(base)), group_(std::move(g)) {
        if (group_.order() > kMaxComponents)
            throw limit_error("group ring has too many coefficients");
        q_ = base_.cardinality();
        m_ = group_.order();
        n_ = checked_pow(q_, m_, limit, "GR(R,G)");
    }

    std::size_t size() const override { return n_; }
    std::uint32_t zero() const override { return 0; }
    std::uint32_t one() const override {
        Digits d{};
        for (std::size_t i = 0; i < m_; ++i) d[i] = base_.zero_i();
        d[0] = base_.one_i();  // group identity sits at index 0
        return pack(d);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        Digits da, db;
        decode(a, da);
        decode(b, db);
        for (std::size_t i = 0; i < m_; ++i) da[i] = base_.add_i(da[i], db[i]);
        return pack(da);
    }
    std::uint32_t neg(std::uint32_t a) const override {
        Digits da;
        decode(a, da);
        for (std::size_t i = 0; i < m_; ++i) da[i] = base_.neg_i(da[i]);
        return pack(da);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        Digits da, db, out;
        decode(a, da);
        decode(b, db);
        for (std::size_t i = 0; i < m_; ++i) out[i] = base_.zero_i();
        for (std::size_t i = 0; i < m_; ++i) {
            if (da[i] == base_.zero_i()) continue;
            for (std::size_t j = 0; j < m_; ++j) {
                const unsigned t = group_.op(static_cast<unsigned>(i), static_cast<unsigned>(j));
                out[t] = base_.add_i(out[t], base_.mul_i(da[i], db[j]));
            }
        }
        return pack(out);
    }

    std::optional<std::string> literal(std::uint32_t a) const override {
        Digits d;
        decode(a, d);
        std::string out = "{";
        bool any = false;
        for (std::size_t i = 0; i < m_; ++i) {
            if (d[i] == base_.zero_i()) continue;
            auto lit = base_.carrier().literal(d[i]);
            if (!lit) return std::nullopt;
            if (any) out += "+";
            out += *lit + "*g" + std::to_string(i);
            any = true;
        }
        if (!any) {
            auto lit = base_.carrier().literal(base_.zero_i());
            if (!lit) return std::nullopt;
            out += *lit + "*g0";
        }
        return out + "}";
    }

    std::optional<std::uint32_t> encode_group_sum(
        const std::vector<std::pair<std::uint32_t, unsigned>>& terms) const override {
        Digits d{};
        for (std::size_t i = 0; i < m_; ++i) d[i] = base_.zero_i();
        for (const auto& [coeff, word] : terms) {
            if (word >= m_)
                throw domain_error("group word g" + std::to_string(word) +
                                   " is out of range for this group");
            d[word] = base_.add_i(d[word], coeff);
        }
        return pack(d);
    }

    const FiniteRing* literal_base() const override { return &base_; }

    const FiniteRing& base_ring() const { return base_; }
    const FiniteGroup& group() const { return group_; }
    void decode(std::uint32_t v, Digits& out) const {
        std::size_t x = v;
        for (std::size_t i = 0; i < m_; ++i) {
            out[i] = static_cast<std::uint32_t>(x % q_);
            x /= q_;
        }
    }
    std::uint32_t pack(const Digits& d) const {
        std::size_t v = 0;
        for (std::size_t i = m_; i-- > 0;) v = v * q_ + d[i];
        return static_cast<std::uint32_t>(v);
    }

private:
    FiniteRing base_;
    FiniteGroup group_;
    std::size_t q_ = 0, m_ = 0, n_ = 0;
};

class Ex27Carrier final : public Carrier {
public:
    Ex27Carrier(unsigned n, unsigned k, const BuildOptions& opts) : dim_(n) {
        if (n == 0 || k == 0) throw domain_error("EX27(n,k) requires n, k >= 1");
        mat_ = n * n;
        if (mat_ + n + 1 > kMaxComponents) throw limit_error("EX27(n,k) has too many components");
        BuildOptions inner = opts;
        s_ = FiniteRing::seal(std::make_unique<TruncPolyCarrier>(
                                  FiniteRing::seal(std::make_unique<ZmodCarrier>(2), "Z(2)", inner),
                                  k, inner.structural_limit),
                              "TP(Z(2)," + std::to_string(k) + ")", inner);
        qs_ = s_.cardinality();
        std::size_t size = checked_pow(2, mat_, opts.structural_limit, "EX27(n,k)");
        for (unsigned i = 0; i < n + 1; ++i) {
            if (size > opts.structural_limit / qs_)
                throw limit_error("EX27(n,k) exceeds the cardinality limit");
            size *= qs_;
        }
        n_ = size;
    }

    std::size_t size() const override { return n_; }
    std::uint32_t zero() const override { return 0; }
    std::uint32_t one() const override {
        Parts p{};
        for (unsigned i = 0; i < dim_; ++i) p.a[i * dim_ + i] = 1;
        for (unsigned i = 0; i < dim_; ++i) p.v[i] = s_.zero_i();
        p.s = s_.one_i();
        return pack(p);
    }
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const override {
        Parts px, py;
        decode(x, px);
        decode(y, py);
        for (unsigned i = 0; i < mat_; ++i) px.a[i] ^= py.a[i];
        for (unsigned i = 0; i < dim_; ++i) px.v[i] = s_.add_i(px.v[i], py.v[i]);
        px.s = s_.add_i(px.s, py.s);
        return pack(px);
    }
    std::uint32_t neg(std::uint32_t x) const override {
        return x;  // characteristic 2 throughout
    }
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const override {
        Parts px, py, out{};
        decode(x, px);
        decode(y, py);
        // (A, v, s)(A', v', s') = (A A', A v' + v s', s s')
        for (unsigned r = 0; r < dim_; ++r)
            for (unsigned c = 0; c < dim_; ++c) {
                unsigned acc = 0;
                for (unsigned t = 0; t < dim_; ++t) acc ^= px.a[r * dim_ + t] & py.a[t * dim_ + c];
                out.a[r * dim_ + c] = acc;
            }
        for (unsigned i = 0; i < dim_; ++i) {
            std::uint32_t acc = s_.zero_i();
            for (unsigned j = 0; j < dim_; ++j)
                if (px.a[i * dim_ + j]) acc = s_.add_i(acc, py.v[j]);
            out.v[i] = s_.add_i(acc, s_.mul_i(px.v[i], py.s));
        }
        out.s = s_.mul_i(px.s, py.s);
        return pack(out);
    }

private:
    struct Parts {
        std::array<unsigned, kMaxComponents> a;
        std::array<std::uint32_t, kMaxComponents> v;
        std::uint32_t s = 0;
    };

    void decode(std::uint32_t x, Parts& out) const {
        std::size_t w = x;
        for (unsigned i = 0; i < mat_; ++i) {
            out.a[i] = static_cast<unsigned>(w & 1);
            w >>= 1;
        }
        for (unsigned i = 0; i < dim_; ++i) {
            out.v[i] = static_cast<std::uint32_t>(w % qs_);
            w /= qs_;
        }
        out.s = static_cast<std::uint32_t>(w % qs_);
    }
    std::uint32_t pack(const Parts& p) const {
        std::size_t w = p.s;
        for (unsigned i = dim_; i-- > 0;) w = w * qs_ + p.v[i];
        for (unsigned i = mat_; i-- > 0;) w = (w << 1) | p.a[i];
        return static_cast<std::uint32_t>(w);
    }

    unsigned dim_, mat_ = 0;
    FiniteRing s_;
    std::size_t qs_ = 0, n_ = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// Constructor entry points

FiniteRing zmod(unsigned n, const BuildOptions& opts) {
    return FiniteRing::seal(std::make_unique<ZmodCarrier>(n), "Z(" + std::to_string(n) + ")",
                            opts);
}

FiniteRing boolean_power(unsigned k, const BuildOptions& opts) {
    return FiniteRing::seal(std::make_unique<BoolPowerCarrier>(k, opts.structural_limit),
                            "B(" + std::to_string(k) + ")", opts);
}

FiniteRing gf(unsigned p, unsigned k, const BuildOptions& opts) {
    return FiniteRing::seal(std::make_unique<GfCarrier>(p, k),
                            "GF(" + std::to_string(p) + "," + std::to_string(k) + ")", opts);
}

FiniteRing matrix_ring(unsigned n, const FiniteRing& base, const BuildOptions& opts) {
    auto carrier = std::make_unique<MatrixBaseCarrier>(base, n, full_cells(n),
                                                       opts.structural_limit, "M(n,R)");
    return FiniteRing::seal(std::move(carrier),
                            "M(" + std::to_string(n) + "," + base.label() + ")", opts);
}

FiniteRing triangular_ring(unsigned n, const FiniteRing& base, const BuildOptions& opts) {
    auto carrier = std::make_unique<MatrixBaseCarrier>(base, n, upper_cells(n),
                                                       opts.structural_limit, "T(n,R)");
    return FiniteRing::seal(std::move(carrier),
                            "T(" + std::to_string(n) + "," + base.label() + ")", opts);
}

FiniteRing block_triangular(const FiniteRing& base, unsigned n, unsigned m,
                            const BuildOptions& opts) {
    if (n == 0 || m == 0) throw domain_error("BT(R,n,m) requires n, m >= 1");
    auto carrier = std::make_unique<MatrixBaseCarrier>(base, n + m, block_cells(n, m),
                                                       opts.structural_limit, "BT(R,n,m)");
    return FiniteRing::seal(
        std::move(carrier),
        "BT(" + base.label() + "," + std::to_string(n) + "," + std::to_string(m) + ")", opts);
}

FiniteRing direct_sum(const std::vector<FiniteRing>& parts, const BuildOptions& opts) {
    std::string label = "DS(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) label += ",";
        label += parts[i].label();
    }
    label += ")";
    return FiniteRing::seal(std::make_unique<DirectSumCarrier>(parts, opts.structural_limit),
                            label, opts);
}

FiniteRing truncated_poly(const FiniteRing& base, unsigned k, const BuildOptions& opts) {
    return FiniteRing::seal(std::make_unique<TruncPolyCarrier>(base, k, opts.structural_limit),
                            "TP(" + base.label() + "," + std::to_string(k) + ")", opts);
}

FiniteRing trivial_extension(const FiniteRing& base, const BuildOptions& opts) {
    return FiniteRing::seal(std::make_unique<TrivExtCarrier>(base, opts.structural_limit),
                            "TE(" + base.label() + ")", opts);
}

FiniteRing group_ring(const FiniteRing& base, const FiniteGroup& g, const BuildOptions& opts) {
    return FiniteRing::seal(std::make_unique<GroupRingCarrier>(base, g, opts.structural_limit),
                            "GR(" + base.label() + "," + g.label() + ")", opts);
}

FiniteRing ex27(unsigned n, unsigned k, const BuildOptions& opts) {
    return FiniteRing::seal(std::make_unique<Ex27Carrier>(n, k, opts),
                            "EX27(" + std::to_string(n) + "," + std::to_string(k) + ")", opts);
}

FiniteGroup build_group(const GroupDescriptor& desc) {
    switch (desc.kind) {
        case GroupDescriptor::Kind::cyclic: return cyclic(desc.n);
        case GroupDescriptor::Kind::product:
            return direct_product(build_group(*desc.left), build_group(*desc.right));
        case GroupDescriptor::Kind::dihedral4: return dihedral(4);
        case GroupDescriptor::Kind::quaternion8: return quaternion8();
    }
    throw error("unreachable group kind");
}

FiniteRing build_ring(const RingDescriptor& desc, const BuildOptions& opts) {
    using K = RingDescriptor::Kind;
    switch (desc.kind) {
        case K::zmod: return zmod(desc.a, opts);
        case K::boolean_power: return boolean_power(desc.a, opts);
        case K::gf: return gf(desc.a, desc.b, opts);
        case K::matrix: return matrix_ring(desc.a, build_ring(*desc.args[0], opts), opts);
        case K::triangular: return triangular_ring(desc.a, build_ring(*desc.args[0], opts), opts);
        case K::block_triangular:
            return block_triangular(build_ring(*desc.args[0], opts), desc.a, desc.b, opts);
        case K::direct_sum: {
            std::vector<FiniteRing> parts;
            parts.reserve(desc.args.size());
            for (const auto& arg : desc.args) parts.push_back(build_ring(*arg, opts));
            return direct_sum(parts, opts);
        }
        case K::truncated_poly: return truncated_poly(build_ring(*desc.args[0], opts), desc.a, opts);
        case K::trivial_extension: return trivial_extension(build_ring(*desc.args[0], opts), opts);
        case K::group_ring:
            return group_ring(build_ring(*desc.args[0], opts), build_group(*desc.group), opts);
        case K::subring: {
            FiniteRing parent = build_ring(*desc.args[0], opts);
            std::vector<Elem> gens;
            gens.reserve(desc.gens.size());
            for (const auto& lit : desc.gens) gens.push_back(resolve_literal(parent, lit));
            Subring sub = subring_generated(parent, gens);
            auto carrier = std::make_unique<SubsetCarrier>(parent, sub.member_indices(),
                                                           parent.zero_i(), parent.one_i());
            return FiniteRing::seal(std::move(carrier), render(desc), opts);
        }
        case K::quotient: {
            FiniteRing parent = build_ring(*desc.args[0], opts);
            std::vector<Elem> gens;
            gens.reserve(desc.gens.size());
            for (const auto& lit : desc.gens) gens.push_back(resolve_literal(parent, lit));
            Ideal ideal = ideal_generated(parent, gens);
            auto carrier = std::make_unique<QuotientCarrier>(parent, ideal);
            return FiniteRing::seal(std::move(carrier), render(desc), opts);
        }
        case K::ex27: return ex27(desc.a, desc.b, opts);
    }
    throw error("unreachable descriptor kind");
}

FiniteRing build_ring(std::string_view expr, const BuildOptions& opts) {
    return build_ring(*parse_ring_expr(expr), opts);
}

// ---------------------------------------------------------------------------
// Element literals

Elem resolve_literal(const FiniteRing& ring, const ElemLiteral& lit) {
    const Carrier& c = ring.carrier();
    switch (lit.kind) {
        case ElemLiteral::Kind::canonical: {
            if (lit.value < 0 || lit.value >= static_cast<long long>(ring.cardinality()))
                throw domain_error("canonical index out of range");
            return ring.element(static_cast<std::size_t>(lit.value));
        }
        case ElemLiteral::Kind::integer: {
            if (auto idx = c.encode_integer(lit.value)) return ring.element(*idx);
            break;
        }
        case ElemLiteral::Kind::matrix: {
            if (const FiniteRing* base = c.literal_base()) {
                std::vector<std::vector<std::uint32_t>> rows;
                rows.reserve(lit.rows.size());
                for (const auto& row : lit.rows) {
                    std::vector<std::uint32_t> r;
                    r.reserve(row.size());
                    for (const auto& e : row) r.push_back(resolve_literal(*base, e).index);
                    rows.push_back(std::move(r));
                }
                if (auto idx = c.encode_matrix(rows)) return ring.element(*idx);
            }
            break;
        }
        case ElemLiteral::Kind::group_sum: {
            if (const FiniteRing* base = c.literal_base()) {
                std::vector<std::pair<std::uint32_t, unsigned>> terms;
                terms.reserve(lit.term_coeffs.size());
                for (std::size_t i = 0; i < lit.term_coeffs.size(); ++i)
                    terms.emplace_back(resolve_literal(*base, lit.term_coeffs[i]).index,
                                       lit.term_words[i]);
                if (auto idx = c.encode_group_sum(terms)) return ring.element(*idx);
            }
            break;
        }
    }
    // Subring views and quotients read literals in parent coordinates.
    if (const FiniteRing* parent = c.literal_parent()) {
        const Elem pe = resolve_literal(*parent, lit);
        if (auto idx = c.from_parent_index(pe.index)) return ring.element(*idx);
        throw domain_error("element lies outside this subring");
    }
    throw domain_error("literal form is not supported for ring " + ring.label());
}

Elem parse_element(const FiniteRing& ring, std::string_view text) {
    return resolve_literal(ring, parse_elem_literal(text));
}

std::string element_ref(Elem a) { return "#" + std::to_string(a.index); }

std::optional<std::string> element_literal(const FiniteRing& ring, Elem a) {
    if (!ring.owns(a)) throw domain_error("element does not belong to this ring");
    return ring.carrier().literal(a.index);
}

// ---------------------------------------------------------------------------
// Matrix-ring bridging

namespace {

const MatrixBaseCarrier& matrix_carrier_of(const FiniteRing& ring) {
    const auto* c = dynamic_cast<const MatrixBaseCarrier*>(&ring.carrier());
    if (!c) throw domain_error("ring " + ring.label() + " is not a matrix ring");
    return *c;
}

}  // namespace

Elem matrix_to_element(const FiniteRing& mat_ring, const Matrix& m) {
    const auto& c = matrix_carrier_of(mat_ring);
    if (!c.base_ring().same_ring(m.base()))
        throw domain_error("matrix base does not match the matrix ring base");
    if (m.rows() != c.dim() || m.cols() != c.dim())
        throw domain_error("matrix shape does not match the matrix ring");
    std::vector<std::vector<std::uint32_t>> rows(c.dim(), std::vector<std::uint32_t>(c.dim()));
    for (unsigned r = 0; r < c.dim(); ++r)
        for (unsigned cc = 0; cc < c.dim(); ++cc) rows[r][cc] = m.at(r, cc).index;
    return mat_ring.element(*c.encode_matrix(rows));
}

Matrix element_to_matrix(const FiniteRing& mat_ring, Elem a) {
    if (!mat_ring.owns(a)) throw domain_error("element does not belong to this ring");
    const auto& c = matrix_carrier_of(mat_ring);
    Matrix m(c.base_ring(), c.dim(), c.dim());
    for (unsigned r = 0; r < c.dim(); ++r)
        for (unsigned cc = 0; cc < c.dim(); ++cc)
            m.set(r, cc, c.base_ring().wrap(c.entry(a.index, r, cc)));
    return m;
}

// ---------------------------------------------------------------------------
// Group-ring structure

namespace {

const GroupRingCarrier& group_ring_carrier_of(const FiniteRing& ring) {
    const auto* c = dynamic_cast<const GroupRingCarrier*>(&ring.carrier());
    if (!c) throw domain_error("ring " + ring.label() + " is not a group ring");
    return *c;
}

}  // namespace

bool is_group_ring(const FiniteRing& ring) {
    return dynamic_cast<const GroupRingCarrier*>(&ring.carrier()) != nullptr;
}

FiniteRing group_ring_base(const FiniteRing& rg) { return group_ring_carrier_of(rg).base_ring(); }

FiniteGroup group_ring_group(const FiniteRing& rg) { return group_ring_carrier_of(rg).group(); }

Elem augmentation_map(const FiniteRing& rg, Elem x) {
    if (!rg.owns(x)) throw domain_error("element does not belong to this ring");
    const auto& c = group_ring_carrier_of(rg);
    Digits d;
    c.decode(x.index, d);
    const FiniteRing& base = c.base_ring();
    std::uint32_t acc = base.zero_i();
    for (std::size_t i = 0; i < c.group().order(); ++i) acc = base.add_i(acc, d[i]);
    return base.wrap(acc);
}

Ideal augmentation_ideal(const FiniteRing& rg) {
    const auto& c = group_ring_carrier_of(rg);
    const FiniteRing& base = c.base_ring();
    std::vector<std::uint32_t> members;
    Digits d;
    for (std::uint32_t x = 0; x < rg.cardinality(); ++x) {
        c.decode(x, d);
        std::uint32_t acc = base.zero_i();
        for (std::size_t i = 0; i < c.group().order(); ++i) acc = base.add_i(acc, d[i]);
        if (acc == base.zero_i()) members.push_back(x);
    }
    return Ideal::checked(rg, std::move(members));
}

Elem group_ring_term(const FiniteRing& rg, Elem base_coeff, unsigned group_elem) {
    const auto& c = group_ring_carrier_of(rg);
    if (!c.base_ring().owns(base_coeff))
        throw domain_error("coefficient does not belong to the base ring");
    if (group_elem >= c.group().order()) throw domain_error("group element index out of range");
    return rg.element(
        *c.encode_group_sum({{base_coeff.index, group_elem}}));
}

}  // namespace ringlab
