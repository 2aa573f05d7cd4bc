#include "ringlab/ring.hpp"

#include <algorithm>
#include <numeric>

#include "internal.hpp"
#include "ringlab/rng.hpp"

namespace ringlab {

namespace {

std::string at_indices(std::initializer_list<std::uint32_t> idx) {
    std::string out = " (elements";
    for (auto i : idx) out += " #" + std::to_string(i);
    return out + ")";
}

void verify_axioms(const detail::RingState& s) {
    const std::size_t n = s.n;
    const std::uint32_t z = s.zero_idx, e = s.one_idx;
    if (z >= n || e >= n) throw axiom_error("zero/one index out of range");
    if (n > 1 && z == e) throw axiom_error("zero equals one in a nontrivial ring");

    for (std::uint32_t a = 0; a < n; ++a) {
        if (s.add(a, z) != a || s.add(z, a) != a)
            throw axiom_error("additive identity fails" + at_indices({a}));
        if (s.mul(a, e) != a || s.mul(e, a) != a)
            throw axiom_error("multiplicative identity fails" + at_indices({a}));
        if (s.add(a, s.neg(a)) != z)
            throw axiom_error("additive inverse fails" + at_indices({a}));
    }

    auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (s.add(s.add(a, b), c) != s.add(a, s.add(b, c)))
            throw axiom_error("addition is not associative" + at_indices({a, b, c}));
        if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
            throw axiom_error("multiplication is not associative" + at_indices({a, b, c}));
        if (s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)))
            throw axiom_error("left distributivity fails" + at_indices({a, b, c}));
        if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c)))
            throw axiom_error("right distributivity fails" + at_indices({a, b, c}));
    };

    if (n <= s.opts.axiom_exhaustive_limit) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                if (s.add(a, b) != s.add(b, a))
                    throw axiom_error("addition is not commutative" + at_indices({a, b}));
                for (std::uint32_t c = 0; c < n; ++c) check_triple(a, b, c);
            }
    } else {
        Rng rng(s.opts.seed ^ (0x9e3779b97f4a7c15ull * n));
        for (std::size_t i = 0; i < s.opts.axiom_sample_count; ++i) {
            const auto a = static_cast<std::uint32_t>(rng.below(n));
            const auto b = static_cast<std::uint32_t>(rng.below(n));
            const auto c = static_cast<std::uint32_t>(rng.below(n));
            if (s.add(a, b) != s.add(b, a))
                throw axiom_error("addition is not commutative" + at_indices({a, b}));
            check_triple(a, b, c);
        }
    }
}

}  // namespace

namespace detail {

const IndexSet& idempotent_set(const FiniteRing& R) {
    return R.state_ptr()->idempotents.get([&] {
        const std::size_t n = R.cardinality();
        IndexSet set;
        set.mask.assign(n, false);
        for (std::uint32_t a = 0; a < n; ++a) {
            if (R.mul_i(a, a) == a) {
                set.indices.push_back(a);
                set.mask[a] = true;
            }
        }
        return set;
    });
}

}  // namespace detail

FiniteRing FiniteRing::seal(std::unique_ptr<const Carrier> carrier, std::string label,
                            const BuildOptions& opts) {
    if (!carrier) throw domain_error("null carrier");
    const std::size_t n = carrier->size();
    if (n == 0) throw domain_error("empty carrier");
    if (n > opts.structural_limit)
        throw limit_error("cardinality " + std::to_string(n) + " exceeds the structural limit " +
                          std::to_string(opts.structural_limit));

    auto state = std::make_shared<detail::RingState>();
    state->n = n;
    state->zero_idx = carrier->zero();
    state->one_idx = carrier->one();
    state->label = std::move(label);
    state->opts = opts;

    if (!opts.force_structural && n <= opts.tabulated_limit) {
        state->add_tab.resize(n * n);
        state->mul_tab.resize(n * n);
        state->neg_tab.resize(n);
        for (std::uint32_t a = 0; a < n; ++a) {
            state->neg_tab[a] = static_cast<std::uint16_t>(carrier->neg(a));
            for (std::uint32_t b = 0; b < n; ++b) {
                state->add_tab[a * n + b] = static_cast<std::uint16_t>(carrier->add(a, b));
                state->mul_tab[a * n + b] = static_cast<std::uint16_t>(carrier->mul(a, b));
            }
        }
        state->tabulated = true;
    }

    state->carrier = std::move(carrier);
    verify_axioms(*state);
    return FiniteRing(std::move(state));
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
    std::uint32_t base = check(a);
    std::uint32_t acc = one_i();
    while (k > 0) {
        if (k & 1) acc = mul_i(acc, base);
        base = mul_i(base, base);
        k >>= 1;
    }
    return wrap(acc);
}

Elem FiniteRing::from_integer(std::int64_t k) const {
    const auto ch = static_cast<std::int64_t>(characteristic());
    std::int64_t r = k % ch;
    if (r < 0) r += ch;
    std::uint32_t acc = zero_i();
    for (std::int64_t i = 0; i < r; ++i) acc = add_i(acc, one_i());
    return wrap(acc);
}

std::size_t FiniteRing::characteristic() const {
    return st().characteristic.get([&] {
        std::size_t k = 1;
        std::uint32_t acc = one_i();
        while (acc != zero_i()) {
            acc = add_i(acc, one_i());
            ++k;
            if (k > cardinality() + 1)
                throw axiom_error("additive order of 1 exceeds the cardinality");
        }
        return k;
    });
}

const UnitSet& FiniteRing::units() const {
    return st().units.get([&] {
        const std::size_t n = cardinality();
        std::vector<std::uint32_t> indices;
        std::vector<std::uint32_t> inverse(n, 0);
        std::vector<bool> member(n, false);
        // Left-inverse scan; in a finite ring a one-sided inverse is
        // two-sided, and the explicit check guards against carrier bugs.
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                if (mul_i(b, a) == one_i()) {
                    if (mul_i(a, b) != one_i())
                        throw axiom_error("one-sided inverse is not two-sided" +
                                          at_indices({a, b}));
                    indices.push_back(a);
                    inverse[a] = b;
                    member[a] = true;
                    break;
                }
            }
        }
        return UnitSet(std::move(indices), std::move(inverse), std::move(member));
    });
}

const std::vector<std::uint32_t>& FiniteRing::idempotent_indices() const {
    return detail::idempotent_set(*this).indices;
}

bool FiniteRing::is_idempotent_index(std::uint32_t i) const {
    return detail::idempotent_set(*this).mask[i];
}

const NilpotentMap& FiniteRing::nilpotents() const {
    return st().nilpotents.get([&] {
        const std::size_t n = cardinality();
        std::vector<std::pair<std::uint32_t, unsigned>> entries;
        std::vector<unsigned> index_by_elem(n, 0);
        std::vector<bool> member(n, false);
        std::vector<bool> seen(n, false);
        std::vector<std::uint32_t> visited;
        // Iterate powers with repeat detection: a is nilpotent iff 0 shows up
        // before any nonzero power repeats. Minimal index recorded.
        for (std::uint32_t a = 0; a < n; ++a) {
            visited.clear();
            std::uint32_t p = a;
            unsigned k = 1;
            std::optional<unsigned> nil_index;
            while (true) {
                if (p == zero_i()) {
                    nil_index = k;
                    break;
                }
                if (seen[p]) break;
                seen[p] = true;
                visited.push_back(p);
                p = mul_i(p, a);
                ++k;
            }
            for (auto v : visited) seen[v] = false;
            if (nil_index) {
                entries.emplace_back(a, *nil_index);
                index_by_elem[a] = *nil_index;
                member[a] = true;
            }
        }
        return NilpotentMap(std::move(entries), std::move(index_by_elem), std::move(member));
    });
}

const std::vector<std::uint32_t>& FiniteRing::tripotent_indices() const {
    return st().tripotents.get([&] {
        std::vector<std::uint32_t> out;
        const std::size_t n = cardinality();
        for (std::uint32_t a = 0; a < n; ++a) {
            const std::uint32_t sq = mul_i(a, a);
            if (mul_i(sq, a) == a) out.push_back(a);
        }
        return out;
    });
}

std::optional<unsigned> FiniteRing::jacobson_nil_index() const {
    return detail::jacobson_data(*this).nil_index;
}

}  // namespace ringlab
