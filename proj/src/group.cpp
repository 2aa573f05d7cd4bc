#include "ringlab/group.hpp"

#include <algorithm>
#include <numeric>

namespace ringlab {

FiniteGroup FiniteGroup::from_cayley(const std::vector<std::vector<unsigned>>& table,
                                     std::string label) {
    const std::size_t n = table.size();
    if (n == 0) throw domain_error("empty Cayley table");
    auto state = std::make_shared<State>();
    state->n = n;
    state->label = label.empty() ? "G#" + std::to_string(n) : std::move(label);
    state->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n) throw domain_error("Cayley table is not square");
        for (std::size_t b = 0; b < n; ++b) {
            if (table[a][b] >= n) throw domain_error("Cayley table entry out of range");
            state->table[a * n + b] = table[a][b];
        }
    }
    auto at = [&](unsigned a, unsigned b) { return state->table[a * n + b]; };

    for (unsigned a = 0; a < n; ++a)
        if (at(0, a) != a || at(a, 0) != a)
            throw axiom_error("index 0 is not a two-sided identity");
    // Rows and columns must be permutations.
    for (unsigned a = 0; a < n; ++a) {
        std::vector<bool> row(n, false), col(n, false);
        for (unsigned b = 0; b < n; ++b) {
            if (row[at(a, b)] || col[at(b, a)])
                throw axiom_error("Cayley table row/column is not a permutation");
            row[at(a, b)] = true;
            col[at(b, a)] = true;
        }
    }
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw axiom_error("group operation is not associative");

    state->inverse.assign(n, 0);
    for (unsigned a = 0; a < n; ++a) {
        bool found = false;
        for (unsigned b = 0; b < n; ++b) {
            if (at(a, b) == 0) {
                if (at(b, a) != 0) throw axiom_error("one-sided group inverse");
                state->inverse[a] = b;
                found = true;
                break;
            }
        }
        if (!found) throw axiom_error("element without inverse");
    }
    state->element_order.assign(n, 1);
    for (unsigned a = 0; a < n; ++a) {
        unsigned p = a, k = 1;
        while (p != 0) {
            p = at(p, a);
            ++k;
        }
        state->element_order[a] = k;
    }
    return FiniteGroup(std::move(state));
}

FiniteGroup cyclic(unsigned n) {
    if (n == 0) throw domain_error("cyclic group order must be positive");
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroup::from_cayley(t, "C(" + std::to_string(n) + ")");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const auto gn = static_cast<unsigned>(g.order());
    const auto hn = static_cast<unsigned>(h.order());
    const unsigned n = gn * hn;
    // Index (a, b) -> a + gn * b keeps the identity at 0.
    std::vector<std::vector<unsigned>> t(n, std::vector<unsigned>(n));
    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y)
            t[x][y] = g.op(x % gn, y % gn) + gn * h.op(x / gn, y / gn);
    return FiniteGroup::from_cayley(t, "CP(" + g.label() + "," + h.label() + ")");
}

FiniteGroup dihedral(unsigned n) {
    if (n == 0) throw domain_error("dihedral parameter must be positive");
    const unsigned m = 2 * n;
    // 0..n-1 rotations r^k, n..2n-1 reflections s r^k, with r s = s r^{-1}.
    std::vector<std::vector<unsigned>> t(m, std::vector<unsigned>(m));
    for (unsigned x = 0; x < m; ++x) {
        for (unsigned y = 0; y < m; ++y) {
            const bool xf = x >= n, yf = y >= n;
            const unsigned a = x % n, b = y % n;
            if (!xf && !yf) t[x][y] = (a + b) % n;
            else if (!xf && yf) t[x][y] = n + (b + n - a) % n;
            else if (xf && !yf) t[x][y] = n + (a + b) % n;
            else t[x][y] = (b + n - a) % n;
        }
    }
    return FiniteGroup::from_cayley(t, "D" + std::to_string(n));
}

FiniteGroup quaternion8() {
    // Elements (axis, sign): axis 0=1, 1=i, 2=j, 3=k; index = 2*axis + (sign<0).
    // Axis products with result sign: i j = k, j k = i, k i = j and cyclically.
    static const int axis_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_prod[4][4] = {
        {+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    std::vector<std::vector<unsigned>> t(8, std::vector<unsigned>(8));
    for (unsigned x = 0; x < 8; ++x)
        for (unsigned y = 0; y < 8; ++y) {
            const unsigned ax = x / 2, ay = y / 2;
            int sign = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * sign_prod[ax][ay];
            t[x][y] = 2 * static_cast<unsigned>(axis_prod[ax][ay]) + (sign < 0 ? 1 : 0);
        }
    return FiniteGroup::from_cayley(t, "Q8");
}

std::vector<unsigned> group_center(const FiniteGroup& g) {
    const auto n = static_cast<unsigned>(g.order());
    std::vector<unsigned> out;
    for (unsigned a = 0; a < n; ++a) {
        bool central = true;
        for (unsigned b = 0; b < n && central; ++b) central = g.op(a, b) == g.op(b, a);
        if (central) out.push_back(a);
    }
    return out;
}

std::vector<std::vector<unsigned>> upper_central_series(const FiniteGroup& g) {
    const auto n = static_cast<unsigned>(g.order());
    std::vector<std::vector<unsigned>> chain;
    std::vector<bool> in(n, false);
    in[0] = true;
    chain.push_back({0});
    while (true) {
        // Next term: g with every commutator [g, h] inside the current term.
        std::vector<unsigned> next;
        std::vector<bool> next_in(n, false);
        for (unsigned a = 0; a < n; ++a) {
            bool ok = true;
            for (unsigned b = 0; b < n && ok; ++b) {
                const unsigned comm =
                    g.op(g.op(a, b), g.op(g.inverse(a), g.inverse(b)));
                ok = in[comm];
            }
            if (ok) {
                next.push_back(a);
                next_in[a] = true;
            }
        }
        if (next == chain.back()) break;
        chain.push_back(next);
        in = std::move(next_in);
        if (chain.back().size() == n) break;
    }
    return chain;
}

std::vector<unsigned> hypercenter(const FiniteGroup& g) { return upper_central_series(g).back(); }

bool is_nilpotent_group(const FiniteGroup& g) { return hypercenter(g).size() == g.order(); }

bool is_p_group(const FiniteGroup& g, unsigned p) {
    std::vector<unsigned> all(g.order());
    std::iota(all.begin(), all.end(), 0u);
    return is_p_elements(g, all, p);
}

bool is_p_elements(const FiniteGroup& g, const std::vector<unsigned>& elems, unsigned p) {
    if (p < 2) throw domain_error("p must be at least 2");
    for (unsigned a : elems) {
        unsigned k = g.element_order(a);
        while (k % p == 0) k /= p;
        if (k != 1) return false;
    }
    return true;
}

unsigned exponent(const FiniteGroup& g) {
    unsigned l = 1;
    for (unsigned a = 0; a < g.order(); ++a) l = std::lcm(l, g.element_order(a));
    return l;
}

}  // namespace ringlab
