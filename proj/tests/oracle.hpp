#pragma once

// Independent brute-force oracles backing the expected values frozen into
// the tests. Everything here is a plain-integer model sharing no code with
// the library: modular arithmetic on int, dense small matrices over Z/q as
// flat vectors, and the 4-element field by explicit tables.

#include <map>
#include <optional>
#include <vector>

namespace oracle {

// ---- Z/n -------------------------------------------------------------------

inline std::vector<int> zn_units(int n) {
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a * b % n == 1 % n) {
                out.push_back(a);
                break;
            }
    return out;
}

inline std::vector<int> zn_idempotents(int n) {
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
        if (a * a % n == a) out.push_back(a);
    return out;
}

inline std::map<int, int> zn_nilpotents(int n) {
    std::map<int, int> out;
    for (int a = 0; a < n; ++a) {
        int p = a % n;
        for (int k = 1; k <= 2 * n; ++k) {
            if (p == 0) {
                out[a] = k;
                break;
            }
            p = p * a % n;
        }
    }
    return out;
}

// Quasi-regularity: a lies in the radical iff 1 - r a is invertible for all r.
inline std::vector<int> zn_jacobson(int n) {
    const auto units = zn_units(n);
    auto is_unit = [&](int x) {
        for (int u : units)
            if (u == ((x % n) + n) % n) return true;
        return false;
    };
    std::vector<int> out;
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int r = 0; r < n && ok; ++r) ok = is_unit(1 - r * a);
        if (ok) out.push_back(a);
    }
    return out;
}

// ---- dense matrices over Z/q ------------------------------------------------

struct Mat {
    int n = 0, q = 0;
    std::vector<int> e;  // row-major, values 0..q-1
};

inline Mat mat_zero(int n, int q) { return Mat{n, q, std::vector<int>(n * n, 0)}; }

inline Mat mat_identity(int n, int q) {
    Mat m = mat_zero(n, q);
    for (int i = 0; i < n; ++i) m.e[i * n + i] = 1 % q;
    return m;
}

inline Mat mat_from_index(long long idx, int n, int q) {
    Mat m = mat_zero(n, q);
    for (int i = 0; i < n * n; ++i) {
        m.e[i] = static_cast<int>(idx % q);
        idx /= q;
    }
    return m;
}

inline long long mat_count(int n, int q) {
    long long c = 1;
    for (int i = 0; i < n * n; ++i) c *= q;
    return c;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    Mat out = mat_zero(a.n, a.q);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            int acc = 0;
            for (int k = 0; k < a.n; ++k) acc += a.e[i * a.n + k] * b.e[k * a.n + j];
            out.e[i * a.n + j] = acc % a.q;
        }
    return out;
}

inline Mat mat_add(const Mat& a, const Mat& b) {
    Mat out = mat_zero(a.n, a.q);
    for (int i = 0; i < a.n * a.n; ++i) out.e[i] = (a.e[i] + b.e[i]) % a.q;
    return out;
}

inline bool operator==(const Mat& a, const Mat& b) {
    return a.n == b.n && a.q == b.q && a.e == b.e;
}

inline int mat_count_units(int n, int q) {
    const long long total = mat_count(n, q);
    const Mat id = mat_identity(n, q);
    int count = 0;
    for (long long i = 0; i < total; ++i) {
        const Mat a = mat_from_index(i, n, q);
        for (long long j = 0; j < total; ++j) {
            const Mat b = mat_from_index(j, n, q);
            if (mat_mul(a, b) == id && mat_mul(b, a) == id) {
                ++count;
                break;
            }
        }
    }
    return count;
}

inline int mat_count_idempotents(int n, int q) {
    const long long total = mat_count(n, q);
    int count = 0;
    for (long long i = 0; i < total; ++i) {
        const Mat a = mat_from_index(i, n, q);
        if (mat_mul(a, a) == a) ++count;
    }
    return count;
}

inline int mat_count_nilpotents(int n, int q) {
    const long long total = mat_count(n, q);
    const Mat zero = mat_zero(n, q);
    int count = 0;
    for (long long i = 0; i < total; ++i) {
        const Mat a = mat_from_index(i, n, q);
        Mat p = a;
        for (int k = 1; k <= 2 * n; ++k) {
            if (p == zero) {
                ++count;
                break;
            }
            p = mat_mul(p, a);
        }
    }
    return count;
}

inline int mat_count_central(int n, int q) {
    const long long total = mat_count(n, q);
    int count = 0;
    for (long long i = 0; i < total; ++i) {
        const Mat a = mat_from_index(i, n, q);
        bool central = true;
        for (long long j = 0; j < total && central; ++j) {
            const Mat b = mat_from_index(j, n, q);
            central = mat_mul(a, b) == mat_mul(b, a);
        }
        if (central) ++count;
    }
    return count;
}

// ---- GF(4) -------------------------------------------------------------------
// Elements 0, 1, w, w+1 indexed 0..3 with w^2 = w + 1 (modulus x^2 + x + 1).

inline int gf4_add(int a, int b) { return a ^ b; }

inline int gf4_mul(int a, int b) {
    // Carry-less product of degree-1 polynomials reduced by x^2 = x + 1.
    int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
    int c0 = a0 & b0;
    int c1 = (a0 & b1) ^ (a1 & b0);
    int c2 = a1 & b1;
    // x^2 -> x + 1
    c1 ^= c2;
    c0 ^= c2;
    return c0 | (c1 << 1);
}

inline std::vector<int> gf4_units() {
    std::vector<int> out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (gf4_mul(a, b) == 1) {
                out.push_back(a);
                break;
            }
    return out;
}

}  // namespace oracle
