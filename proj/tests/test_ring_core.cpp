#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "ringlab/construct.hpp"
#include "ringlab/subset_carriers.hpp"

using namespace ringlab;

namespace {

std::vector<std::uint32_t> u32(std::initializer_list<std::uint32_t> v) { return v; }

}  // namespace

TEST_CASE("build_ring basics: cardinality and characteristic") {
    CHECK(build_ring("Z(4)").cardinality() == 4);
    CHECK(build_ring("Z(4)").characteristic() == 4);
    CHECK(build_ring("Z(6)").characteristic() == 6);
    CHECK(build_ring("M(2,Z(2))").cardinality() == 16);
    CHECK(build_ring("M(2,Z(2))").characteristic() == 2);
    CHECK(build_ring("GR(Z(2),C(3))").cardinality() == 8);
    CHECK(build_ring("GR(Z(4),C(2))").characteristic() == 4);
}

TEST_CASE("units: examples against the brute-force oracles") {
    // Oracle: inverse scan over Z(4) -> {1, 3}.
    CHECK(oracle::zn_units(4) == std::vector<int>{1, 3});
    const auto z4 = zmod(4);
    CHECK(z4.units().indices() == u32({1, 3}));
    CHECK(z4.units().inverse(3) == 3);

    // Oracle: brute-force inverse search over all 16 matrices -> 6 units.
    CHECK(oracle::mat_count_units(2, 2) == 6);
    CHECK(build_ring("M(2,Z(2))").units().size() == 6);

    // Oracle: field arithmetic -> units {1, w, w^2} = indices {1, 2, 3}.
    CHECK(oracle::gf4_units() == std::vector<int>{1, 2, 3});
    CHECK(build_ring("GF(2,2)").units().indices() == u32({1, 2, 3}));
}

TEST_CASE("units: closure and inverse-map invariants") {
    for (const char* expr : {"Z(12)", "M(2,Z(3))", "T(2,Z(4))", "GR(Z(2),CP(C(2),C(2)))"}) {
        const auto R = build_ring(expr);
        const auto& units = R.units();
        CHECK(units.contains(R.one_i()));
        for (std::uint32_t u : units.indices()) {
            const std::uint32_t v = units.inverse(u);
            CHECK(units.contains(v));
            CHECK(R.mul_i(u, v) == R.one_i());
            CHECK(R.mul_i(v, u) == R.one_i());
            for (std::uint32_t w : units.indices()) CHECK(units.contains(R.mul_i(u, w)));
        }
    }
}

TEST_CASE("idempotents: examples") {
    // Oracle: exhaustive squaring over Z(6) -> {0, 1, 3, 4}.
    CHECK(oracle::zn_idempotents(6) == std::vector<int>{0, 1, 3, 4});
    CHECK(zmod(6).idempotent_indices() == u32({0, 1, 3, 4}));

    // Oracle: exhaustive squaring over the 16 matrices -> 8 idempotents.
    CHECK(oracle::mat_count_idempotents(2, 2) == 8);
    CHECK(build_ring("M(2,Z(2))").idempotent_indices().size() == 8);

    CHECK(build_ring("GF(2,2)").idempotent_indices() == u32({0, 1}));
}

TEST_CASE("nilpotents: examples and minimal indices") {
    // Oracle: direct power iteration over Z(8).
    const auto oracle_nil = oracle::zn_nilpotents(8);
    CHECK(oracle_nil == std::map<int, int>{{0, 1}, {2, 3}, {4, 2}, {6, 3}});
    const auto z8 = zmod(8);
    const auto& nil = z8.nilpotents();
    CHECK(nil.size() == 4);
    CHECK(nil.index_of(0) == 1);
    CHECK(nil.index_of(2) == 3);
    CHECK(nil.index_of(4) == 2);
    CHECK(nil.index_of(6) == 3);
    CHECK(!nil.contains(1));

    // Oracle: the four square-zero matrices over M(2, Z2).
    CHECK(oracle::mat_count_nilpotents(2, 2) == 4);
    CHECK(build_ring("M(2,Z(2))").nilpotents().size() == 4);

    const auto z3 = zmod(3);
    CHECK(z3.nilpotents().size() == 1);
    CHECK(z3.nilpotents().index_of(0) == 1);
}

TEST_CASE("nilpotent implies 1 - a invertible with geometric-series inverse") {
    for (const char* expr : {"Z(8)", "T(2,Z(4))", "TP(Z(2),3)", "M(2,Z(4))"}) {
        const auto R = build_ring(expr);
        for (const auto& [a, k] : R.nilpotents().entries()) {
            const Elem u = R.sub(R.one(), R.wrap(a));
            CHECK(R.units().contains(u.index));
            Elem geom = R.zero();
            Elem p = R.one();
            for (unsigned i = 0; i < k; ++i) {
                geom = R.add(geom, p);
                p = R.mul(p, R.wrap(a));
            }
            CHECK(R.mul(u, geom) == R.one());
        }
    }
}

TEST_CASE("center: examples") {
    // Oracle: exhaustive commutation over the 16 matrices -> 2 central.
    CHECK(oracle::mat_count_central(2, 2) == 2);
    const auto m2 = build_ring("M(2,Z(2))");
    const auto center = m2.center();
    CHECK(center.size() == 2);
    CHECK(center.contains(m2.zero()));
    CHECK(center.contains(m2.one()));

    CHECK(zmod(12).center().size() == 12);  // commutative: the whole ring

    CHECK(build_ring("T(2,Z(2))").center().size() == 2);  // scalar diagonals
}

TEST_CASE("jacobson radical: examples") {
    // Oracle: quasi-regularity over plain ints; equals 2Z12 meet 3Z12.
    CHECK(oracle::zn_jacobson(12) == std::vector<int>{0, 6});
    CHECK(zmod(12).jacobson_radical().member_indices() == u32({0, 6}));

    CHECK(build_ring("M(2,Z(2))").jacobson_radical().size() == 1);  // semisimple

    const auto z4 = zmod(4);
    CHECK(z4.jacobson_radical().member_indices() == u32({0, 2}));
    CHECK(z4.jacobson_nil_index() == 2);
}

TEST_CASE("jacobson radical of R/J vanishes") {
    for (const char* expr : {"Z(12)", "Z(16)", "T(2,Z(4))", "TE(Z(4))", "GR(Z(2),C(2))"}) {
        const auto R = build_ring(expr);
        const auto q = quotient(R, R.jacobson_radical());
        CHECK(q.ring.jacobson_radical().size() == 1);
    }
}

TEST_CASE("ideal_generated: examples") {
    const auto z12 = zmod(12);
    const Elem four = z12.element(4);
    CHECK(ideal_generated(z12, std::span<const Elem>(&four, 1)).member_indices() ==
          u32({0, 4, 8}));

    // E12 generates everything: M_n over a field is simple.
    const auto m2 = build_ring("M(2,Z(2))");
    const Elem e12 = parse_element(m2, "[[0,1],[0,0]]");
    CHECK(ideal_generated(m2, std::span<const Elem>(&e12, 1)).size() == 16);

    CHECK(ideal_generated(z12, {}).member_indices() == u32({0}));
}

TEST_CASE("ideal_nil_index: examples") {
    const auto z8 = zmod(8);
    const Elem two = z8.element(2);
    const Ideal even = ideal_generated(z8, std::span<const Elem>(&two, 1));
    CHECK(even.member_indices() == u32({0, 2, 4, 6}));
    const auto report = ideal_nil_index(z8, even);
    CHECK(report.nil);
    CHECK(report.nilpotency_index == 3);  // (2Z8)^2 = {0,4}, (2Z8)^3 = {0}

    CHECK(ideal_nil_index(z8, ideal_generated(z8, {})).nilpotency_index == 1);

    const auto rg = build_ring("GR(Z(2),C(2))");
    const auto delta = augmentation_ideal(rg);
    const auto delta_report = ideal_nil_index(rg, delta);
    CHECK(delta_report.nil);
    CHECK(delta_report.nilpotency_index == 2);

    // Non-nil ideal: E12 generates the whole simple matrix ring.
    const auto m2 = build_ring("M(2,Z(2))");
    const Elem e12 = parse_element(m2, "[[0,1],[0,0]]");
    const auto all = ideal_generated(m2, std::span<const Elem>(&e12, 1));
    const auto all_report = ideal_nil_index(m2, all);
    CHECK(!all_report.nil);
    CHECK(!all_report.nilpotency_index.has_value());
}

TEST_CASE("quotient: examples") {
    const auto z12 = zmod(12);
    const Elem four = z12.element(4);
    const auto I = ideal_generated(z12, std::span<const Elem>(&four, 1));
    const auto q = quotient(z12, I);
    CHECK(q.ring.cardinality() == 4);
    CHECK(q.ring.characteristic() == 4);

    // Identity case: quotient by {0} is the ring itself.
    const auto trivial = quotient(z12, ideal_generated(z12, {}));
    CHECK(trivial.ring.same_ring(z12));

    const auto z4 = zmod(4);
    const auto qb = quotient(z4, z4.jacobson_radical());
    CHECK(qb.ring.cardinality() == 2);
    for (std::uint32_t x = 0; x < qb.ring.cardinality(); ++x)
        CHECK(qb.ring.mul_i(x, x) == x);  // Boolean
}

TEST_CASE("quotient projection: surjective homomorphism with equal fibers") {
    for (const char* expr : {"Z(12)", "T(2,Z(4))", "GR(Z(4),C(2))"}) {
        const auto R = build_ring(expr);
        const auto I = R.jacobson_radical();
        const auto q = quotient(R, I);
        CHECK(R.cardinality() == I.size() * q.ring.cardinality());
        CHECK(q(R.one()) == q.ring.one());
        std::vector<std::size_t> fiber(q.ring.cardinality(), 0);
        for (std::uint32_t a = 0; a < R.cardinality(); ++a) {
            fiber[q.projection[a]] += 1;
            for (std::uint32_t b = 0; b < R.cardinality(); ++b) {
                CHECK(q(R.add(R.wrap(a), R.wrap(b))) == q.ring.add(q(R.wrap(a)), q(R.wrap(b))));
                CHECK(q(R.mul(R.wrap(a), R.wrap(b))) == q.ring.mul(q(R.wrap(a)), q(R.wrap(b))));
            }
        }
        for (std::size_t count : fiber) CHECK(count == I.size());
    }
}

TEST_CASE("idempotents lift along nil ideals") {
    for (const char* expr : {"Z(4)", "TP(Z(2),3)", "T(2,Z(4))", "TE(Z(4))"}) {
        const auto R = build_ring(expr);
        const auto J = R.jacobson_radical();
        REQUIRE(ideal_nil_index(R, J).nil);
        const auto q = quotient(R, J);
        for (std::uint32_t e_bar : q.ring.idempotent_indices()) {
            bool lifts = false;
            for (std::uint32_t e : R.idempotent_indices())
                if (q.projection[e] == e_bar) {
                    lifts = true;
                    break;
                }
            CHECK(lifts);
        }
    }
}

TEST_CASE("subring_generated: examples") {
    const auto m3 = build_ring("M(3,Z(2))");
    const Elem u = parse_element(m3, "[[0,0,1],[1,0,0],[0,1,0]]");
    const auto sub = subring_generated(m3, std::span<const Elem>(&u, 1));
    CHECK(sub.size() == 8);
    CHECK(sub.view().cardinality() == 8);
    const Elem back = sub.to_parent(*sub.from_parent(u));
    CHECK(back == u);

    const auto m2 = build_ring("M(2,Z(2))");
    CHECK(subring_generated(m2, {}).size() == 2);  // prime subring {0, I}
    const Elem one = m2.one();
    CHECK(subring_generated(m2, std::span<const Elem>(&one, 1)).size() == 2);
}

TEST_CASE("is_semipotent: examples") {
    CHECK(is_semipotent(zmod(2)).semipotent);
    CHECK(is_semipotent(build_ring("M(2,Z(2))")).semipotent);
    // Finite rings are semiperfect, hence semipotent.
    for (const char* expr : {"Z(12)", "GF(2,3)", "T(3,Z(2))", "GR(Z(3),C(3))"})
        CHECK(is_semipotent(build_ring(expr)).semipotent);
}

TEST_CASE("central_idempotent_split: examples") {
    const auto z6 = zmod(6);
    const auto split3 = central_idempotent_split(z6, z6.element(3));
    CHECK(split3.first.cardinality() == 2);
    CHECK(split3.second.cardinality() == 3);

    const auto split4 = central_idempotent_split(z6, z6.element(4));
    CHECK(split4.first.cardinality() == 3);
    CHECK(split4.second.cardinality() == 2);

    const auto z4 = zmod(4);
    CHECK_THROWS_AS(central_idempotent_split(z4, z4.element(2)), domain_error);
    CHECK_THROWS_AS(central_idempotent_split(z6, z6.element(0)), domain_error);
    CHECK_THROWS_AS(central_idempotent_split(z6, z6.element(1)), domain_error);
}

TEST_CASE("central split reassembly is a ring isomorphism onto the product") {
    for (const char* expr : {"Z(6)", "Z(12)", "DS(TP(Z(2),2),M(2,Z(2)))"}) {
        const auto R = build_ring(expr);
        // First nontrivial central idempotent in canonical order.
        std::optional<Elem> e;
        for (std::uint32_t c : R.idempotent_indices()) {
            if (c == R.zero_i() || c == R.one_i()) continue;
            bool central = true;
            for (std::uint32_t r = 0; r < R.cardinality() && central; ++r)
                central = R.mul_i(c, r) == R.mul_i(r, c);
            if (central) {
                e = R.wrap(c);
                break;
            }
        }
        REQUIRE(e.has_value());
        const auto split = central_idempotent_split(R, *e);
        CHECK(split.first.cardinality() * split.second.cardinality() == R.cardinality());
        std::set<std::pair<std::uint32_t, std::uint32_t>> images;
        for (std::uint32_t r = 0; r < R.cardinality(); ++r)
            images.insert({split.first_projection[r], split.second_projection[r]});
        CHECK(images.size() == R.cardinality());  // bijection onto the product
        for (std::uint32_t a = 0; a < R.cardinality(); ++a)
            for (std::uint32_t b = 0; b < R.cardinality(); ++b) {
                const std::uint32_t sum = R.add_i(a, b);
                const std::uint32_t prod = R.mul_i(a, b);
                CHECK(split.first_projection[sum] ==
                      split.first.add_i(split.first_projection[a], split.first_projection[b]));
                CHECK(split.first_projection[prod] ==
                      split.first.mul_i(split.first_projection[a], split.first_projection[b]));
                CHECK(split.second_projection[sum] ==
                      split.second.add_i(split.second_projection[a], split.second_projection[b]));
                CHECK(split.second_projection[prod] ==
                      split.second.mul_i(split.second_projection[a], split.second_projection[b]));
            }
    }
}

TEST_CASE("torsion_split: examples") {
    const auto z6 = zmod(6);
    const auto parts6 = torsion_split(z6);
    REQUIRE(parts6.size() == 2);
    CHECK(parts6[0].prime == 2);
    CHECK(parts6[0].ring.cardinality() == 2);
    CHECK(parts6[1].prime == 3);
    CHECK(parts6[1].ring.cardinality() == 3);

    const auto z8 = zmod(8);
    const auto parts8 = torsion_split(z8);
    REQUIRE(parts8.size() == 1);
    CHECK(parts8[0].prime == 2);
    CHECK(parts8[0].ring.same_ring(z8));

    const auto rg = build_ring("GR(Z(6),C(2))");
    const auto parts_rg = torsion_split(rg);
    REQUIRE(parts_rg.size() == 2);
    CHECK(parts_rg[0].ring.cardinality() == 4);
    CHECK(parts_rg[1].ring.cardinality() == 9);
}

TEST_CASE("structure sets are consistent") {
    for (const char* expr : {"Z(12)", "M(2,Z(2))", "T(2,Z(4))", "GR(Z(2),C(3))"}) {
        const auto R = build_ring(expr);
        const auto& units = R.units();
        const auto& nil = R.nilpotents();
        for (std::uint32_t u : units.indices()) {
            CHECK(!nil.contains(u));
            if (R.is_idempotent_index(u)) CHECK(u == R.one_i());
        }
    }
}

TEST_CASE("tabulated and structural backends agree") {
    for (const char* expr : {"Z(16)", "M(2,Z(3))", "T(2,Z(4))", "GR(Z(2),C(3))", "TE(Z(4))"}) {
        const auto tab = build_ring(expr);
        BuildOptions structural;
        structural.force_structural = true;
        const auto str = build_ring(expr, structural);
        REQUIRE(tab.cardinality() == str.cardinality());
        CHECK(tab.tabulated());
        CHECK(!str.tabulated());
        CHECK(tab.zero_i() == str.zero_i());
        CHECK(tab.one_i() == str.one_i());
        bool ops_agree = true;
        for (std::uint32_t a = 0; a < tab.cardinality() && ops_agree; ++a) {
            ops_agree = tab.neg_i(a) == str.neg_i(a);
            for (std::uint32_t b = 0; b < tab.cardinality() && ops_agree; ++b)
                ops_agree =
                    tab.add_i(a, b) == str.add_i(a, b) && tab.mul_i(a, b) == str.mul_i(a, b);
        }
        CHECK(ops_agree);
    }
}

TEST_CASE("cross-parent arithmetic is rejected") {
    const auto a = zmod(4);
    const auto b = zmod(4);  // same shape, different ring identity
    CHECK(!a.same_ring(b));
    CHECK_THROWS_AS(a.add(a.element(1), b.element(1)), domain_error);
    CHECK_THROWS_AS(a.mul(b.element(1), a.element(1)), domain_error);
}

namespace {

// Deliberately broken carrier: multiplication is not distributive.
class BrokenCarrier final : public Carrier {
public:
    std::size_t size() const override { return 4; }
    std::uint32_t zero() const override { return 0; }
    std::uint32_t one() const override { return 1; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override { return (a + b) % 4; }
    std::uint32_t neg(std::uint32_t a) const override { return (4 - a) % 4; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        if (a == 0 || b == 0) return 0;
        if (a == 1) return b;
        if (b == 1) return a;
        return 3;
    }
};

}  // namespace

TEST_CASE("axiom verification rejects a broken carrier") {
    CHECK_THROWS_AS(FiniteRing::seal(std::make_unique<BrokenCarrier>(), "broken"), axiom_error);
}

TEST_CASE("zero ring is permitted as a quotient result and reported degenerate") {
    const auto q = build_ring("Q(Z(4);1)");  // 1 generates everything
    CHECK(q.cardinality() == 1);
    CHECK(q.is_zero_ring());
    CHECK(q.zero() == q.one());
    CHECK(is_semipotent(q).degenerate);
}

TEST_CASE("caches are write-once: repeated access returns identical data") {
    const auto R = build_ring("M(2,Z(3))");
    const auto* first = &R.units();
    const auto* second = &R.units();
    CHECK(first == second);
    const auto* nil1 = &R.nilpotents();
    const auto* nil2 = &R.nilpotents();
    CHECK(nil1 == nil2);
}
