#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semicore/core_algebra.hpp"
#include "semicore/error.hpp"
#include "semicore/parse.hpp"

using namespace semicore;

TEST_SUITE("corealg") {

TEST_CASE("k[t^2+t^3] + t^4 S") {
    const Field q = Field::rationals();
    const CoreAlgebra r = CoreAlgebra::make(4, {parse_poly("t^2 + t^3", q)}, q);
    const EchelonBasis b = r.canonical_basis(8);
    CHECK(b.pivots() == std::vector<int>{0, 3, 4, 5, 6, 7, 8});
    CHECK(b.row(3) == parse_poly("t^2 + t^3", q));
    CHECK_FALSE(r.is_semigroup_ring(8));
    CHECK(r.contains(parse_poly("1 + t^2 + t^3 + t^9", q)));
    CHECK_FALSE(r.contains(parse_poly("t^2", q)));
    CHECK(r.min_positive_degree() == 3);
}

TEST_CASE("semigroup rings") {
    const Field q = Field::rationals();
    const CoreAlgebra r = CoreAlgebra::from_semigroup(NumericalSemigroup({4, 11, 13}), q);
    CHECK(r.c0() == 19);
    CHECK(r.is_semigroup_ring(40));
    CHECK(r.canonical_basis(15).pivots() == std::vector<int>{0, 4, 8, 11, 12, 13, 15});
    CHECK(r.contains(parse_poly("t^12 - t^13", q)));
    CHECK_FALSE(r.contains(parse_poly("t^14", q)));
    const CoreAlgebra s = CoreAlgebra::from_semigroup(NumericalSemigroup({1}), q);
    CHECK(s.c0() == 1);
    CHECK(s.contains(parse_poly("t", q)));
}

TEST_CASE("errors") {
    const Field q = Field::rationals();
    try {
        CoreAlgebra::make(3, {Poly::constant(q.one())}, q);
        FAIL("constant accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ConstantGenerator);
    }
    CHECK_THROWS_AS(CoreAlgebra::make(0, {}, q), Error);
    CHECK_THROWS_AS(CoreAlgebra::make(3, {Poly::monomial(Field::prime(2), 2)}, q), Error);
}

TEST_CASE("property: k[H] membership against the support test") {
    std::mt19937_64 rng(31337);
    const Field k = Field::prime(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::vector<int> gens = oracle::random_semigroup(rng, 9, 3);
        const CoreAlgebra r = CoreAlgebra::from_semigroup(NumericalSemigroup(gens), k);
        const int top = r.c0() + 6;
        const EchelonBasis basis = r.canonical_basis(top);
        for (int d = 0; d <= top; ++d) CHECK(basis.has_pivot(d) == oracle::semigroup_member(gens, d));
        for (int j = 0; j < 20; ++j) {
            Poly f(k);
            for (int d = 0; d <= top; ++d) {
                if (oracle::semigroup_member(gens, d) || rng() % 6 == 0) f += Poly::constant(k.from_int(static_cast<long long>(rng() % 5))).shifted(d);
            }
            CHECK(r.contains(f) == oracle::in_semigroup_ring(gens, f));
            CHECK(r.contains(f, basis) == r.contains(f));
        }
    }
}

TEST_CASE("property: explicit cores against product enumeration") {
    std::mt19937_64 rng(2718);
    for (const Field& k : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
        for (int trial = 0; trial < 30; ++trial) {
            const int c0 = 3 + static_cast<int>(rng() % 6);
            std::vector<Poly> gens;
            const int n = 1 + static_cast<int>(rng() % 2);
            for (int i = 0; i < n; ++i) {
                Poly g = oracle::random_poly(k, 2 + static_cast<int>(rng() % (c0 + 1)), rng);
                g = g - Poly::constant(g.coeff(0)) - Poly::monomial(g.coeff(1), 1);
                if (g.degree() < 1) g = Poly::monomial(k, 2);
                gens.push_back(g);
            }
            const CoreAlgebra r = CoreAlgebra::make(c0, gens, k);
            for (const Poly& g : gens) CHECK(r.contains(g));
            for (int j = 0; j < 20; ++j) {
                const Poly f = oracle::random_poly(k, c0 + 3, rng);
                CHECK(r.contains(f) == oracle::in_explicit_core(c0, gens, f));
                // Mix a known element with a tail in t^{c0} S.
                Poly e = gens[j % gens.size()] * gens[(j + 1) % gens.size()] + oracle::random_poly(k, 3, rng).shifted(c0);
                CHECK(r.contains(e));
            }
        }
    }
}

}
