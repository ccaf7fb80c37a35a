#include <doctest.h>

#include <random>

#include "semicore/error.hpp"
#include "semicore/field.hpp"

using namespace semicore;

TEST_SUITE("field") {

TEST_CASE("prime field construction") {
    CHECK(Field::prime(2).characteristic() == 2);
    CHECK(Field::prime(1000003).name() == "Fp:1000003");
    CHECK(Field::rationals().name() == "Q");
    CHECK(Field::rationals().is_rational());
    CHECK_THROWS_AS(Field::prime(4), Error);
    CHECK_THROWS_AS(Field::prime(1), Error);
    CHECK_THROWS_AS(Field::prime(0), Error);
    try {
        Field::prime(91);
        FAIL("91 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonPrimeModulus);
    }
}

TEST_CASE("primality against trial division") {
    for (std::uint64_t n = 0; n < 2000; ++n) {
        bool trial = n >= 2;
        for (std::uint64_t d = 2; d * d <= n; ++d) trial = trial && n % d != 0;
        CHECK_MESSAGE(is_prime(n) == trial, n);
    }
    CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
    CHECK_FALSE(is_prime(3215031751ULL));     // strong pseudoprime to 2, 3, 5, 7
}

TEST_CASE("GF(7) exhaustive against integer arithmetic") {
    const Field k = Field::prime(7);
    for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
            const Scalar x = k.from_int(a), y = k.from_int(b);
            CHECK((x + y).as_residue() == static_cast<std::uint64_t>((a + b) % 7));
            CHECK((x - y).as_residue() == static_cast<std::uint64_t>(((a - b) % 7 + 7) % 7));
            CHECK((x * y).as_residue() == static_cast<std::uint64_t>(a * b % 7));
            if (b != 0) {
                CHECK(((x / y) * y) == x);
            }
            for (int c = 0; c < 7; ++c) {
                const Scalar z = k.from_int(c);
                CHECK(x * (y + z) == x * y + x * z);
                CHECK((x * y) * z == x * (y * z));
            }
        }
        if (a != 0) {
            CHECK((k.from_int(a).inverse() * k.from_int(a)).is_one());
            CHECK(k.from_int(a).pow(6).is_one());
        }
    }
    CHECK_THROWS_AS(k.zero().inverse(), Error);
    CHECK(k.from_int(-1).as_residue() == 6);
}

TEST_CASE("rational axioms on 1000 random pairs") {
    const Field q = Field::rationals();
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
    for (int i = 0; i < 1000; ++i) {
        const mpq_class a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        mpq_class an = a, bn = b, cn = c;
        an.canonicalize();
        bn.canonicalize();
        cn.canonicalize();
        const Scalar x = Scalar::rational(an), y = Scalar::rational(bn), z = Scalar::rational(cn);
        CHECK((x + y).as_rational() == an + bn);
        CHECK((x * y).as_rational() == an * bn);
        CHECK(x + y == y + x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x - x).is_zero());
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("large modulus multiplication") {
    const std::uint64_t p = 2305843009213693951ULL;
    const Field k = Field::prime(p);
    const Scalar a = Scalar::residue(p - 1, p);
    CHECK((a * a).is_one());
    CHECK((a.inverse() * a).is_one());
    CHECK(k.from_integer(mpz_class("-1")) == a);
}

TEST_CASE("mixing fields is rejected") {
    const Scalar a = Field::prime(5).one();
    const Scalar b = Field::prime(7).one();
    const Scalar c = Field::rationals().one();
    try {
        (void)(a + b);
        FAIL("mixed residues accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldMismatch);
    }
    CHECK_THROWS_AS((void)(a * c), Error);
}

TEST_CASE("printing") {
    const Field q = Field::rationals();
    CHECK(q.from_fraction(-3, 6).to_string() == "-1/2");
    CHECK(q.from_int(4).to_string() == "4");
    CHECK(Field::prime(5).from_int(-1).to_string() == "4");
}

}
