#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "semicore/error.hpp"
#include "semicore/parse.hpp"

using namespace semicore;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

}  // namespace

TEST_SUITE("parse") {

TEST_CASE("grammar") {
    const Field q = Field::rationals();
    CHECK(parse_poly("1 - t", q) == Poly::from_ints(q, {1, -1}));
    CHECK(parse_poly("1 − t", q) == Poly::from_ints(q, {1, -1}));
    CHECK(parse_poly("  t^2+t^3 ", q) == Poly::from_ints(q, {0, 0, 1, 1}));
    CHECK(parse_poly("3/2*t^4 - t", q) == Poly(q, {q.zero(), q.from_int(-1), q.zero(), q.zero(), q.from_fraction(3, 2)}));
    CHECK(parse_poly("t + t", q) == Poly::from_ints(q, {0, 2}));
    CHECK(parse_poly("t - t", q).is_zero());
    CHECK(parse_poly("0", q).is_zero());
    CHECK(parse_poly("-t^0", q) == Poly::from_ints(q, {-1}));
    CHECK(parse_poly("1 + t^2 + t^3 + t^5 + t^6", Field::prime(2)) ==
          Poly::from_ints(Field::prime(2), {1, 0, 1, 1, 0, 1, 1}));
    CHECK(parse_poly("3*t", Field::prime(2)) == Poly::monomial(Field::prime(2), 1));
}

TEST_CASE("errors") {
    const Field q = Field::rationals();
    CHECK(code_of([&] { parse_poly("t^-1", q); }) == Errc::NegativeExponent);
    CHECK(code_of([&] { parse_poly("1 +", q); }) == Errc::SyntaxError);
    CHECK(code_of([&] { parse_poly("x", q); }) == Errc::SyntaxError);
    CHECK(code_of([&] { parse_poly("", q); }) == Errc::SyntaxError);
    CHECK(code_of([&] { parse_poly("1/2*t", Field::prime(5)); }) == Errc::BadScalar);
    CHECK(code_of([&] { parse_poly("1/0", q); }) == Errc::BadScalar);
    try {
        parse_poly("1 + * t", q);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("offset 4") != std::string::npos);
    }
}

TEST_CASE("fields, scalars, lists") {
    CHECK(parse_field("Q").is_rational());
    CHECK(parse_field("Fp:7") == Field::prime(7));
    CHECK(parse_field("GF(3)") == Field::prime(3));
    CHECK(code_of([] { parse_field("Fp:8"); }) == Errc::NonPrimeModulus);
    CHECK(code_of([] { parse_field("R"); }) == Errc::SyntaxError);
    CHECK(parse_scalar("-3/6", Field::rationals()) == Field::rationals().from_fraction(-1, 2));
    CHECK(parse_scalar("9", Field::prime(7)) == Field::prime(7).from_int(2));
    CHECK(parse_int_list("4,11, 13") == std::vector<int>{4, 11, 13});
    CHECK_THROWS_AS(parse_int_list("4,,5"), Error);
}

TEST_CASE("property: print/parse round trip, 1000 per field") {
    std::mt19937_64 rng(1234);
    for (const Field& k : {Field::rationals(), Field::prime(2), Field::prime(13)}) {
        for (int i = 0; i < 1000; ++i) {
            Poly p = oracle::random_poly(k, static_cast<int>(rng() % 9), rng);
            if (k.is_rational() && i % 3 == 0) p = p.scaled(k.from_fraction(1, 1 + static_cast<long>(rng() % 6)));
            const std::string text = p.to_string();
            CHECK_MESSAGE(parse_poly(text, k) == p, text);
        }
    }
}

TEST_CASE("canonical printing") {
    const Field q = Field::rationals();
    CHECK(Poly::from_ints(q, {1, -1, 0, 0, 1}).to_string() == "1 - t + t^4");
    CHECK(Poly::from_ints(q, {0, 0, -2}).to_string() == "-2*t^2");
    CHECK(Poly(q).to_string() == "0");
}

}
