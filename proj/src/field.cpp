#include "semicore/field.hpp"

#include "semicore/error.hpp"

namespace semicore {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % small == 0) return n == small;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime(p)) throw Error(Errc::NonPrimeModulus, std::to_string(p) + " is not prime");
    if (p >= kMaxModulus) throw Error(Errc::InvalidArgument, "modulus too large");
    return Field{p};
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
    if (is_rational()) return Scalar::rational(mpq_class(static_cast<long>(v)));
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return Scalar::residue(static_cast<std::uint64_t>(m), p_);
}

Scalar Field::from_integer(const mpz_class& v) const {
    if (is_rational()) return Scalar::rational(mpq_class(v));
    return Scalar::residue(reduce_mpz(v, p_), p_);
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
    if (is_rational()) return Scalar::rational(mpq_class(num, den));
    return from_integer(num) / from_integer(den);
}

std::string Field::name() const {
    return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    Scalar s;
    s.value_ = std::move(q);
    return s;
}

Scalar Scalar::residue(std::uint64_t v, std::uint64_t p) {
    Scalar s;
    s.value_ = Residue{v % p, p};
    return s;
}

Field Scalar::field() const {
    if (is_rational()) return Field::rationals();
    return Field{std::get<Residue>(value_).modulus};
}

bool Scalar::is_zero() const {
    if (is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
    if (is_rational()) return std::get<mpq_class>(value_) == 1;
    return std::get<Residue>(value_).value == 1;
}

const mpq_class& Scalar::as_rational() const {
    if (!is_rational()) throw Error(Errc::FieldMismatch, "residue read as rational");
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::as_residue() const {
    if (is_rational()) throw Error(Errc::FieldMismatch, "rational read as residue");
    return std::get<Residue>(value_).value;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (value_.index() != o.value_.index()) throw Error(Errc::FieldMismatch, "rational vs residue");
    if (!is_rational() &&
        std::get<Residue>(value_).modulus != std::get<Residue>(o.value_).modulus) {
        throw Error(Errc::FieldMismatch, "different moduli");
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (is_rational()) {
        mpq_class& q = std::get<mpq_class>(r.value_);
        q = -q;
    } else {
        auto& res = std::get<Residue>(r.value_);
        res.value = res.value == 0 ? 0 : res.modulus - res.value;
    }
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (is_rational()) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    } else {
        auto& a = std::get<Residue>(value_);
        std::uint64_t b = std::get<Residue>(o.value_).value;
        a.value = a.value >= a.modulus - b ? a.value - (a.modulus - b) : a.value + b;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (is_rational()) {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    } else {
        auto& a = std::get<Residue>(value_);
        std::uint64_t b = std::get<Residue>(o.value_).value;
        a.value = a.value >= b ? a.value - b : a.value + (a.modulus - b);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (is_rational()) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    } else {
        auto& a = std::get<Residue>(value_);
        a.value = mul_mod(a.value, std::get<Residue>(o.value_).value, a.modulus);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    if (is_rational()) {
        mpq_class q = 1 / std::get<mpq_class>(value_);
        return rational(std::move(q));
    }
    const auto& a = std::get<Residue>(value_);
    return residue(pow_mod(a.value, a.modulus - 2, a.modulus), a.modulus);
}

Scalar Scalar::pow(std::uint64_t n) const {
    Scalar base = *this;
    Scalar result = is_rational() ? rational(mpq_class(1)) : residue(1, std::get<Residue>(value_).modulus);
    while (n) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (a.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
    const auto& x = std::get<Scalar::Residue>(a.value_);
    const auto& y = std::get<Scalar::Residue>(b.value_);
    return x.modulus == y.modulus && x.value == y.value;
}

std::string Scalar::to_string() const {
    if (is_rational()) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<Residue>(value_).value);
}

}  // namespace semicore
