#include "semicore/poly.hpp"

#include <algorithm>
#include <sstream>

#include "semicore/error.hpp"

namespace semicore {

Poly::Poly(Field field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const Scalar& c : coeffs_) {
        if (!(c.field() == field_)) throw Error(Errc::FieldMismatch, "coefficient outside field " + field_.name());
    }
    normalize();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(Field field, int exponent) { return monomial(field.one(), exponent); }

Poly Poly::monomial(const Scalar& c, int exponent) {
    if (exponent < 0) throw Error(Errc::NegativeExponent, std::to_string(exponent));
    Field f = c.field();
    if (c.is_zero()) return Poly(f);
    std::vector<Scalar> coeffs(static_cast<std::size_t>(exponent) + 1, f.zero());
    coeffs.back() = c;
    Poly p(f);
    p.coeffs_ = std::move(coeffs);
    return p;
}

Poly Poly::from_ints(Field field, std::initializer_list<long long> coeffs) {
    std::vector<Scalar> v;
    v.reserve(coeffs.size());
    for (long long c : coeffs) v.push_back(field.from_int(c));
    return Poly(field, std::move(v));
}

int Poly::order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    }
    return -1;
}

bool Poly::is_monomial() const { return !is_zero() && order() == degree(); }

Scalar Poly::coeff(int exponent) const {
    if (exponent < 0 || exponent > degree()) return field_.zero();
    return coeffs_[static_cast<std::size_t>(exponent)];
}

void Poly::check_field(const Poly& o) const {
    if (!(field_ == o.field_)) {
        throw Error(Errc::FieldMismatch, field_.name() + " vs " + o.field_.name());
    }
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Scalar& c : r.coeffs_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    add_scaled(field_.one(), o);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    add_scaled(-field_.one(), o);
    return *this;
}

void Poly::add_scaled(const Scalar& c, const Poly& x, int shift) {
    check_field(x);
    if (c.is_zero() || x.is_zero()) return;
    const std::size_t need = x.coeffs_.size() + static_cast<std::size_t>(shift);
    if (coeffs_.size() < need) coeffs_.resize(need, field_.zero());
    const bool unit = c.is_one();
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
        const Scalar& xi = x.coeffs_[i];
        if (xi.is_zero()) continue;
        Scalar& dst = coeffs_[i + static_cast<std::size_t>(shift)];
        if (unit) {
            dst += xi;
        } else {
            dst += c * xi;
        }
    }
    normalize();
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_field(b);
    Poly r(a.field_);
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    if (c.is_zero()) return Poly(field_);
    Poly r = *this;
    for (Scalar& x : r.coeffs_) {
        if (!x.is_zero()) x *= c;
    }
    return r;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw Error(Errc::NegativeExponent, "shift by " + std::to_string(k));
    if (is_zero() || k == 0) return *this;
    Poly r(field_);
    r.coeffs_.assign(static_cast<std::size_t>(k), field_.zero());
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

Poly Poly::truncated(int n) const {
    if (n <= 0) return Poly(field_);
    if (n > degree()) return *this;
    Poly r(field_);
    r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + n);
    r.normalize();
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return scaled(leading().inverse());
}

Scalar Poly::eval(const Scalar& at) const {
    if (!(at.field() == field_)) throw Error(Errc::FieldMismatch, "evaluation point outside field");
    Scalar acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Scalar& c = coeffs_[i];
        if (c.is_zero()) continue;
        bool negative = field_.is_rational() && sgn(c.as_rational()) < 0;
        Scalar mag = negative ? -c : c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << mag.to_string();
            continue;
        }
        if (!mag.is_one()) out << mag.to_string() << '*';
        out << 't';
        if (i > 1) out << '^' << i;
    }
    return out.str();
}

std::pair<Poly, Poly> divrem(const Poly& x, const Poly& y) {
    if (y.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    if (!(x.field() == y.field())) throw Error(Errc::FieldMismatch, "divrem operands");
    Poly rem = x;
    Poly quot(x.field());
    const Scalar lead_inv = y.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= y.degree()) {
        const int shift = rem.degree() - y.degree();
        Scalar c = rem.leading() * lead_inv;
        quot.add_scaled(c, Poly::monomial(x.field(), 0), shift);
        rem.add_scaled(-c, y, shift);
    }
    return {std::move(quot), std::move(rem)};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly invert_mod_power(const Poly& f, int ell) {
    if (ell < 1) throw Error(Errc::InvalidArgument, "ell must be positive");
    if (!f.coeff(0).is_one()) throw Error(Errc::NonUnitConstantTerm, "f(0) must be 1, got " + f.coeff(0).to_string());
    const Field k = f.field();
    std::vector<Scalar> v(static_cast<std::size_t>(ell), k.zero());
    v[0] = k.one();
    for (int n = 1; n < ell; ++n) {
        Scalar acc = k.zero();
        const int top = std::min(n, f.degree());
        for (int i = 1; i <= top; ++i) {
            const Scalar& a = f.coeffs()[static_cast<std::size_t>(i)];
            if (!a.is_zero()) acc += a * v[static_cast<std::size_t>(n - i)];
        }
        v[static_cast<std::size_t>(n)] = -acc;
    }
    return Poly(k, std::move(v));
}

}  // namespace semicore
