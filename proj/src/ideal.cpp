#include "semicore/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "semicore/error.hpp"

namespace semicore {

namespace {

void require_unit_constant(const Poly& f) {
    if (!f.coeff(0).is_one()) throw Error(Errc::BadConstantTerm, "f(0) must be 1 for f = " + f.to_string());
}

struct Bounds {
    int c;
    int ell;
};

Bounds resolve_bounds(const CoreAlgebra& r, int c_floor, std::optional<int> c, std::optional<int> ell) {
    const int ell_floor = std::max(2, r.c0());
    Bounds b{c.value_or(std::max(c_floor, ell_floor)), ell.value_or(ell_floor)};
    if (b.c < c_floor) throw Error(Errc::BoundTooSmall, "c = " + std::to_string(b.c) + " < " + std::to_string(c_floor));
    if (b.ell < ell_floor) {
        throw Error(Errc::BoundTooSmall, "ell = " + std::to_string(b.ell) + " < " + std::to_string(ell_floor));
    }
    return b;
}

const char* variant_name(ClosureVariant v) {
    switch (v) {
        case ClosureVariant::ConductorRange: return "conductor-range";
        case ClosureVariant::SumFormula: return "sum-formula";
        case ClosureVariant::Product: return "product";
        case ClosureVariant::OneMinusT: return "one-minus-t";
    }
    return "?";
}

const NumericalSemigroup& require_semigroup(const CoreAlgebra& r) {
    if (!r.semigroup()) throw Error(Errc::NonMonomialCore, "operation needs a semigroup ring");
    return *r.semigroup();
}

}  // namespace

std::string describe(const Provenance& p) {
    std::ostringstream out;
    std::visit(
        [&out](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TwoGen>) {
                out << "TwoGen(f=" << v.f.to_string() << ", c=" << v.c << ", ell=" << v.ell << ")";
            } else if constexpr (std::is_same_v<T, Principal>) {
                out << "Principal(f=" << v.f.to_string() << ")";
            } else if constexpr (std::is_same_v<T, RationalPoint>) {
                out << "RationalPoint(alpha=" << v.alpha.to_string() << ", a=" << v.a << ", b=" << v.b << ")";
            } else if constexpr (std::is_same_v<T, Monomial>) {
                out << "Monomial(q=" << v.q << ")";
            } else {
                out << "Closure(q=" << v.q << ", f=" << v.f.to_string() << ", variant=" << variant_name(v.variant)
                    << ")";
            }
        },
        p);
    return out.str();
}

IdealPresentation::IdealPresentation(CoreAlgebra ambient, std::vector<Poly> gens, Provenance provenance)
    : ambient_(std::move(ambient)), gens_(std::move(gens)), provenance_(std::move(provenance)) {
    if (gens_.empty()) throw Error(Errc::InvalidArgument, "empty generator list");
    for (const Poly& g : gens_) {
        if (g.is_zero()) throw Error(Errc::InvalidArgument, "zero generator");
        if (!ambient_.contains(g)) throw Error(Errc::GeneratorNotInR, g.to_string());
    }
}

Poly IdealPresentation::target() const {
    const Field k = ambient_.field();
    return std::visit(
        [&k](const auto& v) -> Poly {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TwoGen> || std::is_same_v<T, Principal>) {
                return v.f;
            } else if constexpr (std::is_same_v<T, RationalPoint>) {
                if (v.alpha.is_zero()) return Poly::monomial(k, 1);
                return Poly::constant(k.one()) - Poly::monomial(v.alpha.inverse(), 1);
            } else if constexpr (std::is_same_v<T, Monomial>) {
                return Poly::monomial(k, v.q);
            } else {
                return v.f.shifted(v.q);
            }
        },
        provenance_);
}

IdealPresentation two_generator_ideal(const CoreAlgebra& r, const Poly& f, std::optional<int> c,
                                      std::optional<int> ell) {
    require_unit_constant(f);
    const Bounds b = resolve_bounds(r, r.c0(), c, ell);
    const Poly g = invert_mod_power(f, b.ell);
    return IdealPresentation(r, {f.shifted(b.c), f * g}, TwoGen{f, b.c, b.ell});
}

Principality classify_principality(const CoreAlgebra& r, const Poly& f) {
    require_unit_constant(f);
    if (r.contains(f)) return {true, 1, IdealPresentation(r, {f}, Principal{f})};
    return {false, 2, two_generator_ideal(r, f)};
}

IdealPresentation rational_point_ideal(const NumericalSemigroup& h, Field field, const Scalar& alpha) {
    if (!(alpha.field() == field)) throw Error(Errc::FieldMismatch, "alpha outside field");
    CoreAlgebra r = CoreAlgebra::from_semigroup(h, field);
    if (alpha.is_zero()) {
        std::vector<Poly> gens;
        for (int a : h.minimal_generators()) gens.push_back(Poly::monomial(field, a));
        return IdealPresentation(std::move(r), std::move(gens), RationalPoint{alpha, 0, 0});
    }
    const auto [a, b] = h.coprime_pair();
    auto binomial = [&](int e) { return Poly::constant(alpha.pow(static_cast<std::uint64_t>(e))) - Poly::monomial(field, e); };
    return IdealPresentation(std::move(r), {binomial(a), binomial(b)}, RationalPoint{alpha, a, b});
}

std::vector<int> monomial_ideal_min_gens(const NumericalSemigroup& h, int q) {
    if (q < 0) throw Error(Errc::InvalidArgument, "q must be nonnegative");
    int first = q;
    while (!h.contains(first)) ++first;
    // Every h >= first + c(H) is first + (element of H), hence not minimal.
    std::vector<int> out;
    for (int x = first; x < first + std::max(h.conductor(), 1); ++x) {
        if (!h.contains(x)) continue;
        const bool minimal = std::none_of(out.begin(), out.end(), [&](int y) { return h.contains(x - y); });
        if (minimal) out.push_back(x);
    }
    return out;
}

int mu_of_S(const NumericalSemigroup& h) {
    if (h.contains(1)) throw Error(Errc::TrivialCore, "1 is in H, so R = S");
    return h.multiplicity();
}

IdealPresentation integral_closure_general(const CoreAlgebra& r, int q, const Poly& f, std::optional<int> c,
                                           std::optional<int> ell) {
    require_unit_constant(f);
    if (q < 0) throw Error(Errc::InvalidArgument, "q must be nonnegative");
    if (q >= r.c0()) {
        const Poly phi = f.shifted(q);
        std::vector<Poly> gens;
        for (int j = 0; j < r.min_positive_degree(); ++j) gens.push_back(phi.shifted(j));
        return IdealPresentation(r, std::move(gens), Closure{q, f, ClosureVariant::ConductorRange});
    }
    const NumericalSemigroup& h = require_semigroup(r);
    const Bounds b = resolve_bounds(r, std::max(r.c0(), q), c, ell);
    const Poly fg = f * invert_mod_power(f, b.ell);
    std::vector<Poly> gens{f.shifted(b.c)};
    for (int e : monomial_ideal_min_gens(h, q)) gens.push_back(fg.shifted(e));
    return IdealPresentation(r, std::move(gens), Closure{q, f, ClosureVariant::SumFormula});
}

IdealPresentation integral_closure_product(const CoreAlgebra& r, int q, const Poly& f, std::optional<int> c,
                                           std::optional<int> ell) {
    require_unit_constant(f);
    const NumericalSemigroup& h = require_semigroup(r);
    const IdealPresentation base = two_generator_ideal(r, f, c, ell);
    std::vector<Poly> gens;
    for (int e : monomial_ideal_min_gens(h, q)) {
        for (const Poly& g : base.generators()) gens.push_back(g.shifted(e));
    }
    return IdealPresentation(r, std::move(gens), Closure{q, f, ClosureVariant::Product});
}

int choose_b0(const NumericalSemigroup& h, const std::vector<int>& bs) {
    if (bs.size() < 2) throw Error(Errc::SingleGenerator, "t^q S ∩ R is principal; need at least two generators");
    for (int b = bs[1];; ++b) {
        if (std::gcd(bs[0], b) != 1) continue;
        for (std::size_t i = 1; i < bs.size(); ++i) {
            if (h.contains(b - bs[i])) return b;
        }
    }
}

IdealPresentation integral_closure_one_minus_t(const NumericalSemigroup& h, Field field, int q) {
    if (h.contains(1)) throw Error(Errc::TrivialCore, "1 is in H, so R = S");
    if (q <= 0 || !h.contains(q)) throw Error(Errc::NotInSemigroup, "q = " + std::to_string(q) + " must be a positive element of H");
    const std::vector<int> bs = monomial_ideal_min_gens(h, q);
    const int b0 = choose_b0(h, bs);
    auto mono = [&](int e) { return Poly::monomial(field, e); };
    std::vector<Poly> gens{mono(bs[0]) - mono(b0)};
    for (std::size_t i = 1; i < bs.size(); ++i) gens.push_back(mono(bs[i]) - mono(b0 + bs[i]));
    const Poly one_minus_t = Poly::from_ints(field, {1, -1});
    return IdealPresentation(CoreAlgebra::from_semigroup(h, field), std::move(gens),
                             Closure{q, one_minus_t, ClosureVariant::OneMinusT});
}

}  // namespace semicore
