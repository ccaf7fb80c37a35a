#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semicore/core_algebra.hpp"
#include "semicore/poly.hpp"
#include "semicore/semigroup.hpp"

namespace semicore {

struct TwoGen {
    Poly f;
    int c;
    int ell;
};
struct Principal {
    Poly f;
};
struct RationalPoint {
    Scalar alpha;
    int a;  // 0 for the origin
    int b;
};
struct Monomial {
    int q;
};
enum class ClosureVariant {
    ConductorRange,  // q >= c0: phi S itself
    SumFormula,      // (t^c f) + f g (t^q S ∩ R)
    Product,         // (t^q S ∩ R) (f S ∩ R)
    OneMinusT,       // differences of monomials, f = 1 - t
};
struct Closure {
    int q;
    Poly f;
    ClosureVariant variant;
};

using Provenance = std::variant<TwoGen, Principal, RationalPoint, Monomial, Closure>;

std::string describe(const Provenance& p);

/// A finite generator list of an ideal of a core. Construction checks that
/// the list is nonempty, has no zero entry, and lies in R.
class IdealPresentation {
public:
    IdealPresentation(CoreAlgebra ambient, std::vector<Poly> gens, Provenance provenance);

    const CoreAlgebra& ambient() const noexcept { return ambient_; }
    const std::vector<Poly>& generators() const noexcept { return gens_; }
    const Provenance& provenance() const noexcept { return provenance_; }
    int mu_upper_bound() const noexcept { return static_cast<int>(gens_.size()); }
    /// phi with (generators) = phi S ∩ R by construction.
    Poly target() const;

private:
    CoreAlgebra ambient_;
    std::vector<Poly> gens_;
    Provenance provenance_;
};

/// f S ∩ R = (t^c f, f g) with g = invert_mod_power(f, ell). Defaults
/// c = ell = max(2, c0). Errc::BadConstantTerm unless f(0) = 1,
/// Errc::BoundTooSmall if c < c0 or ell < max(2, c0).
IdealPresentation two_generator_ideal(const CoreAlgebra& r, const Poly& f, std::optional<int> c = std::nullopt,
                                      std::optional<int> ell = std::nullopt);

struct Principality {
    bool principal;
    int mu;  // 1 or 2
    IdealPresentation presentation;
};

/// f S ∩ R is principal (and equal to fR) exactly when f lies in R.
Principality classify_principality(const CoreAlgebra& r, const Poly& f);

/// The maximal ideal of k[H] at the rational point alpha: two binomials
/// alpha^a - t^a, alpha^b - t^b for the coprime pair (a, b) when alpha != 0,
/// and the monomials t^{a_i} of the minimal generators at the origin.
IdealPresentation rational_point_ideal(const NumericalSemigroup& h, Field field, const Scalar& alpha);

/// Exponents of the minimal monomial generators of t^q S ∩ k[H]: the
/// elements h >= q of H such that h - h' is not in H for any other such h'.
std::vector<int> monomial_ideal_min_gens(const NumericalSemigroup& h, int q);

/// mu_R(S) = e for R = k[H]. Errc::TrivialCore when 1 is in H.
int mu_of_S(const NumericalSemigroup& h);

/// Generators of the closure (t^q f) S ∩ R. For q >= c0 these are t^q f t^j,
/// j below the least positive degree of R; otherwise [t^c f] followed by
/// f g t^{b_i} over the monomial generators of t^q S ∩ R (needs a semigroup
/// ring, Errc::NonMonomialCore). Defaults c = max(c0, q), ell = max(2, c0).
IdealPresentation integral_closure_general(const CoreAlgebra& r, int q, const Poly& f,
                                           std::optional<int> c = std::nullopt,
                                           std::optional<int> ell = std::nullopt);

/// Products t^{b_i} * (t^c f, f g): the same ideal presented as (t^q S ∩ R)(f S ∩ R).
IdealPresentation integral_closure_product(const CoreAlgebra& r, int q, const Poly& f,
                                           std::optional<int> c = std::nullopt,
                                           std::optional<int> ell = std::nullopt);

/// Smallest b in the union of b_i + H (i >= 2) with gcd(b_1, b) = 1.
/// Errc::SingleGenerator when bs has fewer than two entries.
int choose_b0(const NumericalSemigroup& h, const std::vector<int>& bs);

/// (t^{b_1} - t^{b_0}, t^{b_i} - t^{b_0 + b_i} for i >= 2) for f = 1 - t.
/// Errc::TrivialCore if 1 is in H, Errc::NotInSemigroup unless 0 < q in H.
IdealPresentation integral_closure_one_minus_t(const NumericalSemigroup& h, Field field, int q);

}  // namespace semicore
