#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semicore/core_algebra.hpp"
#include "semicore/echelon.hpp"

namespace semicore {

/// Degree-<=D slice of a subspace of S, echelonized.
using TruncatedSubspace = EchelonSpace;

/// Exact basis of (phi S ∩ R)_{<=D}. Errc::InvalidArgument if phi = 0 or
/// D < deg phi.
TruncatedSubspace intersection_phiS_R(const CoreAlgebra& r, const Poly& phi, int bound);

/// span{beta_d * g : g in gens, d + deg g <= D}, always inside the ideal (gens).
/// Errc::GeneratorNotInR if some generator is outside R.
TruncatedSubspace ideal_span(const CoreAlgebra& r, std::span<const Poly> gens, int bound, Exec exec = Exec::Parallel);

enum class Outcome { Proven, Refuted, Inconclusive };

std::string_view outcome_name(Outcome o);

struct Verification {
    Outcome outcome = Outcome::Inconclusive;
    /// For Refuted: an element separating the two ideals.
    std::optional<Poly> witness;
    std::string reason;
    /// For Proven: M with t^M phi S contained in (gens), M >= c0.
    int capture_exponent = -1;
    int bound = 0;
};

/// Decides (gens) = phi S ∩ R as R-ideals. Both Proven and Refuted are
/// certificates. Inconclusive means the degree bound was too small to find a
/// conductor capture t^M phi S ⊆ (gens); such a capture always exists when
/// the cofactors gens/phi have no common factor prime to t, so escalating
/// the bound eventually decides.
Verification verify_ideal_equality(const CoreAlgebra& r, const Poly& phi, std::span<const Poly> gens, int bound);

/// Default degree bound: deg phi + 2 c0 + max generator degree + 2.
int default_verification_bound(const CoreAlgebra& r, const Poly& phi, std::span<const Poly> gens);

/// Re-runs verify_ideal_equality with doubled bounds while Inconclusive, up
/// to `max_bound`.
Verification verify_with_escalation(const CoreAlgebra& r, const Poly& phi, std::span<const Poly> gens, int bound,
                                    int max_bound);

/// Membership in an ideal known to contain t^M phi S: x in (gens) iff x/phi
/// mod t^M lies in the image of (gens). Build with certify_ideal().
class IdealCertificate {
public:
    const Poly& phi() const noexcept { return phi_; }
    int capture_exponent() const noexcept { return capture_; }
    /// Exact membership of x in the ideal (gens).
    bool contains(const Poly& x) const;

private:
    friend std::optional<IdealCertificate> certify_ideal(const CoreAlgebra&, const Poly&, std::span<const Poly>, int);
    IdealCertificate(Poly phi, int capture, EchelonSpace image)
        : phi_(std::move(phi)), capture_(capture), image_(std::move(image)) {}

    Poly phi_;
    int capture_;
    EchelonSpace image_;
};

/// Requires every generator in phi S ∩ R; returns nullopt when either that
/// fails or no capture exponent exists below `bound`.
std::optional<IdealCertificate> certify_ideal(const CoreAlgebra& r, const Poly& phi, std::span<const Poly> gens,
                                              int bound);

/// dim_k J / P0 J for J = phi S ∩ R: the number of generators of J locally at
/// the origin (Nakayama). With phi = t this is dim P0/P0^2, with phi = t^q
/// the minimal number of generators of t^q S ∩ R. Needs bound >= deg phi + 2 c0
/// (Errc::BoundTooSmall).
int mu_at_point(const CoreAlgebra& r, const Poly& phi, int bound);

/// dim_k S / P0 S, the minimal number of R-module generators of S.
int module_mu_of_S(const CoreAlgebra& r);

}  // namespace semicore
