#pragma once

#include <optional>
#include <vector>

#include "semicore/echelon.hpp"
#include "semicore/poly.hpp"
#include "semicore/semigroup.hpp"

namespace semicore {

/// Degree-echelon k-basis of R_{<=D}: one monic element per attained degree.
using EchelonBasis = EchelonSpace;

/// A core R of S = k[t]: the k-algebra generated by `generators` together
/// with t^{c0}, ..., t^{2 c0 - 1}, so t^{c0} S is always contained in R.
class CoreAlgebra {
public:
    /// k[H] with c0 = c(H) (or 1 when H = N).
    static CoreAlgebra from_semigroup(const NumericalSemigroup& h, Field field);
    /// Errc::ConstantGenerator for a constant generator, Errc::InvalidArgument for c0 < 1.
    static CoreAlgebra make(int c0, std::vector<Poly> generators, Field field);

    const Field& field() const noexcept { return field_; }
    int c0() const noexcept { return c0_; }
    const std::vector<Poly>& generators() const noexcept { return generators_; }
    /// Set when the core was built as a semigroup ring.
    const std::optional<NumericalSemigroup>& semigroup() const noexcept { return semigroup_; }

    /// R modulo t^{c0}: the subalgebra of k[t]/(t^{c0}) generated by the
    /// truncated generators. R is exactly its preimage in S.
    const EchelonSpace& residue_algebra() const noexcept { return residue_; }

    /// Canonical basis of R_{<=D}: the residue algebra's rows plus t^d for
    /// c0 <= d <= D. Keys are exactly the degrees of nonzero elements of R.
    EchelonBasis canonical_basis(int bound) const;

    bool contains(const Poly& f) const;
    /// Membership by reduction against a precomputed basis (falls back to the
    /// residue test when f exceeds the basis bound).
    bool contains(const Poly& f, const EchelonBasis& basis) const;

    /// True iff t^d lies in R for every attained degree d <= bound.
    bool is_semigroup_ring(int bound) const;

    /// The least positive attained degree; S = sum_{j<m} R t^j minimally.
    int min_positive_degree() const;

private:
    CoreAlgebra(Field field, int c0, std::vector<Poly> generators, std::optional<NumericalSemigroup> h);

    Field field_;
    int c0_;
    std::vector<Poly> generators_;
    std::optional<NumericalSemigroup> semigroup_;
    EchelonSpace residue_;
};

}  // namespace semicore
