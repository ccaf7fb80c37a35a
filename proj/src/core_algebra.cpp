#include "semicore/core_algebra.hpp"

#include <algorithm>
#include <string>

#include "semicore/error.hpp"

namespace semicore {

namespace {

// Closes span{1, generators mod t^n} under multiplication in k[t]/(t^n).
// The span grows by at least one dimension per productive pass and is
// bounded by n, so this terminates after at most n passes.
EchelonSpace residue_closure(Field field, int n, const std::vector<Poly>& generators) {
    EchelonSpace space(field, n - 1);
    space.insert(Poly::constant(field.one()));
    for (const Poly& g : generators) space.insert(g.truncated(n));
    for (;;) {
        const std::vector<Poly> rows = space.rows();
        std::vector<Poly> products;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].degree() == 0) continue;
            for (std::size_t j = i; j < rows.size(); ++j) {
                if (rows[j].degree() == 0 || rows[i].order() + rows[j].order() >= n) continue;
                products.push_back((rows[i] * rows[j]).truncated(n));
            }
        }
        if (space.insert_all(std::move(products)) == 0) return space;
    }
}

}  // namespace

CoreAlgebra::CoreAlgebra(Field field, int c0, std::vector<Poly> generators, std::optional<NumericalSemigroup> h)
    : field_(field),
      c0_(c0),
      generators_(std::move(generators)),
      semigroup_(std::move(h)),
      residue_(residue_closure(field, c0, generators_)) {}

CoreAlgebra CoreAlgebra::from_semigroup(const NumericalSemigroup& h, Field field) {
    std::vector<Poly> gens;
    for (int a : h.minimal_generators()) gens.push_back(Poly::monomial(field, a));
    return CoreAlgebra(field, std::max(h.conductor(), 1), std::move(gens), h);
}

CoreAlgebra CoreAlgebra::make(int c0, std::vector<Poly> generators, Field field) {
    if (c0 < 1) throw Error(Errc::InvalidArgument, "c0 must be positive");
    for (const Poly& g : generators) {
        if (!(g.field() == field)) throw Error(Errc::FieldMismatch, "generator outside field " + field.name());
        if (g.degree() < 1) throw Error(Errc::ConstantGenerator, "generator " + g.to_string() + " is constant");
    }
    return CoreAlgebra(field, c0, std::move(generators), std::nullopt);
}

EchelonBasis CoreAlgebra::canonical_basis(int bound) const {
    EchelonBasis basis(field_, bound);
    for (const Poly& row : residue_.rows()) {
        if (row.degree() <= bound) basis.insert(row);
    }
    for (int d = c0_; d <= bound; ++d) basis.insert(Poly::monomial(field_, d));
    return basis;
}

bool CoreAlgebra::contains(const Poly& f) const {
    if (!(f.field() == field_)) throw Error(Errc::FieldMismatch, "membership test outside field");
    return residue_.contains(f.truncated(c0_));
}

bool CoreAlgebra::contains(const Poly& f, const EchelonBasis& basis) const {
    if (f.degree() > basis.bound()) return contains(f);
    return basis.contains(f);
}

bool CoreAlgebra::is_semigroup_ring(int bound) const {
    for (int d : residue_.pivots()) {
        if (d <= bound && !contains(Poly::monomial(field_, d))) return false;
    }
    return true;
}

int CoreAlgebra::min_positive_degree() const {
    for (int d : residue_.pivots()) {
        if (d > 0) return d;
    }
    return c0_;
}

}  // namespace semicore
