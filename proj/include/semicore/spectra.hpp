#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semicore/core_algebra.hpp"
#include "semicore/ideal.hpp"
#include "semicore/oracle.hpp"

namespace semicore {

/// A closed point of Spec S over GF(p): a monic irreducible pi.
struct ClosedPoint {
    Poly pi;
    int degree;
    bool is_origin;  // pi = t
};

/// All monic irreducibles of degree 1..max_degree over GF(p), sorted by
/// degree, then by coefficient vector from the top. Errc::NonPrimeModulus.
std::vector<ClosedPoint> monic_irreducibles(std::uint64_t p, int max_degree);

struct PointImage {
    ClosedPoint point;
    /// (pi S ∩ R)_{<=D}; for pi = t this is the P0 slice.
    TruncatedSubspace slice;
    /// (t^c f, f g) with f = pi / pi(0), present when pi(0) != 0.
    std::optional<IdealPresentation> presentation;
};

/// Errc::FieldMismatch unless R and the point share the field.
PointImage point_to_R(const CoreAlgebra& r, const ClosedPoint& point, int bound);

struct PointReport {
    ClosedPoint point;
    /// dim R_{<=D'} - dim (pi S ∩ R)_{<=D'} at D' = bound.
    int codimension = 0;
    /// First D' where three consecutive codimensions agree, or -1.
    int stabilized_at = -1;
    bool degree_ok = false;
};

struct CorrespondenceReport {
    std::vector<PointReport> points;
    /// Index pairs of distinct points with identical slices.
    std::vector<std::pair<int, int>> collisions;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// For every closed point of degree <= max_degree: checks that distinct points
/// give distinct slices of R, and that the residue codimension settles at
/// deg pi.
CorrespondenceReport spec_correspondence_check(const CoreAlgebra& r, int max_degree, int bound);

}  // namespace semicore
