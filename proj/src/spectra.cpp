#include "semicore/spectra.hpp"

#include <algorithm>

#include "semicore/error.hpp"

namespace semicore {

namespace {

// All monic polynomials of exact degree d over GF(p), in the order of their
// coefficient vectors read from t^{d-1} down to t^0.
std::vector<Poly> monic_of_degree(Field k, int d) {
    const std::uint64_t p = k.characteristic();
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    std::vector<Poly> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Scalar> coeffs(static_cast<std::size_t>(d) + 1, k.zero());
        std::uint64_t rest = code;
        for (int i = 0; i < d; ++i) {
            coeffs[static_cast<std::size_t>(i)] = Scalar::residue(rest % p, p);
            rest /= p;
        }
        coeffs.back() = k.one();
        out.emplace_back(k, std::move(coeffs));
    }
    return out;
}

}  // namespace

std::vector<ClosedPoint> monic_irreducibles(std::uint64_t p, int max_degree) {
    if (max_degree < 1) throw Error(Errc::InvalidArgument, "max degree must be at least 1");
    const Field k = Field::prime(p);
    std::vector<ClosedPoint> found;
    for (int d = 1; d <= max_degree; ++d) {
        for (Poly& candidate : monic_of_degree(k, d)) {
            const bool reducible = std::any_of(found.begin(), found.end(), [&](const ClosedPoint& q) {
                return 2 * q.degree <= d && divrem(candidate, q.pi).second.is_zero();
            });
            if (reducible) continue;
            const bool origin = d == 1 && candidate.coeff(0).is_zero();
            found.push_back(ClosedPoint{std::move(candidate), d, origin});
        }
    }
    return found;
}

PointImage point_to_R(const CoreAlgebra& r, const ClosedPoint& point, int bound) {
    if (!(r.field() == point.pi.field())) throw Error(Errc::FieldMismatch, "point and core over different fields");
    PointImage image{point, intersection_phiS_R(r, point.pi, bound), std::nullopt};
    const Scalar constant = point.pi.coeff(0);
    if (!constant.is_zero()) {
        image.presentation = two_generator_ideal(r, point.pi.scaled(constant.inverse()));
    }
    return image;
}

CorrespondenceReport spec_correspondence_check(const CoreAlgebra& r, int max_degree, int bound) {
    if (r.field().is_rational()) throw Error(Errc::FieldMismatch, "closed points are enumerated over GF(p) only");
    const std::vector<ClosedPoint> points = monic_irreducibles(r.field().characteristic(), max_degree);
    const EchelonBasis basis = r.canonical_basis(bound);
    const long n = static_cast<long>(points.size());

    std::vector<std::optional<TruncatedSubspace>> slices(points.size());
    std::vector<PointReport> reports(points.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
        const ClosedPoint& pt = points[static_cast<std::size_t>(i)];
        TruncatedSubspace slice = intersection_phiS_R(r, pt.pi, bound);
        PointReport rep{pt};
        int r_dim = 0;
        int s_dim = 0;
        int prev = -1;
        int run = 0;
        for (int d = 0; d <= bound; ++d) {
            if (basis.has_pivot(d)) ++r_dim;
            if (slice.has_pivot(d)) ++s_dim;
            const int codim = r_dim - s_dim;
            run = codim == prev ? run + 1 : 1;
            prev = codim;
            if (run == 3 && rep.stabilized_at < 0) rep.stabilized_at = d;
            if (run < 3) rep.stabilized_at = -1;
        }
        rep.codimension = prev;
        rep.degree_ok = rep.stabilized_at >= 0 && rep.codimension == pt.degree;
        reports[static_cast<std::size_t>(i)] = std::move(rep);
        slices[static_cast<std::size_t>(i)] = std::move(slice);
    }

    CorrespondenceReport out;
    out.points = std::move(reports);
    for (const PointReport& rep : out.points) {
        if (!rep.degree_ok) {
            out.violations.push_back("residue degree of " + rep.point.pi.to_string() + ": codimension " +
                                     std::to_string(rep.codimension) + ", expected " + std::to_string(rep.point.degree));
        }
    }
    for (std::size_t i = 0; i < slices.size(); ++i) {
        for (std::size_t j = i + 1; j < slices.size(); ++j) {
            if (*slices[i] == *slices[j]) {
                out.collisions.emplace_back(static_cast<int>(i), static_cast<int>(j));
                out.violations.push_back("injectivity: " + points[i].pi.to_string() + " and " +
                                         points[j].pi.to_string() + " give the same slice");
            }
        }
    }
    return out;
}

}  // namespace semicore
