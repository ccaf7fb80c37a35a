#include "semicore/oracle.hpp"

#include <algorithm>

#include "semicore/error.hpp"

namespace semicore {

namespace {

// Given images[j] of the basis vectors t^j (j < n) under a linear map into
// polynomials of degree < width, returns the kernel as a space of
// polynomials sum_j c_j t^j. Each vector is augmented as image * t^n + t^j;
// with top-degree pivots the rows of degree < n span exactly the kernel.
EchelonSpace kernel_of(Field field, const std::vector<Poly>& images, int width) {
    const int n = static_cast<int>(images.size());
    EchelonSpace augmented(field, n + std::max(width, 1) - 1);
    std::vector<Poly> vs;
    vs.reserve(images.size());
    for (int j = 0; j < n; ++j) {
        Poly v = images[static_cast<std::size_t>(j)].shifted(n);
        v += Poly::monomial(field, j);
        vs.push_back(std::move(v));
    }
    augmented.insert_all(std::move(vs));
    EchelonSpace kernel(field, std::max(n - 1, 0));
    for (int d = 0; d < n; ++d) {
        if (augmented.has_pivot(d)) kernel.insert(augmented.row(d));
    }
    return kernel;
}

// {s : deg s < n, phi*s in R}, as a space of s. Uses R = preimage of its
// residue algebra mod t^{c0}.
EchelonSpace cofactor_space(const CoreAlgebra& r, const Poly& phi, int n) {
    const int c0 = r.c0();
    std::vector<Poly> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        images.push_back(r.residue_algebra().reduce(phi.shifted(j).truncated(c0)));
    }
    if (n == 0) return EchelonSpace(r.field(), 0);
    return kernel_of(r.field(), images, c0);
}

// Scales a witness so it reads naturally: constant term 1 when present,
// monic otherwise.
Poly normalize_witness(const Poly& w) {
    const Scalar c = w.coeff(0);
    if (!c.is_zero()) return w.scaled(c.inverse());
    return w.monic();
}

int max_degree(std::span<const Poly> gens) {
    int top = 0;
    for (const Poly& g : gens) top = std::max(top, g.degree());
    return top;
}

// Image of (gens) in S / t^m via x = phi*s -> s mod t^m, valid once
// t^m phi S ⊆ (gens) and m >= c0: then (gens) = span{beta_d g : d < m} + t^m phi S.
EchelonSpace ideal_image(const CoreAlgebra& r, const std::vector<Poly>& cofactors, int m) {
    const EchelonBasis basis = r.canonical_basis(m - 1);
    EchelonSpace image(r.field(), m - 1);
    std::vector<Poly> products;
    for (const Poly& beta : basis.rows()) {
        for (const Poly& s : cofactors) {
            if (beta.degree() + s.order() < m) products.push_back((beta * s).truncated(m));
        }
    }
    image.insert_all(std::move(products));
    return image;
}

struct Capture {
    bool ok = false;
    std::optional<Poly> offender;
    std::vector<Poly> cofactors;
    int exponent = -1;
};

// Step 1 and step 2 of the decision procedure.
Capture find_capture(const CoreAlgebra& r, const Poly& phi, std::span<const Poly> gens, int bound) {
    Capture cap;
    for (const Poly& g : gens) {
        auto [q, rem] = divrem(g, phi);
        if (!rem.is_zero() || !r.contains(g)) {
            cap.offender = g;
            return cap;
        }
        cap.cofactors.push_back(std::move(q));
    }
    const int c0 = r.c0();
    const int top = bound - phi.degree();
    if (top < 0) return cap;
    const TruncatedSubspace span = ideal_span(r, gens, bound);
    std::vector<char> inside(static_cast<std::size_t>(top) + 1);
    for (int m = 0; m <= top; ++m) inside[static_cast<std::size_t>(m)] = span.contains(phi.shifted(m));
    int run = 0;
    for (int m = 0; m <= top; ++m) {
        run = inside[static_cast<std::size_t>(m)] ? run + 1 : 0;
        if (run == c0) {
            cap.exponent = m - c0 + 1;
            cap.ok = true;
            return cap;
        }
    }
    return cap;
}

}  // namespace

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Proven: return "Proven";
        case Outcome::Refuted: return "Refuted";
        case Outcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

TruncatedSubspace intersection_phiS_R(const CoreAlgebra& r, const Poly& phi, int bound) {
    if (phi.is_zero()) throw Error(Errc::InvalidArgument, "phi must be nonzero");
    if (bound < phi.degree()) throw Error(Errc::InvalidArgument, "bound below deg phi");
    const int n = bound - phi.degree() + 1;
    const EchelonSpace cofactors = cofactor_space(r, phi, n);
    TruncatedSubspace out(r.field(), bound);
    std::vector<Poly> elements;
    for (const Poly& s : cofactors.rows()) elements.push_back(phi * s);
    out.insert_all(std::move(elements));
    return out;
}

TruncatedSubspace ideal_span(const CoreAlgebra& r, std::span<const Poly> gens, int bound, Exec exec) {
    for (const Poly& g : gens) {
        if (!r.contains(g)) throw Error(Errc::GeneratorNotInR, g.to_string());
    }
    const EchelonBasis basis = r.canonical_basis(bound);
    std::vector<Poly> products;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        for (const Poly& beta : basis.rows()) {
            if (beta.degree() + g.degree() <= bound) products.push_back(beta * g);
        }
    }
    TruncatedSubspace out(r.field(), bound);
    out.insert_all(std::move(products), exec);
    return out;
}

int default_verification_bound(const CoreAlgebra& r, const Poly& phi, std::span<const Poly> gens) {
    return phi.degree() + 2 * r.c0() + max_degree(gens) + 2;
}

Verification verify_ideal_equality(const CoreAlgebra& r, const Poly& phi, std::span<const Poly> gens, int bound) {
    if (phi.is_zero()) throw Error(Errc::InvalidArgument, "phi must be nonzero");
    Verification v;
    v.bound = bound;
    if (gens.empty()) {
        v.outcome = Outcome::Refuted;
        v.witness = normalize_witness(phi.shifted(r.c0()));
        v.reason = "no generators, but t^c0 phi lies in phi S ∩ R";
        return v;
    }
    Capture cap = find_capture(r, phi, gens, bound);
    if (cap.offender) {
        v.outcome = Outcome::Refuted;
        v.witness = *cap.offender;
        v.reason = "generator not in phi S ∩ R";
        return v;
    }
    if (!cap.ok) {
        // With u = gcd(gens / phi) stripped of t, (gens) S = t^a u phi S. If u
        // is not constant, t^c0 phi lies in phi S ∩ R but not in u phi S.
        Poly common(r.field());
        for (const Poly& g : gens) common = gcd(common, divrem(g, phi).first);
        const Poly u = divrem(common, Poly::monomial(r.field(), common.order())).first;
        if (u.degree() > 0) {
            v.outcome = Outcome::Refuted;
            v.witness = normalize_witness(phi.shifted(r.c0()));
            v.reason = "generators share the factor " + u.to_string() + " prime to t";
            return v;
        }
        v.reason = "no conductor capture below bound " + std::to_string(bound);
        return v;
    }
    const int m = std::max(cap.exponent, r.c0());
    const EchelonSpace target = cofactor_space(r, phi, m);
    const EchelonSpace image = ideal_image(r, cap.cofactors, m);
    if (const Poly* missing = image.first_missing(target)) {
        v.outcome = Outcome::Refuted;
        v.witness = normalize_witness(phi * *missing);
        v.reason = "element of phi S ∩ R outside the ideal";
        return v;
    }
    v.outcome = Outcome::Proven;
    v.capture_exponent = m;
    return v;
}

Verification verify_with_escalation(const CoreAlgebra& r, const Poly& phi, std::span<const Poly> gens, int bound,
                                    int max_bound) {
    Verification v = verify_ideal_equality(r, phi, gens, bound);
    while (v.outcome == Outcome::Inconclusive && bound < max_bound) {
        bound = std::min(2 * bound, max_bound);
        v = verify_ideal_equality(r, phi, gens, bound);
    }
    return v;
}

bool IdealCertificate::contains(const Poly& x) const {
    auto [q, rem] = divrem(x, phi_);
    if (!rem.is_zero()) return false;
    return image_.contains(q.truncated(capture_));
}

std::optional<IdealCertificate> certify_ideal(const CoreAlgebra& r, const Poly& phi, std::span<const Poly> gens,
                                              int bound) {
    Capture cap = find_capture(r, phi, gens, bound);
    if (cap.offender || !cap.ok) return std::nullopt;
    const int m = std::max(cap.exponent, r.c0());
    return IdealCertificate(phi, m, ideal_image(r, cap.cofactors, m));
}

int mu_at_point(const CoreAlgebra& r, const Poly& phi, int bound) {
    if (phi.is_zero()) throw Error(Errc::InvalidArgument, "phi must be nonzero");
    const int c0 = r.c0();
    const int n = bound - phi.degree() + 1;
    if (n < 2 * c0) {
        throw Error(Errc::BoundTooSmall, "need bound >= deg phi + 2*c0 - 1 = " + std::to_string(phi.degree() + 2 * c0 - 1));
    }
    // J = phi S ∩ R contains t^{c0} phi S, and P0 J contains t^{2 c0} phi S,
    // so both are read off in S / t^n through x = phi*s -> s.
    const EchelonSpace j_image = cofactor_space(r, phi, n);
    const EchelonBasis basis = r.canonical_basis(2 * c0 - 1);
    std::vector<Poly> products;
    const std::vector<Poly> j_rows = j_image.rows();
    for (const Poly& beta : basis.rows()) {
        if (beta.degree() == 0) continue;
        for (const Poly& s : j_rows) {
            if (beta.order() + s.order() < n) products.push_back((beta * s).truncated(n));
        }
    }
    EchelonSpace pj_image(r.field(), n - 1);
    pj_image.insert_all(std::move(products));
    return j_image.dim() - pj_image.dim();
}

int module_mu_of_S(const CoreAlgebra& r) {
    const int n = 2 * r.c0();
    const EchelonBasis basis = r.canonical_basis(n - 1);
    EchelonSpace p0s(r.field(), n - 1);
    std::vector<Poly> products;
    for (const Poly& beta : basis.rows()) {
        if (beta.degree() == 0) continue;
        for (int j = 0; beta.order() + j < n; ++j) products.push_back(beta.shifted(j).truncated(n));
    }
    p0s.insert_all(std::move(products));
    return n - p0s.dim();
}

}  // namespace semicore
