#include "semicore/worked_examples.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semicore/core_algebra.hpp"
#include "semicore/error.hpp"
#include "semicore/ideal.hpp"
#include "semicore/oracle.hpp"
#include "semicore/parse.hpp"

namespace semicore {

namespace {

// Collects failed checks; a row passes when nothing was recorded.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        ++count_;
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& text) { notes_.push_back(text); }
    bool passed() const { return failures_.empty(); }
    std::string summary() const {
        std::ostringstream out;
        if (failures_.empty()) {
            out << count_ << " checks";
        } else {
            out << failures_.size() << "/" << count_ << " failed: ";
            for (std::size_t i = 0; i < failures_.size(); ++i) out << (i ? "; " : "") << failures_[i];
        }
        for (const std::string& n : notes_) out << "; " << n;
        return out.str();
    }

private:
    int count_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

bool proven(const CoreAlgebra& r, const Poly& phi, const std::vector<Poly>& gens, int bound) {
    return verify_ideal_equality(r, phi, gens, bound).outcome == Outcome::Proven;
}

bool proven(const IdealPresentation& ideal, int bound) {
    return proven(ideal.ambient(), ideal.target(), ideal.generators(), bound);
}

NumericalSemigroup interval_semigroup(int e) {
    std::vector<int> gens;
    for (int i = 0; i < e; ++i) gens.push_back(e + i);
    return NumericalSemigroup(gens);
}

void non_monomial_core(Checks& ck) {
    const Field q = Field::rationals();
    const Poly gen = parse_poly("t^2 + t^3", q);
    const CoreAlgebra r = CoreAlgebra::make(4, {gen}, q);
    const EchelonBasis basis = r.canonical_basis(8);
    ck.expect(basis.pivots() == std::vector<int>{0, 3, 4, 5, 6, 7, 8}, "attained degrees {0,3,...,8}");
    ck.expect(r.contains(gen), "t^2+t^3 in R");
    ck.expect(!r.contains(parse_poly("t^3", q)), "t^3 not in R");
    ck.expect(!r.is_semigroup_ring(8), "R is not a semigroup ring");
    ck.expect(mu_at_point(r, Poly::monomial(q, 1), 12) == 2, "mu(P0) = 2");
}

void one_minus_t(Checks& ck) {
    const Field q = Field::rationals();
    const Poly f = parse_poly("1 - t", q);
    for (int c0 : {2, 3, 5}) {
        const CoreAlgebra r = CoreAlgebra::from_semigroup(interval_semigroup(c0), q);
        const int ell = std::max(2, c0);
        const IdealPresentation ideal = two_generator_ideal(r, f, c0, ell);
        const std::vector<Poly> expected{Poly::monomial(q, c0) - Poly::monomial(q, c0 + 1),
                                         Poly::constant(q.one()) - Poly::monomial(q, ell)};
        const std::string tag = "c0=" + std::to_string(c0);
        ck.expect(ideal.generators() == expected, tag + " generators (t^c - t^(c+1), 1 - t^ell)");
        ck.expect(proven(ideal, 40), tag + " equals (1-t)S ∩ R");
        const IdealPresentation other = two_generator_ideal(r, f, c0 + 1, ell + 2);
        ck.expect(proven(other, 40), tag + " equal for (c, ell) = (c0+1, ell+2)");
        ck.expect(!classify_principality(r, f).principal, tag + " not principal");
    }
    const CoreAlgebra s = CoreAlgebra::from_semigroup(NumericalSemigroup({1}), q);
    ck.expect(classify_principality(s, f).principal, "principal when R = S");
}

void gf2_irreducible(Checks& ck) {
    const Field k = Field::prime(2);
    const Poly f = parse_poly("1 + t^2 + t^3 + t^5 + t^6", k);
    const Poly g = invert_mod_power(f, 10);
    ck.expect(g == parse_poly("1 + t^2 + t^3 + t^4 + t^5 + t^6 + t^7", k), "g = 1+t^2+...+t^7");
    ck.expect(f * g == parse_poly("1 + t^10 + t^13", k), "fg = 1 + t^10 + t^13");
    const std::vector<CoreAlgebra> cores{CoreAlgebra::make(10, {}, k),
                                         CoreAlgebra::from_semigroup(interval_semigroup(4), k),
                                         CoreAlgebra::make(10, {f}, k)};
    for (std::size_t i = 0; i < cores.size(); ++i) {
        const CoreAlgebra& r = cores[i];
        const std::string tag = "core " + std::to_string(i);
        const IdealPresentation ideal = two_generator_ideal(r, f, 10, 10);
        ck.expect(ideal.generators()[1] == parse_poly("1 + t^10 + t^13", k), tag + " second generator");
        ck.expect(proven(ideal, 40), tag + " (t^10 f, 1+t^10+t^13) = fS ∩ R");
        const Principality p = classify_principality(r, f);
        ck.expect(p.principal == r.contains(f), tag + " principal iff f in R");
        if (p.principal) ck.expect(proven(r, f, {f}, 40), tag + " fS ∩ R = fR");
    }
}

void interval_points(Checks& ck) {
    struct Case {
        Field k;
        long long alpha;
    };
    const std::vector<Case> cases{{Field::rationals(), 1}, {Field::rationals(), 2}, {Field::prime(2), 1}};
    for (int e : {2, 3, 4}) {
        for (const Case& cs : cases) {
            const Field k = cs.k;
            const CoreAlgebra rk = CoreAlgebra::from_semigroup(interval_semigroup(e), k);
            const Scalar a = k.from_int(cs.alpha);
            const Poly f = Poly::constant(k.one()) - Poly::monomial(a, 1);
            const IdealPresentation m = two_generator_ideal(rk, f, e, e);
            const std::string tag = "e=" + std::to_string(e) + " alpha=" + a.to_string() + " over " + k.name();
            const std::vector<Poly> expected{Poly::monomial(k, e) - Poly::monomial(a, e + 1),
                                             Poly::constant(k.one()) - Poly::monomial(a.pow(e), e)};
            ck.expect(m.generators() == expected, tag + " (t^e - a t^(e+1), 1 - a^e t^e)");
            ck.expect(proven(m, 40), tag + " equals fS ∩ R");
            const Scalar inv = a.inverse();
            const std::vector<Poly> scaled{Poly::constant(inv.pow(e + 1)) - Poly::monomial(k, e + 1),
                                           Poly::constant(inv.pow(e)) - Poly::monomial(k, e)};
            ck.expect(proven(rk, f, scaled, 40), tag + " ((1/a)^(e+1) - t^(e+1), (1/a)^e - t^e) equals fS ∩ R");
        }
    }
}

void quadratic_family(Checks& ck) {
    const Field q = Field::rationals();
    const NumericalSemigroup h25({2, 5});
    const NumericalSemigroup h47 = interval_semigroup(4);
    ck.expect(h25.conductor() == 4 && h47.conductor() == 4, "c(H) = 4 for both semigroups");
    for (auto [a, b] : std::vector<std::pair<long long, long long>>{{0, 1}, {1, 1}, {1, 2}}) {
        const std::string tag = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
        const Poly f = Poly::from_ints(q, {1, a, b});
        const Poly g = invert_mod_power(f, 4);
        ck.expect(g == Poly::from_ints(q, {1, -a, a * a - b, 2 * a * b - a * a * a}), tag + " v = (1, -a, a^2-b, 2ab-a^3)");
        const long long c4 = 3 * a * a * b - b * b - a * a * a * a;
        const long long c5 = (2 * a * b - a * a * a) * b;
        ck.expect(f * g == Poly::from_ints(q, {1, 0, 0, 0, c4, c5}), tag + " fg formula");
        for (const NumericalSemigroup* h : {&h25, &h47}) {
            const CoreAlgebra r = CoreAlgebra::from_semigroup(*h, q);
            const bool expect_principal = (h == &h25) && a == 0;
            const Principality p = classify_principality(r, f);
            const std::string htag = tag + (h == &h25 ? " H=<2,5>" : " H=<4,5,6,7>");
            ck.expect(p.principal == expect_principal, htag + (expect_principal ? " principal" : " two-generated"));
            ck.expect(proven(two_generator_ideal(r, f, 4, 4), 40), htag + " (t^4 f, fg) = fS ∩ R");
            if (p.principal) ck.expect(proven(r, f, {f}, 40), htag + " fS ∩ R = fR");
        }
    }
}

void coprime_pairs(Checks& ck) {
    const Field q = Field::rationals();
    const NumericalSemigroup h({3, 5, 7});
    const CoreAlgebra r = CoreAlgebra::from_semigroup(h, q);
    const Poly f = parse_poly("1 - t", q);
    ck.expect(h.coprime_pair() == std::pair{3, 5}, "coprime pair (3,5)");
    const IdealPresentation m = rational_point_ideal(h, q, q.one());
    ck.expect(m.generators() == std::vector<Poly>{parse_poly("1 - t^3", q), parse_poly("1 - t^5", q)},
              "M = (1-t^3, 1-t^5)");
    for (auto [a, b] : std::vector<std::pair<int, int>>{{3, 5}, {3, 7}, {5, 7}}) {
        const std::vector<Poly> gens{Poly::constant(q.one()) - Poly::monomial(q, a),
                                     Poly::constant(q.one()) - Poly::monomial(q, b)};
        ck.expect(proven(r, f, gens, 40),
                  "(1-t^" + std::to_string(a) + ", 1-t^" + std::to_string(b) + ") = (1-t)S ∩ R");
    }
}

void closure_4_11_13(Checks& ck) {
    const Field q = Field::rationals();
    const NumericalSemigroup h({4, 11, 13});
    const CoreAlgebra r = CoreAlgebra::from_semigroup(h, q);
    const Poly phi = parse_poly("t^12 - t^13", q);
    const std::vector<int> bs = monomial_ideal_min_gens(h, 12);
    ck.expect(bs == std::vector<int>{12, 13, 15, 22}, "t^12 S ∩ R = (t^12, t^13, t^15, t^22)");
    ck.expect(choose_b0(h, bs) == 13, "b0 = 13");
    const IdealPresentation closure = integral_closure_one_minus_t(h, q, 12);
    const std::vector<Poly> expected{parse_poly("t^12 - t^13", q), parse_poly("t^13 - t^26", q),
                                     parse_poly("t^15 - t^28", q), parse_poly("t^22 - t^35", q)};
    ck.expect(closure.generators() == expected, "closure generators");
    ck.expect(proven(r, phi, expected, 60), "closure = t^12(1-t)S ∩ R");
    const std::vector<Poly> alternative{parse_poly("t^12", q), parse_poly("t^13 + t^14", q), parse_poly("t^15", q),
                                        parse_poly("t^22", q)};
    const Verification alt = verify_ideal_equality(r, phi, alternative, 60);
    ck.expect(alt.outcome != Outcome::Inconclusive, "alternative set adjudicated");
    std::string verdict = "alternative (t^12, t^13+t^14, t^15, t^22): " + std::string(outcome_name(alt.outcome));
    if (alt.witness) verdict += " (witness " + alt.witness->to_string() + ", " + alt.reason + ")";
    ck.note(verdict);
}

void origin_mu(Checks& ck) {
    const Field q = Field::rationals();
    for (const std::vector<int>& gens :
         std::vector<std::vector<int>>{{3, 5, 7}, {2, 5}, {4, 5, 6, 7}, {4, 11, 13}}) {
        const NumericalSemigroup h(gens);
        const CoreAlgebra r = CoreAlgebra::from_semigroup(h, q);
        const int mu = mu_at_point(r, Poly::monomial(q, 1), 2 * r.c0() + 2);
        ck.expect(mu == h.embedding_dimension(),
                  "mu(P0) = mu(H) = " + std::to_string(h.embedding_dimension()) + " for " + std::to_string(gens.front()) +
                      ",...");
    }
    for (int e : {2, 3, 4}) {
        const NumericalSemigroup h = interval_semigroup(e);
        ck.expect(mu_of_S(h) == e && module_mu_of_S(CoreAlgebra::from_semigroup(h, q)) == e,
                  "mu_R(S) = " + std::to_string(e));
    }
}

void rational_point_sweep(Checks& ck) {
    for (std::uint64_t p : {2u, 3u, 5u}) {
        const Field k = Field::prime(p);
        for (const std::vector<int>& gens : std::vector<std::vector<int>>{{2, 3}, {3, 5, 7}}) {
            const NumericalSemigroup h(gens);
            const CoreAlgebra r = CoreAlgebra::from_semigroup(h, k);
            for (std::uint64_t a = 0; a < p; ++a) {
                const Scalar alpha = Scalar::residue(a, p);
                const IdealPresentation m = rational_point_ideal(h, k, alpha);
                const std::string tag = "GF(" + std::to_string(p) + ") H=" + std::to_string(gens.front()) +
                                        ",... alpha=" + std::to_string(a);
                if (a == 0) {
                    ck.expect(mu_at_point(r, Poly::monomial(k, 1), 2 * r.c0() + 2) == h.embedding_dimension() &&
                                  m.mu_upper_bound() == h.embedding_dimension(),
                              tag + " mu(P0) = mu(H)");
                    ck.expect(proven(m, 30), tag + " P0 = tS ∩ R");
                    continue;
                }
                const Poly f = m.target();
                ck.expect(!classify_principality(r, f).principal && m.mu_upper_bound() == 2, tag + " mu = 2");
                ck.expect(proven(m, 30), tag + " M_alpha = (1 - t/alpha)S ∩ R");
            }
        }
    }
}

void interval_closures(Checks& ck) {
    const Field q = Field::rationals();
    const std::vector<Poly> fs{parse_poly("1 - t", q), parse_poly("1 + t^2", q), parse_poly("1 + 2*t + t^3", q)};
    for (int e : {2, 3, 4}) {
        const NumericalSemigroup h = interval_semigroup(e);
        const CoreAlgebra r = CoreAlgebra::from_semigroup(h, q);
        for (int qq : {0, e, e + 1, 2 * e}) {
            for (const Poly& f : fs) {
                const IdealPresentation closure = integral_closure_general(r, qq, f);
                int mu = closure.mu_upper_bound();
                if (qq == 0) mu = classify_principality(r, f).mu;
                const std::string tag = "e=" + std::to_string(e) + " q=" + std::to_string(qq) + " f=" + f.to_string();
                ck.expect(mu == 1 || mu == 2 || mu == e, tag + " mu in {1,2,e}");
                if (qq >= e) {
                    ck.expect(mu_at_point(r, closure.target(), closure.target().degree() + 2 * e) == e,
                              tag + " local mu at origin = e");
                }
                ck.expect(proven(closure, closure.target().degree() + 4 * e + 12), tag + " closure = phi S ∩ R");
            }
        }
    }
}

struct Entry {
    const char* id;
    const char* title;
    std::function<void(Checks&)> run;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries{
        {"ex2.1", "k[t^2+t^3] + t^4 S is a core but not a semigroup ring", non_monomial_core},
        {"ex2.6", "f = 1 - t: (t^c - t^(c+1), 1 - t^ell) for every c >= c0", one_minus_t},
        {"ex2.7", "GF(2), f = 1+t^2+t^3+t^5+t^6, ell = c = 10", gf2_irreducible},
        {"ex2.8", "H = <e,...,2e-1>, f = 1 - alpha t", interval_points},
        {"ex3.3", "f = 1 + a t + b t^2 over H = <2,5> and <4,5,6,7>", quadratic_family},
        {"ex4.3", "H = <3,5,7>: all coprime pairs present M = (1-t)S ∩ R", coprime_pairs},
        {"ex4.8", "H = <4,11,13>, q = 12, f = 1 - t closure generators", closure_4_11_13},
        {"mu-origin", "mu(P0) = mu(H) and mu_R(S) = e", origin_mu},
        {"points", "rational points over GF(2), GF(3), GF(5): two generators off the origin", rational_point_sweep},
        {"closure-mu", "H = <e,...,2e-1>: closures need 1, 2 or e generators", interval_closures},
    };
    return entries;
}

}  // namespace

std::vector<std::string> worked_example_ids() {
    std::vector<std::string> ids;
    for (const Entry& e : registry()) ids.emplace_back(e.id);
    return ids;
}

ExampleResult run_worked_example(const std::string& id) {
    ExampleResult result;
    result.id = id;
    const auto& entries = registry();
    auto it = std::find_if(entries.begin(), entries.end(), [&](const Entry& e) { return id == e.id; });
    if (it == entries.end()) {
        result.detail = "unknown example id";
        return result;
    }
    result.title = it->title;
    const auto start = std::chrono::steady_clock::now();
    Checks checks;
    try {
        it->run(checks);
        result.passed = checks.passed();
        result.detail = checks.summary();
    } catch (const std::exception& ex) {
        result.detail = std::string("error: ") + ex.what();
    }
    result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<ExampleResult> run_worked_examples(const std::vector<std::string>& only, int jobs) {
    std::vector<std::string> ids;
    for (const std::string& id : worked_example_ids()) {
        if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) ids.push_back(id);
    }
    for (const std::string& id : only) {
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    std::vector<ExampleResult> rows(ids.size());
    const long n = static_cast<long>(ids.size());
#ifdef _OPENMP
    const int threads = std::max(jobs, 1);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#else
    (void)jobs;
#endif
    for (long i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = run_worked_example(ids[static_cast<std::size_t>(i)]);
    return rows;
}

}  // namespace semicore
