#include "cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "core_spec.hpp"
#include "semicore/error.hpp"
#include "semicore/ideal.hpp"
#include "semicore/oracle.hpp"
#include "semicore/parse.hpp"
#include "semicore/spectra.hpp"
#include "semicore/worked_examples.hpp"

namespace semicore::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string field;
    bool json = false;
    std::optional<int> max_deg;
    std::string gens;
    std::string core;
    std::string semigroup;
    std::string f;
    std::string phi;
    std::string alpha;
    std::optional<int> c;
    std::optional<int> ell;
    int q = 0;
    int max_irr_deg = 1;
    std::vector<std::string> only;
    int jobs = 1;
};

Field field_of(const Options& o) { return o.field.empty() ? Field::rationals() : parse_field(o.field); }

CoreAlgebra core_of(const Options& o, const std::string& semigroup_text) {
    if (!o.core.empty()) {
        CoreAlgebra r = load_core_spec(o.core);
        if (!o.field.empty() && !(parse_field(o.field) == r.field())) {
            throw Error(Errc::FieldMismatch, "--field " + o.field + " disagrees with the core file (" + r.field().name() + ")");
        }
        return r;
    }
    if (semigroup_text.empty()) throw UsageError("a core is required (--core or semigroup generators)");
    return CoreAlgebra::from_semigroup(NumericalSemigroup(parse_int_list(semigroup_text)), field_of(o));
}

NumericalSemigroup semigroup_of(const Options& o) {
    if (o.gens.empty()) throw UsageError("--gens is required");
    return NumericalSemigroup(parse_int_list(o.gens));
}

std::vector<Poly> parse_poly_list(const std::string& text, Field field) {
    std::vector<Poly> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(parse_poly(item, field));
    }
    return out;
}

json poly_strings(const std::vector<Poly>& ps) {
    json arr = json::array();
    for (const Poly& p : ps) arr.push_back(p.to_string());
    return arr;
}

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
    return s;
}

int cmd_sgp_info(const Options& o, std::ostream& out) {
    const NumericalSemigroup h = semigroup_of(o);
    if (o.json) {
        out << json{{"generators", h.generators()},
                    {"minimal_generators", h.minimal_generators()},
                    {"multiplicity", h.multiplicity()},
                    {"conductor", h.conductor()},
                    {"frobenius", h.frobenius()},
                    {"gaps", h.gaps()}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << "generators: " << join(h.generators()) << "\n"
        << "minimal_generators: " << join(h.minimal_generators()) << "\n"
        << "multiplicity: " << h.multiplicity() << "\n"
        << "conductor: " << h.conductor() << "\n"
        << "frobenius: " << h.frobenius() << "\n"
        << "gaps: " << join(h.gaps()) << "\n";
    return kOk;
}

int cmd_core_basis(const Options& o, std::ostream& out) {
    const CoreAlgebra r = core_of(o, o.gens);
    const int bound = o.max_deg.value_or(std::max(2 * r.c0(), 1));
    const EchelonBasis basis = r.canonical_basis(bound);
    const std::vector<Poly> rows = basis.rows();
    const bool monomial = r.is_semigroup_ring(bound);
    if (o.json) {
        out << json{{"field", r.field().name()},
                    {"c0", r.c0()},
                    {"bound", bound},
                    {"attained_degrees", basis.pivots()},
                    {"semigroup_ring", monomial},
                    {"basis", poly_strings(rows)}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << "field: " << r.field().name() << "\n"
        << "c0: " << r.c0() << "\n"
        << "bound: " << bound << "\n"
        << "attained_degrees: " << join(basis.pivots()) << "\n"
        << "semigroup_ring: " << (monomial ? "yes" : "no") << "\n"
        << "basis:\n";
    for (const Poly& p : rows) out << "  " << p.to_string() << "\n";
    return kOk;
}

int print_ideal(const Options& o, const IdealPresentation& ideal, std::ostream& out) {
    if (o.json) {
        out << json{{"generators", poly_strings(ideal.generators())},
                    {"mu_upper_bound", ideal.mu_upper_bound()},
                    {"provenance", describe(ideal.provenance())},
                    {"target", ideal.target().to_string()}}
                   .dump(2)
            << "\n";
        return kOk;
    }
    out << "provenance: " << describe(ideal.provenance()) << "\n"
        << "target: " << ideal.target().to_string() << "\n"
        << "mu_upper_bound: " << ideal.mu_upper_bound() << "\n"
        << "generators:\n";
    for (const Poly& g : ideal.generators()) out << "  " << g.to_string() << "\n";
    return kOk;
}

int cmd_ideal_twogen(const Options& o, std::ostream& out) {
    const CoreAlgebra r = core_of(o, o.gens);
    return print_ideal(o, two_generator_ideal(r, parse_poly(o.f, r.field()), o.c, o.ell), out);
}

int cmd_ideal_point(const Options& o, std::ostream& out) {
    const Field k = field_of(o);
    return print_ideal(o, rational_point_ideal(semigroup_of(o), k, parse_scalar(o.alpha, k)), out);
}

int cmd_ideal_monomial(const Options& o, std::ostream& out) {
    const NumericalSemigroup h = semigroup_of(o);
    const Field k = field_of(o);
    std::vector<Poly> gens;
    for (int b : monomial_ideal_min_gens(h, o.q)) gens.push_back(Poly::monomial(k, b));
    return print_ideal(o, IdealPresentation(CoreAlgebra::from_semigroup(h, k), std::move(gens), Monomial{o.q}), out);
}

int cmd_ideal_closure(const Options& o, std::ostream& out) {
    if (o.f.empty()) {
        if (!o.core.empty()) throw UsageError("the f = 1 - t formula needs --gens");
        return print_ideal(o, integral_closure_one_minus_t(semigroup_of(o), field_of(o), o.q), out);
    }
    const CoreAlgebra r = core_of(o, o.gens);
    return print_ideal(o, integral_closure_general(r, o.q, parse_poly(o.f, r.field()), o.c, o.ell), out);
}

int cmd_verify_equality(const Options& o, std::ostream& out) {
    const CoreAlgebra r = core_of(o, o.semigroup);
    const Poly phi = parse_poly(o.phi, r.field());
    const std::vector<Poly> gens = parse_poly_list(o.gens, r.field());
    Verification v;
    if (o.max_deg) {
        v = verify_ideal_equality(r, phi, gens, *o.max_deg);
    } else {
        const int bound = default_verification_bound(r, phi, gens);
        v = verify_with_escalation(r, phi, gens, bound, 8 * bound);
    }
    if (o.json) {
        json report{{"outcome", std::string(outcome_name(v.outcome))},
                    {"phi", phi.to_string()},
                    {"generators", poly_strings(gens)},
                    {"bound", v.bound},
                    {"reason", v.reason}};
        report["witness"] = v.witness ? json(v.witness->to_string()) : json(nullptr);
        report["capture_exponent"] = v.capture_exponent >= 0 ? json(v.capture_exponent) : json(nullptr);
        out << report.dump(2) << "\n";
    } else {
        out << outcome_name(v.outcome) << " (bound " << v.bound << ")\n";
        if (v.outcome == Outcome::Proven) out << "capture_exponent: " << v.capture_exponent << "\n";
        if (v.witness) out << "witness: " << v.witness->to_string() << "\n";
        if (!v.reason.empty()) out << "reason: " << v.reason << "\n";
    }
    switch (v.outcome) {
        case Outcome::Proven: return kOk;
        case Outcome::Refuted: return kRefuted;
        default: return kInconclusive;
    }
}

int cmd_spectra_check(const Options& o, std::ostream& out) {
    const CoreAlgebra r = core_of(o, o.gens);
    const int bound = o.max_deg.value_or(2 * r.c0() + 2 * o.max_irr_deg + 4);
    const CorrespondenceReport rep = spec_correspondence_check(r, o.max_irr_deg, bound);
    if (o.json) {
        json points = json::array();
        for (const PointReport& p : rep.points) {
            points.push_back({{"pi", p.point.pi.to_string()},
                              {"degree", p.point.degree},
                              {"codimension", p.codimension},
                              {"stabilized_at", p.stabilized_at},
                              {"degree_ok", p.degree_ok}});
        }
        out << json{{"field", r.field().name()},
                    {"bound", bound},
                    {"points", points},
                    {"collisions", rep.collisions},
                    {"violations", rep.violations},
                    {"ok", rep.ok()}}
                   .dump(2)
            << "\n";
    } else {
        out << "field: " << r.field().name() << ", bound " << bound << ", " << rep.points.size() << " points\n";
        for (const PointReport& p : rep.points) {
            out << "  " << std::left << std::setw(24) << p.point.pi.to_string() << " deg " << p.point.degree
                << "  codim " << p.codimension << "  settled at " << p.stabilized_at << (p.degree_ok ? "" : "  MISMATCH")
                << "\n";
        }
        for (const std::string& v : rep.violations) out << "violation: " << v << "\n";
        out << (rep.ok() ? "OK" : "FAILED") << "\n";
    }
    return rep.ok() ? kOk : kRefuted;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
    const std::vector<ExampleResult> rows = run_worked_examples(o.only, o.jobs);
    bool all = true;
    for (const ExampleResult& r : rows) all = all && r.passed;
    if (o.json) {
        json arr = json::array();
        for (const ExampleResult& r : rows) {
            arr.push_back({{"id", r.id},
                           {"title", r.title},
                           {"verdict", r.passed ? "PASS" : "FAIL"},
                           {"detail", r.detail},
                           {"millis", r.millis}});
        }
        out << json{{"examples", arr}, {"all_passed", all}, {"jobs", o.jobs}}.dump(2) << "\n";
    } else {
        int passed = 0;
        for (const ExampleResult& r : rows) {
            passed += r.passed ? 1 : 0;
            out << std::left << std::setw(12) << r.id << std::setw(6) << (r.passed ? "PASS" : "FAIL") << std::right
                << std::setw(10) << std::fixed << std::setprecision(1) << r.millis << " ms  " << r.title << "\n"
                << std::string(12, ' ') << r.detail << "\n";
        }
        out << passed << "/" << rows.size() << " passed (jobs " << o.jobs << ")\n";
    }
    return all ? kOk : kRefuted;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Ideals in cores of k[t]: presentations and exact verification", "semicore"};
    app.require_subcommand(1);
    app.add_option("--field", o.field, "Q or Fp:<p> (default Q)");
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--max-deg", o.max_deg, "degree bound");

    auto group = [&app](const std::string& name, const std::string& help) {
        CLI::App* g = app.add_subcommand(name, help);
        g->require_subcommand(1);
        g->fallthrough();
        return g;
    };
    auto leaf = [](CLI::App* g, const std::string& name, const std::string& help) {
        CLI::App* s = g->add_subcommand(name, help);
        s->fallthrough();
        return s;
    };
    auto core_source = [&o](CLI::App* s) {
        CLI::Option* gens = s->add_option("--gens", o.gens, "semigroup generators, e.g. 4,11,13");
        CLI::Option* core = s->add_option("--core", o.core, "core spec file (JSON)");
        gens->excludes(core);
    };

    CLI::App* sgp = group("sgp", "numerical semigroups");
    CLI::App* sgp_info = leaf(sgp, "info", "semigroup invariants");
    sgp_info->add_option("--gens", o.gens, "semigroup generators")->required();

    CLI::App* core = group("core", "core algebras");
    CLI::App* core_basis = leaf(core, "basis", "canonical echelon basis up to --max-deg");
    core_source(core_basis);

    CLI::App* ideal = group("ideal", "ideal presentations");
    CLI::App* twogen = leaf(ideal, "twogen", "(t^c f, f g) for fS ∩ R");
    core_source(twogen);
    twogen->add_option("--f", o.f, "polynomial with constant term 1")->required();
    twogen->add_option("--c", o.c);
    twogen->add_option("--ell", o.ell);
    CLI::App* point = leaf(ideal, "point", "maximal ideal at a rational point of k[H]");
    point->add_option("--gens", o.gens)->required();
    point->add_option("--alpha", o.alpha)->required();
    CLI::App* monomial = leaf(ideal, "monomial", "minimal generators of t^q S ∩ k[H]");
    monomial->add_option("--gens", o.gens)->required();
    monomial->add_option("--q", o.q)->required();
    CLI::App* closure = leaf(ideal, "closure", "generators of (t^q f)S ∩ R (f = 1 - t by default)");
    core_source(closure);
    closure->add_option("--q", o.q)->required();
    closure->add_option("--f", o.f);
    closure->add_option("--c", o.c);
    closure->add_option("--ell", o.ell);

    CLI::App* verify = group("verify", "exact verification");
    CLI::App* equality = leaf(verify, "equality", "decide (gens) = phi S ∩ R");
    CLI::Option* vcore = equality->add_option("--core", o.core, "core spec file (JSON)");
    CLI::Option* vsgp = equality->add_option("--semigroup", o.semigroup, "semigroup generators instead of --core");
    vcore->excludes(vsgp);
    equality->add_option("--phi", o.phi)->required();
    equality->add_option("--gens", o.gens, "ideal generators separated by ';'")->required();

    CLI::App* spectra = group("spectra", "closed points of Spec S over GF(p)");
    CLI::App* check = leaf(spectra, "check", "injectivity and residue degrees");
    core_source(check);
    check->add_option("--max-irr-deg", o.max_irr_deg)->check(CLI::PositiveNumber);

    CLI::App* paper = group("paper", "worked examples");
    CLI::App* reproduce = leaf(paper, "reproduce", "replay every worked example");
    reproduce->add_option("--only", o.only, "example id (repeatable)");
    reproduce->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (sgp_info->parsed()) return cmd_sgp_info(o, out);
        if (core_basis->parsed()) return cmd_core_basis(o, out);
        if (twogen->parsed()) return cmd_ideal_twogen(o, out);
        if (point->parsed()) return cmd_ideal_point(o, out);
        if (monomial->parsed()) return cmd_ideal_monomial(o, out);
        if (closure->parsed()) return cmd_ideal_closure(o, out);
        if (equality->parsed()) return cmd_verify_equality(o, out);
        if (check->parsed()) return cmd_spectra_check(o, out);
        if (reproduce->parsed()) return cmd_reproduce(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "no subcommand\n";
    return kUsage;
}

}  // namespace semicore::cli
