// Command-line front end: validation, conversion, duals, property checks, sweeps, generation, DOT export.

#include "kodual/generate.hpp"
#include "kodual/io.hpp"
#include "kodual/sweep.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <thread>

using namespace kodual;
using io::Json;

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kParse = 2 };

/// Well-formed input that fails validation, or a property that does not hold.
class Rejected : public Error {
public:
    using Error::Error;
};

struct Settings {
    std::uint64_t seed = 0;
    std::string bound;
    bool override_guardrail = false;
    std::string format = "json";
    unsigned jobs = 1;

    io::Format fmt() const { return format == "text" ? io::Format::Text : io::Format::Json; }
};

template <class T>
T accept(Result<T> r) {
    if (!r) throw Rejected(format_diagnostics(r.diagnostics()));
    return std::move(r).value();
}

void print(const Json& doc, const Settings& s) { std::cout << io::emit(doc, s.fmt()); }

BiDcpo as_bidcpo(const Json& doc, const std::string& kind) {
    if (kind == "polarity" || kind == "bidcpo") return accept(io::decode_bidcpo(doc));
    if (kind == "kospace") return kospace_to_bidcpo(accept(io::decode_kospace(doc)));
    if (kind == "embedded") return embedded_to_bidcpo(accept(io::decode_embedded(doc)));
    throw PreconditionError("a bi-dcpo cannot be read from a '" + kind + "' document");
}

[[noreturn]] void unsupported(const std::string& what, const std::string& kind) {
    throw PreconditionError(what + " is not available for '" + kind + "' documents");
}

// ---- validate ---------------------------------------------------------------------------------

int cmd_validate(const std::string& path, std::string kind, const Settings& s) {
    const auto doc = io::load_document(path);
    if (kind.empty()) kind = io::kind_of(doc);
    Json summary;
    summary["kind"] = kind;
    if (kind == "poset") {
        summary["elements"] = accept(io::decode_poset(doc)).size();
    } else if (kind == "lattice") {
        summary["elements"] = accept(io::decode_lattice(doc)).size();
    } else if (kind == "polarity") {
        const auto p = io::decode_polarity(doc);
        summary["purified"] = is_purified(p);
    } else if (kind == "bidcpo") {
        accept(io::decode_bidcpo(doc));
    } else if (kind == "kospace") {
        const auto k = accept(io::decode_kospace(doc));
        summary["points"] = k.size();
    } else if (kind == "topspace") {
        accept(io::decode_topspace(doc));
    } else if (kind == "dirspace") {
        accept(io::decode_dirspace(doc));
    } else if (kind == "embedded") {
        accept(io::decode_embedded(doc));
    } else if (kind == "crelation") {
        accept(io::decode_crelation(doc));
    } else if (kind == "galois") {
        accept(io::decode_galois(doc));
    } else {
        throw io::ParseError("field 'kind': unknown kind '" + kind + "'");
    }
    summary["valid"] = true;
    print(summary, s);
    return kOk;
}

// ---- convert ----------------------------------------------------------------------------------

void require_iso(bool ok, const std::string& what) {
    if (!ok) throw Rejected("roundtrip failed: " + what + " is not recovered up to isomorphism");
}

int cmd_convert(const std::string& path, const std::string& to, bool roundtrip, const Settings& s) {
    const auto doc = io::load_document(path);
    const auto from = io::kind_of(doc);
    auto no_roundtrip = [&] {
        if (roundtrip) unsupported("--roundtrip", from);
    };
    if (from == "kospace") {
        const auto k = accept(io::decode_kospace(doc));
        if (to == "bidcpo") {
            const auto b = kospace_to_bidcpo(k);
            if (roundtrip) require_iso(kospace_isomorphic(k, accept(bidcpo_to_kospace(b))).has_value(), "ko-space");
            print(io::encode(b), s);
        } else if (to == "embedded") {
            const auto e = kospace_to_embedded(k);
            if (roundtrip)
                require_iso(kospace_isomorphic(k, accept(embedded_to_kospace(e))).has_value(), "ko-space");
            print(io::encode(e), s);
        } else if (to == "kospace") {
            print(io::encode(k), s);
        } else {
            unsupported("conversion to '" + to + "'", from);
        }
    } else if (from == "polarity" || from == "bidcpo") {
        const auto b = accept(io::decode_bidcpo(doc));
        if (to == "kospace") {
            const auto k = accept(bidcpo_to_kospace(b));
            if (roundtrip) require_iso(bidcpo_isomorphic(b, kospace_to_bidcpo(k)).has_value(), "bi-dcpo");
            print(io::encode(k), s);
        } else if (to == "embedded") {
            const auto e = bidcpo_to_embedded(b);
            if (roundtrip) require_iso(bidcpo_isomorphic(b, embedded_to_bidcpo(e)).has_value(), "bi-dcpo");
            print(io::encode(e), s);
        } else if (to == "bidcpo") {
            print(io::encode(b), s);
        } else {
            unsupported("conversion to '" + to + "'", from);
        }
    } else if (from == "embedded") {
        const auto e = accept(io::decode_embedded(doc));
        if (to == "kospace") {
            const auto k = accept(embedded_to_kospace(e));
            if (roundtrip)
                require_iso(embedded_isomorphic(e, kospace_to_embedded(k)).has_value(), "embedded bi-dcpo");
            print(io::encode(k), s);
        } else if (to == "bidcpo") {
            const auto b = embedded_to_bidcpo(e);
            if (roundtrip)
                require_iso(embedded_isomorphic(e, bidcpo_to_embedded(b)).has_value(), "embedded bi-dcpo");
            print(io::encode(b), s);
        } else {
            unsupported("conversion to '" + to + "'", from);
        }
    } else if (from == "topspace" && to == "kospace") {
        no_roundtrip();
        print(io::encode(accept(from_topspace(accept(io::decode_topspace(doc))))), s);
    } else if (from == "poset") {
        no_roundtrip();
        const auto p = accept(io::decode_poset(doc));
        if (to == "kospace")
            print(io::encode(from_dcpo(p)), s);
        else if (to == "bidcpo")
            print(io::encode(accept(from_dcpo_filters(p))), s);
        else
            unsupported("conversion to '" + to + "'", from);
    } else if (from == "lattice" && to == "frame-pipeline") {
        no_roundtrip();
        const auto report = accept(finite_frame_pipeline(accept(io::decode_lattice(doc))));
        print(io::encode(report), s);
        if (!report.all_pass()) throw Rejected("failed stages: " + report.failures());
    } else if (from == "crelation" && to == "galois") {
        no_roundtrip();
        print(io::encode(crelation_to_galois(accept(io::decode_crelation(doc)))), s);
    } else if (from == "galois" && to == "crelation") {
        no_roundtrip();
        print(io::encode(accept(galois_to_crelation(accept(io::decode_galois(doc))))), s);
    } else {
        unsupported("conversion to '" + to + "'", from);
    }
    return kOk;
}

// ---- dualize ----------------------------------------------------------------------------------

int cmd_dualize(const std::string& which, const std::string& path, const Settings& s) {
    const auto doc = io::load_document(path);
    const auto kind = io::kind_of(doc);
    if (which == "degroot") {
        if (kind == "kospace")
            print(io::encode(degroot_dual(accept(io::decode_kospace(doc)))), s);
        else if (kind == "crelation")
            print(io::encode(crelation_degroot(accept(io::decode_crelation(doc)))), s);
        else if (kind == "dirspace")
            print(io::encode(accept(accept(io::decode_dirspace(doc)).degroot())), s);
        else
            unsupported("the de Groot dual", kind);
    } else {
        if (kind == "polarity")
            print(io::encode(io::decode_polarity(doc).dual()), s);
        else if (kind == "bidcpo")
            print(io::encode(lawson_dual(accept(io::decode_bidcpo(doc)))), s);
        else if (kind == "galois")
            print(io::encode(lawson_dual_morphism(accept(io::decode_galois(doc)))), s);
        else
            unsupported("the Lawson dual", kind);
    }
    return kOk;
}

// ---- concept-lattice --------------------------------------------------------------------------

int cmd_concept_lattice(const std::string& path, const Settings& s) {
    const auto doc = io::load_document(path);
    const auto kind = io::kind_of(doc);
    if (kind != "polarity" && kind != "bidcpo") unsupported("the concept lattice", kind);
    print(io::encode(ConceptLattice(io::decode_polarity(doc), s.override_guardrail)), s);
    return kOk;
}

// ---- check ------------------------------------------------------------------------------------

std::string quadruple_names(const Polarity& p, const Quadruple& q) {
    return "(" + p.k_names()[q.k] + "," + p.k_names()[q.l] + "," + p.o_names()[q.u] + "," + p.o_names()[q.v] + ")";
}

const char* outcome_name(WilkerOutcome o) {
    switch (o) {
        case WilkerOutcome::Rejected: return "preconditions fail";
        case WilkerOutcome::Holds: return "holds";
        case WilkerOutcome::Counterexample: return "counterexample";
    }
    return "?";
}

Json check_distributive(const Json& doc, const std::string& kind) {
    Json j;
    if (kind == "lattice") {
        j["holds"] = is_distributive_lattice(accept(io::decode_lattice(doc)));
    } else if (kind == "embedded") {
        j["holds"] = is_distributive_embedded(accept(io::decode_embedded(doc)));
    } else {
        const auto b = as_bidcpo(doc, kind);
        const auto q = distributivity_violation(b);
        j["holds"] = !q.has_value();
        if (q) j["quadruple"] = quadruple_names(b.pol(), *q);
    }
    return j;
}

Json check_bifounded(const Json& doc, const std::string& kind) {
    Json j;
    if (kind == "lattice")
        j["holds"] = is_bifounded(accept(io::decode_lattice(doc)));
    else if (kind == "polarity")
        j["holds"] = is_bifounded(io::decode_polarity(doc));
    else
        j["holds"] = is_bifounded(as_bidcpo(doc, kind).pol());
    return j;
}

Json check_raney(const Json& doc, const std::string& kind) {
    if (kind != "lattice") unsupported("the Raney check", kind);
    const auto l = accept(io::decode_lattice(doc));
    Json j;
    j["holds"] = is_raney(l);
    j["distributive"] = is_distributive_lattice(l);
    j["bifounded"] = is_bifounded(l);
    if (auto rt = raney_lattice_roundtrip(l); rt.ok()) {
        Json pairs = Json::array();
        for (const auto& [a, b] : rt.value().bijection) pairs.push_back({a, b});
        j["bijection"] = pairs;
    }
    return j;
}

Json check_lc(const Json& doc, const std::string& kind, bool bicontinuous) {
    Json j;
    if (kind == "dirspace") {
        if (bicontinuous) unsupported("the bicontinuity check", kind);
        j["holds"] = accept(io::decode_dirspace(doc)).is_locally_compact();
        return j;
    }
    LCReport r;
    if (kind == "kospace")
        r = check_bicontinuous(accept(io::decode_kospace(doc)));
    else if (kind == "embedded")
        r = check_bicontinuous(accept(io::decode_embedded(doc)));
    else
        r = check_bicontinuous(as_bidcpo(doc, kind));
    j = io::encode(r);
    j["holds"] = bicontinuous ? r.bicontinuous : r.locally_compact;
    return j;
}

Json check_wilker(const Json& doc, const std::string& kind, int variant) {
    Json j;
    bool holds = true;
    for (int v : {1, 2}) {
        if (variant != 0 && variant != v) continue;
        const auto r = kind == "kospace" ? wilker_check(accept(io::decode_kospace(doc)), v)
                                         : wilker_check(as_bidcpo(doc, kind), v);
        const std::string key = "variant-" + std::to_string(v);
        j[key] = {{"outcome", outcome_name(r.outcome)}, {"instances", r.instances}, {"detail", r.detail}};
        holds = holds && r.outcome != WilkerOutcome::Counterexample;
    }
    j["holds"] = holds;
    return j;
}

Json check_hofmis(const Json& doc, const std::string& kind) {
    const auto r = hofmann_mislove(as_bidcpo(doc, kind));
    Json j;
    Json kf = Json::array(), of = Json::array();
    for (const auto& [a, b] : r.k_to_filter) kf.push_back({a, b});
    for (const auto& [a, b] : r.o_to_filter) of.push_back({a, b});
    j["k_to_filter"] = kf;
    j["o_to_filter"] = of;
    j["holds"] = true;
    return j;
}

int cmd_check(const std::string& property, const std::string& path, int variant, const Settings& s) {
    const auto doc = io::load_document(path);
    const auto kind = io::kind_of(doc);
    Json j;
    if (property == "distributive")
        j = check_distributive(doc, kind);
    else if (property == "bifounded")
        j = check_bifounded(doc, kind);
    else if (property == "raney")
        j = check_raney(doc, kind);
    else if (property == "lc")
        j = check_lc(doc, kind, false);
    else if (property == "bicontinuous")
        j = check_lc(doc, kind, true);
    else if (property == "wilker")
        j = check_wilker(doc, kind, variant);
    else
        j = check_hofmis(doc, kind);
    Json out;
    out["kind"] = "check";
    out["property"] = property;
    out["subject"] = kind;
    out.update(j);
    print(out, s);
    if (!j["holds"].get<bool>()) {
        std::cerr << property << ": does not hold";
        if (j.contains("quadruple")) std::cerr << ", violating quadruple " << j["quadruple"].get<std::string>();
        std::cerr << "\n";
        return kInvalid;
    }
    return kOk;
}

// ---- sweep ------------------------------------------------------------------------------------

int cmd_sweep(const std::string& id, const std::string& bound, const Settings& s) {
    if (!find_sweep(id)) {
        std::cerr << "unknown sweep '" << id << "'; known sweeps:\n";
        for (const auto& info : sweep_registry()) std::cerr << "  " << info.id << "  " << info.checks << "\n";
        return kParse;
    }
    SweepOptions opt;
    opt.seed = s.seed;
    opt.bound = bound.empty() ? s.bound : bound;
    opt.jobs = s.jobs;
    const auto report = run_sweep(id, opt);
    std::cout << (s.fmt() == io::Format::Json ? render_json(report) : render_text(report));
    return report.ok() ? kOk : kInvalid;
}

// ---- gen --------------------------------------------------------------------------------------

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
    auto number = [&](const std::string& t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos || t.size() > 6)
            throw PreconditionError("malformed size '" + text + "': expected n or AxB");
        return static_cast<std::size_t>(std::stoul(t));
    };
    const auto x = text.find('x');
    if (x == std::string::npos) {
        const auto n = number(text);
        return {n, n};
    }
    return {number(text.substr(0, x)), number(text.substr(x + 1))};
}

void guard(std::size_t n, std::size_t limit, bool override_guardrail, const std::string& what) {
    if (n > limit && !override_guardrail)
        throw GuardrailError(what + " size " + std::to_string(n) + " exceeds " + std::to_string(limit) +
                             "; pass --override-guardrail to proceed");
}

int cmd_gen(const std::string& kind, const std::string& size, const Settings& s) {
    const auto [a, b] = parse_size(size);
    Rng rng = instance_rng(s.seed, 0, 0);
    const bool ovr = s.override_guardrail;
    Json out;
    if (kind == "poset") {
        guard(a, 64, ovr, "poset");
        out = io::encode(random_poset(rng, a));
    } else if (kind == "kospace") {
        guard(a, 12, ovr, "ko-space");
        out = io::encode(random_kospace(rng, a));
    } else if (kind == "bicontinuous-kospace") {
        guard(a, 12, ovr, "ko-space");
        out = io::encode(random_bicontinuous_kospace(rng, a));
    } else if (kind == "polarity") {
        guard(std::max(a, b), 16, ovr, "polarity");
        out = io::encode(random_purified_polarity(rng, a, b));
    } else if (kind == "weakrel") {
        guard(std::max(a, b), 32, ovr, "relation");
        const auto p = random_poset(rng, a);
        const auto q = random_poset(rng, b);
        out = io::encode(random_weakrel(rng, p, q, std::max<std::size_t>(1, (a + b) / 2)));
    } else if (kind == "crelation") {
        guard(std::max(a, b), 6, ovr, "c-relation");
        out = io::encode(random_crelation(rng, a, b));
    } else if (kind == "galois") {
        guard(std::max(a, b), 5, ovr, "Galois morphism");
        out = io::encode(random_distributive_galois(rng, a, b));
    } else if (kind == "dirspace") {
        guard(a, 10, ovr, "dirspace");
        out = io::encode(random_dirspace(rng, a));
    } else if (kind == "monotone-map") {
        guard(std::max(a, b), 32, ovr, "poset");
        const auto target = random_poset(rng, a);
        const auto source = random_poset(rng, b);
        const auto f = random_monotone_map(rng, source, target);
        out["kind"] = "monotone-map";
        out["source"] = io::encode(source);
        out["target"] = io::encode(target);
        Json m = Json::array();
        for (Index x = 0; x < f.size(); ++x) m.push_back({source.name(x), target.name(f[x])});
        out["map"] = m;
    } else {
        throw PreconditionError("unknown generator '" + kind +
                                "'; known: poset, kospace, bicontinuous-kospace, polarity, weakrel, crelation, "
                                "galois, dirspace, monotone-map");
    }
    print(out, s);
    return kOk;
}

// ---- export-dot -------------------------------------------------------------------------------

int cmd_export_dot(const std::string& path, const Settings& s) {
    const auto doc = io::load_document(path);
    const auto kind = io::kind_of(doc);
    if (kind == "poset")
        std::cout << io::dot(accept(io::decode_poset(doc)));
    else if (kind == "lattice")
        std::cout << io::dot(accept(io::decode_lattice(doc)).poset(), "lattice");
    else if (kind == "polarity" || kind == "bidcpo")
        std::cout << io::dot(ConceptLattice(io::decode_polarity(doc), s.override_guardrail));
    else if (kind == "embedded")
        std::cout << io::dot(accept(io::decode_embedded(doc)).dbl());
    else if (kind == "kospace")
        std::cout << io::dot(accept(io::decode_kospace(doc)));
    else
        unsupported("DOT export", kind);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite ko-spaces, bi-dcpos and their dualities"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    s.jobs = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--seed", s.seed, "seed for random generation and sweeps");
    app.add_option("--bound", s.bound, "size bound for sweeps (n or AxB)");
    app.add_flag("--override-guardrail", s.override_guardrail, "allow enumerations above the size limits");
    app.add_option("--format", s.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", s.jobs, "sweep worker threads")->check(CLI::Range(1u, 256u));

    std::string path, kind, to, which, property, id, bound_arg, gen_kind, size;
    bool roundtrip = false;
    int variant = 0;

    auto* validate = app.add_subcommand("validate", "validate a document; exit 1 with diagnostics if invalid");
    validate->add_option("path", path)->required();
    validate->add_option("--kind", kind, "override the document kind");

    auto* convert = app.add_subcommand("convert", "convert between equivalent structures");
    convert->add_option("path", path)->required();
    convert->add_option("--to", to, "target kind")->required();
    convert->add_flag("--roundtrip", roundtrip, "convert back and require an isomorphic result");

    auto* dualize = app.add_subcommand("dualize", "de Groot or Lawson dual");
    dualize->add_option("which", which)->required()->check(CLI::IsMember({"degroot", "lawson"}));
    dualize->add_option("path", path)->required();

    auto* concepts = app.add_subcommand("concept-lattice", "concept lattice of a polarity");
    concepts->add_option("path", path)->required();

    auto* check = app.add_subcommand("check", "test a property; exit 1 if it fails");
    check->add_option("property", property)
        ->required()
        ->check(CLI::IsMember({"distributive", "bifounded", "raney", "lc", "bicontinuous", "wilker", "hofmis"}));
    check->add_option("path", path)->required();
    check->add_option("--variant", variant, "Wilker variant (1 or 2; both by default)")->check(CLI::Range(0, 2));

    auto* sweep = app.add_subcommand("sweep", "run a registered theorem sweep");
    sweep->add_option("id", id)->required();
    sweep->add_option("bound", bound_arg, "size bound (n or AxB)");

    auto* gen = app.add_subcommand("gen", "generate a random structure");
    gen->add_option("kind", gen_kind)->required();
    gen->add_option("size", size)->required();

    auto* export_dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
    export_dot->add_option("path", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*validate) return cmd_validate(path, kind, s);
        if (*convert) return cmd_convert(path, to, roundtrip, s);
        if (*dualize) return cmd_dualize(which, path, s);
        if (*concepts) return cmd_concept_lattice(path, s);
        if (*check) return cmd_check(property, path, variant, s);
        if (*sweep) return cmd_sweep(id, bound_arg, s);
        if (*gen) return cmd_gen(gen_kind, size, s);
        if (*export_dot) return cmd_export_dot(path, s);
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const Rejected& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    } catch (const TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return kInvalid;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
