#include "jetvpa/commands.hpp"

#include <sstream>

#include "jetvpa/affine.hpp"
#include "jetvpa/input_doc.hpp"
#include "jetvpa/linalg.hpp"
#include "jetvpa/lisse.hpp"
#include "jetvpa/virasoro.hpp"

namespace jetvpa {

namespace {

class Options {
  public:
    Options(const std::map<std::string, std::string>& file_options,
            const std::map<std::string, std::string>& flag_options) {
        merged_ = file_options;
        for (const auto& [k, v] : flag_options) merged_[k] = v;
    }

    std::string get(const std::string& key, const std::string& fallback) {
        auto it = merged_.find(key);
        std::string value = it == merged_.end() ? fallback : it->second;
        echo_[key] = value;
        return value;
    }

    long get_long(const std::string& key, long fallback) {
        auto it = merged_.find(key);
        long value = fallback;
        if (it != merged_.end()) {
            try {
                size_t used = 0;
                value = std::stol(it->second, &used);
                if (used != it->second.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("option '" + key + "' expects an integer, got '" +
                                            it->second + "'");
            }
        }
        echo_[key] = std::to_string(value);
        return value;
    }

    bool has(const std::string& key) const { return merged_.count(key) > 0; }

    Report echo() const {
        Report r = Report::object();
        for (const auto& [k, v] : echo_) r[k] = v;
        return r;
    }

  private:
    std::map<std::string, std::string> merged_;
    std::map<std::string, std::string> echo_;  // resolved values actually used
};

Report polynomial_list(const std::vector<Polynomial>& polys) {
    Report arr = Report::array();
    for (const Polynomial& p : polys) arr.push_back(p.str());
    return arr;
}

Report variable_list(const std::vector<VarId>& vars) {
    Report arr = Report::array();
    for (VarId v : vars) arr.push_back(var_name(v));
    return arr;
}

Report dimension_json(const DimensionReport& d) {
    Report r = Report::object();
    r["krull_dimension"] = d.krull_dimension;
    r["zero_dimensional"] = d.zero_dimensional;
    r["unit_ideal"] = d.unit_ideal;
    if (d.quotient_dimension) r["quotient_dimension"] = *d.quotient_dimension;
    if (d.krull_dimension > 0) r["independent_variables"] = variable_list(d.independent_set);
    return r;
}

Report lisse_json(const LisseReport& rep) {
    Report r = Report::object();
    r["base_dimension"] = dimension_json(rep.base);
    r["verdict"] = rep.lisse ? "C2-cofinite and lisse" : "not C2-cofinite (not lisse)";
    r["criterion"] =
        "C2-cofinite iff lisse for finitely strongly generated vertex algebras; decided "
        "by the Krull dimension of the base quotient (jet schemes of zero-dimensional "
        "varieties are zero-dimensional)";
    Report diags = Report::array();
    for (const JetDiagnostic& d : rep.jet_diagnostics) {
        Report row = Report::object();
        row["jet_order"] = d.order;
        row["dimension"] = dimension_json(d.report);
        diags.push_back(row);
    }
    r["jet_diagnostics"] = diags;
    r["jet_caveat"] = rep.caveat;
    return r;
}

std::string state_string(const std::vector<Partition>& basis, const QVector& coords) {
    std::string out;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (coords[i] == 0) continue;
        std::string mono;
        for (int part : basis[i]) mono += "L(-" + std::to_string(part) + ")";
        if (mono.empty()) mono = "|0>";
        if (!out.empty()) out += " + ";
        out += "(" + to_string(coords[i]) + ")*" + mono;
    }
    return out.empty() ? "0" : out;
}

const Presentation& require_presentation(const InputDoc& doc) {
    if (!doc.presentation)
        throw std::invalid_argument("this command needs a [presentation] section");
    return *doc.presentation;
}

Report make_header(const JobSpec& spec) {
    Report r = Report::object();
    r["command"] = spec.command;
    Report input = Report::object();
    input["path"] = spec.input_path.empty() ? "(none)" : spec.input_path;
    input["digest"] = input_digest(spec.input_text);
    r["input"] = input;
    return r;
}

CommandResult cmd_jet(const JobSpec& spec, const InputDoc& doc, Options& opts) {
    const Presentation& pres = require_presentation(doc);
    long order_m = opts.get_long("order", 1);
    MonomialOrder order = MonomialOrder::from_name(opts.get("monomial-order", "wdegrevlex"));
    if (order_m < 0) throw std::invalid_argument("order must be >= 0");

    JetIdeal ideal = jet_ideal(pres, static_cast<int>(order_m));
    GroebnerBasis gb = buchberger(ideal.generators, order, ideal.variables);
    DimensionReport dim = krull_dimension(gb);

    Report r = make_header(spec);
    r["options"] = opts.echo();
    Report results = Report::object();
    results["variables"] = variable_list(ideal.variables);
    results["jet_generators"] = polynomial_list(ideal.generators);
    results["groebner_basis"] = polynomial_list(gb.basis);
    results["dimension"] = dimension_json(dim);
    r["results"] = results;
    Report caveats = Report::array();
    caveats.push_back("jet ideal truncated at order " + std::to_string(order_m) +
                      " (variables of levels 1.." + std::to_string(order_m + 1) + ")");
    r["caveats"] = caveats;
    return {r, 0};
}

CommandResult cmd_lisse(const JobSpec& spec, const InputDoc& doc, Options& opts) {
    const Presentation& pres = require_presentation(doc);
    long max_jet_order = opts.get_long("order", 2);
    if (max_jet_order < 0) throw std::invalid_argument("order must be >= 0");
    MonomialOrder order = MonomialOrder::from_name(opts.get("monomial-order", "wdegrevlex"));

    std::vector<VarId> ambient;
    for (int g = 1; g <= pres.num_generators; ++g) ambient.push_back(base_var(g));
    GroebnerBasis base = buchberger(pres.relations, order, ambient);
    LisseReport verdict = lisse_verdict(base, static_cast<int>(max_jet_order));

    Report r = make_header(spec);
    r["options"] = opts.echo();
    Report results = Report::object();
    results["base_ideal_basis"] = polynomial_list(base.basis);
    results["lisse"] = lisse_json(verdict);
    r["results"] = results;
    Report caveats = Report::array();
    caveats.push_back("jet diagnostics computed at orders 0.." + std::to_string(max_jet_order));
    r["caveats"] = caveats;
    return {r, verdict.lisse ? 0 : 1};
}

CommandResult cmd_vpa_check(const JobSpec& spec, const InputDoc& doc, Options& opts) {
    long samples = opts.get_long("samples", 200);
    long seed = opts.get_long("seed", 0);
    long max_weight = opts.get_long("max-weight", 4);

    PoissonStructure raw = [&]() -> PoissonStructure {
        if (doc.brackets) return *doc.brackets;
        if (doc.lie) return kirillov_kostant(*doc.lie);
        throw std::invalid_argument("vpa-check needs a [brackets] or [lie_algebra] section");
    }();

    Report r = make_header(spec);
    r["options"] = opts.echo();
    Report results = Report::object();

    try {
        PoissonStructure validated = validate_poisson(raw);
        Presentation free_pres{validated.num_generators(), {}, {}};
        VpaContext ctx(DifferentialRing::unbounded(free_pres), std::move(validated));
        AxiomCheckReport axioms = check_vpa_axioms(
            ctx, static_cast<int>(samples), static_cast<std::uint64_t>(seed), max_weight);

        results["jacobi"] = "verified on all generator triples";
        results["passed"] = axioms.passed;
        results["identities_checked"] = axioms.checks;
        Report failures = Report::array();
        for (const std::string& f : axioms.failures) failures.push_back(f);
        results["failures"] = failures;
        r["results"] = results;
        Report caveats = Report::array();
        caveats.push_back("axioms sampled on " + std::to_string(samples) +
                          " random elements of weight <= " + std::to_string(max_weight) +
                          ", seed " + std::to_string(seed));
        r["caveats"] = caveats;
        return {r, axioms.passed ? 0 : 1};
    } catch (const JacobiViolation& violation) {
        Report fail = Report::object();
        fail["generators"] = Report::array({violation.gen_a, violation.gen_b, violation.gen_c});
        fail["residual"] = violation.residual.str();
        results["jacobi_violation"] = fail;
        results["passed"] = false;
        r["results"] = results;
        r["caveats"] = Report::array();
        return {r, 1};
    }
}

CommandResult cmd_virasoro(const JobSpec& spec, const InputDoc&, Options& opts) {
    long cutoff = opts.get_long("cutoff", 6);
    if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");

    VirasoroParams params{Scalar(0), std::nullopt};
    if (opts.has("minimal") && opts.has("central-charge"))
        throw std::invalid_argument("give either --minimal p q or --central-charge, not both");
    if (opts.has("minimal")) {
        std::istringstream in(opts.get("minimal", ""));
        int p = 0, q = 0;
        if (!(in >> p >> q))
            throw std::invalid_argument("--minimal expects two integers p q");
        params = minimal_params(p, q);
    } else if (opts.has("central-charge")) {
        params.central_charge = parse_scalar(opts.get("central-charge", "0"));
    } else {
        throw std::invalid_argument("virasoro needs --minimal p q or --central-charge c");
    }

    VirasoroModule module =
        opts.has("weight")
            ? VirasoroModule::highest_weight(params, parse_scalar(opts.get("weight", "0")),
                                             static_cast<int>(cutoff))
            : VirasoroModule::vacuum(params, static_cast<int>(cutoff));

    Report r = make_header(spec);
    r["options"] = opts.echo();
    Report results = Report::object();
    results["central_charge"] = to_string(params.central_charge);
    if (params.minimal_pq) {
        results["minimal_p"] = params.minimal_pq->first;
        results["minimal_q"] = params.minimal_pq->second;
    }
    results["kind"] = module.is_vacuum() ? "vacuum" : "highest-weight";
    if (!module.is_vacuum()) results["highest_weight"] = to_string(module.weight());

    Report levels = Report::array();
    for (int level = 0; level <= module.cutoff(); ++level) {
        Report row = Report::object();
        row["level"] = level;
        row["basis_size"] = module.level_basis(level).size();
        row["gram_determinant"] = to_string(module.gram_determinant(level));
        levels.push_back(row);
    }
    results["levels"] = levels;

    auto singular = singular_levels(module);
    Report sing = Report::array();
    for (const SingularLevel& sl : singular) {
        Report row = Report::object();
        row["level"] = sl.level;
        row["kernel_dimension"] = sl.kernel.size();
        Report vectors = Report::array();
        for (const QVector& vec : sl.kernel)
            vectors.push_back(state_string(module.level_basis(sl.level), vec));
        row["kernel_states"] = vectors;
        sing.push_back(row);
    }
    results["singular_levels"] = sing;

    GroebnerBasis image = c2_image(module);
    results["c2_image_ideal"] =
        image.basis.empty() ? Report("0 (zero ideal)") : polynomial_list(image.basis);
    results["lisse"] = lisse_json(lisse_verdict(image));
    r["results"] = results;

    Report caveats = Report::array();
    caveats.push_back("all statements at conformal-weight cutoff " + std::to_string(cutoff) +
                      "; Gram kernels under-approximate the maximal submodule");
    caveats.push_back(
        "the exponent of the C2-image ideal is computed from the exact kernel at this "
        "cutoff");
    r["caveats"] = caveats;
    return {r, 0};
}

CommandResult cmd_affine(const JobSpec& spec, const InputDoc& doc, Options& opts) {
    if (!doc.lie) throw std::invalid_argument("affine needs a [lie_algebra] section");
    const LieAlgebraData& data = *doc.lie;
    data.validate();

    std::string root = opts.get("root", data.basis.front());
    long power = opts.get_long("power", 2);
    long max_weight = opts.get_long("max-weight", 6);
    int root_index = data.index_of(root);

    ClosureCheckReport closure = integrable_closure_check(data, root_index,
                                                          static_cast<int>(power));
    GradedDimsReport graded = graded_dims_jet_vs_pbw(data, max_weight);

    Report r = make_header(spec);
    r["options"] = opts.echo();
    Report results = Report::object();

    Report closure_json = Report::object();
    closure_json["root_vector"] = root;
    closure_json["power"] = power;
    closure_json["radical_generator"] = closure.radical_generator.str();
    closure_json["poisson_closure_basis"] = polynomial_list(closure.closure.basis);
    closure_json["closure_is_augmentation_ideal"] = closure.closure_is_augmentation;
    closure_json["verdict"] = closure.closure_is_augmentation
                                  ? "associated variety = {0}"
                                  : "associated variety strictly larger than {0}";
    results["integrable_closure_check"] = closure_json;

    Report graded_json = Report::object();
    graded_json["max_weight"] = graded.max_weight;
    Report rows = Report::array();
    for (const GradedDimsRow& row : graded.rows) {
        Report entry = Report::object();
        entry["weight"] = row.weight;
        entry["jet_monomials"] = row.jet_count.get_str();
        entry["pbw_dimension"] = row.pbw_count.get_str();
        rows.push_back(entry);
    }
    graded_json["rows"] = rows;
    graded_json["all_equal"] = graded.all_equal;
    results["graded_dimensions"] = graded_json;

    if (opts.has("level")) {
        results["level"] = opts.get("level", "");
        results["level_note"] =
            "the level is accepted but unused: the base Poisson ring and its jet "
            "gradings are independent of it";
    }
    r["results"] = results;
    Report caveats = Report::array();
    caveats.push_back("graded dimensions compared up to weight " + std::to_string(max_weight));
    r["caveats"] = caveats;
    return {r, closure.closure_is_augmentation ? 0 : 1};
}

}  // namespace

CommandResult run_command(const JobSpec& spec) {
    try {
        InputDoc doc = parse_input(spec.input_text);
        Options opts(doc.options, spec.options);
        if (spec.command == "jet") return cmd_jet(spec, doc, opts);
        if (spec.command == "lisse") return cmd_lisse(spec, doc, opts);
        if (spec.command == "vpa-check") return cmd_vpa_check(spec, doc, opts);
        if (spec.command == "virasoro") return cmd_virasoro(spec, doc, opts);
        if (spec.command == "affine") return cmd_affine(spec, doc, opts);
        throw std::invalid_argument("unknown command '" + spec.command + "'");
    } catch (const ParseError& error) {
        Report r = make_header(spec);
        r["error"] = error.what();
        return {r, 2};
    } catch (const std::exception& error) {
        Report r = make_header(spec);
        r["error"] = error.what();
        return {r, 2};
    }
}

}  // namespace jetvpa
