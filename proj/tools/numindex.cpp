#include "numindex/attainment.hpp"
#include "numindex/errors.hpp"
#include "numindex/index.hpp"
#include "numindex/io.hpp"
#include "numindex/sampling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace {

using namespace numindex;
using nlohmann::json;

struct GlobalOpts {
    double eps = 1e-9;
    bool json_out = false;
    std::uint64_t seed = 0;
    bool allow_big = false;
};

void emit(const GlobalOpts& g, const json& report,
          const std::string& human)
{
    if (g.json_out)
        std::cout << report.dump(2) << '\n';
    else
        std::cout << human;
}

ParsedSpace load_space(const std::string& arg)
{
    ParsedSpace parsed = parse_space_arg(arg);
    for (const std::string& w : parsed.warnings)
        std::cerr << "warning: " << w << '\n';
    return parsed;
}

json provenance(const GlobalOpts& g, const std::string& mode)
{
    json p;
    p["mode"] = mode;
    p["epsilon"] = g.eps;
    p["seed"] = g.seed;
    return p;
}

json pair_json(const RatVec& point, const RatVec& functional)
{
    json j;
    j["x"] = vec_to_json(point);
    j["xstar"] = vec_to_json(functional);
    return j;
}

void cmd_space_info(const GlobalOpts& g, const std::string& space_arg)
{
    const ParsedSpace parsed = load_space(space_arg);
    const Space& s = parsed.space;

    json result;
    result["name"] = s.name();
    result["dim"] = static_cast<long>(s.dim());
    result["kind"] = s.is_polytope() ? "polytope" : "lp";
    result["smooth_space"] = is_smooth_space(s);
    result["strictly_convex"] = is_strictly_convex(s);
    std::ostringstream human;
    human << "space " << s.name() << ": "
          << (s.is_polytope() ? "polytope" : "lp") << ", dim " << s.dim()
          << '\n';
    if (s.is_polytope()) {
        result["vertex_count"] = static_cast<long>(s.vertices().rows());
        result["facet_count"] = static_cast<long>(s.facet_normals().rows());
        result["radius_is_norm"] = is_w_norm(s);
        human << "vertices: " << s.vertices().rows() << '\n'
              << "facets: " << s.facet_normals().rows() << '\n'
              << "radius is a norm: "
              << (result["radius_is_norm"].get<bool>() ? "yes" : "no") << '\n';
    } else {
        result["p"] = s.p_exponent();
        human << "p: " << s.p_exponent() << '\n';
    }
    human << "smooth: " << (result["smooth_space"].get<bool>() ? "yes" : "no")
          << ", strictly convex: "
          << (result["strictly_convex"].get<bool>() ? "yes" : "no") << '\n';

    emit(g,
         make_report("space info", s, json{{"space", space_arg}}, result,
                     json::array(), provenance(g, "exact")),
         human.str());
}

void cmd_space_dual(const GlobalOpts& g, const std::string& space_arg)
{
    const ParsedSpace parsed = load_space(space_arg);
    const Space dual = dualize(parsed.space);
    const json result = space_to_json(dual);
    emit(g,
         make_report("space dual", parsed.space, json{{"space", space_arg}},
                     result, json::array(), provenance(g, "exact")),
         result.dump(2) + "\n");
}

void cmd_op_scalar(const GlobalOpts& g, const std::string& space_arg,
                   const std::string& matrix_arg, bool radius)
{
    const ParsedSpace parsed = load_space(space_arg);
    const Space& s = parsed.space;
    const Operator op = make_operator(s, parse_matrix_arg(matrix_arg));
    const char* name = radius ? "numerical radius" : "operator norm";

    json result, certifications = json::array();
    std::ostringstream human;
    std::string mode;
    if (op.exact()) {
        mode = "exact";
        const Rat value = radius ? numerical_radius(op) : op_norm(op);
        result["value"] = rational_to_json(value);
        result["value_float"] = to_double(value);
        certifications.push_back(
            radius ? "maximum over all admissible extreme pairs, exact"
                   : "maximum image gauge over ball vertices, exact");
        human << name << ": " << to_fraction(value) << " ("
              << to_double(value) << ")\n";
    } else {
        mode = "sampled";
        const SampleReport sample =
            radius ? sample_radius(s, op.floating())
                   : sample_op_norm(s, op.floating());
        result["value"] = sample.value;
        result["evaluations"] = sample.evaluations;
        result["density"] = sample.density;
        human << name << " (sampled): " << sample.value << " over "
              << sample.evaluations << " evaluations\n";
    }
    emit(g,
         make_report(radius ? "op radius" : "op norm", s,
                     json{{"space", space_arg}, {"matrix", matrix_arg}},
                     result, certifications, provenance(g, mode)),
         human.str());
}

void cmd_op_range(const GlobalOpts& g, const std::string& space_arg,
                  const std::string& matrix_arg)
{
    const ParsedSpace parsed = load_space(space_arg);
    const Space& s = parsed.space;
    const Operator op = make_operator(s, parse_matrix_arg(matrix_arg));
    const RangeReport range = numerical_range(op);

    json facets = json::array();
    std::ostringstream human;
    for (const FacetInterval& f : range.facets) {
        json jf;
        jf["functional"] = vec_to_json(f.functional);
        jf["lo"] = rational_to_json(f.lo);
        jf["hi"] = rational_to_json(f.hi);
        facets.push_back(std::move(jf));
        human << "facet [" << to_fraction(f.lo) << ", " << to_fraction(f.hi)
              << "]\n";
    }
    json result;
    result["facets"] = std::move(facets);
    result["hull"] = json{{"lo", rational_to_json(range.lo)},
                          {"hi", rational_to_json(range.hi)}};
    result["radius"] = rational_to_json(range.radius);
    human << "hull: [" << to_fraction(range.lo) << ", "
          << to_fraction(range.hi) << "], radius " << to_fraction(range.radius)
          << '\n';

    emit(g,
         make_report("op range", s,
                     json{{"space", space_arg}, {"matrix", matrix_arg}},
                     result,
                     json::array({"facet intervals from exact face scans"}),
                     provenance(g, "exact")),
         human.str());
}

void cmd_dual_ball_extremes(const GlobalOpts& g, const std::string& space_arg)
{
    const ParsedSpace parsed = load_space(space_arg);
    const Space& s = parsed.space;
    const bool full = s.dim() <= 2;
    const ExtremeDualReport report = extreme_dual_w(s, full);

    json extremes = json::array();
    for (const TensorFunctional& tf : report.extremes) {
        json e = pair_json(tf.point, tf.functional);
        e["G"] = mat_to_json(tf.outer);
        extremes.push_back(std::move(e));
    }
    json certifications = json::array();
    certifications.push_back("every tensor is LP-extreme in the hull");
    if (report.enumeration_certified)
        certifications.push_back(
            "matches the enumerated polar of the radius ball exactly");

    std::ostringstream human;
    human << report.extremes.size()
          << " extreme tensor functionals (certified)\n";
    emit(g,
         make_report("dual-ball extremes", s, json{{"space", space_arg}},
                     json{{"extremes", std::move(extremes)}}, certifications,
                     provenance(g, "exact")),
         human.str());
}

void cmd_dual_ball_count(const GlobalOpts& g, const std::string& space_arg)
{
    const ParsedSpace parsed = load_space(space_arg);
    const CountReport counts = count_extremes(parsed.space);

    json result;
    result["pair_count"] = counts.pair_count;
    result["formula_value"] = counts.formula_value;
    result["distinct_count"] = counts.distinct_count;
    result["pair_to_distinct_ratio"] =
        counts.distinct_count != 0
            ? json(double(counts.pair_count) / double(counts.distinct_count))
            : json(nullptr);

    std::ostringstream human;
    human << "sign-pairs: " << counts.pair_count
          << " (formula: " << counts.formula_value << ")\n"
          << "distinct tensors: " << counts.distinct_count << '\n';
    emit(g,
         make_report("dual-ball count", parsed.space,
                     json{{"space", space_arg}}, result,
                     json::array({"pair count matches the per-vertex formula"}),
                     provenance(g, "exact")),
         human.str());
}

void cmd_index_exact(const GlobalOpts& g, const std::string& space_arg)
{
    const ParsedSpace parsed = load_space(space_arg);
    const ExactIndexReport report =
        numerical_index_exact(parsed.space, g.allow_big);

    json result;
    result["value"] = rational_to_json(report.value);
    result["value_float"] = to_double(report.value);
    result["degenerate"] = report.degenerate;
    std::ostringstream human;
    if (report.degenerate) {
        if (report.kernel_witness)
            result["kernel_witness"] = mat_to_json(*report.kernel_witness);
        human << "numerical index: 0 (radius degenerates on a nonzero operator)\n";
    } else {
        result["max_op_norm"] = rational_to_json(report.max_op_norm);
        if (report.extremal_operator)
            result["extremal_operator"] = mat_to_json(*report.extremal_operator);
        human << "numerical index: " << to_fraction(report.value) << " ("
              << to_double(report.value) << ")\n";
    }
    emit(g,
         make_report("index exact", parsed.space, json{{"space", space_arg}},
                     result,
                     json::array({"reciprocal of the exact norm maximum "
                                  "over the radius unit ball"}),
                     provenance(g, "exact")),
         human.str());
}

void cmd_index_search(const GlobalOpts& g, const std::string& space_arg,
                      int restarts)
{
    const ParsedSpace parsed = load_space(space_arg);
    SearchBudget budget;
    budget.restarts = restarts;
    budget.seed = g.seed;
    const SearchIndexReport report =
        numerical_index_search(parsed.space, budget);

    json result;
    result["upper_bound"] = report.upper_bound;
    result["witness"] = float_mat_to_json(report.witness);
    result["restarts"] = report.restarts;
    result["evaluations"] = report.evaluations;
    json certifications = json::array();
    if (report.certified_upper) {
        result["certified_upper"] = rational_to_json(*report.certified_upper);
        certifications.push_back(
            "bound re-evaluated exactly at the float witness");
    }
    std::ostringstream human;
    human << "index upper bound: " << report.upper_bound << " ("
          << report.restarts << " restarts, seed " << g.seed << ")\n";
    emit(g,
         make_report("index search", parsed.space,
                     json{{"space", space_arg}, {"restarts", restarts}},
                     result, certifications, provenance(g, "sampled")),
         human.str());
}

void cmd_mcgregor(const GlobalOpts& g, const std::string& space_arg)
{
    const ParsedSpace parsed = load_space(space_arg);
    const McGregorReport report = mcgregor(parsed.space);

    json result;
    result["index_one"] = report.index_one;
    std::ostringstream human;
    if (report.witness) {
        json w = pair_json(report.witness->point, report.witness->functional);
        w["value"] = rational_to_json(report.witness->value);
        result["witness"] = std::move(w);
        human << "index one: no (witness pairing "
              << to_fraction(report.witness->value) << ")\n";
    } else {
        human << "index one: yes (every extreme pairing is unimodular)\n";
    }
    emit(g,
         make_report("mcgregor", parsed.space, json{{"space", space_arg}},
                     result,
                     json::array({"all extreme pairs scanned exactly"}),
                     provenance(g, "exact")),
         human.str());
}

void cmd_hulls(const GlobalOpts& g, const std::string& space_arg)
{
    const ParsedSpace parsed = load_space(space_arg);
    const HullEquality hulls = verify_hull_equality(parsed.space);

    json result;
    result["w_dual_eq"] = hulls.w_dual_eq;
    result["op_dual_eq"] = hulls.op_dual_eq;
    std::ostringstream human;
    human << "radius dual ball = hull of admissible tensors: "
          << (hulls.w_dual_eq ? "yes" : "no") << '\n'
          << "operator-norm dual ball = the same hull: "
          << (hulls.op_dual_eq ? "yes" : "no") << '\n';
    emit(g,
         make_report("hulls", parsed.space, json{{"space", space_arg}},
                     result,
                     json::array({"exact LP certification per tensor"}),
                     provenance(g, "exact")),
         human.str());
}

void cmd_bj(const GlobalOpts& g, const std::string& space_arg,
            const std::string& t_arg, const std::vector<std::string>& w_args)
{
    const ParsedSpace parsed = load_space(space_arg);
    const Space& s = parsed.space;
    const Operator t = make_operator(s, parse_matrix_arg(t_arg));
    std::vector<RatMat> w_ops;
    for (const std::string& w : w_args) {
        const ParsedMatrix m = parse_matrix_arg(w);
        if (!m.exact)
            throw PreconditionError(
                "orthogonality needs exact perturbation matrices");
        w_ops.push_back(m.rational);
    }
    const BjReport report = bj_orthogonal_w(t, w_ops);

    json result;
    result["orthogonal"] = report.orthogonal;
    result["radius"] = rational_to_json(report.radius_before);
    std::ostringstream human;
    if (report.orthogonal) {
        json coeffs = json::array();
        for (const auto& [entry, weight] : report.coefficients)
            coeffs.push_back(json{{"entry", static_cast<long>(entry)},
                                  {"weight", rational_to_json(weight)}});
        result["coefficients"] = std::move(coeffs);
        human << "orthogonal: yes (" << report.coefficients.size()
              << " attainment weights)\n";
    } else {
        result["direction"] = vec_to_json(report.direction);
        result["step"] = rational_to_json(report.step);
        result["radius_after"] = rational_to_json(report.radius_after);
        human << "orthogonal: no (radius drops to "
              << to_fraction(report.radius_after) << " at step "
              << to_fraction(report.step) << ")\n";
    }
    json inputs;
    inputs["space"] = space_arg;
    inputs["t"] = t_arg;
    inputs["w"] = w_args;
    emit(g,
         make_report("bj", s, inputs, result,
                     json::array({report.orthogonal
                                      ? "zero lies in the attainment value hull"
                                      : "exact descent step certified"}),
                     provenance(g, "exact")),
         human.str());
}

void cmd_attain(const GlobalOpts& g, const std::string& space_arg,
                const std::string& matrix_arg)
{
    const ParsedSpace parsed = load_space(space_arg);
    const Operator op = make_operator(parsed.space, parse_matrix_arg(matrix_arg));
    const AttainmentSet attained = attainment_set(op);

    json entries = json::array();
    for (const AttainmentEntry& e : attained.entries) {
        json je = pair_json(e.point, e.functional);
        je["s"] = e.sign;
        entries.push_back(std::move(je));
    }
    json result;
    result["radius"] = rational_to_json(attained.radius);
    result["entries"] = std::move(entries);
    result["nu_smooth"] = nu_smooth(op);

    std::ostringstream human;
    human << "radius " << to_fraction(attained.radius) << ", "
          << attained.entries.size() << " attaining pairs, nu-smooth: "
          << (result["nu_smooth"].get<bool>() ? "yes" : "no") << '\n';
    emit(g,
         make_report("attain", parsed.space,
                     json{{"space", space_arg}, {"matrix", matrix_arg}},
                     result, json::array(), provenance(g, "exact")),
         human.str());
}

void cmd_spear(const GlobalOpts& g, const std::string& space_arg, long trials)
{
    const ParsedSpace parsed = load_space(space_arg);
    const SpearReport report =
        spear_check_identity(parsed.space, trials, g.seed);

    json result;
    result["holds"] = report.holds;
    result["trials"] = report.trials_run;
    std::ostringstream human;
    if (report.witness) {
        result["witness"] = mat_to_json(*report.witness);
        result["lhs"] = rational_to_json(report.lhs);
        result["rhs"] = rational_to_json(report.rhs);
        human << "identity holds: no (witness after " << report.trials_run
              << " trials: max norm " << to_fraction(report.lhs) << " < "
              << to_fraction(report.rhs) << ")\n";
    } else {
        human << "identity holds over " << report.trials_run << " trials\n";
    }
    emit(g,
         make_report("spear", parsed.space,
                     json{{"space", space_arg}, {"trials", trials}}, result,
                     json::array({"norms evaluated exactly per trial"}),
                     provenance(g, "exact")),
         human.str());
}

}   // namespace

int main(int argc, char** argv)
{
    GlobalOpts g;
    CLI::App app{"exact numerical ranges, radii, and numerical indices "
                 "of finite-dimensional real normed spaces"};
    app.require_subcommand(1);
    // Let the global flags appear after the subcommand as well.
    app.fallthrough();
    app.add_option("--eps", g.eps, "float comparison tolerance")
        ->capture_default_str();
    app.add_flag("--json", g.json_out, "emit a JSON report");
    app.add_option("--seed", g.seed, "seed for all randomized paths")
        ->capture_default_str();
    app.add_flag("--allow-big", g.allow_big,
                 "lift the dimension cap on exact index computations");

    std::string space_arg, matrix_arg, t_arg;
    std::vector<std::string> w_args;
    int restarts = 64;
    long trials = 200;

    CLI::App* space = app.add_subcommand("space", "space inspection");
    space->require_subcommand(1);
    CLI::App* space_info = space->add_subcommand("info", "summary of a space");
    space_info->add_option("space", space_arg, "alias, JSON, or file")
        ->required();
    CLI::App* space_dual = space->add_subcommand("dual", "the dual space");
    space_dual->add_option("space", space_arg, "alias, JSON, or file")
        ->required();

    CLI::App* op = app.add_subcommand("op", "operator quantities");
    op->require_subcommand(1);
    CLI::App* op_norm_cmd = op->add_subcommand("norm", "operator norm");
    CLI::App* op_radius_cmd =
        op->add_subcommand("radius", "numerical radius");
    CLI::App* op_range_cmd = op->add_subcommand("range", "numerical range");
    for (CLI::App* sub : {op_norm_cmd, op_radius_cmd, op_range_cmd}) {
        sub->add_option("space", space_arg, "alias, JSON, or file")
            ->required();
        sub->add_option("--matrix", matrix_arg, "inline JSON or file")
            ->required();
    }

    CLI::App* dual_ball =
        app.add_subcommand("dual-ball", "radius dual-ball structure");
    dual_ball->require_subcommand(1);
    CLI::App* extremes =
        dual_ball->add_subcommand("extremes", "certified extreme tensors");
    extremes->add_option("space", space_arg, "alias, JSON, or file")
        ->required();
    CLI::App* count = dual_ball->add_subcommand("count", "extreme counting");
    count->add_option("space", space_arg, "alias, JSON, or file")->required();

    CLI::App* index = app.add_subcommand("index", "numerical index");
    index->require_subcommand(1);
    CLI::App* index_exact = index->add_subcommand("exact", "exact index");
    index_exact->add_option("space", space_arg, "alias, JSON, or file")
        ->required();
    CLI::App* index_search =
        index->add_subcommand("search", "seeded descent upper bound");
    index_search->add_option("space", space_arg, "alias, JSON, or file")
        ->required();
    index_search->add_option("--restarts", restarts, "restart count")
        ->capture_default_str();

    CLI::App* mcgregor_cmd =
        app.add_subcommand("mcgregor", "extreme-pair index-one criterion");
    mcgregor_cmd->add_option("space", space_arg, "alias, JSON, or file")
        ->required();

    CLI::App* hulls_cmd =
        app.add_subcommand("hulls", "dual-ball hull equalities");
    hulls_cmd->add_option("space", space_arg, "alias, JSON, or file")
        ->required();

    CLI::App* bj_cmd =
        app.add_subcommand("bj", "radius Birkhoff-James orthogonality");
    bj_cmd->add_option("space", space_arg, "alias, JSON, or file")->required();
    bj_cmd->add_option("--t", t_arg, "operator matrix")->required();
    bj_cmd->add_option("--w", w_args, "perturbation matrix (repeatable)")
        ->required()
        ->allow_extra_args(false);

    CLI::App* attain_cmd =
        app.add_subcommand("attain", "radius attainment set");
    attain_cmd->add_option("space", space_arg, "alias, JSON, or file")
        ->required();
    attain_cmd->add_option("--matrix", matrix_arg, "inline JSON or file")
        ->required();

    CLI::App* spear_cmd =
        app.add_subcommand("spear", "identity-spear trial check");
    spear_cmd->add_option("space", space_arg, "alias, JSON, or file")
        ->required();
    spear_cmd->add_option("--trials", trials, "trial count")
        ->capture_default_str();

    try {
        app.parse(argc, argv);

        if (space_info->parsed())
            cmd_space_info(g, space_arg);
        else if (space_dual->parsed())
            cmd_space_dual(g, space_arg);
        else if (op_norm_cmd->parsed())
            cmd_op_scalar(g, space_arg, matrix_arg, false);
        else if (op_radius_cmd->parsed())
            cmd_op_scalar(g, space_arg, matrix_arg, true);
        else if (op_range_cmd->parsed())
            cmd_op_range(g, space_arg, matrix_arg);
        else if (extremes->parsed())
            cmd_dual_ball_extremes(g, space_arg);
        else if (count->parsed())
            cmd_dual_ball_count(g, space_arg);
        else if (index_exact->parsed())
            cmd_index_exact(g, space_arg);
        else if (index_search->parsed())
            cmd_index_search(g, space_arg, restarts);
        else if (mcgregor_cmd->parsed())
            cmd_mcgregor(g, space_arg);
        else if (hulls_cmd->parsed())
            cmd_hulls(g, space_arg);
        else if (bj_cmd->parsed())
            cmd_bj(g, space_arg, t_arg, w_args);
        else if (attain_cmd->parsed())
            cmd_attain(g, space_arg, matrix_arg);
        else if (spear_cmd->parsed())
            cmd_spear(g, space_arg, trials);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const CertificationFailure& e) {
        std::cerr << "certification failure: " << e.what() << '\n';
        for (const std::string& line : e.difference)
            std::cerr << "  " << line << '\n';
        return 3;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
