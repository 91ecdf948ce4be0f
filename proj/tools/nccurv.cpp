// nccurv: command-line front end for the free-algebra curvature toolkit.
// Every subcommand prints a single JSON report on stdout:
//   {command, version, config, result, diagnostics[]}
// Exit codes: 0 success, 2 input error, 3 computation-failure state.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nccurv/calculus.hpp"
#include "nccurv/curvature.hpp"
#include "nccurv/freealg.hpp"
#include "nccurv/mateval.hpp"
#include "nccurv/middlematrix.hpp"
#include "nccurv/numerics.hpp"
#include "nccurv/variety.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
// border entries ordered by word length, then direction index, then word lex
constexpr const char* kOrdering = "graded-lex/j-major";

using nlohmann::json;
using namespace nccurv;

struct Options {
    int g = 1;
    std::string poly;
    std::vector<std::string> point_files;
    double tol = kDefaultTol;
    std::uint64_t seed = 1;
    std::string mode;
    int samples = 32;
    int workers = 1;
    bool pretty = false;
    int order = 1;
    int n = 0, r = 0, s = 0;
    int max_degree = 3;
    int steps = 64;
    int sample_n = 0;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ComputationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

NcPoly load_poly(const Options& opt) {
    if (opt.poly.empty()) throw InputError("missing polynomial (-p)");
    std::string text = opt.poly;
    if (text[0] == '@') text = read_file(text.substr(1));
    try {
        return parse_poly(text, opt.g);
    } catch (const ParseError& e) {
        throw InputError(std::string("parse error: ") + e.what());
    }
}

MatrixPoint load_point(const std::string& path) {
    try {
        return point_from_json(read_file(path));
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError("bad point file " + path + ": " + e.what());
    }
}

MatrixPoint load_single_point(const Options& opt) {
    if (opt.point_files.size() != 1) throw InputError("exactly one --point file required");
    return load_point(opt.point_files[0]);
}

json inertia_json(const Inertia& in) {
    return json{{"neg", in.neg}, {"zero", in.zero}, {"pos", in.pos}, {"tol", in.tol}};
}

json point_json(const MatrixPoint& pt) { return json::parse(point_to_json(pt)); }

json profile_json(const DegreeProfile& pr) {
    return json{{"degree", pr.degree},
                {"x_degree", pr.x_degree},
                {"h_degree", pr.h_degree},
                {"h_homogeneous", pr.h_homogeneous},
                {"symmetric", pr.symmetric}};
}

struct Report {
    json result;
    std::vector<std::string> diagnostics;
    bool failure = false;  // computation-failure state (exit 3)
};

Report run_parse(const Options& opt) {
    NcPoly p = load_poly(opt);
    Report r;
    r.result = {{"canonical", p.to_string()},
                {"terms", p.term_count()},
                {"profile", profile_json(p.profile())}};
    return r;
}

Report run_diff(const Options& opt) {
    NcPoly p = load_poly(opt);
    NcPoly d = directional_derivative(p, opt.order);
    Report r;
    r.result = {{"order", opt.order}, {"derivative", d.to_string()}, {"terms", d.term_count()}};
    return r;
}

Report run_hessian(const Options& opt) {
    NcPoly h = hessian(load_poly(opt));
    Report r;
    r.result = {{"hessian", h.to_string()}, {"terms", h.term_count()}};
    return r;
}

Report run_middle_matrix(const Options& opt) {
    NcPoly p = load_poly(opt);
    auto z = extract_middle(hessian(p));
    auto sm = scalar_middle(z, opt.tol);
    Report r;
    r.result = {{"g", z.g},
                {"ell", z.ell},
                {"size", z.size},
                {"constant", z.is_constant()},
                {"matrix", json::parse(z.to_json())},
                {"scalar_inertia", inertia_json(sm.in)}};
    return r;
}

Report run_signature(const Options& opt) {
    auto rep = degree_bound_report(load_poly(opt), opt.tol);
    Report r;
    r.result = {{"d", rep.d},
                {"mu_minus", rep.mu_minus},
                {"mu_plus", rep.mu_plus},
                {"bound_minus", rep.bound_minus},
                {"bound_plus", rep.bound_plus},
                {"bound_holds", rep.holds},
                {"trivial", rep.trivial}};
    return r;
}

Report run_sds(const Options& opt) {
    auto cert = sds_certificate(load_poly(opt), opt.tol);
    Report r;
    json plus = json::array(), minus = json::array();
    for (const auto& f : cert.plus_terms) plus.push_back(f.to_string());
    for (const auto& f : cert.minus_terms) minus.push_back(f.to_string());
    r.result = {{"supported", cert.supported},
                {"sigma_minus", cert.sigma_minus},
                {"sigma_plus", cert.sigma_plus},
                {"plus_terms", plus},
                {"minus_terms", minus},
                {"residual", cert.residual}};
    if (!cert.supported)
        r.diagnostics.push_back("middle matrix is not constant: signature only, no square decomposition");
    return r;
}

Report run_convexity(const Options& opt) {
    auto rep = classify_convexity(load_poly(opt), opt.tol);
    Report r;
    const char* kind = rep.kind == Convexity::Convex     ? "convex"
                       : rep.kind == Convexity::Concave ? "concave"
                                                        : "indefinite";
    r.result = {{"kind", kind},
                {"degree", rep.degree},
                {"scalar_inertia", inertia_json(rep.in)},
                {"witness", rep.witness}};
    return r;
}

Report run_curvature(const Options& opt) {
    NcPoly p = load_poly(opt);
    auto pt = load_single_point(opt);
    auto rep = c_pm(p, pt, opt.tol);
    Report r;
    r.result = {{"c_minus", rep.c_minus},
                {"c_plus", rep.c_plus},
                {"form_zero_dim", rep.form_zero_dim},
                {"tangent_dim", rep.tangent_dim},
                {"full_rank", rep.full_rank}};
    return r;
}

Report run_relaxed(const Options& opt) {
    NcPoly p = load_poly(opt);
    auto pt = load_single_point(opt);
    RelaxedSearchConfig cfg;
    cfg.tol = opt.tol;
    bool negative = opt.mode == "negative";
    if (!opt.mode.empty() && opt.mode != "positive" && opt.mode != "negative")
        throw InputError("relaxed --mode must be positive or negative");
    auto rep = relaxed_signature(p, pt, cfg, negative);
    Report r;
    r.result = {{"matched", rep.matched},
                {"delta", rep.delta},
                {"lambda", rep.lambda},
                {"e_minus", rep.e_minus},
                {"e_plus", rep.e_plus},
                {"target", rep.target},
                {"variant", negative ? "negative" : "positive"}};
    if (!rep.matched) {
        r.diagnostics.push_back(rep.diagnostics);
        r.failure = true;
    }
    return r;
}

Report run_decompose(const Options& opt) {
    NcPoly p = load_poly(opt);
    auto pt = load_single_point(opt);
    auto d = subspace_decomposition(p, pt, opt.tol);
    Report r;
    r.result = {{"dim_full", d.dim_full},
                {"dim_n", d.dim_n},
                {"dim_n_perp", d.dim_n_perp},
                {"dim_m", d.dim_m},
                {"dim_l", d.dim_l},
                {"dim_m_minus", d.dim_m_minus},
                {"dim_m_plus", d.dim_m_plus},
                {"a_inertia", inertia_json(inertia(d.a_gram, opt.tol))},
                {"q_inertia", inertia_json(inertia(d.q_gram, opt.tol))},
                {"e_inertia", inertia_json(inertia(d.e_gram, opt.tol))}};
    return r;
}

Report run_direct_sum(const Options& opt) {
    if (opt.point_files.empty()) throw InputError("direct-sum needs at least one --point");
    std::vector<MatrixPoint> pts;
    for (const auto& f : opt.point_files) pts.push_back(load_point(f));
    try {
        auto sum = direct_sum(pts);
        Report r;
        r.result = point_json(sum);
        return r;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Report run_independence(const Options& opt) {
    auto pt = load_single_point(opt);
    auto cert = word_independence(pt, opt.max_degree, opt.tol);
    Report r;
    r.result = {{"N", cert.N},
                {"alpha_N", cert.alpha_N},
                {"rank", cert.rank},
                {"independent", cert.independent}};
    return r;
}

Report run_annihilator(const Options& opt) {
    if (opt.point_files.empty()) throw InputError("annihilator needs at least one --point");
    std::vector<MatrixPoint> pts;
    for (const auto& f : opt.point_files) pts.push_back(load_point(f));
    auto res = minimal_annihilator(pts, opt.max_degree, opt.tol);
    Report r;
    if (res) {
        r.result = {{"found", true},
                    {"degree", res->degree},
                    {"q", res->q.to_string()},
                    {"residual", res->residual}};
    } else {
        r.result = {{"found", false}, {"max_degree", opt.max_degree}};
    }
    return r;
}

Report run_chsy(const Options& opt) {
    std::optional<MatrixPoint> pt;
    if (!opt.point_files.empty()) pt = load_single_point(opt);
    auto rep = chsy_codim(opt.g, opt.n, opt.r, opt.s, pt ? &*pt : nullptr, opt.tol);
    Report r;
    r.result = {{"formula_bound", rep.formula_bound},
                {"exact", rep.exact},
                {"has_numeric", rep.has_numeric},
                {"independence_ok", rep.independence_ok}};
    if (rep.has_numeric) r.result["numeric_codim"] = rep.numeric_codim;
    return r;
}

Report run_variety_signature(const Options& opt) {
    NcPoly p = load_poly(opt);
    VarietySignatureConfig cfg;
    cfg.tol = opt.tol;
    cfg.seed = opt.seed;
    cfg.samples = opt.samples;
    cfg.sample_n = opt.sample_n;
    if (opt.mode.empty() || opt.mode == "scalar")
        cfg.mode = SignatureMode::ScalarMiddle;
    else if (opt.mode == "ceiling")
        cfg.mode = SignatureMode::CeilingAtPoint;
    else if (opt.mode == "sampled")
        cfg.mode = SignatureMode::SampledLowerBound;
    else
        throw InputError("--mode must be scalar, ceiling or sampled");
    if (!opt.point_files.empty()) cfg.point = load_single_point(opt);
    auto rep = variety_signature(p, cfg);
    Report r;
    json betas = json::array();
    for (const auto& b : rep.beta_samples)
        betas.push_back({{"n", b.n}, {"c_minus", b.c_minus}, {"c_plus", b.c_plus}});
    r.result = {{"C_minus", rep.C_minus},
                {"C_plus", rep.C_plus},
                {"method", rep.method},
                {"certified", rep.certified},
                {"threshold_ok", rep.threshold_ok},
                {"beta_samples", betas},
                {"failed", rep.failed}};
    if (rep.certificate)
        r.result["certificate"] = {{"N", rep.certificate->N},
                                   {"alpha_N", rep.certificate->alpha_N},
                                   {"rank", rep.certificate->rank},
                                   {"independent", rep.certificate->independent}};
    if (!rep.note.empty()) r.diagnostics.push_back(rep.note);
    r.failure = rep.failed;
    return r;
}

Report run_membership(const Options& opt) {
    NcPoly p = load_poly(opt);
    auto pt = load_single_point(opt);
    MembershipReport rep;
    try {
        rep = positivity_membership(p, pt.X, opt.steps, opt.tol);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const char* kind = rep.kind == Membership::Interior   ? "interior"
                       : rep.kind == Membership::Boundary ? "boundary"
                       : rep.kind == Membership::Exterior ? "exterior"
                                                          : "disconnected-positive";
    Report r;
    r.result = {{"kind", kind}, {"min_eig", rep.min_eig}, {"path_steps", rep.path_steps}};
    if (rep.kind == Membership::Boundary) r.result["kernel"] = rep.kernel;
    if (rep.kind == Membership::DisconnectedPositive)
        r.diagnostics.push_back("p(X) is positive definite but the path test failed: conservative label");
    return r;
}

int emit(const std::string& command, const Options& opt, const Report& rep) {
    json out;
    out["command"] = command;
    out["version"] = kVersion;
    out["config"] = {{"tol", opt.tol},
                     {"seed", opt.seed},
                     {"workers", opt.workers},
                     {"ordering", kOrdering}};
    out["result"] = rep.result;
    out["diagnostics"] = rep.diagnostics;
    std::cout << out.dump(opt.pretty ? 2 : -1) << "\n";
    return rep.failure ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curvature and signature analysis of noncommutative polynomials"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_poly) {
        cmd->add_option("-g", opt.g, "number of variables")->check(CLI::PositiveNumber);
        if (needs_poly) cmd->add_option("-p", opt.poly, "polynomial expression or @file");
        cmd->add_option("--point", opt.point_files, "point JSON file (repeatable)");
        cmd->add_option("--tol", opt.tol, "relative zero threshold");
        cmd->add_option("--seed", opt.seed, "random seed");
        cmd->add_option("--workers", opt.workers, "parallelism cap");
        cmd->add_flag("--pretty", opt.pretty, "indent the JSON report");
        return cmd;
    };

    std::vector<std::pair<CLI::App*, Report (*)(const Options&)>> cmds;
    auto reg = [&](const char* name, const char* desc, Report (*fn)(const Options&),
                   bool needs_poly = true) {
        auto* c = add_common(app.add_subcommand(name, desc), needs_poly);
        cmds.emplace_back(c, fn);
        return c;
    };

    reg("parse", "parse and canonicalize a polynomial", run_parse);
    reg("diff", "directional derivative", run_diff)
        ->add_option("--order", opt.order, "derivative order")
        ->check(CLI::PositiveNumber);
    reg("hessian", "second directional derivative", run_hessian);
    reg("middle-matrix", "middle matrix of the Hessian", run_middle_matrix);
    reg("signature", "scalar middle-matrix signature and the degree bound", run_signature);
    reg("sds", "signed sum-of-squares decomposition of the Hessian", run_sds);
    reg("convexity", "convex/concave/indefinite classification", run_convexity);
    reg("curvature", "curvature counts at a point", run_curvature);
    auto* relaxed = reg("relaxed", "relaxed Hessian signature search", run_relaxed);
    relaxed->add_option("--mode", opt.mode, "positive (default) or negative variant");
    reg("decompose", "tangent-space decomposition at a point", run_decompose);
    reg("direct-sum", "direct sum of points", run_direct_sum, false);
    reg("independence", "word independence certificate", run_independence, false)
        ->add_option("-N,--max-degree", opt.max_degree, "word length bound");
    reg("annihilator", "minimal annihilating polynomial", run_annihilator, false)
        ->add_option("-N,--max-degree", opt.max_degree, "degree bound");
    auto* chsy = reg("chsy", "border-range codimension formulas", run_chsy, false);
    chsy->add_option("-n", opt.n, "matrix size")->required();
    chsy->add_option("-r", opt.r, "independence word length")->required();
    chsy->add_option("-s", opt.s, "border word length")->required();
    auto* vs = reg("variety-signature", "signature of the variety", run_variety_signature);
    vs->add_option("--mode", opt.mode, "scalar (default), ceiling or sampled");
    vs->add_option("--samples", opt.samples, "sample budget");
    vs->add_option("--sample-n", opt.sample_n, "matrix size for sampled points");
    reg("membership", "positivity-domain membership test", run_membership)
        ->add_option("--steps", opt.steps, "path sample count");

    CLI11_PARSE(app, argc, argv);

    for (auto& [cmd, fn] : cmds) {
        if (!cmd->parsed()) continue;
        try {
            return emit(cmd->get_name(), opt, fn(opt));
        } catch (const InputError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return 2;
}
