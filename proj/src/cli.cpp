#include "ramlift/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ramlift/graph_io.hpp"
#include "ramlift/hikes.hpp"
#include "ramlift/nb_matrix.hpp"
#include "ramlift/oracle.hpp"
#include "ramlift/pipeline.hpp"
#include "ramlift/structure.hpp"

namespace ramlift {

namespace {

using nlohmann::json;

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SeedBytes resolve_seed(const std::string& flag_value, const char* fallback) {
    if (!flag_value.empty()) return parse_hex_seed(flag_value);
    if (const char* env = std::getenv("RAMLIFT_SEED")) return parse_hex_seed(env);
    return parse_hex_seed(fallback);
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ramanujan: return "ramanujan";
        case Verdict::eps_near_ramanujan: return "eps-near-ramanujan";
        case Verdict::above: return "above";
    }
    return "?";
}

json report_json(const SpectralReport& r) {
    json j{{"lambda1", r.lambda1},
           {"lambda2", r.lambda2},
           {"lambda_n", r.lambda_n},
           {"lambda", r.lambda},
           {"threshold", r.threshold},
           {"eps", r.eps},
           {"tolerance", r.tolerance},
           {"verdict", verdict_name(r.verdict)},
           {"signed", r.is_signed},
           {"estimate", r.estimate},
           {"residual", r.residual}};
    if (r.rho_b) j["rho_b"] = *r.rho_b;
    return j;
}

void emit(const json& report, const std::string& report_path) {
    std::cout << report.dump(2) << '\n';
    if (!report_path.empty()) {
        std::ofstream os(report_path);
        if (!os) throw std::runtime_error("cannot open " + report_path);
        os << report.dump(2) << '\n';
    }
}

json run_report(const std::string& command, json params, json outputs, double ms) {
    return json{{"schema_version", 1},
                {"command", command},
                {"params", std::move(params)},
                {"outputs", std::move(outputs)},
                {"timing_ms", ms}};
}

GraphModel parse_model(const std::string& name) {
    if (name == "config" || name == "configuration") return GraphModel::configuration;
    if (name == "lift") return GraphModel::lift_of_complete;
    throw CLI::ValidationError("--model", "expected config or lift");
}

PermutationFamily::Mode parse_perm_mode(const std::string& name) {
    if (name == "shuffled") return PermutationFamily::Mode::shuffled;
    if (name == "feistel") return PermutationFamily::Mode::feistel;
    throw CLI::ValidationError("--perm", "expected shuffled or feistel");
}

json oracle_section(const PipelineConfig& cfg, const PipelineResult& result) {
    const OracleConfig oc = OracleConfig::from_pipeline(cfg, result);
    return json{{"model", cfg.base_model == GraphModel::configuration ? "config" : "lift"},
                {"n0", oc.n0},
                {"d", oc.d},
                {"t", oc.t},
                {"perm", oc.perm_mode == PermutationFamily::Mode::shuffled ? "shuffled" : "feistel"},
                {"base_seed", seed_to_hex(oc.base_seed)},
                {"sign_seed", seed_to_hex(oc.sign_seed)},
                {"small_bias_signs", oc.small_bias_signs},
                {"bits_m", oc.bits_m},
                {"bits_k", oc.bits_k},
                {"fresh_seed_per_stage", oc.fresh_seed_per_stage}};
}

OracleConfig oracle_from_json(const json& j) {
    OracleConfig oc;
    oc.base_model = parse_model(j.at("model").get<std::string>());
    oc.n0 = j.at("n0").get<std::uint32_t>();
    oc.d = j.at("d").get<std::uint32_t>();
    oc.t = j.at("t").get<std::uint32_t>();
    oc.perm_mode = parse_perm_mode(j.value("perm", "shuffled"));
    oc.base_seed = parse_hex_seed(j.at("base_seed").get<std::string>());
    oc.sign_seed = parse_hex_seed(j.at("sign_seed").get<std::string>());
    oc.small_bias_signs = j.value("small_bias_signs", false);
    oc.bits_m = j.value("bits_m", 64u);
    oc.bits_k = j.value("bits_k", 64u);
    oc.fresh_seed_per_stage = j.value("fresh_seed_per_stage", false);
    return oc;
}

int cmd_generate(const std::string& model, std::uint32_t n, std::uint32_t d,
                 const std::string& seed_hex, const std::string& perm, bool simple,
                 std::uint64_t trial, const std::string& out,
                 const std::string& report_path) {
    Timer timer;
    ModelSpec spec;
    spec.model = parse_model(model);
    spec.n = n;
    spec.d = d;
    spec.seed = resolve_seed(seed_hex, "00");
    spec.perm_mode = parse_perm_mode(perm);

    std::optional<Multigraph> g;
    if (simple) {
        g = sample_simple(spec, trial);
    } else {
        g = sample(spec, trial);
    }
    json outputs{{"found", g.has_value()}};
    if (g) {
        save_graph(out, *g);
        outputs["file"] = out;
        outputs["n"] = g->vertex_count();
        outputs["edges"] = g->edge_count();
        outputs["simple"] = g->is_simple();
    }
    emit(run_report("generate",
                    json{{"model", model}, {"n", n}, {"d", d},
                         {"seed", seed_to_hex(spec.seed)}, {"perm", perm},
                         {"simple", simple}, {"trial", trial}},
                    outputs, timer.elapsed_ms()),
         report_path);
    return g ? 0 : 1;
}

int cmd_spectrum(const std::string& in, double eps, double tol, double rho_flag,
                 int dense_cap, const std::string& report_path) {
    Timer timer;
    const LoadedGraph loaded = load_graph(in);
    SpectraOptions opt;
    opt.eps = eps;
    opt.tolerance = tol;
    opt.dense_cap = dense_cap;
    SpectralReport rep;
    if (loaded.signing) {
        rep = spectral_report(loaded.as_signed(), opt);
    } else {
        rep = spectral_report(loaded.graph, opt);
    }
    const double rho = rho_flag >= 0 ? rho_flag : rep.threshold + eps;
    const bool pass = rep.lambda <= rho + tol;
    json outputs = report_json(rep);
    outputs["rho"] = rho;
    outputs["pass"] = pass;
    emit(run_report("spectrum",
                    json{{"in", in}, {"eps", eps}, {"tol", tol}, {"dense_cap", dense_cap}},
                    outputs, timer.elapsed_ms()),
         report_path);
    return pass ? 0 : 1;
}

int cmd_check_bicycle(const std::string& in, int radius, const std::string& report_path) {
    Timer timer;
    const LoadedGraph loaded = load_graph(in);
    const Multigraph& g = loaded.graph;
    json outputs;
    bool pass = true;
    if (radius >= 0) {
        pass = is_bicycle_free_at(g, static_cast<std::uint32_t>(radius));
        outputs["bicycle_free_at"] = pass;
        outputs["radius"] = radius;
    }
    const int found = bicycle_free_radius(g);
    outputs["bicycle_free_radius"] = found;
    outputs["radius_cap"] = default_radius_cap(g);
    // worst neighborhood at the first failing radius, for diagnosis
    if (found >= 0 && static_cast<std::uint32_t>(found) < default_radius_cap(g)) {
        const auto r = static_cast<std::uint32_t>(found + 1);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            const NeighborhoodReport rep = neighborhood(g, v, r);
            if (rep.excess > 0) {
                outputs["witness"] = json{{"root", rep.root},
                                          {"radius", rep.radius},
                                          {"vertices", rep.vertices},
                                          {"edges", rep.edges},
                                          {"excess", rep.excess}};
                break;
            }
        }
    }
    emit(run_report("check-bicycle", json{{"in", in}, {"radius", radius}}, outputs,
                    timer.elapsed_ms()),
         report_path);
    return pass ? 0 : 1;
}

int cmd_check_ihara_bass(const std::string& in, int points, double tol, double radius,
                         const std::string& seed_hex, const std::string& report_path) {
    Timer timer;
    const LoadedGraph loaded = load_graph(in);
    const SignedGraph sg = loaded.as_signed();
    const SeedBytes seed = resolve_seed(seed_hex, "01");
    const auto zs = ihara_bass_sample_points(points, radius, seed);
    const double residual = ihara_bass_residual(sg, zs);
    const bool pass = residual <= tol;
    emit(run_report("check-ihara-bass",
                    json{{"in", in}, {"points", points}, {"tol", tol},
                         {"radius", radius}, {"seed", seed_to_hex(seed)}},
                    json{{"residual", residual}, {"pass", pass}}, timer.elapsed_ms()),
         report_path);
    return pass ? 0 : 1;
}

int cmd_lift(const std::string& in, const std::string& seed_hex, const std::string& out,
             bool verify_union, bool small_bias, unsigned m, unsigned k,
             const std::string& report_path) {
    Timer timer;
    const LoadedGraph loaded = load_graph(in);
    const SeedBytes seed = resolve_seed(seed_hex, "02");
    const SignSource source = small_bias ? SignSource::small_bias(seed, m, k)
                                         : SignSource::uniform_hash(seed);
    const SignedGraph sg = sign_from_bits(loaded.graph, source);
    const Multigraph lifted = two_lift(sg);
    save_graph(out, lifted);
    bool pass = true;
    json outputs{{"file", out}, {"n", lifted.vertex_count()}, {"edges", lifted.edge_count()}};
    if (verify_union) {
        pass = verify_spectrum_union(sg, 1e-8);
        outputs["union_verified"] = pass;
    }
    emit(run_report("lift",
                    json{{"in", in}, {"seed", seed_to_hex(seed)},
                         {"small_bias", small_bias}, {"verify_union", verify_union}},
                    outputs, timer.elapsed_ms()),
         report_path);
    return pass ? 0 : 1;
}

int cmd_hikes(const std::string& in, std::uint32_t ell, const std::string& mode,
              const std::string& filter_name, const std::string& report_path) {
    Timer timer;
    const LoadedGraph loaded = load_graph(in);
    const Multigraph& g = loaded.graph;
    json outputs;
    bool pass = true;
    if (mode == "identity") {
        const ExpectationCheck check = verify_expectation_identity(g, ell);
        pass = check.residual() == 0;
        outputs = json{{"signed_average", check.signed_average},
                       {"even_special_hikes", check.even_special_hikes},
                       {"residual", check.residual()}};
    } else if (mode == "counts") {
        HikeFilter filter = HikeFilter::all;
        if (filter_name == "even") filter = HikeFilter::even;
        else if (filter_name == "singleton-free") filter = HikeFilter::singleton_free;
        else if (filter_name == "special") filter = HikeFilter::special;
        else if (filter_name == "even-special") filter = HikeFilter::even_special;
        else if (filter_name != "all") throw CLI::ValidationError("--filter", "unknown filter");
        const HikeCount count = enumerate_hikes(g, ell, filter);
        outputs = json{{"count", count.count}, {"complete", count.complete}};
    } else if (mode == "classify") {
        const int radius = std::max(1, bicycle_free_radius(g));
        std::uint64_t hikes = 0, boundary_mismatches = 0, singleton_violations = 0;
        enumerate_hikes(g, ell, HikeFilter::all, [&](const Hike& h) {
            ++hikes;
            const StepClassification c = classify_steps(g, h, static_cast<std::uint32_t>(radius));
            if (static_cast<std::int64_t>(c.boundary_count) != c.traversed_excess + 1)
                ++boundary_mismatches;
            if (hike_is_singleton_free(g, h) && 2 * c.stale_count < h.steps.size())
                ++singleton_violations;
        });
        pass = boundary_mismatches == 0 && singleton_violations == 0;
        outputs = json{{"hikes", hikes},
                       {"boundary_mismatches", boundary_mismatches},
                       {"stale_half_violations", singleton_violations},
                       {"stretch_limit", radius}};
    } else {
        throw CLI::ValidationError("--mode", "expected identity, counts, or classify");
    }
    emit(run_report("hike-experiment",
                    json{{"in", in}, {"ell", ell}, {"mode", mode}, {"filter", filter_name}},
                    outputs, timer.elapsed_ms()),
         report_path);
    return pass ? 0 : 1;
}

int cmd_pipeline(std::uint64_t N, std::uint32_t d, double eps, std::uint32_t n0,
                 const std::string& base, const std::string& s1_hex,
                 const std::string& s2_hex, int t_override, std::uint32_t r0,
                 int max_base_attempts, int max_sign_attempts, bool small_bias,
                 unsigned m, unsigned k, bool fresh_seeds, const std::string& out,
                 const std::string& report_path, const std::string& csv_path) {
    Timer timer;
    PipelineConfig cfg;
    cfg.N = N;
    cfg.d = d;
    cfg.eps = eps;
    cfg.n0 = n0;
    cfg.base_model = parse_model(base);
    cfg.s1 = resolve_seed(s1_hex, "a1");
    cfg.s2 = resolve_seed(s2_hex, "a2");
    if (t_override >= 0) cfg.t_override = static_cast<std::uint32_t>(t_override);
    cfg.r0 = r0;
    cfg.max_base_attempts = max_base_attempts;
    cfg.max_sign_attempts = max_sign_attempts;
    cfg.small_bias_signs = small_bias;
    cfg.bits_m = m;
    cfg.bits_k = k;
    cfg.fresh_seed_per_stage = fresh_seeds;

    const PipelineResult result = run_pipeline(cfg);
    if (!out.empty() && result.success) save_graph(out, result.graph);

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot open " + csv_path);
        csv.precision(12);
        csv << "stage,vertices,rho_signed,bicycle_radius,passed\n";
        csv << "0," << cfg.n0 << ',' << result.base_report.lambda << ','
            << result.base_bicycle_radius << ",1\n";
        for (const StageReport& s : result.stages)
            csv << s.stage << ',' << s.vertices << ',' << s.rho_signed << ','
                << s.bicycle_radius << ',' << (s.passed ? 1 : 0) << '\n';
    }

    json stages = json::array();
    for (const StageReport& s : result.stages)
        stages.push_back(json{{"stage", s.stage},
                              {"vertices", s.vertices},
                              {"rho_signed", s.rho_signed},
                              {"bicycle_radius", s.bicycle_radius},
                              {"passed", s.passed},
                              {"estimate", s.rho_is_estimate}});
    json outputs{{"success", result.success},
                 {"t", result.t},
                 {"final_vertices", result.final_vertices},
                 {"final_lambda", result.final_lambda},
                 {"threshold", result.threshold},
                 {"base", report_json(result.base_report)},
                 {"base_bicycle_radius", result.base_bicycle_radius},
                 {"stages", stages},
                 {"stage_failures", result.stage_failures},
                 {"seeds", json{{"s1", result.seeds.s1_hex},
                                {"s2", result.seeds.s2_hex},
                                {"base_attempt", result.seeds.base_attempt},
                                {"sign_attempt", result.seeds.sign_attempt}}}};
    if (result.success) outputs["oracle"] = oracle_section(cfg, result);
    if (!out.empty() && result.success) outputs["file"] = out;
    emit(run_report("pipeline",
                    json{{"N", N}, {"d", d}, {"eps", eps}, {"n0", n0}, {"base", base},
                         {"small_bias", small_bias}, {"fresh_seeds", fresh_seeds}},
                    outputs, timer.elapsed_ms()),
         report_path);
    return result.success ? 0 : 1;
}

int cmd_oracle(const std::string& config_path, const std::string& s1_hex,
               const std::string& s2_hex, std::uint64_t N, std::uint32_t d, std::uint32_t n0,
               const std::string& base, std::int64_t vertex, int port, bool batch,
               const std::string& report_path) {
    OracleConfig oc;
    if (!config_path.empty()) {
        std::ifstream is(config_path);
        if (!is) throw std::runtime_error("cannot open " + config_path);
        json j;
        is >> j;
        if (j.contains("outputs") && j["outputs"].contains("oracle")) j = j["outputs"]["oracle"];
        oc = oracle_from_json(j);
    } else {
        // raw seeds: resolve the accepted base attempt with a cheap n0-sized
        // search and read the sign stream at attempt 0
        if (s1_hex.empty() || s2_hex.empty())
            throw CLI::ValidationError("--config", "need --config or both --s1 and --s2");
        PipelineConfig cfg;
        cfg.N = N;
        cfg.d = d;
        cfg.n0 = n0;
        cfg.base_model = parse_model(base);
        cfg.s1 = parse_hex_seed(s1_hex);
        cfg.s2 = parse_hex_seed(s2_hex);
        const BaseSearchResult found = search_base(cfg);
        if (!found.graph) throw std::runtime_error("base search exhausted its seed budget");
        oc.base_model = cfg.base_model;
        oc.n0 = cfg.n0;
        oc.d = cfg.d;
        oc.t = pipeline_stage_count(cfg.N, cfg.n0);
        oc.perm_mode = cfg.perm_mode;
        oc.base_seed = derive_seed(cfg.s1, "base", found.attempt_index);
        oc.sign_seed = derive_seed(cfg.s2, "signs", 0);
    }
    const NeighborOracle oracle(oc);

    if (batch) {
        std::string line;
        while (std::getline(std::cin, line)) {
            if (line.empty()) continue;
            const std::uint64_t v = std::stoull(line);
            std::cout << json{{"vertex", v}, {"neighbors", oracle.neighbors(v)}}.dump() << '\n';
        }
        return 0;
    }
    if (vertex < 0) throw CLI::ValidationError("--vertex", "required unless --batch");
    json outputs{{"vertex", vertex}};
    if (port >= 0) {
        outputs["port"] = port;
        outputs["neighbor"] = oracle.neighbor_by_port(static_cast<std::uint64_t>(vertex),
                                                      static_cast<std::uint32_t>(port));
    } else {
        outputs["neighbors"] = oracle.neighbors(static_cast<std::uint64_t>(vertex));
    }
    json params{{"config", config_path}};
    if (config_path.empty()) {
        params["s1"] = s1_hex;
        params["s2"] = s2_hex;
        params["N"] = N;
        params["d"] = d;
        params["n0"] = n0;
        params["base"] = base;
    }
    emit(run_report("oracle", std::move(params), outputs, 0.0), report_path);
    return 0;
}

int cmd_simplicity(const std::string& model, std::uint32_t n, std::uint32_t d,
                   std::uint64_t trials, const std::string& seed_hex,
                   const std::string& report_path, const std::string& csv_path) {
    Timer timer;
    ModelSpec spec;
    spec.model = parse_model(model);
    spec.n = n;
    spec.d = d;
    spec.seed = resolve_seed(seed_hex, "03");

    if (!csv_path.empty()) {
        // cumulative convergence series for plotting
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("cannot open " + csv_path);
        csv.precision(12);
        csv << "trials,cumulative_rate\n";
        std::uint64_t simple = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            simple += sample(spec, t).is_simple();
            if ((t + 1) % std::max<std::uint64_t>(1, trials / 100) == 0 || t + 1 == trials)
                csv << (t + 1) << ',' << static_cast<double>(simple) / static_cast<double>(t + 1)
                    << '\n';
        }
    }

    const SimplicityEstimate est = simplicity_rate(spec, trials);
    const double predicted =
        std::exp(-(static_cast<double>(d) * d - 1.0) / 4.0);
    emit(run_report("simplicity",
                    json{{"model", model}, {"n", n}, {"d", d}, {"trials", trials},
                         {"seed", seed_to_hex(spec.seed)}},
                    json{{"rate", est.rate},
                         {"ci_halfwidth", est.ci_halfwidth},
                         {"simple_count", est.simple_count},
                         {"asymptotic_rate", predicted}},
                    timer.elapsed_ms()),
         report_path);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"near-Ramanujan graph construction and verification"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "sample a graph from a model");
    std::string g_model = "config", g_seed, g_perm = "shuffled", g_out, g_report;
    std::uint32_t g_n = 0, g_d = 0;
    std::uint64_t g_trial = 0;
    bool g_simple = false;
    generate->add_option("--model", g_model);
    generate->add_option("--n", g_n)->required();
    generate->add_option("--d", g_d)->required();
    generate->add_option("--seed", g_seed);
    generate->add_option("--perm", g_perm);
    generate->add_option("--trial", g_trial);
    generate->add_flag("--simple", g_simple, "condition on simplicity");
    generate->add_option("--out", g_out)->required();
    generate->add_option("--report", g_report);

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "eigenvalue report and threshold check");
    std::string s_in, s_report;
    double s_eps = 0.0, s_tol = 1e-6, s_rho = -1.0;
    int s_cap = 4096;
    spectrum->add_option("--in", s_in)->required();
    spectrum->add_option("--eps", s_eps);
    spectrum->add_option("--tol", s_tol);
    spectrum->add_option("--rho", s_rho, "threshold (default 2 sqrt(d-1) + eps)");
    spectrum->add_option("--dense-cap", s_cap);
    spectrum->add_option("--report", s_report);

    // check-bicycle
    auto* bicycle = app.add_subcommand("check-bicycle", "bicycle-freeness report");
    std::string b_in, b_report;
    int b_radius = -1;
    bicycle->add_option("--in", b_in)->required();
    bicycle->add_option("--radius", b_radius);
    bicycle->add_option("--report", b_report);

    // check-ihara-bass
    auto* ib = app.add_subcommand("check-ihara-bass", "determinant identity check");
    std::string ib_in, ib_seed, ib_report;
    int ib_points = 16;
    double ib_tol = 1e-8, ib_radius = 0.1;
    ib->add_option("--in", ib_in)->required();
    ib->add_option("--points", ib_points);
    ib->add_option("--tol", ib_tol);
    ib->add_option("--radius", ib_radius);
    ib->add_option("--seed", ib_seed);
    ib->add_option("--report", ib_report);

    // lift
    auto* lift = app.add_subcommand("lift", "sign a graph and write its 2-lift");
    std::string l_in, l_seed, l_out, l_report;
    bool l_verify = false, l_small_bias = false;
    unsigned l_m = 64, l_k = 64;
    lift->add_option("--in", l_in)->required();
    lift->add_option("--seed", l_seed);
    lift->add_option("--out", l_out)->required();
    lift->add_flag("--verify-union", l_verify);
    lift->add_flag("--small-bias", l_small_bias);
    lift->add_option("--m", l_m);
    lift->add_option("--k", l_k);
    lift->add_option("--report", l_report);

    // hike-experiment
    auto* hikes = app.add_subcommand("hike-experiment", "hike counting and identities");
    std::string h_in, h_mode = "counts", h_filter = "all", h_report;
    std::uint32_t h_ell = 1;
    hikes->add_option("--in", h_in)->required();
    hikes->add_option("--ell", h_ell)->required();
    hikes->add_option("--mode", h_mode);
    hikes->add_option("--filter", h_filter);
    hikes->add_option("--report", h_report);

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "base search plus repeated 2-lifts");
    std::string p_base = "config", p_s1, p_s2, p_out, p_report, p_csv;
    std::uint64_t p_N = 4096;
    std::uint32_t p_d = 3, p_n0 = 64, p_r0 = 1;
    double p_eps = 0.3;
    int p_t = -1, p_base_attempts = 1000, p_sign_attempts = 1;
    bool p_small_bias = false, p_fresh = false;
    unsigned p_m = 64, p_k = 64;
    pipe->add_option("--N", p_N)->required();
    pipe->add_option("--d", p_d)->required();
    pipe->add_option("--eps", p_eps)->required();
    pipe->add_option("--n0", p_n0);
    pipe->add_option("--base", p_base);
    pipe->add_option("--s1", p_s1);
    pipe->add_option("--s2", p_s2);
    pipe->add_option("--t", p_t);
    pipe->add_option("--r0", p_r0);
    pipe->add_option("--max-base-attempts", p_base_attempts);
    pipe->add_option("--max-sign-attempts", p_sign_attempts);
    pipe->add_flag("--small-bias", p_small_bias);
    pipe->add_option("--m", p_m);
    pipe->add_option("--k", p_k);
    pipe->add_flag("--fresh-seeds", p_fresh);
    pipe->add_option("--out", p_out);
    pipe->add_option("--report", p_report);
    pipe->add_option("--csv", p_csv, "per-stage series for plotting");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "seed-driven neighbor queries");
    std::string o_config, o_s1, o_s2, o_base = "config", o_report;
    std::uint64_t o_N = 4096;
    std::uint32_t o_d = 3, o_n0 = 64;
    std::int64_t o_vertex = -1;
    int o_port = -1;
    bool o_batch = false;
    oracle->add_option("--config", o_config, "pipeline report with an oracle section");
    oracle->add_option("--s1", o_s1, "raw master seed (with --s2 instead of --config)");
    oracle->add_option("--s2", o_s2);
    oracle->add_option("--N", o_N);
    oracle->add_option("--d", o_d);
    oracle->add_option("--n0", o_n0);
    oracle->add_option("--base", o_base);
    oracle->add_option("--vertex", o_vertex);
    oracle->add_option("--port", o_port);
    oracle->add_flag("--batch", o_batch);
    oracle->add_option("--report", o_report);

    // simplicity
    auto* simplicity = app.add_subcommand("simplicity", "Monte Carlo simplicity rate");
    std::string m_model = "config", m_seed, m_report, m_csv;
    std::uint32_t m_n = 500, m_d = 3;
    std::uint64_t m_trials = 1000;
    simplicity->add_option("--model", m_model);
    simplicity->add_option("--n", m_n)->required();
    simplicity->add_option("--d", m_d)->required();
    simplicity->add_option("--trials", m_trials);
    simplicity->add_option("--seed", m_seed);
    simplicity->add_option("--report", m_report);
    simplicity->add_option("--csv", m_csv, "cumulative-rate series for plotting");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (*generate)
            return cmd_generate(g_model, g_n, g_d, g_seed, g_perm, g_simple, g_trial, g_out,
                                g_report);
        if (*spectrum) return cmd_spectrum(s_in, s_eps, s_tol, s_rho, s_cap, s_report);
        if (*bicycle) return cmd_check_bicycle(b_in, b_radius, b_report);
        if (*ib) return cmd_check_ihara_bass(ib_in, ib_points, ib_tol, ib_radius, ib_seed, ib_report);
        if (*lift)
            return cmd_lift(l_in, l_seed, l_out, l_verify, l_small_bias, l_m, l_k, l_report);
        if (*hikes) return cmd_hikes(h_in, h_ell, h_mode, h_filter, h_report);
        if (*pipe)
            return cmd_pipeline(p_N, p_d, p_eps, p_n0, p_base, p_s1, p_s2, p_t, p_r0,
                                p_base_attempts, p_sign_attempts, p_small_bias, p_m, p_k,
                                p_fresh, p_out, p_report, p_csv);
        if (*oracle)
            return cmd_oracle(o_config, o_s1, o_s2, o_N, o_d, o_n0, o_base, o_vertex, o_port,
                              o_batch, o_report);
        if (*simplicity)
            return cmd_simplicity(m_model, m_n, m_d, m_trials, m_seed, m_report, m_csv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace ramlift
