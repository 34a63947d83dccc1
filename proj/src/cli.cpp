#include "hslab/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hslab/errors.hpp"
#include "hslab/experiments.hpp"
#include "hslab/functionals.hpp"
#include "hslab/io.hpp"
#include "hslab/manifold.hpp"
#include "hslab/profile.hpp"
#include "hslab/spectral.hpp"
#include "hslab/verify.hpp"

namespace hslab {

namespace {

struct Common {
    int N = 5;
    double p = 2.0, beta = 1.0;
    std::string outdir = "out";
    std::uint64_t seed = 42;
    int jobs = 1;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--N", c.N, "space dimension")->capture_default_str();
    sub->add_option("--p", c.p, "gradient exponent")->capture_default_str();
    sub->add_option("--beta", c.beta, "singular weight exponent")
        ->capture_default_str();
    sub->add_option("--outdir", c.outdir, "output directory")
        ->capture_default_str();
    sub->add_option("--seed", c.seed, "base random seed")
        ->capture_default_str();
    sub->add_option("--jobs", c.jobs, "worker threads for sample loops")
        ->capture_default_str();
}

std::map<std::string, std::string> base_config(const std::string& sub,
                                               const Common& c) {
    return {{"subcommand", sub},
            {"N", std::to_string(c.N)},
            {"p", fmt17(c.p)},
            {"beta", fmt17(c.beta)},
            {"seed", std::to_string(c.seed)}};
}

nlohmann::json params_json(const Params& P) {
    nlohmann::json j;
    j["N"] = P.N;
    j["p"] = json_num(P.p);
    j["beta"] = json_num(P.beta);
    j["pstar"] = json_num(P.pstar);
    j["m"] = json_num(P.m);
    j["K"] = json_num(P.K);
    j["gamma"] = json_num(P.gamma_exp);
    return j;
}

nlohmann::json fit_json(const FitResult& f) {
    nlohmann::json j;
    j["slope"] = json_num(f.slope);
    j["intercept"] = json_num(f.intercept);
    j["r_squared"] = json_num(f.r_squared);
    j["slope_stderr"] = json_num(f.slope_stderr);
    return j;
}

void announce(const RunOutput& out) {
    std::cout << "runid " << out.runid << "\n";
    std::cout << "wrote " << out.csv_path.string() << "\n";
    std::cout << "wrote " << out.json_path.string() << "\n";
}

int run_spectrum(const Common& c, int k, int count, int grid_n, double r_min,
                 double r_max) {
    Params P = make_params(c.N, c.p, c.beta);
    GridSpec g;
    g.n = grid_n;
    g.r_min = r_min;
    g.r_max = r_max;
    SpectralResult res = eigen_mode(P, k, count, g);

    auto cfg = base_config("spectrum", c);
    cfg["k"] = std::to_string(k);
    cfg["count"] = std::to_string(count);
    cfg["grid_n"] = std::to_string(grid_n);
    cfg["r_min"] = fmt17(r_min);
    cfg["r_max"] = fmt17(r_max);
    RunOutput out = prepare_run(c.outdir, "spectrum", cfg);

    std::string csv = csv_line({"k", "index", "eigenvalue",
                                "refinement_shift"});
    for (size_t i = 0; i < res.eigenvalues.size(); ++i)
        csv += csv_line({std::to_string(k), std::to_string(i),
                         fmt17(res.eigenvalues[i]),
                         fmt17(res.refinement_shift[i])});
    write_text(out.csv_path, csv);

    nlohmann::json j;
    j["params"] = params_json(P);
    j["k"] = k;
    j["angular_eigenvalue"] = json_num(res.lambda_k);
    j["eigenvalues"] = json_num_array(res.eigenvalues);
    j["refinement_shift"] = json_num_array(res.refinement_shift);
    j["grid"] = {{"r_min", json_num(res.grid.r_min)},
                 {"r_max", json_num(res.grid.r_max)},
                 {"n", res.grid.n}};
    write_json(out.json_path, j);
    write_meta(out, cfg);

    for (size_t i = 0; i < res.eigenvalues.size(); ++i)
        std::cout << "mu[" << i << "] = " << fmt17(res.eigenvalues[i])
                  << "  (refinement shift " << fmt17(res.refinement_shift[i])
                  << ")\n";
    announce(out);
    return 0;
}

struct FieldSpec {
    std::string kind = "extremal";
    double c = 1.0;
    double lambda = 1.0;
    int level = 16;
    double x0 = 40.0;
    double eps = 0.1;
};

void add_field(CLI::App* sub, FieldSpec& f) {
    sub->add_option("--field", f.kind,
                    "extremal | squeeze | bump")->capture_default_str();
    sub->add_option("--c", f.c, "multiple of the extremal")
        ->capture_default_str();
    sub->add_option("--lambda", f.lambda, "extremal scale")
        ->capture_default_str();
    sub->add_option("--level", f.level, "squeeze level n")
        ->capture_default_str();
    sub->add_option("--x0", f.x0, "bump center distance")
        ->capture_default_str();
    sub->add_option("--eps", f.eps, "bump amplitude")->capture_default_str();
}

void field_config(std::map<std::string, std::string>& cfg,
                  const FieldSpec& f) {
    cfg["field"] = f.kind;
    if (f.kind == "extremal") {
        cfg["c"] = fmt17(f.c);
        cfg["lambda"] = fmt17(f.lambda);
    } else if (f.kind == "squeeze") {
        cfg["level"] = std::to_string(f.level);
    } else if (f.kind == "bump") {
        cfg["x0"] = fmt17(f.x0);
        cfg["eps"] = fmt17(f.eps);
    } else {
        throw DomainError("unknown field kind: " + f.kind);
    }
}

int run_deficit(const Common& c, const FieldSpec& f) {
    Params P = make_params(c.N, c.p, c.beta);
    auto cfg = base_config("deficit", c);
    field_config(cfg, f);
    RunOutput out = prepare_run(c.outdir, "deficit", cfg);

    DeficitReport rep;
    if (f.kind == "extremal")
        rep = deficit(scale_profile(f.c, extremal(P, f.lambda)), P);
    else if (f.kind == "squeeze")
        rep = deficit(diagonal_squeeze_field(P, f.level), P);
    else
        rep = deficit(shifted_bump_field(P, f.x0, f.eps), P);

    std::string csv = csv_line({"grad_p", "star_int", "star_p", "sharp",
                                "deficit", "quad_error"});
    csv += csv_line({fmt17(rep.grad_p), fmt17(rep.star_int),
                     fmt17(rep.star_p), fmt17(rep.sharp), fmt17(rep.deficit),
                     fmt17(rep.quad_error)});
    write_text(out.csv_path, csv);

    nlohmann::json j;
    j["params"] = params_json(P);
    j["field"] = f.kind;
    j["grad_p"] = json_num(rep.grad_p);
    j["star_int"] = json_num(rep.star_int);
    j["star_p"] = json_num(rep.star_p);
    j["sharp"] = json_num(rep.sharp);
    j["deficit"] = json_num(rep.deficit);
    j["quad_error"] = json_num(rep.quad_error);
    j["proved_regime"] = rep.proved_regime;
    write_json(out.json_path, j);
    write_meta(out, cfg);

    std::cout << "deficit = " << fmt17(rep.deficit) << "  (sharp constant "
              << fmt17(rep.sharp) << ")\n";
    announce(out);
    return 0;
}

int run_distance(const Common& c, const FieldSpec& f) {
    Params P = make_params(c.N, c.p, c.beta);
    auto cfg = base_config("distance", c);
    field_config(cfg, f);
    RunOutput out = prepare_run(c.outdir, "distance", cfg);

    DistanceResult res;
    if (f.kind == "extremal")
        res = distance(scale_profile(f.c, extremal(P, f.lambda)), P);
    else if (f.kind == "squeeze")
        res = distance(diagonal_squeeze_field(P, f.level), P);
    else
        res = distance(shifted_bump_field(P, f.x0, f.eps), P);

    std::string csv = csv_line({"d", "c_star", "lambda_star", "grad_norm",
                                "converged", "widened", "on_boundary"});
    csv += csv_line({fmt17(res.d), fmt17(res.c_star), fmt17(res.lambda_star),
                     fmt17(res.grad_norm), res.converged ? "1" : "0",
                     res.widened ? "1" : "0", res.on_boundary ? "1" : "0"});
    write_text(out.csv_path, csv);

    nlohmann::json j;
    j["params"] = params_json(P);
    j["field"] = f.kind;
    j["d"] = json_num(res.d);
    j["c_star"] = json_num(res.c_star);
    j["lambda_star"] = json_num(res.lambda_star);
    j["grad_norm"] = json_num(res.grad_norm);
    j["converged"] = res.converged;
    j["widened"] = res.widened;
    j["on_boundary"] = res.on_boundary;
    j["evaluations"] = static_cast<long>(res.trace.size());
    nlohmann::json nm = nlohmann::json::array();
    for (const auto& [cc, ll] : res.near_minima)
        nm.push_back({json_num(cc), json_num(ll)});
    j["near_minima"] = nm;
    write_json(out.json_path, j);
    write_meta(out, cfg);

    std::cout << "d = " << fmt17(res.d) << " at c = " << fmt17(res.c_star)
              << ", lambda = " << fmt17(res.lambda_star) << "\n";
    if (!res.converged) std::cout << "note: search did not converge\n";
    announce(out);
    return 0;
}

int run_sharpness(const Common& c, const std::string& fam,
                  std::vector<int> levels, std::vector<double> eps_list,
                  double x0) {
    Params P = make_params(c.N, c.p, c.beta);
    auto cfg = base_config("sharpness", c);
    cfg["family"] = fam;
    ScalingTable table;
    if (fam == "squeeze") {
        std::string lv;
        for (int n : levels) lv += std::to_string(n) + ";";
        cfg["levels"] = lv;
        table = sharpness_diag(P, levels);
    } else if (fam == "bump") {
        std::string ev;
        for (double e : eps_list) ev += fmt17(e) + ";";
        cfg["eps_list"] = ev;
        cfg["x0"] = fmt17(x0);
        table = sharpness_bump(P, x0, eps_list);
    } else {
        throw DomainError("unknown sharpness family: " + fam);
    }
    RunOutput out = prepare_run(c.outdir, "sharpness", cfg);

    std::string csv =
        csv_line({"control", "deficit", "distance", "quotient"});
    for (const auto& r : table.rows)
        csv += csv_line({fmt17(r.control), fmt17(r.deficit),
                         fmt17(r.distance), fmt17(r.quotient)});
    write_text(out.csv_path, csv);

    nlohmann::json j;
    j["params"] = params_json(P);
    j["family"] = fam;
    j["gamma"] = json_num(table.gamma);
    j["deficit_fit"] = fit_json(table.deficit_fit);
    j["distance_fit"] = fit_json(table.distance_fit);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows)
        rows.push_back({{"control", json_num(r.control)},
                        {"deficit", json_num(r.deficit)},
                        {"distance", json_num(r.distance)},
                        {"quotient", json_num(r.quotient)}});
    j["rows"] = rows;
    write_json(out.json_path, j);
    write_meta(out, cfg);

    std::cout << "deficit slope " << fmt17(table.deficit_fit.slope)
              << " (r2 " << fmt17(table.deficit_fit.r_squared)
              << "), distance slope " << fmt17(table.distance_fit.slope)
              << " (r2 " << fmt17(table.distance_fit.r_squared) << ")\n";
    announce(out);
    return 0;
}

int run_stability(const Common& c, int samples) {
    Params P = make_params(c.N, c.p, c.beta);
    auto cfg = base_config("stability", c);
    cfg["samples"] = std::to_string(samples);
    RunOutput out = prepare_run(c.outdir, "stability", cfg);

    StabilityReport rep =
        stability_sample(P, samples, c.seed, "bumps6", c.jobs);

    std::string csv =
        csv_line({"index", "sample_seed", "c", "lambda", "t_ratio", "deficit",
                  "distance", "quotient", "kept"});
    for (const auto& s : rep.samples)
        csv += csv_line({std::to_string(s.index),
                         std::to_string(s.sample_seed), fmt17(s.c),
                         fmt17(s.lambda), fmt17(s.t_ratio), fmt17(s.deficit),
                         fmt17(s.distance), fmt17(s.quotient),
                         s.kept ? "1" : "0"});
    write_text(out.csv_path, csv);

    nlohmann::json j;
    j["params"] = params_json(P);
    j["samples"] = samples;
    j["n_kept"] = rep.n_kept;
    j["n_rejected"] = rep.n_rejected;
    j["gamma"] = json_num(rep.gamma);
    j["empirical_B"] = json_num(rep.empirical_B);
    write_json(out.json_path, j);
    write_meta(out, cfg);

    std::cout << "kept " << rep.n_kept << "/" << samples
              << ", empirical stability constant "
              << fmt17(rep.empirical_B) << "\n";
    announce(out);
    return (rep.n_kept > 0 && rep.empirical_B > 0.0) ? 0 : 1;
}

int run_verify(const Common& c, const std::string& suite, long samples,
               bool has_params) {
    auto cfg = base_config("verify", c);
    if (!has_params) {
        cfg.erase("N");
        cfg.erase("p");
        cfg.erase("beta");
    }
    cfg["suite"] = suite;
    cfg["samples"] = std::to_string(samples);
    RunOutput out = prepare_run(c.outdir, "verify", cfg);

    Params override_p = has_params ? make_params(c.N, c.p, c.beta)
                                   : make_params(5, 2.0, 1.0);
    std::vector<IneqReport> reports =
        run_suite(suite, samples, c.seed, has_params ? &override_p : nullptr);

    std::string csv = csv_line({"name", "samples", "violations",
                                "estimated_constant", "worst_margin", "q_min",
                                "q25", "median", "q75", "q_max", "passed"});
    bool all_pass = true;
    for (const auto& r : reports) {
        csv += csv_line({r.name, std::to_string(r.samples),
                         std::to_string(r.violations),
                         fmt17(r.estimated_constant), fmt17(r.worst_margin),
                         fmt17(r.quantiles[0]), fmt17(r.quantiles[1]),
                         fmt17(r.quantiles[2]), fmt17(r.quantiles[3]),
                         fmt17(r.quantiles[4]), r.passed ? "1" : "0"});
        all_pass = all_pass && r.passed;
    }
    write_text(out.csv_path, csv);

    nlohmann::json j;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json e;
        e["name"] = r.name;
        e["samples"] = r.samples;
        e["violations"] = r.violations;
        e["estimated_constant"] = json_num(r.estimated_constant);
        e["worst_margin"] = json_num(r.worst_margin);
        e["quantiles"] = json_num_array({r.quantiles.begin(),
                                         r.quantiles.end()});
        e["passed"] = r.passed;
        e["note"] = r.note;
        nlohmann::json det;
        for (const auto& [k, v] : r.details) det[k] = json_num(v);
        e["details"] = det;
        arr.push_back(e);
    }
    j["suite"] = suite;
    j["reports"] = arr;
    j["all_passed"] = all_pass;
    write_json(out.json_path, j);
    write_meta(out, cfg);

    for (const auto& r : reports)
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name
                  << "  violations=" << r.violations << "  constant="
                  << fmt17(r.estimated_constant)
                  << (r.note.empty() ? "" : ("  (" + r.note + ")")) << "\n";
    announce(out);
    return all_pass ? 0 : 1;
}

int run_constants(const Common& c) {
    Params P = make_params(c.N, c.p, c.beta);
    auto cfg = base_config("constants", c);
    RunOutput out = prepare_run(c.outdir, "constants", cfg);

    std::vector<std::pair<std::string, double>> rows = {
        {"pstar", P.pstar},
        {"m", P.m},
        {"q", P.q},
        {"K", P.K},
        {"Cnpb", P.Cnpb},
        {"cnp", P.cnp},
        {"tail_power", (P.N - P.p) / (P.p - 1.0)},
        {"gamma", P.gamma_exp},
        {"sphere_area", P.sphere_area},
        {"sharp_constant", sharp_constant(P)},
    };
    std::string csv = csv_line({"name", "value"});
    nlohmann::json j;
    j["params"] = params_json(P);
    for (const auto& [k, v] : rows) {
        csv += csv_line({k, fmt17(v)});
        j[k] = json_num(v);
        std::cout << k << " = " << fmt17(v) << "\n";
    }
    j["proved_regime"] = P.proved_regime;
    write_text(out.csv_path, csv);
    write_json(out.json_path, j);
    write_meta(out, cfg);
    announce(out);
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{
        "numerical laboratory for the stability of a weighted Sobolev "
        "inequality with p-Laplace structure"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file");

    Common c;
    if (const char* env = std::getenv("HSLAB_SEED"))
        c.seed = std::strtoull(env, nullptr, 10);

    auto* sp = app.add_subcommand("spectrum",
                                  "linearized eigenvalues in one sector");
    int k = 0, count = 3, grid_n = 2000;
    double r_min = 1e-6, r_max = 0.0;
    add_common(sp, c);
    sp->add_option("--k", k, "angular sector")->capture_default_str();
    sp->add_option("--count", count, "eigenvalues to compute")
        ->capture_default_str();
    sp->add_option("--grid-n", grid_n, "element count")->capture_default_str();
    sp->add_option("--r-min", r_min, "inner grid radius")
        ->capture_default_str();
    sp->add_option("--r-max", r_max, "outer grid radius (0 = automatic)")
        ->capture_default_str();

    auto* df = app.add_subcommand("deficit", "deficit of a named field");
    FieldSpec fs_deficit;
    add_common(df, c);
    add_field(df, fs_deficit);

    auto* ds = app.add_subcommand("distance",
                                  "distance to the extremal manifold");
    FieldSpec fs_distance;
    add_common(ds, c);
    add_field(ds, fs_distance);

    auto* sh = app.add_subcommand("sharpness",
                                  "deficit/distance scaling experiments");
    std::string family = "squeeze";
    std::vector<int> levels = {8, 16, 32, 64};
    std::vector<double> eps_list = {0.1, 0.05, 0.025, 0.0125};
    double x0 = 40.0;
    add_common(sh, c);
    sh->add_option("--family", family, "squeeze | bump")
        ->capture_default_str();
    sh->add_option("--levels", levels, "squeeze levels");
    sh->add_option("--eps-list", eps_list, "bump amplitudes");
    sh->add_option("--x0", x0, "bump center distance")->capture_default_str();

    auto* st = app.add_subcommand("stability",
                                  "random-perturbation stability sampling");
    int st_samples = 200;
    add_common(st, c);
    st->add_option("--samples", st_samples, "number of samples")
        ->capture_default_str();

    auto* vf = app.add_subcommand("verify", "inequality check suites");
    std::string suite = "all";
    long vf_samples = 100000;
    add_common(vf, c);
    vf->add_option("--suite", suite,
                   "vector | scalar | hardy | pointwise | local | orlicz | "
                   "all")
        ->capture_default_str();
    vf->add_option("--samples", vf_samples, "samples per pointwise check")
        ->capture_default_str();

    auto* ct = app.add_subcommand("constants",
                                  "derived constants for one parameter set");
    add_common(ct, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sp->parsed())
            return run_spectrum(c, k, count, grid_n, r_min, r_max);
        if (df->parsed()) return run_deficit(c, fs_deficit);
        if (ds->parsed()) return run_distance(c, fs_distance);
        if (sh->parsed())
            return run_sharpness(c, family, levels, eps_list, x0);
        if (st->parsed()) return run_stability(c, st_samples);
        if (vf->parsed()) {
            bool has_params = vf->count("--N") || vf->count("--p") ||
                              vf->count("--beta");
            return run_verify(c, suite, vf_samples, has_params);
        }
        if (ct->parsed()) return run_constants(c);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RegimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GridError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace hslab
