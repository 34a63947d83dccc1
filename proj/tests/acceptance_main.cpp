// Acceptance gate: every release-blocking behavior, one line of output each.
// Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hslab/errors.hpp"
#include "hslab/experiments.hpp"
#include "hslab/functionals.hpp"
#include "hslab/manifold.hpp"
#include "hslab/params.hpp"
#include "hslab/profile.hpp"
#include "hslab/rng.hpp"
#include "hslab/spectral.hpp"
#include "hslab/verify.hpp"

using namespace hslab;
namespace fs = std::filesystem;
using clk = std::chrono::steady_clock;

namespace {

double secs(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

std::vector<Params> grid() {
    std::vector<Params> g;
    for (int N : {3, 4, 5})
        for (double p : {1.5, 2.0, 2.5})
            for (double frac : {0.3, 0.7}) g.push_back(make_params(N, p, frac * p));
    return g;
}

int failures = 0;

void report(int idx, bool pass, const std::string& text) {
    std::printf("AC%d %s  %s\n", idx, pass ? "PASS" : "FAIL", text.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// AC1: the extremal saturates the inequality on the whole parameter grid.
void ac1() {
    auto t0 = clk::now();
    double worst = 0.0;
    int count = 0;
    for (const Params& P : grid()) {
        DeficitReport rep = deficit(extremal(P, 1.0), P);
        worst = std::max(worst, std::fabs(rep.deficit) / rep.grad_p);
        ++count;
    }
    double el = secs(t0);
    bool pass = worst <= 1e-8 && el < 10.0;
    report(1, pass,
           fmt("extremal saturates the inequality: max rel deficit %.1e over "
               "%d triples (tol 1e-8, %.1f s < 10 s)",
               worst, count, el));
}

// AC2: the deficit vanishes along the whole two-parameter manifold.
void ac2() {
    auto t0 = clk::now();
    double worst = 0.0;
    long n_pairs = 0;
    int idx = 0;
    for (const Params& P : grid()) {
        RadialProfile U1 = extremal(P, 1.0);
        double scale = grad_pnorm(U1, P);
        Rng rng(derive_seed(2024, static_cast<std::uint64_t>(idx++)));
        for (int s = 0; s < 50; ++s) {
            double c = rng.log_uniform(0.5, 2.0) * rng.sign();
            double lam = rng.log_uniform(0.25, 4.0);
            DeficitReport rep = deficit(scale_profile(c, extremal(P, lam)), P);
            worst = std::max(worst, std::fabs(rep.deficit) /
                                        (std::pow(std::fabs(c), P.p) * scale));
            ++n_pairs;
        }
    }
    bool pass = worst <= 1e-8;
    report(2, pass,
           fmt("deficit vanishes on the manifold: max rel deficit %.1e over "
               "%ld scaled extremals (tol 1e-8, %.1f s)",
               worst, n_pairs, secs(t0)));
}

// AC3: the linearized operator has the two closed-form radial eigenvalues,
// the first angular sector clears the neutral threshold, and the transformed
// eigenequation residuals vanish.
void ac3() {
    auto t0 = clk::now();
    double worst_eig = 0.0, worst_shift = 0.0, worst_resid = 0.0;
    double min_margin = 1e300, min_perturbed = 1e300;
    bool gaps_ok = true;
    for (const Params& P : grid()) {
        SpectralResult sr = eigen_mode(P, 0, 2);
        worst_eig = std::max(worst_eig,
                             std::fabs(sr.eigenvalues[0] - (P.p - 1.0)) / (P.p - 1.0));
        worst_eig = std::max(worst_eig, std::fabs(sr.eigenvalues[1] - (P.pstar - 1.0)) /
                                            (P.pstar - 1.0));
        for (double s : sr.refinement_shift)
            worst_shift = std::max(worst_shift, std::fabs(s));
        double bottom = eigen_mode(P, 1, 1).eigenvalues[0];
        min_margin = std::min(min_margin, bottom - (P.pstar - 1.0));
        worst_resid = std::max(worst_resid, analytic_residual(P, 0));
        worst_resid = std::max(worst_resid, analytic_residual(P, 1));
        min_perturbed = std::min(min_perturbed, analytic_residual(P, 0, P.K + 0.1));
        if (!sector_bound(P).ok) gaps_ok = false;
        if (!spectral_gap(P).positive) gaps_ok = false;
    }
    double el = secs(t0);
    bool pass = worst_eig <= 1e-3 && min_margin > 0.0 && worst_resid <= 1e-10 &&
                min_perturbed > 1e-3 && gaps_ok && el < 120.0;
    report(3, pass,
           fmt("linearized spectrum: max rel eigenvalue error %.1e (tol 1e-3, "
               "refinement shift <= %.1e), first-sector margin %.2f > 0, "
               "residuals <= %.1e (tol 1e-10, perturbed >= %.2f), gaps ok=%d "
               "(%.1f s < 120 s)",
               worst_eig, worst_shift, min_margin, worst_resid, min_perturbed,
               (int)gaps_ok, el));
}

// AC4: both scaling families show their predicted exponents.
void ac4() {
    auto t0 = clk::now();
    ScalingTable d = sharpness_diag(make_params(4, 1.5, 0.5), {8, 16, 32, 64});
    double el_d = secs(t0);
    bool pass_d = std::fabs(d.deficit_fit.slope - 2.0) <= 0.1 &&
                  std::fabs(d.distance_fit.slope - 1.0) <= 0.1 &&
                  d.deficit_fit.r_squared >= 0.99 &&
                  d.distance_fit.r_squared >= 0.99 && el_d < 300.0;

    auto t1 = clk::now();
    Params Pb = make_params(5, 2.5, 1.0);
    ScalingTable b = sharpness_bump(Pb, 40.0, {0.1, 0.05, 0.025, 0.0125});
    double el_b = secs(t1);
    bool pass_b = std::fabs(b.deficit_fit.slope - Pb.p) <= 0.05 &&
                  std::fabs(b.distance_fit.slope - 1.0) <= 0.05 &&
                  b.deficit_fit.r_squared >= 0.99 &&
                  b.distance_fit.r_squared >= 0.99 && el_b < 300.0;
    report(4, pass_d && pass_b,
           fmt("scaling exponents: squeeze %.3f/%.3f (want 2/1 within "
               "0.1, %.0f s), far bump %.3f/%.3f (want 2.5/1 within 0.05, "
               "%.0f s), R^2 >= %.4f",
               d.deficit_fit.slope, d.distance_fit.slope, el_d,
               b.deficit_fit.slope, b.distance_fit.slope, el_b,
               std::min(std::min(d.deficit_fit.r_squared, d.distance_fit.r_squared),
                        std::min(b.deficit_fit.r_squared, b.distance_fit.r_squared))));
}

// AC5: the random-perturbation quotient stays positive on the whole grid and
// the sampler is bit-exactly reproducible.
void ac5() {
    auto t0 = clk::now();
    double min_B = 1e300;
    int n_kept_min = 1 << 30;
    for (const Params& P : grid()) {
        StabilityReport rep = stability_sample(P, 200, 42);
        min_B = std::min(min_B, rep.empirical_B);
        n_kept_min = std::min(n_kept_min, rep.n_kept);
    }
    Params Pr = make_params(3, 1.5, 0.45);
    StabilityReport r1 = stability_sample(Pr, 200, 42);
    StabilityReport r2 = stability_sample(Pr, 200, 42);
    bool bitexact = r1.empirical_B == r2.empirical_B;
    for (int i = 0; i < 200 && bitexact; ++i)
        bitexact = r1.samples[i].distance == r2.samples[i].distance &&
                   r1.samples[i].deficit == r2.samples[i].deficit;
    bool pass = min_B > 0.0 && n_kept_min > 0 && bitexact;
    report(5, pass,
           fmt("stability sampling: min quotient %.3e > 0 over 18 triples x "
               "200 seeded samples (min kept %d), rerun bit-exact=%d (%.0f s)",
               min_B, n_kept_min, (int)bitexact, secs(t0)));
}

// AC6: no inequality check finds a violation at scale, the weighted Hardy
// family clears its claimed constants, and the far-tail control follows the
// inverse-square-of-the-log law.
void ac6() {
    auto t0 = clk::now();
    long violations = 0;
    bool all_passed = true, hardy_ok = true, tail_ok = true;
    double worst_tail = 0.0, min_hardy_slack = 1e300;
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        auto reports = run_suite("all", 100000, seed);
        for (const auto& r : reports) {
            violations += r.violations;
            all_passed = all_passed && r.passed;
            if (r.name.rfind("weighted-hardy", 0) == 0) {
                double claimed = 0.0;
                for (const auto& [k, v] : r.details)
                    if (k == "claimed_constant") claimed = v;
                double slack = r.estimated_constant - claimed * (1.0 - 1e-6);
                min_hardy_slack = std::min(min_hardy_slack, slack);
                if (slack < 0.0) hardy_ok = false;
            }
            if (r.name == "local-poincare") {
                for (const auto& [k, v] : r.details)
                    if (k == "tail_log_exponent_fit") {
                        worst_tail = std::max(worst_tail, std::fabs(v + 2.0));
                        if (std::fabs(v + 2.0) > 0.3) tail_ok = false;
                    }
            }
        }
    }
    double el = secs(t0);
    bool pass = violations == 0 && all_passed && hardy_ok && tail_ok && el < 300.0;
    report(6, pass,
           fmt("inequality toolbox: %ld violations across 3 seeds at 1e5 "
               "samples, weighted Hardy slack >= %.2f, tail-law exponent "
               "within %.2f of -2 (tol 0.3), %.0f s < 300 s",
               violations, min_hardy_slack, worst_tail, el));
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool same_outputs(const fs::path& a, const fs::path& b, const std::string& sub) {
    std::vector<std::string> da, db;
    for (const auto& e : fs::directory_iterator(a / sub))
        da.push_back(slurp(e.path()));
    for (const auto& e : fs::directory_iterator(b / sub))
        db.push_back(slurp(e.path()));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da == db && !da.empty();
}

// AC7: repeated runs of the command-line front end write identical data
// files.  The timestamp lives only in the meta sidecar, which is excluded.
void ac7() {
    const char* cli = std::getenv("HSLAB_CLI");
    if (!cli) {
        report(7, false, "HSLAB_CLI not set; cannot exercise the front end");
        return;
    }
    auto t0 = clk::now();
    fs::path root = fs::temp_directory_path() / "hslab_acceptance_cli";
    fs::remove_all(root);
    fs::create_directories(root);
    auto run = [&](const std::string& args) {
        std::string cmd = std::string(cli) + " " + args + " > /dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };
    fs::path a = root / "a", b = root / "b";
    bool ran = true;
    for (const fs::path* d : {&a, &b}) {
        ran = ran && run("stability --samples 5 --seed 7 --outdir " + d->string());
        ran = ran && run("verify --suite vector --samples 1500 --outdir " +
                         d->string());
        ran = ran && run("constants --N 4 --p 2.5 --beta 1.2 --outdir " +
                         d->string());
    }
    auto strip_meta = [](const fs::path& dir) {
        std::vector<fs::path> doomed;
        for (const auto& e : fs::recursive_directory_iterator(dir)) {
            std::string n = e.path().filename().string();
            if (n.size() > 10 && n.substr(n.size() - 10) == ".meta.json")
                doomed.push_back(e.path());
        }
        for (const auto& p : doomed) fs::remove(p);
    };
    strip_meta(a);
    strip_meta(b);
    bool same = ran && same_outputs(a, b, "stability") &&
                same_outputs(a, b, "verify") && same_outputs(a, b, "constants");
    report(7, same,
           fmt("front-end determinism: repeated stability/verify/constants "
               "runs byte-identical=%d (%.0f s)",
               (int)same, secs(t0)));
}

}  // namespace

int main() {
    auto t0 = clk::now();
    try {
        ac1();
        ac2();
        ac3();
        ac4();
        ac5();
        ac6();
        ac7();
    } catch (const std::exception& e) {
        std::printf("ABORT  unexpected exception: %s\n", e.what());
        return 99;
    }
    std::printf("%d/7 criteria passed (%.0f s total)\n", 7 - failures,
                secs(t0));
    return failures;
}
