#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hslab/fitting.hpp"
#include "hslab/params.hpp"

namespace hslab {

struct ScalingRow {
    double control = 0.0;  // 1/n for the squeeze family, eps for the bump one
    double deficit = 0.0;
    double distance = 0.0;
    double quotient = 0.0;  // deficit / distance^gamma
};

struct ScalingTable {
    std::vector<ScalingRow> rows;
    FitResult deficit_fit;   // log deficit against log control
    FitResult distance_fit;  // log distance against log control
    double gamma = 0.0;
};

// Volume-preserving diagonal squeeze of the extremal; the deficit closes at
// the second power of the distance, so the quadratic exponent is attained.
// Only meaningful below the quadratic threshold: throws RegimeError for p >= 2.
ScalingTable sharpness_diag(const Params& P, const std::vector<int>& n_list);

// Far bump riding on the extremal; deficit closes at the p-th power of the
// distance.  Throws RegimeError for p < 2.
ScalingTable sharpness_bump(const Params& P, double x0_norm,
                            const std::vector<double>& eps_list);

struct StabilitySample {
    int index = 0;
    std::uint64_t sample_seed = 0;
    double c = 0.0;
    double lambda = 0.0;
    double t_ratio = 0.0;
    double deficit = 0.0;
    double distance = 0.0;
    double quotient = 0.0;
    bool kept = false;
};

struct StabilityReport {
    std::vector<StabilitySample> samples;
    double empirical_B = 0.0;  // min quotient over kept samples
    double gamma = 0.0;
    int n_kept = 0;
    int n_rejected = 0;
};

// Random perturbations c U_lambda + delta * (bump combination), delta set so
// the perturbation carries t_ratio of the main term's gradient norm.  Samples
// are independent per index (seed derived per sample), so results are
// reproducible and prefix-stable; jobs > 1 splits indices across threads
// without changing the output.
StabilityReport stability_sample(const Params& P, int n, std::uint64_t seed,
                                 const std::string& family = "bumps6",
                                 int jobs = 1);

}  // namespace hslab
