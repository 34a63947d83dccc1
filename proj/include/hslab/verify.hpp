#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hslab/params.hpp"

namespace hslab {

// Falsification-style record for one inequality check: sample (or exercise a
// test family), track the worst slack, and estimate the best constant the
// data supports.  `passed` means no violation beyond floating-point noise.
struct IneqReport {
    std::string name;
    long samples = 0;
    long violations = 0;
    double estimated_constant = 0.0;
    double worst_margin = 0.0;
    std::array<double, 5> quantiles{};  // min, q25, median, q75, max
    bool passed = false;
    std::string note;
    std::vector<std::pair<std::string, double>> details;
};

// Second-order lower expansion of w -> |w|^p around a unit vector, with the
// Hessian discounted by kappa and a remainder of order min(|y|^p, |y|^2)
// (p < 2) or |y|^p (p >= 2).  Estimates the best remainder constant.
IneqReport check_vector_expansion(double p, double kappa, long n,
                                  std::uint64_t seed);

// Second-order upper expansion of t -> |t|^{pstar}; the remainder envelope
// depends on whether pstar exceeds 2.  Estimates the envelope constant.
IneqReport check_scalar_expansion(const Params& P, double kappa, long n,
                                  std::uint64_t seed);

// Weighted Hardy bound with weight (1+r^m)^{(p-1) xi} on the gradient side
// and (1+r^m)^{(p-1)(xi-1)} r^{-beta} on the function side; the claimed
// constant must survive a family of bump trains and slowly-decaying tails.
IneqReport check_hardy_weighted(const Params& P, double xi, int family_size);

// Four-parameter pointwise envelope used to absorb cross terms; per sample
// the minimal absorbing constant is computed and the max is reported, both
// with and without the extra (1+r)^{-m} damping on the envelope.
IneqReport check_pointwise_envelope(const Params& P, double eps0, long n,
                                    std::uint64_t seed);

// Weighted Poincare-type control of the linearization's mass by its energy:
// globally over a radial family, on small balls (power-law in the radius),
// and outside large balls (square of the log).  Ball and tail quotients are
// computed as discrete sup via inverse power iteration.
IneqReport check_local_poincare(const Params& P,
                                const std::vector<double>& rho_list,
                                int family_size);

// Nonlinear mass-by-energy control for perturbed profiles U + eps v with the
// degenerate gradient weight (|grad U| + eps |grad v|)^{p-2}; members are
// normalized to unit energy and the sup of the mass is tracked across eps.
IneqReport check_orlicz_quotient(const Params& P,
                                 const std::vector<double>& eps_list,
                                 int family_size);

// Named suites: vector, scalar, hardy, pointwise, local, orlicz, all.
// Without an override each check runs at representative parameters inside
// its proved range; with one, out-of-range checks are reported as skipped.
std::vector<IneqReport> run_suite(const std::string& suite, long samples,
                                  std::uint64_t seed,
                                  const Params* override_params = nullptr);

}  // namespace hslab
