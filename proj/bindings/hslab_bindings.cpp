#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hslab/experiments.hpp"
#include "hslab/functionals.hpp"
#include "hslab/manifold.hpp"
#include "hslab/profile.hpp"
#include "hslab/spectral.hpp"
#include "hslab/verify.hpp"

namespace py = pybind11;
using namespace hslab;

PYBIND11_MODULE(_hslab, m) {
    m.doc() = "numerical laboratory for a weighted Sobolev stability problem";

    py::class_<Params>(m, "Params")
        .def_readonly("N", &Params::N)
        .def_readonly("p", &Params::p)
        .def_readonly("beta", &Params::beta)
        .def_readonly("pstar", &Params::pstar)
        .def_readonly("m", &Params::m)
        .def_readonly("K", &Params::K)
        .def_readonly("gamma", &Params::gamma_exp)
        .def_readonly("proved_regime", &Params::proved_regime)
        .def("__repr__", [](const Params& P) {
            return "Params(N=" + std::to_string(P.N) +
                   ", p=" + std::to_string(P.p) +
                   ", beta=" + std::to_string(P.beta) + ")";
        });

    m.def("make_params", &make_params, py::arg("N"), py::arg("p"),
          py::arg("beta"));
    m.def("sharp_constant", &sharp_constant, py::arg("params"));

    m.def(
        "extremal_values",
        [](const Params& P, double lam, const std::vector<double>& rs) {
            RadialProfile u = extremal(P, lam);
            std::vector<double> out;
            out.reserve(rs.size());
            for (double r : rs) out.push_back(u.value(r));
            return out;
        },
        py::arg("params"), py::arg("lam"), py::arg("r"));

    m.def(
        "deficit_scaled_extremal",
        [](const Params& P, double c, double lam) {
            DeficitReport r = deficit(scale_profile(c, extremal(P, lam)), P);
            py::dict d;
            d["grad_p"] = r.grad_p;
            d["star_p"] = r.star_p;
            d["sharp"] = r.sharp;
            d["deficit"] = r.deficit;
            return d;
        },
        py::arg("params"), py::arg("c"), py::arg("lam"));

    m.def(
        "distance_scaled_extremal",
        [](const Params& P, double c, double lam) {
            DistanceResult r = distance(scale_profile(c, extremal(P, lam)), P);
            py::dict d;
            d["d"] = r.d;
            d["c_star"] = r.c_star;
            d["lambda_star"] = r.lambda_star;
            d["grad_norm"] = r.grad_norm;
            d["converged"] = r.converged;
            return d;
        },
        py::arg("params"), py::arg("c"), py::arg("lam"));

    m.def(
        "eigenvalues",
        [](const Params& P, int k, int count, int n) {
            GridSpec g;
            g.n = n;
            SpectralResult r = eigen_mode(P, k, count, g);
            return py::make_tuple(r.eigenvalues, r.refinement_shift);
        },
        py::arg("params"), py::arg("k"), py::arg("count"),
        py::arg("n") = 2000);

    m.def(
        "spectral_gap",
        [](const Params& P) {
            GapReport r = spectral_gap(P);
            py::dict d;
            d["mu1"] = r.mu1;
            d["mu2"] = r.mu2;
            d["mu3_eff"] = r.mu3_eff;
            d["neutral"] = r.neutral;
            d["tau"] = r.tau;
            d["positive"] = r.positive;
            return d;
        },
        py::arg("params"));

    m.def(
        "stability",
        [](const Params& P, int n, std::uint64_t seed, int jobs) {
            StabilityReport r = stability_sample(P, n, seed, "bumps6", jobs);
            py::dict d;
            d["empirical_B"] = r.empirical_B;
            d["gamma"] = r.gamma;
            d["n_kept"] = r.n_kept;
            d["n_rejected"] = r.n_rejected;
            return d;
        },
        py::arg("params"), py::arg("n"), py::arg("seed"), py::arg("jobs") = 1);

    m.def(
        "verify_suite",
        [](const std::string& suite, long samples, std::uint64_t seed) {
            py::list out;
            for (const auto& r : run_suite(suite, samples, seed)) {
                py::dict d;
                d["name"] = r.name;
                d["samples"] = r.samples;
                d["violations"] = r.violations;
                d["estimated_constant"] = r.estimated_constant;
                d["passed"] = r.passed;
                d["note"] = r.note;
                out.append(d);
            }
            return out;
        },
        py::arg("suite"), py::arg("samples") = 20000, py::arg("seed") = 42);
}
