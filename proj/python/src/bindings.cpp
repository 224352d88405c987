#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vohedge/analysis.hpp"
#include "vohedge/bs_core.hpp"
#include "vohedge/config.hpp"
#include "vohedge/dynamics.hpp"
#include "vohedge/hedging.hpp"
#include "vohedge/smile_rough.hpp"
#include "vohedge/smile_sabr.hpp"
#include "vohedge/sweep.hpp"
#include "vohedge/version.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace vohedge;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
}

ModelParams make_params(const std::string& model, double eta, double alpha0, double rho,
                        double hurst, double spot0) {
  ModelParams p;
  p.kind = model == "sabr" ? ModelKind::Sabr : ModelKind::RoughBergomi;
  if (model != "sabr" && model != "rough") throw py::value_error("model must be 'sabr' or 'rough'");
  p.eta = eta;
  p.alpha0 = alpha0;
  p.rho = rho;
  p.hurst = p.kind == ModelKind::Sabr ? 0.5 : hurst;
  p.spot0 = spot0;
  return p;
}

py::dict smile_dict(const smile::SmileDerivs& d) { return py::dict("f"_a = d.f, "F1"_a = d.F1, "F2"_a = d.F2); }

}  // namespace

PYBIND11_MODULE(_vohedge, m) {
  m.doc() = "Variance-optimal hedging in lognormal SABR and rough Bergomi";
  m.attr("__version__") = std::string(kVersion);

  py::class_<bs::Greeks>(m, "Greeks")
      .def_readonly("price", &bs::Greeks::price)
      .def_readonly("delta", &bs::Greeks::delta)
      .def_readonly("vega", &bs::Greeks::vega)
      .def_readonly("d_plus", &bs::Greeks::d_plus)
      .def_readonly("d_minus", &bs::Greeks::d_minus);

  m.def("greeks", [](double spot, double strike, double vol, double tau) {
    return bs::greeks({spot, strike, vol, tau});
  }, "spot"_a, "strike"_a, "vol"_a, "tau"_a);
  m.def("implied_vol", &bs::implied_vol, "price"_a, "spot"_a, "strike"_a, "tau"_a);

  m.def("sabr_g", &sabr::g, "y"_a, "rho"_a);
  m.def("sabr_f", &sabr::f, "y"_a, "rho"_a);
  m.def("sabr_smile", [](double y, double rho) { return smile_dict(sabr::smile_functions(y, rho)); },
        "y"_a, "rho"_a, "f, F1 and F2 of the SABR smile");

  m.def("rough_kernel", [](double r, double eta, double hurst) {
    return rough::kernel(r, {0.0, eta, hurst});
  }, "r"_a, "eta"_a, "hurst"_a);
  m.def("rough_GH", [](double y, double rho, double hurst) {
    return rough::GH(y, {rho, 1.0, hurst});
  }, "y"_a, "rho"_a, "hurst"_a);
  m.def("rough_smile", [](double y, double rho, double hurst) {
    return smile_dict(rough::f_F1_F2_rough(y, {rho, 1.0, hurst}));
  }, "y"_a, "rho"_a, "hurst"_a);

  m.def("relred_sabr", &analysis::relred_sabr, "rho"_a);
  m.def("relred_rough", &analysis::relred_rough, "rho"_a, "hurst"_a);
  m.def("first_order_mshe_ratio", &analysis::first_order_mshe_ratio, "rho"_a, "hurst"_a);
  m.def("relred_hklw_sabr", &analysis::relred_hklw_sabr, "rho"_a);

  m.def("simulate", [](const std::string& model, int n_steps, double maturity, double eta,
                       double alpha0, double rho, double hurst, double spot0, std::uint64_t seed,
                       std::uint64_t path) {
    const ModelParams p = make_params(model, eta, alpha0, rho, hurst, spot0);
    const sim::GridSpec grid{n_steps, maturity};
    const sim::RngStream rng{seed, path};
    py::dict out;
    if (p.kind == ModelKind::Sabr) {
      const sim::SabrPath s = sim::simulate_sabr(p, grid, rng);
      out["t"] = to_array(s.times);
      out["spot"] = to_array(s.spot);
      out["alpha"] = to_array(s.alpha);
      out["level"] = to_array(s.alpha);
    } else {
      const sim::RoughPath r = sim::simulate_rough(p, grid, rng);
      out["t"] = to_array(r.times);
      out["spot"] = to_array(r.spot);
      out["alpha"] = to_array(r.alpha);
      out["level"] = to_array(r.level);
    }
    return out;
  }, "model"_a, "n_steps"_a = 1000, "maturity"_a = 1.0, "eta"_a = 0.5, "alpha0"_a = 0.4,
     "rho"_a = 0.0, "hurst"_a = 0.5, "spot0"_a = 1.0, "seed"_a = 1, "path"_a = 0,
     "Simulate one path; returns arrays t, spot, alpha, level");

  m.def("hedge_path", [](const std::string& model, const std::string& strategy, double strike,
                         double w, int n_steps, double maturity, double eta, double alpha0,
                         double rho, double hurst, std::uint64_t seed, std::uint64_t path) {
    const ModelParams p = make_params(model, eta, alpha0, rho, hurst, 1.0);
    const sim::GridSpec grid{n_steps, maturity};
    const OptionSpec opt{strike, maturity, 1.0};
    const hedge::StrategyKind kind = hedge::strategy_from_string(strategy);
    hedge::HedgeRecord rec;
    if (p.kind == ModelKind::Sabr) {
      const sim::SabrPath s = sim::simulate_sabr(p, grid, sim::RngStream{seed, path});
      rec = hedge::hedge_path(sim::view(s), kind, opt, p, w, true);
    } else {
      const sim::RoughPath r = sim::simulate_rough(p, grid, sim::RngStream{seed, path});
      rec = hedge::hedge_path(sim::view(r), kind, opt, p, w, true);
    }
    py::dict analytic;
    for (const auto& [k, v] : rec.analytic_mshe_integrals) analytic[py::str(std::string(hedge::to_string(k)))] = v;
    return py::dict("terminal_error"_a = rec.terminal_error, "positions"_a = to_array(rec.positions),
                    "analytic_mshe"_a = analytic);
  }, "model"_a, "strategy"_a, "strike"_a = 1.0, "w"_a = 0.0, "n_steps"_a = 1000,
     "maturity"_a = 1.0, "eta"_a = 0.5, "alpha0"_a = 0.4, "rho"_a = 0.0, "hurst"_a = 0.5,
     "seed"_a = 1, "path"_a = 0);

  m.def("run_sweep", [](const std::string& config_text, bool write_files) {
    const runner::SweepConfig cfg = runner::parse_config(config_text);
    runner::SweepResult result;
    {
      py::gil_scoped_release release;
      result = runner::run_sweep(cfg, write_files);
    }
    return py::dict("summary_csv"_a = runner::summary_csv(result),
                    "first_order_csv"_a = runner::first_order_csv(result));
  }, "config"_a = "", "write_files"_a = false,
     "Run a sweep from key = value config text; returns the summary and first-order CSV text");
}
