#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symsep/grid.hpp"
#include "symsep/measures.hpp"
#include "symsep/orbit_search.hpp"
#include "symsep/three_qubit.hpp"
#include "symsep/two_qubit.hpp"
#include "symsep/verify.hpp"

using nlohmann::json;
using namespace symsep;

namespace {

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

json grid_to_json(const GridResult& g) {
  json j;
  j["resolution"] = g.resolution;
  j["seed"] = g.seed;
  j["version"] = g.tool_version;
  j["axes"] = {g.axis_x, g.axis_y};
  auto dump = [](const std::vector<GridPoint>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({p.x, p.y, p.value});
    return arr;
  };
  j["grid"] = dump(g.grid);
  j["boundary"] = dump(g.boundary);
  return j;
}

void emit_grid(const GridResult& g, const std::string& format,
               const std::string& output) {
  if (format == "json") {
    write_out(output, grid_to_json(g).dump(2) + "\n");
  } else {
    write_out(output, grid_to_csv(g));
  }
}

json classify2(const Spectrum3& s, std::uint64_t seed) {
  (void)seed;
  json j;
  j["n_qubits"] = 2;
  j["sorted_spectrum"] = s.values();
  const double neg = max_negativity_su3(s);
  j["max_negativity"] = neg;
  j["max_concurrence"] = max_concurrence_su3(s);
  const bool sas = is_sas(s);
  j["sas"] = sas;
  const bool boundary =
      std::abs(std::sqrt(s.tau2()) + std::sqrt(s.tau3()) - 1.0) <= 1e-9;
  j["verdict"] = sas ? (boundary ? "SAS (boundary)" : "SAS") : "not SAS";
  j["radius"] = r_of_spectrum(s);
  return j;
}

json classify3(const Spectrum4Sym& s, std::uint64_t seed) {
  json j;
  j["n_qubits"] = 3;
  j["sorted_spectrum"] = s.values();
  const bool hit = not_sas_3qubit(s);
  j["not_sas_condition"] = hit;
  OrbitSearchConfig cfg;
  cfg.seed = seed;
  const auto res =
      orbit_maximize(dicke_mixture_state(s), Objective::Negativity, cfg);
  j["orbit_negativity_lower_bound"] = res.best_value;
  if (hit) {
    j["verdict"] = "not SAS";
  } else if (res.best_value > 1e-9) {
    j["verdict"] = "undetermined by spectral condition; "
                   "orbit search found negativity > 0, so not SAS";
  } else {
    j["verdict"] = "undetermined";
  }
  j["radius"] = radius(dicke_mixture_state(s));
  return j;
}

std::string classify_text(const json& j) {
  std::string out = "sorted spectrum:";
  for (const auto& v : j["sorted_spectrum"]) {
    out += " " + std::to_string(v.get<double>());
  }
  out += "\n";
  if (j.contains("max_negativity")) {
    out += "max negativity: " + std::to_string(j["max_negativity"].get<double>()) + "\n";
    out += "max concurrence: " + std::to_string(j["max_concurrence"].get<double>()) + "\n";
  } else {
    out += "orbit negativity lower bound: " +
           std::to_string(j["orbit_negativity_lower_bound"].get<double>()) + "\n";
  }
  out += "radius: " + std::to_string(j["radius"].get<double>()) + "\n";
  out += "verdict: " + j["verdict"].get<std::string>() + "\n";
  return out;
}

json report_to_json(const SuiteReport& rep) {
  json j;
  j["suite"] = rep.suite;
  j["pass"] = rep.all_pass();
  json arr = json::array();
  for (const auto& c : rep.checks) {
    arr.push_back({{"name", c.name},
                   {"pass", c.pass},
                   {"deviation", c.deviation},
                   {"tolerance", c.tolerance}});
  }
  j["checks"] = arr;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement over symmetric-sector unitary orbits: "
               "classification, figure grids, ball radii, verification"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int resolution = 0;
  std::string scale = "quick";
  std::string output;
  std::string format = "csv";

  auto add_common = [&](CLI::App* sub, bool grid) {
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--output", output, "output file (default stdout)");
    if (grid) {
      sub->add_option("--resolution", resolution, "grid resolution");
      sub->add_option("--format", format, "csv or json")
          ->check(CLI::IsMember({"csv", "json"}));
    }
  };

  auto* c_classify = app.add_subcommand(
      "classify", "classify a symmetric-state spectrum (3 or 4 values)");
  std::vector<double> spectrum;
  c_classify->add_option("spectrum", spectrum, "eigenvalues, any order")
      ->expected(3, 4);
  int n_qubits = 0;
  c_classify->add_option("--qubits", n_qubits, "2 or 3 (default: from length)")
      ->check(CLI::IsMember({2, 3}));
  add_common(c_classify, false);
  c_classify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* c_fig1 = app.add_subcommand(
      "fig1", "max negativity over the (tau3, tau2) simplex");
  add_common(c_fig1, true);
  auto* c_fig2 =
      app.add_subcommand("fig2", "max negativity over the (tau3, r) wedge");
  add_common(c_fig2, true);
  auto* c_fig3 = app.add_subcommand(
      "fig3", "three-qubit not-SAS region over (tau3, tau4)");
  add_common(c_fig3, true);

  auto* c_radii = app.add_subcommand("radii", "ball radii around the "
                                              "maximally mixed state");
  int radii_qubits = 2;
  c_radii->add_option("--qubits", radii_qubits, "2 or 3")
      ->check(CLI::IsMember({2, 3}));
  bool estimate = false;
  c_radii->add_flag("--estimate", estimate,
                    "run the Monte-Carlo estimator (3 qubits only)");
  int n_spectra = 10000;
  int n_orbit_samples = 1000;
  c_radii->add_option("--spectra", n_spectra, "estimator: candidate spectra");
  c_radii->add_option("--orbit-samples", n_orbit_samples,
                      "estimator: orbit samples per spectrum");
  add_common(c_radii, false);

  auto* c_verify =
      app.add_subcommand("verify", "run a property-check suite, report JSON");
  std::string suite;
  c_verify->add_option("suite", suite, "suite name, or 'all'")->required();
  c_verify->add_option("--scale", scale, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  add_common(c_verify, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_classify) {
      const int n = n_qubits != 0 ? n_qubits : static_cast<int>(spectrum.size()) - 1;
      if (n + 1 != static_cast<int>(spectrum.size())) {
        std::cerr << "spectrum length must be qubits + 1\n";
        return 2;
      }
      json j;
      if (n == 2) {
        j = classify2(Spectrum3(spectrum[0], spectrum[1], spectrum[2]), seed);
      } else {
        j = classify3(
            Spectrum4Sym(spectrum[0], spectrum[1], spectrum[2], spectrum[3]),
            seed);
      }
      write_out(output, format == "json" ? j.dump(2) + "\n" : classify_text(j));
    } else if (*c_fig1 || *c_fig2 || *c_fig3) {
      GridResult g;
      if (*c_fig1) {
        g = fig1_grid(resolution > 0 ? resolution : 400);
      } else if (*c_fig2) {
        g = fig2_grid(resolution > 0 ? resolution : 400);
      } else {
        g = fig3_grid(resolution > 0 ? resolution : 600);
      }
      g.seed = seed;
      emit_grid(g, format, output);
    } else if (*c_radii) {
      json j;
      if (radii_qubits == 2) {
        const auto r = ball_radii_2qubit();
        j["n_qubits"] = 2;
        j["r_sas"] = r.r_sas;
        j["R_sas"] = r.big_r_sas;
        j["lower_bound"] = r.r_lower_bound;
      } else {
        const auto r = ball_radii_3qubit();
        j["n_qubits"] = 3;
        j["r_sas_bracket"] = {r.r_sas_lower, r.r_sas_upper};
        j["R_sas_upper"] = r.big_r_sas_upper;
        if (estimate) {
          Rng rng(seed);
          j["R_sas_estimate"] =
              estimate_R_sas_3qubit(n_spectra, n_orbit_samples, rng);
          j["estimator_spectra"] = n_spectra;
          j["estimator_orbit_samples"] = n_orbit_samples;
        }
      }
      write_out(output, j.dump(2) + "\n");
    } else if (*c_verify) {
      const Scale sc = scale == "full" ? Scale::Full : Scale::Quick;
      std::vector<std::string> suites =
          suite == "all" ? known_suites() : std::vector<std::string>{suite};
      json arr = json::array();
      bool all_ok = true;
      for (const auto& name : suites) {
        const SuiteReport rep = run_suite(name, seed, sc);
        all_ok = all_ok && rep.all_pass();
        arr.push_back(report_to_json(rep));
      }
      write_out(output, arr.dump(2) + "\n");
      return all_ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
