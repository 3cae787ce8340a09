#include "symsep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symsep/measures.hpp"
#include "symsep/orbit_search.hpp"

namespace symsep {

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

Spectrum3 random_spectrum3(Rng& rng) {
  double a = -std::log(1.0 - rng.uniform());
  double b = -std::log(1.0 - rng.uniform());
  double c = -std::log(1.0 - rng.uniform());
  const double s = a + b + c;
  return Spectrum3(a / s, b / s, c / s);
}

Spectrum4Sym random_spectrum4sym(Rng& rng) {
  double v[4];
  double s = 0.0;
  for (auto& x : v) {
    x = -std::log(1.0 - rng.uniform());
    s += x;
  }
  return Spectrum4Sym(v[0] / s, v[1] / s, v[2] / s, v[3] / s);
}

double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi, double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

namespace {

int scaled(Scale s, int quick, int full) {
  return s == Scale::Quick ? quick : full;
}

CheckResult max_dev_check(const std::string& name, double dev, double tol) {
  return {name, dev <= tol, dev, tol};
}

SuiteReport suite_theorem1(std::uint64_t seed, Scale scale) {
  SuiteReport rep{"theorem1", {}};
  Rng rng(seed);

  // Optimal-state negativity equals the closed form.
  {
    const int n = scaled(scale, 200, 1000);
    double dev = 0.0;
    for (int i = 0; i < n; ++i) {
      const Spectrum3 s = random_spectrum3(rng);
      const double direct = negativity(embed_full(optimal_state(s))).negativity;
      dev = std::max(dev, std::abs(direct - max_negativity_su3(s)));
    }
    rep.checks.push_back(max_dev_check("optimal_state_matches_closed_form", dev, 1e-10));
  }

  // Orbit search attains but never exceeds the closed form.
  {
    const int n = scaled(scale, 20, 100);
    double over = 0.0, under = 0.0;
    for (int i = 0; i < n; ++i) {
      const Spectrum3 s = random_spectrum3(rng);
      OrbitSearchConfig cfg;
      cfg.seed = seed ^ (0x51ed2700ULL + i);
      const auto res =
          orbit_maximize(optimal_state(s), Objective::Negativity, cfg);
      const double closed = max_negativity_su3(s);
      over = std::max(over, res.best_value - closed);
      under = std::max(under, closed - res.best_value);
    }
    rep.checks.push_back(max_dev_check("orbit_search_never_exceeds", over, 1e-9));
    rep.checks.push_back(max_dev_check("orbit_search_attains", under, 1e-5));
  }

  // The full SU(4) orbit dominates the symmetric SU(3) orbit.
  {
    const int n = scaled(scale, 200, 1000);
    double dev = 0.0;
    for (int i = 0; i < n; ++i) {
      const Spectrum3 s = random_spectrum3(rng);
      const Spectrum4 padded(s.tau1(), s.tau2(), s.tau3(), 0.0);
      dev = std::max(dev, max_negativity_su3(s) - max_negativity_su4(padded));
    }
    rep.checks.push_back(max_dev_check("su4_dominates_su3", dev, 1e-12));
  }

  // Corollary 1 matches the vanishing of the closed form, including
  // boundary-perturbed spectra.
  {
    const int n = scaled(scale, 1000, 10000);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Spectrum3 s = random_spectrum3(rng);
      ok = is_sas(s) == (max_negativity_su3(s) < 1e-9);
    }
    for (int i = 0; i < n / 10 && ok; ++i) {
      const double t3 = 1.0 / 9.0 + (0.25 - 1.0 / 9.0) * rng.uniform();
      const double t2 = (1.0 - std::sqrt(t3)) * (1.0 - std::sqrt(t3));
      const double eps = (rng.uniform() < 0.5 ? 1.0 : -1.0) * 1e-8;
      const Spectrum3 s(1.0 - t2 - t3 - eps, t2 + eps, t3);
      ok = is_sas(s) == (max_negativity_su3(s) < 1e-9);
    }
    rep.checks.push_back({"sas_iff_zero_negativity", ok, ok ? 0.0 : 1.0, 0.0});
  }
  return rep;
}

SuiteReport suite_obs1(std::uint64_t seed, Scale scale) {
  SuiteReport rep{"obs1", {}};
  Rng rng(seed);

  // The closed form describes the nontrivial block of the partial transpose;
  // the embedding adds two structural zero eigenvalues, so the direct
  // minimum is min(0, closed form) and the closed form must appear in the
  // spectrum.
  {
    const int n = scaled(scale, 200, 1000);
    double dev = 0.0;
    for (int i = 0; i < n; ++i) {
      const Spectrum4Sym s = random_spectrum4sym(rng);
      const auto ev = eigvals_hermitian(
          partial_transpose(embed_full(dicke_mixture_state(s)), 0));
      const double cf = lambda_min_obs1(s);
      dev = std::max(dev, std::abs(ev.back() - std::min(0.0, cf)));
      double closest = 1.0;
      for (double v : ev) closest = std::min(closest, std::abs(v - cf));
      dev = std::max(dev, closest);
    }
    rep.checks.push_back(max_dev_check("closed_form_lambda_min", dev, 1e-10));
  }

  // Soundness: the condition implies a negative witness at the identity
  // orbit point.
  {
    const int n = scaled(scale, 200, 1000);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Spectrum4Sym s = random_spectrum4sym(rng);
      if (not_sas_3qubit(s)) {
        ok = lambda_min_obs1(s) < 0.0 &&
             negativity(embed_full(dicke_mixture_state(s))).negativity > 0.0;
      }
    }
    rep.checks.push_back({"condition_implies_witness", ok, ok ? 0.0 : 1.0, 0.0});
  }

  // Counterexample: entangled yet outside the condition's region.
  {
    const auto ce = counterexample_state();
    const auto s = counterexample_spectrum();
    const double margin =
        s.tau(2) - (1.0 - s.tau(3) - s.tau(4) -
                    std::sqrt(3.0 * s.tau(3) * s.tau(4)));
    const auto ev = eigvals_hermitian(ce.rho_pp.matrix);
    double spec_dev = 0.0;
    for (int i = 0; i < 4; ++i)
      spec_dev = std::max(spec_dev, std::abs(ev[i] - s.tau(i + 1)));
    const bool ok = ce.pt_min_eig < 0.0 && !not_sas_3qubit(s);
    rep.checks.push_back({"counterexample_npt_outside_region", ok, ce.pt_min_eig, 0.0});
    rep.checks.push_back(max_dev_check("counterexample_margin_0.005",
                                       std::abs(margin - 0.005), 1e-4));
    rep.checks.push_back(max_dev_check("counterexample_spectrum_preserved",
                                       spec_dev, 1e-12));
  }

  // No symmetric three-qubit state is absolutely separable.
  {
    const int n = scaled(scale, 200, 1000);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const Spectrum4Sym s = random_spectrum4sym(rng);
      std::vector<double> padded(s.values().begin(), s.values().end());
      padded.resize(8, 0.0);
      ok = !johnston_as(padded, 4);
    }
    rep.checks.push_back({"no_symmetric_3qubit_as", ok, ok ? 0.0 : 1.0, 0.0});
  }
  return rep;
}

SuiteReport suite_appendix_a(std::uint64_t seed, Scale scale) {
  SuiteReport rep{"appendixA", {}};
  Rng rng(seed);
  const int n = scaled(scale, 200, 1000);
  double dev = 0.0;
  bool central_ok = true;
  for (int i = 0; i < n; ++i) {
    const Spectrum3 s = random_spectrum3(rng);
    const auto pts = critical_point_values(s);
    double min_lambda = 1.0;
    bool saw_central = false;
    for (const auto& p : pts) {
      min_lambda = std::min(min_lambda, p.lambda_value);
      if (p.case_id == CriticalCase::Case1Central) {
        saw_central = true;
        if (p.lambda_value != 0.5) central_ok = false;
      }
    }
    if (!saw_central) central_ok = false;
    const double expected =
        0.5 * (s.tau2() + s.tau3() - std::hypot(s.tau1(), s.tau2() - s.tau3()));
    dev = std::max(dev, std::abs(min_lambda - expected));
  }
  rep.checks.push_back(max_dev_check("min_critical_point_is_lambda_min", dev, 1e-10));
  rep.checks.push_back({"central_point_always_half", central_ok,
                        central_ok ? 0.0 : 1.0, 0.0});
  return rep;
}

SuiteReport suite_concurrence(std::uint64_t seed, Scale scale) {
  SuiteReport rep{"concurrence", {}};
  Rng rng(seed);
  const int n = scaled(scale, 10, 100);
  double over = 0.0, under = 0.0;
  for (int i = 0; i < n; ++i) {
    const Spectrum3 s = random_spectrum3(rng);
    OrbitSearchConfig cfg;
    cfg.seed = seed ^ (0xc0c07e17ULL + i);
    const auto res = orbit_maximize(optimal_state(s), Objective::Concurrence, cfg);
    const double closed = max_concurrence_su3(s);
    over = std::max(over, res.best_value - closed);
    under = std::max(under, closed - res.best_value);
  }
  rep.checks.push_back(max_dev_check("ascent_never_exceeds", over, 1e-9));
  rep.checks.push_back(max_dev_check("ascent_attains", under, 1e-4));
  return rep;
}

SuiteReport suite_radii(std::uint64_t seed, Scale scale) {
  SuiteReport rep{"radii", {}};
  (void)seed;
  (void)scale;

  const auto two = ball_radii_2qubit();
  const double rmin = sas_boundary_r(
      golden_section_min([](double t) { return sas_boundary_r(t); },
                         1.0 / 9.0, 1.0 / 3.0));
  double rmax = 0.0;
  const int n_scan = 4001;
  for (int i = 0; i < n_scan; ++i) {
    const double t3 = 1.0 / 9.0 + (1.0 / 3.0 - 1.0 / 9.0) * i / (n_scan - 1);
    rmax = std::max(rmax, sas_boundary_r(t3));
  }
  rep.checks.push_back(max_dev_check("two_qubit_r_sas",
                                     std::abs(rmin - two.r_sas), 1e-9));
  rep.checks.push_back(max_dev_check("two_qubit_R_sas",
                                     std::abs(rmax - two.big_r_sas), 1e-9));
  rep.checks.push_back(max_dev_check(
      "two_qubit_lower_bound",
      std::abs(two.r_lower_bound - 1.0 / (2.0 * std::sqrt(42.0))), 1e-12));

  // Three-qubit boundary stationary values: min along the tau3 = tau4
  // symmetry line, max along the tau2 = tau3 edge of the valid region.
  const auto three = ball_radii_3qubit();
  const double t_sym = golden_section_min(
      [](double t) { return r_obs1_boundary(t, t); }, 0.184, 0.211);
  const double r_min3 = r_obs1_boundary(t_sym, t_sym);
  const double t_edge = golden_section_min(
      [](double t) {
        // tau2 = tau3 = t; tau4 solves the boundary equality.
        const double u = (-std::sqrt(3.0 * t) + std::sqrt(4.0 - 5.0 * t)) / 2.0;
        return -r_obs1_boundary(t, u * u);
      },
      // The edge leaves the valid region past tau2 = 3/10; the maximum sits
      // exactly at that corner.
      0.25, 0.2999999999);
  const double u_edge =
      (-std::sqrt(3.0 * t_edge) + std::sqrt(4.0 - 5.0 * t_edge)) / 2.0;
  const double r_max3 = r_obs1_boundary(t_edge, u_edge * u_edge);
  rep.checks.push_back(max_dev_check("three_qubit_boundary_min",
                                     std::abs(r_min3 - three.r_sas_upper), 1e-9));
  rep.checks.push_back(max_dev_check("three_qubit_boundary_max",
                                     std::abs(r_max3 - three.big_r_sas_upper), 1e-9));
  rep.checks.push_back(max_dev_check(
      "three_qubit_lower_bound",
      std::abs(three.r_sas_lower - 1.0 / (10.0 * std::sqrt(11.0))), 1e-12));
  return rep;
}

}  // namespace

std::vector<std::string> known_suites() {
  return {"theorem1", "obs1", "appendixA", "concurrence", "radii"};
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, Scale scale) {
  if (suite == "theorem1") return suite_theorem1(seed, scale);
  if (suite == "obs1") return suite_obs1(seed, scale);
  if (suite == "appendixA") return suite_appendix_a(seed, scale);
  if (suite == "concurrence") return suite_concurrence(seed, scale);
  if (suite == "radii") return suite_radii(seed, scale);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace symsep
