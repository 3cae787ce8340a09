#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symsep/linalg.hpp"
#include "symsep/three_qubit.hpp"
#include "symsep/two_qubit.hpp"

namespace symsep {

enum class Scale { Quick, Full };

struct CheckResult {
  std::string name;
  bool pass;
  double deviation;  // measured worst deviation
  double tolerance;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// Known suites: theorem1, obs1, appendixA, concurrence, radii.
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& suite, std::uint64_t seed, Scale scale);

std::vector<std::string> known_suites();

// Sampling and 1-D refinement helpers shared by the suites and the
// acceptance tests.

Spectrum3 random_spectrum3(Rng& rng);
Spectrum4Sym random_spectrum4sym(Rng& rng);

/// Golden-section minimizer of f on [lo, hi]; assumes a unimodal objective.
double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi, double tol = 1e-12);

}  // namespace symsep
