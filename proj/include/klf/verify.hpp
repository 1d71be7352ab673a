#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "klf/eisenstein.hpp"

namespace klf {

struct CaseResult {
  int index = 0;
  bool pass = false;
  double error = 0.0;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, double>> data;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;

  bool passed() const;
  double max_error() const;
};

/// poisson, gamma-integral, hecke, eta, residue, const-term, fast-vs-direct
const std::vector<std::string>& suite_names();

/// Runs one verification suite with cases drawn from a seeded generator.
/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, const TruncationSpec& t = {},
                      const QuadratureSpec& q = {});

/// Random point with y_i in [y_lo, y_hi] and unipotent entries in [-0.5, 0.5].
HalfPlanePoint random_point(std::mt19937_64& rng, int n, double y_lo, double y_hi);

}  // namespace klf
