#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdcoords/scalar.hpp"

namespace bdcoords {

struct VerifyConfig {
  std::string suite = "all";
  int n = 3;
  int samples = 200;
  std::uint64_t seed = 1;
  Mode mode = Mode::Exact;
  /// Largest parameter for the rhombus and band enumerations.
  int max = 10;
  /// Float-mode pass threshold (relative deviation).
  double tolerance = 1e-9;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Largest deviation seen (0 when every exact comparison held).
  double worst_deviation = 0.0;
  /// Informational: closed forms whose sign disagrees with brute force.
  std::size_t sign_mismatches = 0;
  std::string note;
};

const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws DomainError for an
/// unknown suite or an n the suite cannot use.
std::vector<SuiteResult> run_verify(const VerifyConfig& cfg);

SuiteResult verify_triple_ratio(int n, int samples, std::uint64_t seed, Mode mode, double tol);
SuiteResult verify_double_ratio(int n, int samples, std::uint64_t seed, Mode mode, double tol);
SuiteResult verify_rhombus(int max);
SuiteResult verify_band(int max);
SuiteResult verify_permutation(int n, int samples, std::uint64_t seed, Mode mode, double tol);
SuiteResult verify_wedge_factor(int n, int samples, std::uint64_t seed);

}  // namespace bdcoords
