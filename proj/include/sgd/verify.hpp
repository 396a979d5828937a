#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgd/core.hpp"

namespace sgd {

/// Property suites that cross-check the library against its own independent
/// routes (determinant vs. 1-forest sum, three balance deciders, ...).
enum class Suite {
  forest_theorem,
  balance_equivalence,
  cospectrality,
  transmission_shift,
  incidence_factorization,
};

std::string to_string(Suite s);
/// Accepts the CLI names ("forest-theorem", ...). Throws InvalidArgument.
Suite parse_suite(const std::string& name);
std::vector<Suite> all_suites();

struct VerifyOptions {
  /// Largest graph order drawn. Cycle lengths for transmission-shift.
  int size_bound = 6;
  std::uint64_t seed = 1;
  /// 0 selects the suite default (200, 500, 100, -, 500).
  int instances = 0;
  /// Extra connected graphs appended to the random instances.
  std::vector<WeightedSignedGraph> corpus;
};

struct SuiteResult {
  Suite suite = Suite::forest_theorem;
  bool passed = true;
  int instances = 0;
  /// Largest discrepancy seen by the main comparison (disagreement count for
  /// balance-equivalence).
  double max_deviation = 0.0;
  /// Smallest eigenvalue of any L^max / L^min formed (PSD check); 0 if none.
  double min_eigenvalue = 0.0;
  std::vector<std::string> failures;

  /// One line: "PASS, 200 instances, max |det-sum| = 0".
  std::string summary() const;
};

SuiteResult run_suite(Suite suite, const VerifyOptions& options);

/// Random connected signed graph used by the suites: order uniform in
/// [2, size_bound], edge density in [0.3, 0.9]; every other instance is a
/// random switching of an all-positive graph so both verdicts occur.
SignedGraph random_instance(int size_bound, std::uint64_t seed);

}  // namespace sgd
