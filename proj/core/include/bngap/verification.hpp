#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bngap/spectral.hpp"
#include "bngap/witness.hpp"

namespace bngap {

/// One asserted inequality (or equality) with the tolerance it was judged
/// against. `conditional` marks conclusions that cover unscanned labels
/// only through the family reduction bound.
struct Check {
  std::string name;
  bool pass = false;
  bool conditional = false;
  double margin = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct VerificationReport {
  std::string title;
  bool seeded = false;
  std::uint64_t seed = 0;
  std::vector<LabelledGap> table;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool all_pass() const;

  /// Line-oriented machine records; deterministic, no timing.
  void write_machine(std::ostream& os) const;
  /// Human summary, includes wall time.
  void write_text(std::ostream& os) const;
};

enum class SeparationMode {
  automatic,   // exhaustive for n <= 5, family otherwise
  exhaustive,  // full nontrivial catalogue, n <= 6
  family_only, // gap family; conclusion conditional on the reduction bound
};

/// Checks that the witness target's gap sits strictly below every other
/// scanned label.
VerificationReport verify_separation(
    const WitnessSpec& spec, SeparationMode mode = SeparationMode::automatic,
    int jobs = 1);

/// Builds witness_vnk(n, k) for 2 <= k <= n-1 and checks that the full gap
/// falls strictly below the gap over the two pn labels, exhibiting weights
/// whose gap the pn pair misses.
VerificationReport cesi_counterexample(int n, int k, int jobs = 1);

struct TrialOptions {
  bool odd_only = false;  // draw flip weights only for odd-size sets
  double sparse_p = 0.0;  // probability of zeroing each drawn weight
  int jobs = 1;
};

/// Random-weight trials of the family reduction. For n <= 6 each trial
/// checks psi_family == psi_global and that every nontrivial label outside
/// the family stays above the ([n-1,1], []) value; for larger n the trials
/// run family-only and the checks are conditional. Weights are drawn from
/// a splitmix64 stream sub-seeded per trial, so results do not depend on
/// evaluation order.
VerificationReport randomized_reduction_trial(int n, std::uint64_t seed,
                                              int trials,
                                              const TrialOptions& options = {});

}  // namespace bngap
