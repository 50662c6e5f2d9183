#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bngap/group_ring.hpp"
#include "bngap/witness.hpp"

namespace bngap {

class WeightParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Line-oriented weight description:
///   # comment (also allowed after a directive)
///   n 4
///   T 1 3 0.5      transposition (1 3) with weight 0.5
///   D 1010 2       flip of {1,3}; leftmost bitstring character is point 1
/// The n header must come first; duplicate T or D lines accumulate; weights
/// are nonnegative decimal reals.
struct WeightFile {
  int n = 0;
  std::map<std::pair<int, int>, double> transpositions;
  std::map<std::uint32_t, double> diagonals;
};

WeightFile parse_weight_file(const std::string& text);

/// Inverse of parse_weight_file up to comments: emits the header, T lines
/// in (i, j) order, then D lines in ascending mask order. Weights carry 17
/// significant digits so parsing the output restores them bit-exactly.
std::string format_weight_file(const WeightFile& wf,
                               const std::vector<std::string>& comments = {});

GroupRingElement to_element(const WeightFile& wf);

WeightFile to_weight_file(const WitnessSpec& spec);

}  // namespace bngap
