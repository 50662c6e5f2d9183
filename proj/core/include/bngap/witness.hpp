#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bngap/group_ring.hpp"
#include "bngap/partition.hpp"

namespace bngap {

/// A named weight assignment together with the label it is built to make
/// the unique gap minimiser.
struct WitnessSpec {
  int n = 1;
  Bipartition target;
  std::map<std::pair<int, int>, double> transposition_weights;
  std::map<SubsetMask, double> diagonal_weights;
  std::string note;

  GroupRingElement weight_element() const;
};

/// Weights pulling the gap onto ([n-k], [k]) alone: every transposition at
/// weight 2^n / n plus weight 4 on each flip set of odd size meeting
/// {1,...,k} evenly. Defined for n >= 2 and 1 <= k <= n-1; at k = n the
/// flip support is empty and construction fails loudly.
WitnessSpec witness_vnk(int n, int k);

/// Weights pulling the gap onto ([n-1,1], []): unit transpositions plus
/// weight n on every single-point flip.
WitnessSpec witness_std(int n);

/// The four-term parity expansion of the witness flip support: writing
/// U = { odd-size S meeting A = {1,...,k} evenly }, the indicator satisfies
/// 4 * 1_U(D) = 1 + (-1)^{|A cut D|} - (-1)^{|D|} - (-1)^{|A cut D| + |D|}
/// pointwise, i.e. coefficients +1, +1, -1, -1 on the parity characters of
/// the empty set, A, the full set, and full minus A. Verified exhaustively
/// at construction.
struct IndicatorDecomposition {
  int n = 1;
  int k = 1;
  std::vector<std::pair<SubsetMask, double>> terms;
};
IndicatorDecomposition hypercube_indicator_decomposition(int n, int k);

}  // namespace bngap
