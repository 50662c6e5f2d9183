#pragma once

#include <Eigen/Dense>
#include <vector>

#include "bngap/partition.hpp"

namespace bngap {

/// Orthogonal (real unitary) irreducible representation of the symmetric
/// group for a fixed shape, in Young's orthogonal form. The basis is the
/// set of standard tableaux of that shape, enumerated in lexicographic
/// order of their row-index words. Construction refuses dimensions above
/// 5000 so that a generator table stays affordable.
class SnIrrep {
 public:
  explicit SnIrrep(Partition shape);

  const Partition& shape() const { return shape_; }
  int degree() const { return m_; }  // number of permuted symbols
  int dim() const { return dim_; }

  /// Matrix of a permutation in 0-based one-line form (perm[j] = image of
  /// j). Must have exactly degree() entries.
  Eigen::MatrixXd matrix(const std::vector<int>& perm) const;

  double character(const std::vector<int>& perm) const;

  /// Trace of any transposition's matrix; degree() must be at least 2.
  double transposition_character() const;

  /// Dense matrix of the adjacent swap (k+1, k+2), 0 <= k < degree()-1.
  Eigen::MatrixXd adjacent_matrix(int k) const;

  /// Left-multiplies M in place by the adjacent swap's matrix.
  void apply_adjacent_left(int k, Eigen::MatrixXd& m) const;

 private:
  // Every adjacent swap acts by 1x1 blocks (partner[t] == t, value = +-1)
  // and 2x2 blocks {t, partner[t]} with diagonal (value, -value) and
  // off-diagonal sqrt(1 - value^2); value is the reciprocal axial distance.
  struct AdjacentGenerator {
    std::vector<int> partner;
    std::vector<double> value;
  };

  Partition shape_;
  int m_ = 0;
  int dim_ = 1;
  std::vector<AdjacentGenerator> generators_;
};

/// Factors a 0-based one-line permutation into adjacent swaps by bubble
/// sort: composing the swaps right-to-left over the returned order
/// reproduces the permutation. Entry j stands for the swap (j+1, j+2).
std::vector<int> adjacent_swap_word(std::vector<int> perm);

/// chi((1 2)) / dimension for a shape of size >= 2.
double character_ratio(const Partition& shape);

}  // namespace bngap
