#pragma once

#include <map>
#include <utility>

#include "bngap/signed_permutation.hpp"

namespace bngap {

/// A finitely supported real combination of group elements. Stored weights
/// are always nonzero; adding a term that cancels removes it.
class GroupRingElement {
 public:
  explicit GroupRingElement(int n) : n_(n) { check_rank(n); }

  int n() const { return n_; }
  const std::map<SignedPermutation, double>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  double weight(const SignedPermutation& g) const;

  void add_term(const SignedPermutation& g, double w);

  /// True once verify_symmetric has confirmed w(g) == w(g^-1) for every
  /// term. Mutating the element resets it.
  bool symmetric_checked() const { return symmetric_checked_; }
  bool verify_symmetric();

  /// Support lies inside the diagonal +-1 subgroup.
  bool diagonal_supported() const;

 private:
  int n_;
  std::map<SignedPermutation, double> terms_;
  bool symmetric_checked_ = false;
};

/// Combination of unsigned transpositions (keys (i,j), 1 <= i < j <= n) and
/// diagonal sign flips (keyed by the flipped set). All weights must be
/// nonnegative; zero-weight entries are dropped. The result is symmetric by
/// construction and arrives with the symmetric flag set.
GroupRingElement build_weight_element(
    int n, const std::map<std::pair<int, int>, double>& transposition_weights,
    const std::map<SubsetMask, double>& diagonal_weights);

/// sum_s w_s (1 - s) for a symmetric w: the identity picks up the total
/// weight and every generator its negated weight.
GroupRingElement laplacian_element(const GroupRingElement& w);

}  // namespace bngap
