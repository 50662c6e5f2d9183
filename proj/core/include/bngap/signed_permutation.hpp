#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "bngap/subset_mask.hpp"

namespace bngap {

/// A signed permutation matrix on n points, stored column-wise: column j
/// (0-based) has its unique nonzero entry signs[j] = +-1 in row perm[j].
/// Composition is matrix multiplication, so (g*h).perm[j] = g.perm[h.perm[j]].
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<std::int8_t> signs;

  int n() const { return static_cast<int>(perm.size()); }

  static SignedPermutation identity(int n);
  /// Validates that perm is a permutation of 0..n-1 and every sign is +-1.
  static SignedPermutation from_parts(std::vector<int> perm,
                                      std::vector<std::int8_t> signs);

  bool is_identity() const;
  bool is_diagonal() const;  // perm is the identity map
  bool is_unsigned() const;  // all signs are +1

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
  friend std::strong_ordering operator<=>(const SignedPermutation&,
                                          const SignedPermutation&) = default;
};

SignedPermutation compose(const SignedPermutation& g,
                          const SignedPermutation& h);
SignedPermutation inverse(const SignedPermutation& g);

/// The unsigned transposition (i j), 1 <= i < j <= n.
SignedPermutation make_transposition(int n, int i, int j);

/// The diagonal element with entry -1 exactly at the points of a.
SignedPermutation make_diagonal(const SubsetMask& a);

/// g factored as make_diagonal(negatives) * permutation with the second
/// factor unsigned; negatives = { perm[j]+1 : signs[j] = -1 }.
struct SemidirectParts {
  SubsetMask negatives;
  SignedPermutation permutation;
};
SemidirectParts factor_semidirect(const SignedPermutation& g);

/// Image of a set under the unsigned part of g (signs ignored).
SubsetMask apply_to_set(const SignedPermutation& g, const SubsetMask& b);

/// Sign mask of g: bit j set iff signs[j] = -1.
std::uint32_t signs_mask(const SignedPermutation& g);

long long group_order(int n);  // 2^n * n!

/// All 2^n n! elements, ordered by the lexicographic rank of perm and then
/// by ascending sign mask. Guarded to n <= 6.
std::vector<SignedPermutation> enumerate_group(int n);

}  // namespace bngap
