#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bngap {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (size 0) is valid and prints as "[]".
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  bool empty() const { return parts.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition&,
                                          const Partition&) = default;
};

/// All partitions of m in reverse lexicographic order, [m] first,
/// [1,...,1] last. m = 0 gives the single empty partition.
std::vector<Partition> enumerate_partitions(int m);

/// Irreducible representations of the signed permutation group on n points
/// are indexed by ordered pairs of partitions with |first| + |second| = n.
struct Bipartition {
  Partition first;
  Partition second;

  int n() const { return first.size() + second.size(); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend std::strong_ordering operator<=>(const Bipartition&,
                                          const Bipartition&) = default;
};

/// All pairs for the given n. Outer loop: |first| descending from n to 0;
/// inner loops in enumerate_partitions order. ([n], []) comes first.
std::vector<Bipartition> enumerate_bipartitions(int n);

bool is_trivial(const Bipartition& label);  // ([n], [])

/// The n+1 labels that can carry the minimiser of the spectral gap for
/// nonnegative transposition-plus-flip weights: ([n-1,1], []) followed by
/// ([n-k], [k]) for k = 1..n.
std::vector<Bipartition> gap_family(int n);
bool in_gap_family(const Bipartition& label);

/// The two labels spanning the natural 2n-dimensional permutation module
/// minus its trivial summand: ([n-1,1], []) and ([n-1], [1]).
std::vector<Bipartition> pn_components(int n);

/// Hook length formula. Safe in 64 bits for sizes up to max_rank.
unsigned long long partition_dimension(const Partition& p);

/// Product dimension C(n, |first|) * dim(first) * dim(second).
unsigned long long bipartition_dimension(const Bipartition& label);

unsigned long long binomial(int n, int k);

enum class DominanceRelation {
  strictly_greater,
  equal,
  strictly_less,
  incomparable,
};

/// Dominance order on partitions of the same size (prefix sums). Throws on
/// a size mismatch.
DominanceRelation compare_dominance(const Partition& a, const Partition& b);

std::string format_partition(const Partition& p);     // "[3,1]", "[]"
std::string format_bipartition(const Bipartition&);   // "[3,1]|[2]"
Partition parse_partition(const std::string& text);
Bipartition parse_bipartition(const std::string& text);

}  // namespace bngap
