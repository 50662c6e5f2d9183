#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bngap {

// Everything mask-shaped in this library works over the ground set
// {1,...,n} with n at most 20; bit j-1 of a mask stands for the point j.
inline constexpr int max_rank = 20;

inline void check_rank(int n) {
  if (n < 1 || n > max_rank)
    throw std::invalid_argument("rank must be between 1 and " +
                                std::to_string(max_rank));
}

inline std::uint32_t all_points_mask(int n) {
  return (std::uint32_t{1} << n) - 1u;
}

/// A subset of {1,...,n}.
struct SubsetMask {
  int n = 1;
  std::uint32_t bits = 0;

  SubsetMask() = default;
  SubsetMask(int n_, std::uint32_t bits_) : n(n_), bits(bits_) {
    check_rank(n);
    if (bits & ~all_points_mask(n))
      throw std::invalid_argument("mask has bits outside {1,...,n}");
  }

  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(int point) const {  // point is 1-based
    return point >= 1 && point <= n && ((bits >> (point - 1)) & 1u);
  }

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
  friend std::strong_ordering operator<=>(const SubsetMask&,
                                          const SubsetMask&) = default;
};

inline SubsetMask empty_set(int n) { return SubsetMask(n, 0); }
inline SubsetMask full_set(int n) { return SubsetMask(n, all_points_mask(n)); }

/// {1,...,k} inside {1,...,n}; k = 0 gives the empty set.
inline SubsetMask prefix_set(int n, int k) {
  check_rank(n);
  if (k < 0 || k > n) throw std::invalid_argument("prefix size out of range");
  return SubsetMask(n, k == 0 ? 0u : all_points_mask(k));
}

inline int intersection_size(const SubsetMask& a, const SubsetMask& b) {
  if (a.n != b.n) throw std::invalid_argument("size mismatch");
  return std::popcount(a.bits & b.bits);
}

inline SubsetMask set_difference(const SubsetMask& a, const SubsetMask& b) {
  if (a.n != b.n) throw std::invalid_argument("size mismatch");
  return SubsetMask(a.n, a.bits & ~b.bits);
}

inline SubsetMask symmetric_difference(const SubsetMask& a,
                                       const SubsetMask& b) {
  if (a.n != b.n) throw std::invalid_argument("size mismatch");
  return SubsetMask(a.n, a.bits ^ b.bits);
}

/// All size-k masks over {1,...,n} in ascending numeric order.
inline std::vector<std::uint32_t> masks_of_size(int n, int k) {
  check_rank(n);
  if (k < 0 || k > n) throw std::invalid_argument("subset size out of range");
  std::vector<std::uint32_t> out;
  if (k == 0) return {0u};
  std::uint32_t m = all_points_mask(k);
  const std::uint32_t limit = std::uint32_t{1} << n;
  while (m < limit) {
    out.push_back(m);
    // Gosper's hack: next larger integer with the same popcount
    std::uint32_t c = m & -m;
    std::uint32_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

/// Text form: character j (leftmost = j = 1) is '1' iff j is a member.
inline std::string to_bitstring(const SubsetMask& s) {
  std::string out(static_cast<std::size_t>(s.n), '0');
  for (int j = 0; j < s.n; ++j)
    if ((s.bits >> j) & 1u) out[static_cast<std::size_t>(j)] = '1';
  return out;
}

inline SubsetMask mask_from_bitstring(const std::string& text) {
  check_rank(static_cast<int>(text.size()));
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1')
      bits |= std::uint32_t{1} << j;
    else if (text[j] != '0')
      throw std::invalid_argument("bitstring must contain only 0 and 1");
  }
  return SubsetMask(static_cast<int>(text.size()), bits);
}

}  // namespace bngap
