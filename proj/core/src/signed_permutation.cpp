#include "bngap/signed_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bngap {

SignedPermutation SignedPermutation::identity(int n) {
  check_rank(n);
  SignedPermutation g;
  g.perm.resize(static_cast<std::size_t>(n));
  std::iota(g.perm.begin(), g.perm.end(), 0);
  g.signs.assign(static_cast<std::size_t>(n), 1);
  return g;
}

SignedPermutation SignedPermutation::from_parts(std::vector<int> perm,
                                                std::vector<std::int8_t> signs) {
  const int n = static_cast<int>(perm.size());
  check_rank(n);
  if (signs.size() != perm.size())
    throw std::invalid_argument("size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("perm is not a permutation of 0..n-1");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::int8_t s : signs)
    if (s != 1 && s != -1)
      throw std::invalid_argument("signs must be +1 or -1");
  SignedPermutation g;
  g.perm = std::move(perm);
  g.signs = std::move(signs);
  return g;
}

bool SignedPermutation::is_identity() const {
  return is_diagonal() && is_unsigned();
}

bool SignedPermutation::is_diagonal() const {
  for (int j = 0; j < n(); ++j)
    if (perm[static_cast<std::size_t>(j)] != j) return false;
  return true;
}

bool SignedPermutation::is_unsigned() const {
  return std::all_of(signs.begin(), signs.end(),
                     [](std::int8_t s) { return s == 1; });
}

SignedPermutation compose(const SignedPermutation& g,
                          const SignedPermutation& h) {
  if (g.n() != h.n()) throw std::invalid_argument("size mismatch");
  const int n = g.n();
  SignedPermutation out;
  out.perm.resize(static_cast<std::size_t>(n));
  out.signs.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int hj = h.perm[static_cast<std::size_t>(j)];
    out.perm[static_cast<std::size_t>(j)] = g.perm[static_cast<std::size_t>(hj)];
    out.signs[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(
        g.signs[static_cast<std::size_t>(hj)] * h.signs[static_cast<std::size_t>(j)]);
  }
  return out;
}

SignedPermutation inverse(const SignedPermutation& g) {
  const int n = g.n();
  SignedPermutation out;
  out.perm.resize(static_cast<std::size_t>(n));
  out.signs.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int i = g.perm[static_cast<std::size_t>(j)];
    out.perm[static_cast<std::size_t>(i)] = j;
    out.signs[static_cast<std::size_t>(i)] = g.signs[static_cast<std::size_t>(j)];
  }
  return out;
}

SignedPermutation make_transposition(int n, int i, int j) {
  check_rank(n);
  if (i < 1 || j < 1 || i > n || j > n || i >= j)
    throw std::invalid_argument("index out of range");
  SignedPermutation g = SignedPermutation::identity(n);
  std::swap(g.perm[static_cast<std::size_t>(i - 1)],
            g.perm[static_cast<std::size_t>(j - 1)]);
  return g;
}

SignedPermutation make_diagonal(const SubsetMask& a) {
  SignedPermutation g = SignedPermutation::identity(a.n);
  for (int j = 0; j < a.n; ++j)
    if ((a.bits >> j) & 1u) g.signs[static_cast<std::size_t>(j)] = -1;
  return g;
}

SemidirectParts factor_semidirect(const SignedPermutation& g) {
  const int n = g.n();
  std::uint32_t neg = 0;
  SignedPermutation pi;
  pi.perm = g.perm;
  pi.signs.assign(static_cast<std::size_t>(n), 1);
  for (int j = 0; j < n; ++j)
    if (g.signs[static_cast<std::size_t>(j)] < 0)
      neg |= std::uint32_t{1} << g.perm[static_cast<std::size_t>(j)];
  return SemidirectParts{SubsetMask(n, neg), std::move(pi)};
}

SubsetMask apply_to_set(const SignedPermutation& g, const SubsetMask& b) {
  if (g.n() != b.n) throw std::invalid_argument("size mismatch");
  std::uint32_t out = 0;
  for (int j = 0; j < b.n; ++j)
    if ((b.bits >> j) & 1u)
      out |= std::uint32_t{1} << g.perm[static_cast<std::size_t>(j)];
  return SubsetMask(b.n, out);
}

std::uint32_t signs_mask(const SignedPermutation& g) {
  std::uint32_t m = 0;
  for (int j = 0; j < g.n(); ++j)
    if (g.signs[static_cast<std::size_t>(j)] < 0) m |= std::uint32_t{1} << j;
  return m;
}

long long group_order(int n) {
  check_rank(n);
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f << n;
}

std::vector<SignedPermutation> enumerate_group(int n) {
  check_rank(n);
  if (n > 6) throw std::invalid_argument("group too large for enumeration");
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<std::size_t>(group_order(n)));
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  const std::uint32_t nsigns = std::uint32_t{1} << n;
  do {
    for (std::uint32_t m = 0; m < nsigns; ++m) {
      SignedPermutation g;
      g.perm = p;
      g.signs.resize(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j)
        g.signs[static_cast<std::size_t>(j)] = ((m >> j) & 1u) ? -1 : 1;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace bngap
