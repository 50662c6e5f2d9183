#include "bngap/witness.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bngap {

GroupRingElement WitnessSpec::weight_element() const {
  return build_weight_element(n, transposition_weights, diagonal_weights);
}

WitnessSpec witness_vnk(int n, int k) {
  check_rank(n);
  if (n < 2) throw std::invalid_argument("witness needs n >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("subset size out of range");
  WitnessSpec spec;
  spec.n = n;
  spec.target = Bipartition{k == n ? Partition() : Partition({n - k}),
                            Partition({k})};
  const double tw = std::ldexp(1.0, n) / n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      spec.transposition_weights[{i, j}] = tw;
  const std::uint32_t a_bits = prefix_set(n, k).bits;
  long support = 0;
  const std::uint32_t lim = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < lim; ++mask) {
    if (!(std::popcount(mask) & 1)) continue;
    if (std::popcount(mask & a_bits) & 1) continue;
    spec.diagonal_weights[SubsetMask(n, mask)] = 4.0;
    ++support;
  }
  const long expected = 1L << (n - 2);
  if (support != expected) {
    std::string msg = "witness flip support has " + std::to_string(support) +
                      " sets, expected " + std::to_string(expected);
    if (k == n)
      msg += "; no odd set can meet {1,...,n} evenly, so the construction "
             "degenerates at k = n";
    throw std::runtime_error(msg);
  }
  spec.note = "flip witness for " + format_bipartition(spec.target);
  return spec;
}

WitnessSpec witness_std(int n) {
  check_rank(n);
  if (n < 2) throw std::invalid_argument("witness needs n >= 2");
  WitnessSpec spec;
  spec.n = n;
  spec.target = Bipartition{Partition({n - 1, 1}), Partition()};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      spec.transposition_weights[{i, j}] = 1.0;
  for (int j = 1; j <= n; ++j)
    spec.diagonal_weights[SubsetMask(n, std::uint32_t{1} << (j - 1))] =
        static_cast<double>(n);
  spec.note = "transposition witness for " + format_bipartition(spec.target);
  return spec;
}

IndicatorDecomposition hypercube_indicator_decomposition(int n, int k) {
  check_rank(n);
  if (k < 1 || k > n) throw std::invalid_argument("subset size out of range");
  const SubsetMask a = prefix_set(n, k);
  const SubsetMask b = full_set(n);
  IndicatorDecomposition dec;
  dec.n = n;
  dec.k = k;
  dec.terms = {{empty_set(n), 1.0},
               {a, 1.0},
               {b, -1.0},
               {set_difference(b, a), -1.0}};
  const std::uint32_t lim = std::uint32_t{1} << n;
  for (std::uint32_t d = 0; d < lim; ++d) {
    const bool in_u = (std::popcount(d) & 1) && !(std::popcount(d & a.bits) & 1);
    double rhs = 0.0;
    for (const auto& [c, coef] : dec.terms)
      rhs += coef * ((std::popcount(c.bits & d) & 1) ? -1.0 : 1.0);
    if (std::abs(rhs - (in_u ? 4.0 : 0.0)) > 1e-12)
      throw std::logic_error("indicator decomposition identity failed");
  }
  return dec;
}

}  // namespace bngap
