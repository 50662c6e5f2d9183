#include "bngap/group_ring.hpp"

#include <stdexcept>

namespace bngap {

double GroupRingElement::weight(const SignedPermutation& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? 0.0 : it->second;
}

void GroupRingElement::add_term(const SignedPermutation& g, double w) {
  if (g.n() != n_) throw std::invalid_argument("size mismatch");
  symmetric_checked_ = false;
  if (w == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(g, w);
  if (!inserted) {
    it->second += w;
    if (it->second == 0.0) terms_.erase(it);
  }
}

bool GroupRingElement::verify_symmetric() {
  for (const auto& [g, w] : terms_) {
    auto it = terms_.find(inverse(g));
    if (it == terms_.end() || it->second != w) {
      symmetric_checked_ = false;
      return false;
    }
  }
  symmetric_checked_ = true;
  return true;
}

bool GroupRingElement::diagonal_supported() const {
  for (const auto& [g, w] : terms_)
    if (!g.is_diagonal()) return false;
  return true;
}

GroupRingElement build_weight_element(
    int n, const std::map<std::pair<int, int>, double>& transposition_weights,
    const std::map<SubsetMask, double>& diagonal_weights) {
  check_rank(n);
  GroupRingElement e(n);
  for (const auto& [ij, w] : transposition_weights) {
    if (w < 0.0) throw std::invalid_argument("weights must be nonnegative");
    e.add_term(make_transposition(n, ij.first, ij.second), w);
  }
  for (const auto& [a, w] : diagonal_weights) {
    if (w < 0.0) throw std::invalid_argument("weights must be nonnegative");
    if (a.n != n) throw std::invalid_argument("size mismatch");
    if (a.empty()) continue;  // flipping nothing is the identity; no effect on any Laplacian
    e.add_term(make_diagonal(a), w);
  }
  e.verify_symmetric();
  return e;
}

GroupRingElement laplacian_element(const GroupRingElement& w) {
  GroupRingElement delta(w.n());
  const SignedPermutation id = SignedPermutation::identity(w.n());
  double total = 0.0;
  for (const auto& [g, wg] : w.terms()) {
    total += wg;
    delta.add_term(g, -wg);
  }
  delta.add_term(id, total);
  delta.verify_symmetric();
  return delta;
}

}  // namespace bngap
