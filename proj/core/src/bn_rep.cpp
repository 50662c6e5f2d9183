#include "bngap/bn_rep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace bngap {

SubsetBasis::SubsetBasis(int n_in, int k_in) : n(n_in), k(k_in) {
  masks = masks_of_size(n, k);
}

int SubsetBasis::index_of(std::uint32_t mask) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), mask);
  if (it == masks.end() || *it != mask)
    throw std::invalid_argument("mask is not a basis element");
  return static_cast<int>(it - masks.begin());
}

BnRep::BnRep(int n, long dim, Bipartition label)
    : n_(n), dim_(dim), label_(std::move(label)) {
  check_rank(n);
}

double BnRep::character(const SignedPermutation& g) const {
  return evaluate(g).trace();
}

namespace {

void check_rank_matches(int n, const SignedPermutation& g) {
  if (g.n() != n) throw std::invalid_argument("size mismatch");
}

Bipartition vni_label(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("subset size out of range");
  Partition first = (i == n) ? Partition() : Partition({n - i});
  return Bipartition{std::move(first), Partition({i})};
}

}  // namespace

VniRep::VniRep(int n, int i)
    : BnRep(n, static_cast<long>(binomial(n, i)), vni_label(n, i)),
      i_(i),
      basis_(n, i) {}

Eigen::MatrixXd VniRep::evaluate(const SignedPermutation& g) const {
  check_rank_matches(n_, g);
  const SemidirectParts parts = factor_semidirect(g);
  const std::uint32_t neg = parts.negatives.bits;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int a = 0; a < basis_.size(); ++a) {
    const SubsetMask b(n_, basis_.masks[static_cast<std::size_t>(a)]);
    const std::uint32_t image = apply_to_set(g, b).bits;
    const int row = basis_.index_of(image);
    const double sign = (std::popcount(neg & image) & 1) ? -1.0 : 1.0;
    m(row, a) = sign;
  }
  return m;
}

double VniRep::character(const SignedPermutation& g) const {
  check_rank_matches(n_, g);
  const SemidirectParts parts = factor_semidirect(g);
  const std::uint32_t neg = parts.negatives.bits;
  double tr = 0.0;
  for (std::uint32_t mask : basis_.masks) {
    if (apply_to_set(g, SubsetMask(n_, mask)).bits != mask) continue;
    tr += (std::popcount(neg & mask) & 1) ? -1.0 : 1.0;
  }
  return tr;
}

PullbackRep::PullbackRep(Partition shape)
    : BnRep(shape.size(), 1, Bipartition{shape, Partition()}), rho_(shape) {
  dim_ = rho_.dim();
}

Eigen::MatrixXd PullbackRep::evaluate(const SignedPermutation& g) const {
  check_rank_matches(n_, g);
  return rho_.matrix(g.perm);
}

double PullbackRep::character(const SignedPermutation& g) const {
  check_rank_matches(n_, g);
  return rho_.character(g.perm);
}

InducedRep::InducedRep(Bipartition label)
    : BnRep(label.n(), static_cast<long>(bipartition_dimension(label)), label),
      p_(label.first.size()),
      q_(label.second.size()),
      rho1_(label.first),
      rho2_(label.second),
      cosets_(label.n(), label.second.size()) {
  if (n_ > 8) throw std::invalid_argument("induced model limited to n <= 8");
  if (dim_ > 5000)
    throw std::invalid_argument("representation dimension exceeds 5000");
  theta_.reserve(cosets_.masks.size());
  theta_inv_.reserve(cosets_.masks.size());
  for (std::uint32_t mask : cosets_.masks) {
    // order-preserving: complement of the subset fills block one, the
    // subset fills block two
    std::vector<int> perm(static_cast<std::size_t>(n_));
    int lo = 0, hi = p_;
    for (int j = 0; j < n_; ++j) {
      if ((mask >> j) & 1u)
        perm[static_cast<std::size_t>(hi++)] = j;
      else
        perm[static_cast<std::size_t>(lo++)] = j;
    }
    SignedPermutation theta = SignedPermutation::from_parts(
        std::move(perm), std::vector<std::int8_t>(static_cast<std::size_t>(n_), 1));
    theta_inv_.push_back(inverse(theta));
    theta_.push_back(std::move(theta));
  }
}

InducedRep::CosetAction InducedRep::coset_action(const SignedPermutation& g,
                                                 int a) const {
  const std::uint32_t image =
      apply_to_set(g, SubsetMask(n_, cosets_.masks[static_cast<std::size_t>(a)]))
          .bits;
  const int target = cosets_.index_of(image);
  const SignedPermutation w = compose(
      theta_inv_[static_cast<std::size_t>(target)],
      compose(g, theta_[static_cast<std::size_t>(a)]));
  CosetAction act;
  act.target = target;
  act.epsilon = 1.0;
  act.tau1.resize(static_cast<std::size_t>(p_));
  act.tau2.resize(static_cast<std::size_t>(q_));
  for (int j = 0; j < p_; ++j) {
    const int im = w.perm[static_cast<std::size_t>(j)];
    if (im >= p_) throw std::logic_error("coset representative mismatch");
    act.tau1[static_cast<std::size_t>(j)] = im;
  }
  for (int j = p_; j < n_; ++j) {
    const int im = w.perm[static_cast<std::size_t>(j)];
    if (im < p_) throw std::logic_error("coset representative mismatch");
    act.tau2[static_cast<std::size_t>(j - p_)] = im - p_;
    if (w.signs[static_cast<std::size_t>(j)] < 0) act.epsilon = -act.epsilon;
  }
  return act;
}

Eigen::MatrixXd InducedRep::evaluate(const SignedPermutation& g) const {
  check_rank_matches(n_, g);
  const int d1 = rho1_.dim(), d2 = rho2_.dim();
  const int bd = d1 * d2;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int a = 0; a < cosets_.size(); ++a) {
    const CosetAction act = coset_action(g, a);
    const Eigen::MatrixXd m1 = rho1_.matrix(act.tau1);
    const Eigen::MatrixXd m2 = act.epsilon * rho2_.matrix(act.tau2);
    for (int r = 0; r < d1; ++r)
      for (int c = 0; c < d1; ++c)
        m.block(act.target * bd + r * d2, a * bd + c * d2, d2, d2) =
            m1(r, c) * m2;
  }
  return m;
}

double InducedRep::character(const SignedPermutation& g) const {
  check_rank_matches(n_, g);
  double tr = 0.0;
  for (int a = 0; a < cosets_.size(); ++a) {
    const CosetAction act = coset_action(g, a);
    if (act.target != a) continue;
    tr += act.epsilon * rho1_.character(act.tau1) * rho2_.character(act.tau2);
  }
  return tr;
}

std::unique_ptr<BnRep> make_rep(const Bipartition& label) {
  const int n = label.n();
  check_rank(n);
  if (label.second.empty())
    return std::make_unique<PullbackRep>(label.first);
  if (label.first.parts.size() <= 1 && label.second.parts.size() == 1)
    return std::make_unique<VniRep>(n, label.second.parts[0]);
  return std::make_unique<InducedRep>(label);
}

Eigen::MatrixXd vni_matrix(int n, int i, const SignedPermutation& g) {
  return VniRep(n, i).evaluate(g);
}

int sign_rep_value(const SignedPermutation& g) {
  int v = 1;
  for (std::int8_t s : g.signs) v *= s;
  return v;
}

double bn_character(const Bipartition& label, const SignedPermutation& g) {
  return make_rep(label)->character(g);
}

long trivial_multiplicity_on_subgroup(const Bipartition& label, Subgroup sub) {
  const int n = label.n();
  check_rank(n);
  if (n > 6) throw std::invalid_argument("group too large for enumeration");
  const auto rep = make_rep(label);
  double sum = 0.0;
  long long count = 0;
  if (sub == Subgroup::symmetric) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = j;
    do {
      SignedPermutation g = SignedPermutation::from_parts(
          p, std::vector<std::int8_t>(static_cast<std::size_t>(n), 1));
      sum += rep->character(g);
      ++count;
    } while (std::next_permutation(p.begin(), p.end()));
  } else {
    const std::uint32_t lim = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < lim; ++mask) {
      sum += rep->character(make_diagonal(SubsetMask(n, mask)));
      ++count;
    }
  }
  const double avg = sum / static_cast<double>(count);
  const double rounded = std::llround(avg);
  if (std::abs(avg - rounded) > 1e-6)
    throw std::runtime_error("non-integral multiplicity");
  return static_cast<long>(rounded);
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  check_rank(n);
  if (n > 6) throw std::invalid_argument("group too large for enumeration");
  using ClassKey = std::pair<std::vector<int>, std::vector<int>>;
  std::map<ClassKey, ConjugacyClass> classes;
  for (SignedPermutation& g : enumerate_group(n)) {
    std::vector<int> plus, minus;
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    for (int j = 0; j < n; ++j) {
      if (visited[static_cast<std::size_t>(j)]) continue;
      int len = 0, sgn = 1, cur = j;
      do {
        visited[static_cast<std::size_t>(cur)] = true;
        sgn *= g.signs[static_cast<std::size_t>(cur)];
        cur = g.perm[static_cast<std::size_t>(cur)];
        ++len;
      } while (cur != j);
      (sgn > 0 ? plus : minus).push_back(len);
    }
    std::sort(plus.rbegin(), plus.rend());
    std::sort(minus.rbegin(), minus.rend());
    ClassKey key{std::move(plus), std::move(minus)};
    auto [it, inserted] = classes.try_emplace(key);
    if (inserted) it->second.representative = std::move(g);
    ++it->second.size;
  }
  std::vector<ConjugacyClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

}  // namespace bngap
