#include "bngap/sn_rep.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace bngap {

namespace {

// A tableau is encoded by the row index of each entry 1..m in order; the
// column is recoverable because entries are placed left to right per row.
void enumerate_tableaux(const std::vector<int>& parts, std::vector<int>& fill,
                        std::vector<std::uint8_t>& rows, int placed, int m,
                        std::vector<std::vector<std::uint8_t>>& out) {
  if (placed == m) {
    out.push_back(rows);
    return;
  }
  for (std::size_t r = 0; r < parts.size(); ++r) {
    const int c = fill[r];
    if (c >= parts[r]) continue;
    if (r > 0 && fill[r - 1] <= c) continue;
    ++fill[r];
    rows[static_cast<std::size_t>(placed)] = static_cast<std::uint8_t>(r);
    enumerate_tableaux(parts, fill, rows, placed + 1, m, out);
    --fill[r];
  }
}

}  // namespace

SnIrrep::SnIrrep(Partition shape) : shape_(std::move(shape)) {
  m_ = shape_.size();
  const unsigned long long d = partition_dimension(shape_);
  if (d > 5000)
    throw std::invalid_argument("representation dimension exceeds 5000");
  dim_ = static_cast<int>(d);
  if (m_ < 2) return;

  std::vector<std::vector<std::uint8_t>> tableaux;
  {
    std::vector<int> fill(shape_.parts.size(), 0);
    std::vector<std::uint8_t> rows(static_cast<std::size_t>(m_));
    enumerate_tableaux(shape_.parts, fill, rows, 0, m_, tableaux);
  }
  if (tableaux.size() != static_cast<std::size_t>(dim_))
    throw std::logic_error("tableau count disagrees with hook dimension");

  std::map<std::vector<std::uint8_t>, int> index;
  for (std::size_t t = 0; t < tableaux.size(); ++t)
    index.emplace(tableaux[t], static_cast<int>(t));

  // cell coordinates of every entry, per tableau
  auto coords = [&](const std::vector<std::uint8_t>& rows) {
    std::vector<std::pair<int, int>> rc(static_cast<std::size_t>(m_));
    std::vector<int> fill(shape_.parts.size(), 0);
    for (int e = 0; e < m_; ++e) {
      const int r = rows[static_cast<std::size_t>(e)];
      rc[static_cast<std::size_t>(e)] = {r, fill[static_cast<std::size_t>(r)]++};
    }
    return rc;
  };

  generators_.resize(static_cast<std::size_t>(m_ - 1));
  for (int k = 0; k < m_ - 1; ++k) {
    auto& gen = generators_[static_cast<std::size_t>(k)];
    gen.partner.assign(static_cast<std::size_t>(dim_), 0);
    gen.value.assign(static_cast<std::size_t>(dim_), 0.0);
    for (int t = 0; t < dim_; ++t) {
      const auto rc = coords(tableaux[static_cast<std::size_t>(t)]);
      const auto [r1, c1] = rc[static_cast<std::size_t>(k)];
      const auto [r2, c2] = rc[static_cast<std::size_t>(k + 1)];
      const int dist = (c2 - r2) - (c1 - r1);  // axial distance
      if (dist == 1 || dist == -1) {           // same row / same column
        gen.partner[static_cast<std::size_t>(t)] = t;
        gen.value[static_cast<std::size_t>(t)] = dist;
        continue;
      }
      std::vector<std::uint8_t> swapped = tableaux[static_cast<std::size_t>(t)];
      std::swap(swapped[static_cast<std::size_t>(k)],
                swapped[static_cast<std::size_t>(k + 1)]);
      gen.partner[static_cast<std::size_t>(t)] = index.at(swapped);
      gen.value[static_cast<std::size_t>(t)] = 1.0 / dist;
    }
  }
}

void SnIrrep::apply_adjacent_left(int k, Eigen::MatrixXd& m) const {
  if (k < 0 || k >= m_ - 1) throw std::invalid_argument("index out of range");
  if (m.rows() != dim_) throw std::invalid_argument("size mismatch");
  const auto& gen = generators_[static_cast<std::size_t>(k)];
  for (int t = 0; t < dim_; ++t) {
    const int u = gen.partner[static_cast<std::size_t>(t)];
    const double a = gen.value[static_cast<std::size_t>(t)];
    if (u == t) {
      if (a < 0) m.row(t) = -m.row(t);
    } else if (u > t) {
      const double b = std::sqrt(1.0 - a * a);
      Eigen::RowVectorXd rt = m.row(t);
      m.row(t) = a * rt + b * m.row(u);
      m.row(u) = b * rt - a * m.row(u);
    }
  }
}

Eigen::MatrixXd SnIrrep::adjacent_matrix(int k) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim_, dim_);
  apply_adjacent_left(k, m);
  return m;
}

Eigen::MatrixXd SnIrrep::matrix(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != m_)
    throw std::invalid_argument("size mismatch");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim_, dim_);
  for (int k : adjacent_swap_word(perm)) apply_adjacent_left(k, m);
  return m;
}

double SnIrrep::character(const std::vector<int>& perm) const {
  return matrix(perm).trace();
}

double SnIrrep::transposition_character() const {
  if (m_ < 2) throw std::invalid_argument("degree must be at least 2");
  double tr = 0.0;
  const auto& gen = generators_[0];
  for (int t = 0; t < dim_; ++t)
    if (gen.partner[static_cast<std::size_t>(t)] == t)
      tr += gen.value[static_cast<std::size_t>(t)];
  return tr;
}

std::vector<int> adjacent_swap_word(std::vector<int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("perm is not a permutation of 0..n-1");
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j = 0; j + 1 < n; ++j) {
      if (perm[static_cast<std::size_t>(j)] > perm[static_cast<std::size_t>(j + 1)]) {
        std::swap(perm[static_cast<std::size_t>(j)],
                  perm[static_cast<std::size_t>(j + 1)]);
        word.push_back(j);
        moved = true;
      }
    }
  }
  return word;
}

double character_ratio(const Partition& shape) {
  if (shape.size() < 2)
    throw std::invalid_argument("shape size must be at least 2");
  SnIrrep rho(shape);
  return rho.transposition_character() / rho.dim();
}

}  // namespace bngap
