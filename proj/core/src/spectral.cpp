#include "bngap/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace bngap {

SymmetricMatrix::SymmetricMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw std::invalid_argument("matrix must be square");
  const double scale = 1.0 + m_.norm();
  if ((m_ - m_.transpose()).norm() > 1e-9 * scale)
    throw std::invalid_argument("matrix must be symmetric");
  Eigen::MatrixXd sym = 0.5 * (m_ + m_.transpose());
  m_ = std::move(sym);
}

SymmetricMatrix laplacian(const BnRep& rep, const GroupRingElement& w) {
  if (rep.rank() != w.n()) throw std::invalid_argument("size mismatch");
  if (!w.symmetric_checked())
    throw std::invalid_argument("weight element must be symmetric");
  if (rep.dim() > 5000)
    throw std::invalid_argument("representation dimension exceeds 5000");
  const int d = static_cast<int>(rep.dim());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  double total = 0.0;
  for (const auto& [g, wg] : w.terms()) {
    if (g.is_identity()) continue;
    total += wg;
    m -= wg * rep.evaluate(g);
  }
  m += total * Eigen::MatrixXd::Identity(d, d);
  return SymmetricMatrix(std::move(m));
}

namespace {

double offdiagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  const int d = static_cast<int>(a.rows());
  for (int p = 0; p < d; ++p)
    for (int q = p + 1; q < d; ++q) s += a(p, q) * a(p, q);
  return std::sqrt(2.0 * s);
}

// One full cyclic sweep of Jacobi rotations over the upper triangle.
// Entries below the drop threshold are flushed to zero instead of rotated:
// with clustered eigenvalues the diagonal gap vanishes and the rotation
// degenerates to 45 degrees, which shuffles roundoff-scale mass between
// entries forever instead of removing it. Flushing everything below
// tol / (2 d) perturbs the spectrum by less than tol / 2.
void jacobi_sweep(Eigen::MatrixXd& a, Eigen::MatrixXd* vecs, double drop) {
  const int d = static_cast<int>(a.rows());
  for (int p = 0; p < d; ++p) {
    for (int q = p + 1; q < d; ++q) {
      const double apq = a(p, q);
      if (apq == 0.0) continue;
      if (std::abs(apq) < drop) {
        a(p, q) = a(q, p) = 0.0;
        continue;
      }
      const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
      const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      const double app = a(p, p), aqq = a(q, q);
      a(p, p) = app - t * apq;
      a(q, q) = aqq + t * apq;
      a(p, q) = a(q, p) = 0.0;
      for (int r = 0; r < d; ++r) {
        if (r == p || r == q) continue;
        const double arp = a(r, p), arq = a(r, q);
        a(r, p) = a(p, r) = c * arp - s * arq;
        a(r, q) = a(q, r) = s * arp + c * arq;
      }
      if (vecs) {
        for (int r = 0; r < d; ++r) {
          const double vrp = (*vecs)(r, p), vrq = (*vecs)(r, q);
          (*vecs)(r, p) = c * vrp - s * vrq;
          (*vecs)(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
}

void jacobi_diagonalize(Eigen::MatrixXd& a, Eigen::MatrixXd* vecs) {
  const double tol = 1e-12 * (1.0 + a.norm());
  const double drop = tol / (2.0 * static_cast<double>(a.rows()));
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiagonal_norm(a) < tol) return;
    jacobi_sweep(a, vecs, drop);
  }
  if (offdiagonal_norm(a) >= tol)
    throw std::runtime_error("eigensolver failed to converge in 100 sweeps");
}

template <typename Fn>
void parallel_map(int count, int jobs, Fn&& fn) {
  jobs = std::min(jobs, count);
  if (jobs < 1) jobs = 1;
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex err_mutex;
  std::exception_ptr err;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!err) err = std::current_exception();
          next.store(count);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

GapScan scan_labels(std::vector<Bipartition> labels, int jobs,
                    const std::function<GapValue(const Bipartition&)>& eval) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<GapValue> values(labels.size());
  parallel_map(static_cast<int>(labels.size()), jobs,
               [&](int i) { values[static_cast<std::size_t>(i)] = eval(labels[static_cast<std::size_t>(i)]); });
  GapScan scan;
  scan.table.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    scan.table.push_back(LabelledGap{labels[i], std::move(values[i])});
  if (scan.table.empty()) throw std::invalid_argument("no labels to scan");
  std::size_t best = 0;
  for (std::size_t i = 1; i < scan.table.size(); ++i)
    if (scan.table[i].value.psi < scan.table[best].value.psi) best = i;
  scan.psi = scan.table[best].value.psi;
  scan.argmin = scan.table[best].label;
  scan.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return scan;
}

}  // namespace

GapValue min_eigenvalue(const SymmetricMatrix& m) {
  Eigen::MatrixXd a = m.matrix();
  Eigen::MatrixXd vecs = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  jacobi_diagonalize(a, &vecs);
  const int d = static_cast<int>(a.rows());
  int best = 0;
  for (int i = 1; i < d; ++i)
    if (a(i, i) < a(best, best)) best = i;
  GapValue out;
  out.psi = a(best, best);
  const double tol = 1e-9 * (1.0 + std::abs(out.psi));
  for (int i = 0; i < d; ++i)
    if (std::abs(a(i, i) - out.psi) <= tol) ++out.multiplicity;
  out.minimiser = vecs.col(best);
  return out;
}

std::vector<double> jacobi_spectrum(const SymmetricMatrix& m) {
  Eigen::MatrixXd a = m.matrix();
  jacobi_diagonalize(a, nullptr);
  std::vector<double> eig(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    eig[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

GapValue psi_irrep(const GroupRingElement& w, const Bipartition& label) {
  if (is_trivial(label))
    throw std::invalid_argument("psi undefined on trivial irrep");
  if (label.n() != w.n()) throw std::invalid_argument("size mismatch");
  const auto rep = make_rep(label);
  return min_eigenvalue(laplacian(*rep, w));
}

GapScan psi_global(const GroupRingElement& w, int jobs) {
  if (w.n() > 6)
    throw std::invalid_argument("full catalogue limited to n <= 6");
  std::vector<Bipartition> labels;
  for (Bipartition& label : enumerate_bipartitions(w.n()))
    if (!is_trivial(label)) labels.push_back(std::move(label));
  return scan_labels(std::move(labels), jobs,
                     [&](const Bipartition& l) { return psi_irrep(w, l); });
}

GapScan psi_family(const GroupRingElement& w, int jobs) {
  const bool fast = w.diagonal_supported();
  return scan_labels(gap_family(w.n()), jobs, [&](const Bipartition& l) {
    if (fast && !l.second.empty() && l.first.parts.size() <= 1 &&
        l.second.parts.size() == 1)
      return diagonal_fourier_psi(w, l.second.parts[0]);
    return psi_irrep(w, l);
  });
}

GapScan psi_pn(const GroupRingElement& w) {
  return scan_labels(pn_components(w.n()), 1,
                     [&](const Bipartition& l) { return psi_irrep(w, l); });
}

void walsh_hadamard_in_place(std::vector<double>& a) {
  const std::size_t size = a.size();
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::invalid_argument("length must be a power of two");
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += half << 1) {
      for (std::size_t j = block; j < block + half; ++j) {
        const double x = a[j], y = a[j + half];
        a[j] = x + y;
        a[j + half] = x - y;
      }
    }
  }
}

FourierTable fourier_transform_diagonal(const GroupRingElement& e) {
  if (!e.diagonal_supported())
    throw std::invalid_argument("element support must be diagonal");
  const int n = e.n();
  FourierTable table;
  table.n = n;
  table.values.assign(std::size_t{1} << n, 0.0);
  for (const auto& [g, w] : e.terms())
    table.values[signs_mask(g)] += w;
  walsh_hadamard_in_place(table.values);
  return table;
}

GapValue diagonal_fourier_psi(const GroupRingElement& w, int i) {
  const int n = w.n();
  if (i < 1 || i > n) throw std::invalid_argument("subset size out of range");
  if (!w.symmetric_checked())
    throw std::invalid_argument("weight element must be symmetric");
  const FourierTable table = fourier_transform_diagonal(laplacian_element(w));
  const std::vector<std::uint32_t> masks = masks_of_size(n, i);
  std::size_t best = 0;
  for (std::size_t j = 1; j < masks.size(); ++j)
    if (table.values[masks[j]] < table.values[masks[best]]) best = j;
  GapValue out;
  out.psi = table.values[masks[best]];
  const double tol = 1e-9 * (1.0 + std::abs(out.psi));
  for (std::uint32_t mask : masks)
    if (std::abs(table.values[mask] - out.psi) <= tol) ++out.multiplicity;
  Eigen::VectorXd indicator =
      Eigen::VectorXd::Zero(static_cast<Eigen::Index>(masks.size()));
  indicator(static_cast<Eigen::Index>(best)) = 1.0;
  out.minimiser = std::move(indicator);
  return out;
}

GapValue cayley_oracle_psi(const GroupRingElement& w) {
  const int n = w.n();
  if (n > 4) throw std::invalid_argument("oracle limited to n <= 4");
  if (!w.symmetric_checked())
    throw std::invalid_argument("weight element must be symmetric");
  const std::vector<SignedPermutation> elements = enumerate_group(n);
  std::map<SignedPermutation, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index.emplace(elements[i], static_cast<int>(i));
  const int order = static_cast<int>(elements.size());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(order, order);
  double total = 0.0;
  for (const auto& [s, ws] : w.terms()) {
    if (s.is_identity()) continue;
    total += ws;
    for (int j = 0; j < order; ++j) {
      const int im = index.at(compose(s, elements[static_cast<std::size_t>(j)]));
      lap(im, j) -= ws;
    }
  }
  lap.diagonal().array() += total;
  // push the constant-vector kernel above the rest of the spectrum
  const double shift = 1.0 + 2.0 * total;
  lap.array() += shift / static_cast<double>(order);
  return min_eigenvalue(SymmetricMatrix(std::move(lap)));
}

}  // namespace bngap
