#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "bngap/group_ring.hpp"
#include "bngap/partition.hpp"
#include "bngap/rng.hpp"
#include "bngap/spectral.hpp"
#include "bngap/subset_mask.hpp"

using namespace bngap;

namespace {

Eigen::MatrixXd random_symmetric(int dim, SplitMix64& rng) {
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      const double x = rng.uniform01() - 0.5;
      m(i, j) = x;
      m(j, i) = x;
    }
  return m;
}

GroupRingElement random_weights(int n, SplitMix64& rng, bool with_flips) {
  std::map<std::pair<int, int>, double> tw;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) tw[{i, j}] = rng.uniform01();
  std::map<SubsetMask, double> dw;
  if (with_flips) {
    const std::uint32_t lim = std::uint32_t{1} << n;
    for (std::uint32_t mask = 1; mask < lim; ++mask)
      dw[SubsetMask(n, mask)] = rng.uniform01();
  }
  return build_weight_element(n, tw, dw);
}

GroupRingElement random_diagonal_weights(int n, SplitMix64& rng) {
  std::map<SubsetMask, double> dw;
  const std::uint32_t lim = std::uint32_t{1} << n;
  for (std::uint32_t mask = 1; mask < lim; ++mask)
    dw[SubsetMask(n, mask)] = rng.uniform01();
  return build_weight_element(n, {}, dw);
}

}  // namespace

TEST_CASE("symmetric matrix wrapper") {
  CHECK_THROWS_WITH(SymmetricMatrix(Eigen::MatrixXd::Zero(2, 3)),
                    "matrix must be square");

  Eigen::MatrixXd skew(2, 2);
  skew << 0, 1, -1, 0;
  CHECK_THROWS_WITH(SymmetricMatrix{skew}, "matrix must be symmetric");

  // roundoff level drift is averaged away
  Eigen::MatrixXd drift(2, 2);
  drift << 1.0, 0.5 + 1e-13, 0.5 - 1e-13, 1.0;
  const SymmetricMatrix sym(drift);
  CHECK(sym.matrix()(0, 1) == sym.matrix()(1, 0));
  CHECK(sym.matrix()(0, 1) == doctest::Approx(0.5));
}

TEST_CASE("jacobi spectra match sturm bisection") {
  SplitMix64 rng(0x7a0bULL);
  for (int dim : {1, 2, 5, 12, 33, 60}) {
    const auto m = random_symmetric(dim, rng);
    const SymmetricMatrix sym(m);
    const auto jacobi = jacobi_spectrum(sym);
    const auto sturm = oracle::sturm_bisection_eigenvalues(m);
    REQUIRE(jacobi.size() == static_cast<std::size_t>(dim));
    REQUIRE(sturm.size() == static_cast<std::size_t>(dim));
    double scale = 1.0;
    for (const double v : sturm) scale = std::max(scale, std::abs(v));
    for (int i = 0; i < dim; ++i)
      CHECK(jacobi[static_cast<std::size_t>(i)] ==
            doctest::Approx(sturm[static_cast<std::size_t>(i)])
                .epsilon(1e-8 * scale));

    const auto bottom = min_eigenvalue(sym);
    CHECK(bottom.psi == doctest::Approx(jacobi.front()));
    REQUIRE(bottom.minimiser.has_value());
    const auto& v = *bottom.minimiser;
    CHECK((m * v - bottom.psi * v).norm() <=
          1e-7 * (1.0 + std::abs(bottom.psi)) * v.norm());
  }
}

TEST_CASE("eigenvalue multiplicity counting") {
  const SymmetricMatrix id7(Eigen::MatrixXd::Identity(7, 7));
  const auto bottom = min_eigenvalue(id7);
  CHECK(bottom.psi == doctest::Approx(1.0));
  CHECK(bottom.multiplicity == 7);

  Eigen::VectorXd d(3);
  d << 1.0, 1.0, 2.0;
  const auto two = min_eigenvalue(SymmetricMatrix(d.asDiagonal()));
  CHECK(two.psi == doctest::Approx(1.0));
  CHECK(two.multiplicity == 2);

  Eigen::MatrixXd one(1, 1);
  one << 5.0;
  const auto single = min_eigenvalue(SymmetricMatrix(one));
  CHECK(single.psi == doctest::Approx(5.0));
  CHECK(single.multiplicity == 1);
}

TEST_CASE("hand checked rank two example") {
  // one transposition plus one flip: the subset action Laplacian is
  // [[3, -1], [-1, 1]] with eigenvalues 2 +- sqrt(2)
  const auto w = build_weight_element(2, {{{1, 2}, 1.0}},
                                      {{SubsetMask(2, 0b01u), 1.0}});
  const double expected = 2.0 - std::sqrt(2.0);

  const auto direct = psi_irrep(w, Bipartition{Partition({1}), Partition({1})});
  CHECK(direct.psi == doctest::Approx(expected).epsilon(1e-12));

  const auto scan = psi_global(w);
  CHECK(scan.psi == doctest::Approx(expected).epsilon(1e-12));
  CHECK(scan.argmin == Bipartition{Partition({1}), Partition({1})});
  CHECK(scan.table.size() == 4);  // five labels minus the trivial one

  const auto regular = cayley_oracle_psi(w);
  CHECK(regular.psi == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("laplacians are positive semidefinite") {
  SplitMix64 rng(0x91ULL);
  const auto w = random_weights(4, rng, true);
  for (const auto& label : enumerate_bipartitions(4)) {
    if (is_trivial(label)) continue;
    const auto rep = make_rep(label);
    const auto spectrum = jacobi_spectrum(laplacian(*rep, w));
    CHECK(spectrum.front() >= -1e-9);
  }
}

TEST_CASE("laplacian input validation") {
  GroupRingElement lop(3);
  lop.add_term(SignedPermutation::from_parts({1, 2, 0}, {1, 1, 1}), 1.0);
  const VniRep rep(3, 1);
  CHECK_THROWS_WITH(laplacian(rep, lop), "weight element must be symmetric");

  const auto w = build_weight_element(3, {{{1, 2}, 1.0}}, {});
  CHECK_THROWS_WITH(psi_irrep(w, Bipartition{Partition({3}), Partition()}),
                    "psi undefined on trivial irrep");
  CHECK_THROWS_WITH(psi_irrep(w, Bipartition{Partition({3}), Partition({1})}),
                    "size mismatch");
}

TEST_CASE("zero weights tie every label at zero, first label wins") {
  const GroupRingElement none = build_weight_element(3, {}, {});
  const auto scan = psi_global(none);
  CHECK(scan.psi == 0.0);
  CHECK(scan.argmin == Bipartition{Partition({2, 1}), Partition()});
  for (const auto& row : scan.table) CHECK(row.value.psi == 0.0);
}

TEST_CASE("regular module oracle tracks the catalogue scan") {
  SplitMix64 rng(0xc4feULL);
  for (int trial = 0; trial < 5; ++trial) {
    const auto w = random_weights(3, rng, true);
    const auto scanned = psi_global(w).psi;
    const auto regular = cayley_oracle_psi(w).psi;
    CHECK(regular == doctest::Approx(scanned).epsilon(1e-8));
  }
}

TEST_CASE("family scan restricts the catalogue scan") {
  SplitMix64 rng(0x5115ULL);
  const auto w = random_weights(4, rng, true);
  const auto full = psi_global(w);
  const auto family = psi_family(w);
  CHECK(family.table.size() == 5);
  for (const auto& row : family.table) {
    bool found = false;
    for (const auto& ref : full.table)
      if (ref.label == row.label) {
        found = true;
        CHECK(row.value.psi == doctest::Approx(ref.value.psi).epsilon(1e-12));
      }
    CHECK(found);
  }

  const auto pn = psi_pn(w);
  CHECK(pn.table.size() == 2);
  CHECK(pn.table[0].label == Bipartition{Partition({3, 1}), Partition()});
  CHECK(pn.table[1].label == Bipartition{Partition({3}), Partition({1})});
}

TEST_CASE("parallel scans reproduce the serial tables exactly") {
  SplitMix64 rng(0xbeadULL);
  const auto w = random_weights(4, rng, true);
  const auto serial = psi_global(w, 1);
  const auto parallel = psi_global(w, 4);
  REQUIRE(serial.table.size() == parallel.table.size());
  for (std::size_t i = 0; i < serial.table.size(); ++i) {
    CHECK(serial.table[i].label == parallel.table[i].label);
    CHECK(serial.table[i].value.psi == parallel.table[i].value.psi);
  }
  CHECK(serial.psi == parallel.psi);
  CHECK(serial.argmin == parallel.argmin);
}

TEST_CASE("fast parity transform equals the quartic one") {
  SplitMix64 rng(0xf00dULL);
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> coeff(std::size_t{1} << n);
    for (auto& c : coeff) c = rng.uniform01() - 0.5;
    const auto slow = oracle::naive_parity_transform(coeff);
    auto fast = coeff;
    walsh_hadamard_in_place(fast);
    for (std::size_t s = 0; s < coeff.size(); ++s)
      CHECK(fast[s] == doctest::Approx(slow[s]).epsilon(1e-12));
  }
  std::vector<double> odd(3, 1.0);
  CHECK_THROWS_WITH(walsh_hadamard_in_place(odd),
                    "length must be a power of two");
}

TEST_CASE("parity coefficients of simple elements") {
  GroupRingElement id(3);
  id.add_term(SignedPermutation::identity(3), 1.0);
  const auto flat = fourier_transform_diagonal(id);
  for (const double v : flat.values) CHECK(v == doctest::Approx(1.0));

  GroupRingElement flip(3);
  flip.add_term(make_diagonal(SubsetMask(3, 0b011u)), 1.0);
  const auto signs = fourier_transform_diagonal(flip);
  for (std::uint32_t s = 0; s < 8; ++s) {
    const int parity = std::popcount(s & 0b011u) & 1;
    CHECK(signs.values[s] == doctest::Approx(parity ? -1.0 : 1.0));
  }

  GroupRingElement mixed(3);
  mixed.add_term(make_transposition(3, 1, 2), 1.0);
  CHECK_THROWS_WITH(fourier_transform_diagonal(mixed),
                    "element support must be diagonal");
}

TEST_CASE("matrix free gap equals the dense gap on flip only weights") {
  SplitMix64 rng(0xd1a6ULL);
  for (int n : {4, 5}) {
    const auto w = random_diagonal_weights(n, rng);
    for (int i = 1; i <= n; ++i) {
      const Bipartition label{i == n ? Partition() : Partition({n - i}),
                              Partition({i})};
      const auto fast = diagonal_fourier_psi(w, i);
      const auto dense = psi_irrep(w, label);
      CHECK(fast.psi ==
            doctest::Approx(dense.psi).epsilon(1e-9 * (1.0 + dense.psi)));
      REQUIRE(fast.minimiser.has_value());
      int ones = 0;
      for (int t = 0; t < fast.minimiser->size(); ++t) {
        const double entry = (*fast.minimiser)(t);
        CHECK((entry == 0.0 || entry == 1.0));
        ones += entry == 1.0;
      }
      CHECK(ones == 1);
    }
  }
}

TEST_CASE("scaled singleton flips give the closed form gap") {
  const int n = 4;
  std::map<SubsetMask, double> dw;
  for (int j = 1; j <= n; ++j)
    dw[SubsetMask(n, std::uint32_t{1} << (j - 1))] = static_cast<double>(n);
  const auto w = build_weight_element(n, {}, dw);
  for (int i = 1; i <= n; ++i) {
    CHECK(diagonal_fourier_psi(w, i).psi ==
          doctest::Approx(2.0 * n * i).epsilon(1e-12));
    const Bipartition label{i == n ? Partition() : Partition({n - i}),
                            Partition({i})};
    CHECK(psi_irrep(w, label).psi ==
          doctest::Approx(2.0 * n * i).epsilon(1e-9));
  }
}

TEST_CASE("spectral guards") {
  const auto w7 = build_weight_element(7, {{{1, 2}, 1.0}}, {});
  CHECK_THROWS_WITH(psi_global(w7), "full catalogue limited to n <= 6");

  const auto w5 = build_weight_element(5, {{{1, 2}, 1.0}}, {});
  CHECK_THROWS_WITH(cayley_oracle_psi(w5), "oracle limited to n <= 4");

  const auto w3 = build_weight_element(3, {{{1, 2}, 1.0}}, {});
  CHECK_THROWS_WITH(diagonal_fourier_psi(w3, 0), "subset size out of range");
  CHECK_THROWS_WITH(diagonal_fourier_psi(w3, 4), "subset size out of range");
}
