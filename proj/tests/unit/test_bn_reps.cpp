#include <memory>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "bngap/bn_rep.hpp"
#include "bngap/partition.hpp"
#include "bngap/rng.hpp"
#include "bngap/signed_permutation.hpp"

using namespace bngap;

namespace {

SignedPermutation random_element(int n, SplitMix64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  std::vector<std::int8_t> signs(n);
  for (int i = 0; i < n; ++i) signs[i] = (rng.next() & 1) ? 1 : -1;
  return SignedPermutation::from_parts(perm, signs);
}

bool second_is_single_row(const Bipartition& label) {
  return label.second.parts.size() == 1;
}

bool subset_shaped(const Bipartition& label) {
  return label.first.parts.size() <= 1 &&
         (label.second.empty() || second_is_single_row(label));
}

}  // namespace

TEST_CASE("subset basis lookup") {
  const SubsetBasis basis(5, 2);
  CHECK(basis.size() == 10);
  for (int a = 0; a < basis.size(); ++a)
    CHECK(basis.index_of(basis.masks[static_cast<std::size_t>(a)]) == a);
  CHECK_THROWS_WITH(basis.index_of(0b00111u), "mask is not a basis element");
}

TEST_CASE("signed subset action at rank two") {
  const VniRep rep(2, 1);
  CHECK(rep.dim() == 2);
  CHECK(rep.label() == Bipartition{Partition({1}), Partition({1})});

  const auto swap = rep.evaluate(make_transposition(2, 1, 2));
  CHECK(swap(0, 0) == doctest::Approx(0.0));
  CHECK(swap(0, 1) == doctest::Approx(1.0));
  CHECK(swap(1, 0) == doctest::Approx(1.0));
  CHECK(swap(1, 1) == doctest::Approx(0.0));

  const auto flip1 = rep.evaluate(make_diagonal(SubsetMask(2, 0b01u)));
  CHECK(flip1(0, 0) == doctest::Approx(-1.0));
  CHECK(flip1(1, 1) == doctest::Approx(1.0));
  CHECK(flip1(0, 1) == doctest::Approx(0.0));
}

TEST_CASE("signed subset action is a homomorphism, n = 3 exhaustive") {
  const auto all = enumerate_group(3);
  for (int i = 1; i <= 3; ++i) {
    const VniRep rep(3, i);
    // cache the images once, then check every product
    std::vector<Eigen::MatrixXd> images;
    images.reserve(all.size());
    for (const auto& g : all) images.push_back(rep.evaluate(g));
    for (std::size_t a = 0; a < all.size(); ++a) {
      CHECK((rep.evaluate(inverse(all[a])) - images[a].transpose()).norm() ==
            doctest::Approx(0.0));
      for (std::size_t b = 0; b < all.size(); ++b) {
        const auto prod = rep.evaluate(compose(all[a], all[b]));
        CHECK((prod - images[a] * images[b]).norm() == doctest::Approx(0.0));
      }
    }
  }
}

TEST_CASE("free function and member agree; sign rep is the full flip character") {
  SplitMix64 rng(0x11ULL);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_element(4, rng);
    CHECK((vni_matrix(4, 2, g) - VniRep(4, 2).evaluate(g)).norm() ==
          doctest::Approx(0.0));
    int parity = 1;
    for (const auto s : g.signs) parity *= s;
    CHECK(sign_rep_value(g) == parity);
    CHECK(VniRep(4, 4).evaluate(g)(0, 0) == doctest::Approx(parity));
  }
}

TEST_CASE("pullback forgets signs") {
  const PullbackRep rep(Partition({2, 1}));
  CHECK(rep.label() == Bipartition{Partition({2, 1}), Partition()});
  CHECK(rep.dim() == 2);
  SplitMix64 rng(0x22ULL);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_element(3, rng);
    const auto parts = factor_semidirect(g);
    CHECK((rep.evaluate(g) - rep.evaluate(parts.permutation)).norm() ==
          doctest::Approx(0.0));
  }
}

TEST_CASE("induced model agrees with the subset action on characters") {
  for (int n = 3; n <= 5; ++n) {
    const auto classes = conjugacy_classes(n);
    for (int i = 1; i <= n; ++i) {
      const VniRep direct(n, i);
      const InducedRep induced(direct.label());
      CHECK(induced.dim() == direct.dim());
      for (const auto& cls : classes)
        CHECK(induced.character(cls.representative) ==
              doctest::Approx(direct.character(cls.representative))
                  .epsilon(1e-10));
    }
  }
}

TEST_CASE("induced model is a homomorphism on a two row label") {
  const InducedRep rep(Bipartition{Partition({2, 1}), Partition({1})});
  CHECK(rep.dim() == 8);
  SplitMix64 rng(0x33ULL);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_element(4, rng);
    const auto h = random_element(4, rng);
    const auto mg = rep.evaluate(g);
    const auto mh = rep.evaluate(h);
    CHECK((rep.evaluate(compose(g, h)) - mg * mh).norm() ==
          doctest::Approx(0.0).epsilon(1e-10));
    CHECK((mg.transpose() * mg - Eigen::MatrixXd::Identity(8, 8)).norm() ==
          doctest::Approx(0.0).epsilon(1e-10));
  }
}

TEST_CASE("model dispatch picks the cheap realisations") {
  const auto pullback = make_rep(Bipartition{Partition({2, 2}), Partition()});
  CHECK(dynamic_cast<const PullbackRep*>(pullback.get()) != nullptr);

  const auto subset = make_rep(Bipartition{Partition({3}), Partition({1})});
  CHECK(dynamic_cast<const VniRep*>(subset.get()) != nullptr);

  const auto general = make_rep(Bipartition{Partition({1, 1}), Partition({1})});
  CHECK(dynamic_cast<const InducedRep*>(general.get()) != nullptr);

  const auto twisted = make_rep(Bipartition{Partition(), Partition({2, 1})});
  CHECK(dynamic_cast<const InducedRep*>(twisted.get()) != nullptr);
  CHECK(twisted->dim() == 2);
}

TEST_CASE("characters satisfy the orthogonality relations") {
  for (int n = 3; n <= 4; ++n) {
    const auto labels = enumerate_bipartitions(n);
    const auto classes = conjugacy_classes(n);
    CHECK(classes.size() == labels.size());

    long long covered = 0;
    for (const auto& cls : classes) covered += cls.size;
    CHECK(covered == group_order(n));

    // character table rows
    std::vector<std::vector<double>> chi(labels.size());
    for (std::size_t a = 0; a < labels.size(); ++a) {
      chi[a].reserve(classes.size());
      for (const auto& cls : classes)
        chi[a].push_back(bn_character(labels[a], cls.representative));
    }

    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a; b < labels.size(); ++b) {
        double inner = 0.0;
        for (std::size_t c = 0; c < classes.size(); ++c)
          inner += static_cast<double>(classes[c].size) * chi[a][c] * chi[b][c];
        inner /= static_cast<double>(group_order(n));
        CHECK(inner == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-9));
      }
  }
}

TEST_CASE("class counts match the catalogue for every enumerable rank") {
  const std::size_t expected[] = {0, 2, 5, 10, 20, 36};
  for (int n = 1; n <= 5; ++n)
    CHECK(conjugacy_classes(n).size() == expected[n]);
}

TEST_CASE("trivial multiplicities in the two restrictions") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& label : enumerate_bipartitions(n)) {
      const long on_sym =
          trivial_multiplicity_on_subgroup(label, Subgroup::symmetric);
      const long on_diag =
          trivial_multiplicity_on_subgroup(label, Subgroup::diagonal);
      CHECK(on_sym == (subset_shaped(label) ? 1 : 0));
      CHECK(on_diag ==
            (label.second.empty()
                 ? static_cast<long>(partition_dimension(label.first))
                 : 0));
    }
  }
}

TEST_CASE("representation guards") {
  CHECK_THROWS_WITH(VniRep(3, 4), "subset size out of range");
  CHECK_THROWS_WITH(VniRep(3, 0), "subset size out of range");
  CHECK_THROWS_WITH(InducedRep(Bipartition{Partition({8}), Partition({1})}),
                    "induced model limited to n <= 8");
  CHECK_THROWS_WITH(
      trivial_multiplicity_on_subgroup(
          Bipartition{Partition({6}), Partition({1})}, Subgroup::symmetric),
      "group too large for enumeration");
}
