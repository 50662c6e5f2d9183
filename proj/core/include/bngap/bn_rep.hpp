#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <vector>

#include "bngap/partition.hpp"
#include "bngap/signed_permutation.hpp"
#include "bngap/sn_rep.hpp"

namespace bngap {

/// The size-k subsets of {1,...,n} in ascending mask order, with an index
/// lookup. Used as a module basis and as a coset transversal.
struct SubsetBasis {
  int n = 1;
  int k = 0;
  std::vector<std::uint32_t> masks;

  SubsetBasis(int n_, int k_);
  int size() const { return static_cast<int>(masks.size()); }
  int index_of(std::uint32_t mask) const;  // throws if absent
};

/// A concrete unitary representation of the signed permutation group on n
/// points, labelled by the bipartition it realises.
class BnRep {
 public:
  virtual ~BnRep() = default;

  int rank() const { return n_; }
  long dim() const { return dim_; }
  const Bipartition& label() const { return label_; }

  virtual Eigen::MatrixXd evaluate(const SignedPermutation& g) const = 0;
  virtual double character(const SignedPermutation& g) const;

 protected:
  BnRep(int n, long dim, Bipartition label);

  int n_;
  long dim_;
  Bipartition label_;
};

/// Signed action on size-i subsets: writing g = s_A * pi, basis vector e_B
/// maps to (-1)^{|A cut pi(B)|} e_{pi(B)}. Realises ([n-i], [i]).
class VniRep final : public BnRep {
 public:
  VniRep(int n, int i);

  int subset_size() const { return i_; }
  const SubsetBasis& basis() const { return basis_; }

  Eigen::MatrixXd evaluate(const SignedPermutation& g) const override;
  double character(const SignedPermutation& g) const override;

 private:
  int i_;
  SubsetBasis basis_;
};

/// A symmetric-group irreducible made into a representation of the signed
/// group by forgetting signs. Realises (shape, []).
class PullbackRep final : public BnRep {
 public:
  explicit PullbackRep(Partition shape);

  Eigen::MatrixXd evaluate(const SignedPermutation& g) const override;
  double character(const SignedPermutation& g) const override;

 private:
  SnIrrep rho_;
};

/// The general label (first, second) built by induction from the block
/// subgroup B_p x B_q, p = |first|, q = |second|: block one carries first
/// with signs forgotten, block two carries second twisted by the product
/// of its signs. Cosets are indexed by the size-q subsets. Guarded to
/// n <= 8 and dimension <= 5000.
class InducedRep final : public BnRep {
 public:
  explicit InducedRep(Bipartition label);

  Eigen::MatrixXd evaluate(const SignedPermutation& g) const override;
  double character(const SignedPermutation& g) const override;

 private:
  struct CosetAction {
    int target;     // index of the image coset
    double epsilon; // product of block-two signs
    std::vector<int> tau1, tau2;  // relative block permutations, 0-based
  };
  CosetAction coset_action(const SignedPermutation& g, int a) const;

  int p_, q_;
  SnIrrep rho1_, rho2_;
  SubsetBasis cosets_;
  std::vector<SignedPermutation> theta_;      // coset representatives
  std::vector<SignedPermutation> theta_inv_;
};

/// Picks the cheapest faithful model: PullbackRep for ([*], []), VniRep for
/// one-row pairs ([n-i], [i]), InducedRep otherwise.
std::unique_ptr<BnRep> make_rep(const Bipartition& label);

Eigen::MatrixXd vni_matrix(int n, int i, const SignedPermutation& g);

/// Value of the one-dimensional rep ([], [n]): the product of all signs.
int sign_rep_value(const SignedPermutation& g);

double bn_character(const Bipartition& label, const SignedPermutation& g);

enum class Subgroup {
  symmetric,  // unsigned permutations
  diagonal,   // sign flips
};

/// Multiplicity of the trivial representation in the restriction to the
/// chosen subgroup, via averaged characters. Guarded to n <= 6; throws if
/// the average is not close to an integer.
long trivial_multiplicity_on_subgroup(const Bipartition& label, Subgroup sub);

struct ConjugacyClass {
  SignedPermutation representative;
  long long size = 0;
};

/// Conjugacy classes keyed by signed cycle type (cycle lengths split by
/// the product of signs around each cycle). Guarded to n <= 6.
std::vector<ConjugacyClass> conjugacy_classes(int n);

}  // namespace bngap
