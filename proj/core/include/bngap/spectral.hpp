#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "bngap/bn_rep.hpp"
#include "bngap/group_ring.hpp"
#include "bngap/partition.hpp"

namespace bngap {

/// Square matrix kept symmetric by construction: small roundoff skew is
/// averaged away, structural asymmetry is rejected.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Eigen::MatrixXd m);

  int order() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

struct GapValue {
  double psi = 0.0;
  int multiplicity = 0;  // eigenvalues within 1e-9 relative of psi
  std::optional<Eigen::VectorXd> minimiser;
};

struct LabelledGap {
  Bipartition label;
  GapValue value;
};

/// Per-label spectral gaps plus the argmin summary; ties go to the first
/// label in table order.
struct GapScan {
  std::vector<LabelledGap> table;
  double psi = 0.0;
  Bipartition argmin;
  double seconds = 0.0;
};

/// Matrix of sum_s w_s (1 - rho(s)). Requires the symmetric flag on w and
/// refuses representations of dimension above 5000.
SymmetricMatrix laplacian(const BnRep& rep, const GroupRingElement& w);

/// Smallest eigenvalue by cyclic Jacobi sweeps. Convergence: off-diagonal
/// Frobenius norm below tol = 1e-12 * (1 + Frobenius norm); entries under
/// tol / (2 order) are flushed to zero so clustered eigenvalues cannot
/// stall the tail. Throws after 100 sweeps without convergence.
/// Deterministic and single threaded.
GapValue min_eigenvalue(const SymmetricMatrix& m);

/// Full spectrum, ascending, from the same Jacobi core.
std::vector<double> jacobi_spectrum(const SymmetricMatrix& m);

/// Gap of the label's Laplacian; rejects the trivial label. Always takes
/// the dense route, whatever the weight support.
GapValue psi_irrep(const GroupRingElement& w, const Bipartition& label);

/// Scan of every nontrivial label in catalogue order; guarded to n <= 6.
GapScan psi_global(const GroupRingElement& w, int jobs = 1);

/// Scan of the n+1 gap-family labels. Diagonal-supported weights take the
/// parity-transform route on the subset labels; anything else is dense.
GapScan psi_family(const GroupRingElement& w, int jobs = 1);

/// Scan of the two pn component labels.
GapScan psi_pn(const GroupRingElement& w);

/// Coefficients of a diagonal-supported element in the parity basis:
/// values[S] = sum_D a_D (-1)^{|S cut D|}.
struct FourierTable {
  int n = 1;
  std::vector<double> values;
};
FourierTable fourier_transform_diagonal(const GroupRingElement& e);

/// In-place fast parity transform; the length must be a power of two.
void walsh_hadamard_in_place(std::vector<double>& a);

/// Matrix-free gap of a diagonal-supported weight on ([n-i], [i]): the
/// Laplacian is diagonal on subset indicators, so psi is the smallest
/// transformed coefficient over the size-i masks. The minimiser is the
/// indicator of the winning mask in ascending-mask basis order.
GapValue diagonal_fourier_psi(const GroupRingElement& w, int i);

/// Reference value straight from the group algebra: the Laplacian on the
/// regular module with its constant-vector kernel shifted away. Guarded to
/// n <= 4.
GapValue cayley_oracle_psi(const GroupRingElement& w);

}  // namespace bngap
