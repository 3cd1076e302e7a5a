#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "diagcat/errors.hpp"
#include "diagcat/rational.hpp"

namespace diagcat {

// Direct sum of real matrix blocks.
struct MultiMatrixAlgebra {
  std::vector<int> blocks;  // block sizes n_i, all >= 1

  int dim() const;  // sum of n_i^2
  int block_count() const { return static_cast<int>(blocks.size()); }
  void validate() const;
};

// Element of a multimatrix algebra, one matrix per block.
using BlockElement = std::vector<Eigen::MatrixXd>;

BlockElement block_zero(const MultiMatrixAlgebra& a);
BlockElement block_identity(const MultiMatrixAlgebra& a);
BlockElement block_mul(const BlockElement& x, const BlockElement& y);
BlockElement block_adjoint(const BlockElement& x);

// Faithful positive functional phi(x) = sum_i tr(Q_i x_i) with Q_i positive
// definite.
struct AlgebraState {
  std::vector<Eigen::MatrixXd> q;

  void validate(const MultiMatrixAlgebra& a) const;
};

double state_value(const AlgebraState& s, const BlockElement& x);

// The trace with Q_i = (n_i / dim) * identity; its delta^2 equals dim.
AlgebraState canonical_trace(const MultiMatrixAlgebra& a);

// sigma(x) = Q x Q^-1 blockwise; phi(x y) = phi(y sigma(x)).
BlockElement modular_automorphism(const AlgebraState& s, const BlockElement& x);

// Unital inclusion B in D given by the multiplicity matrix:
// multiplicity[i][j] copies of B block j sit inside D block i, stacked along
// the diagonal in ascending j order.
struct Inclusion {
  MultiMatrixAlgebra b;
  MultiMatrixAlgebra d;
  std::vector<std::vector<int>> multiplicity;

  void validate() const;
};

BlockElement embed_element(const Inclusion& inc, const BlockElement& x);

// Compression of a state on D to the embedded copy of B.
AlgebraState restrict_state(const Inclusion& inc, const AlgebraState& state_d);

// Orthonormal basis of (A, phi): for each block, eigendecompose Q with
// eigenvalues in descending order and take V e_rc V^T / sqrt(lambda_c),
// (r, c) row-major.
std::vector<BlockElement> gns_basis(const MultiMatrixAlgebra& a,
                                    const AlgebraState& s);

Eigen::VectorXd gns_coords(const AlgebraState& s,
                           const std::vector<BlockElement>& basis,
                           const BlockElement& x);

struct DeltaFormResult {
  bool ok;
  double delta2;         // mean of tr(Q_i^-1)
  double block_spread;   // max |tr(Q_i^-1) - delta2|
  double mult_residual;  // max entry of |M M^T - delta2 I|
};

// A state is a delta form when every block satisfies tr(Q_i^-1) = delta^2;
// equivalently the GNS multiplication operator M obeys M M* = delta^2.  Both
// conditions are measured.
DeltaFormResult is_delta_form(const MultiMatrixAlgebra& a,
                              const AlgebraState& s, double tol = 1e-10);

struct BetaOmegaFormResult {
  bool ok;
  double beta2;
  double omega2;
  double delta2;
  DeltaFormResult on_d;
  DeltaFormResult on_b;
  double unit_residual;     // ||(1 - E) U||
  double algebra_residual;  // max entry of |(1 - E) M (E x E)|
};

// (beta, omega) form: the state is a delta form on D, its restriction is a
// beta form on B, and the orthogonal projection E onto the embedded B is
// compatible with unit and multiplication.  omega^2 = delta^2 / beta^2.
BetaOmegaFormResult is_beta_omega_form(const Inclusion& inc,
                                       const AlgebraState& state_d,
                                       double tol = 1e-10);

struct CanonicalRestrictionResult {
  bool restricts_to_canonical;  // exact integer criterion
  Rational index;               // dim D / dim B
};

// Whether the canonical trace of D compresses to the canonical trace of B:
// for every B block j, sum_i mult[i][j] * n_i * dim B == m_j * dim D.
CanonicalRestrictionResult check_canonical_restriction(const Inclusion& inc);

// GNS picture of an inclusion with a state: coordinates of the unit U, the
// multiplication operator M with M(k, i*N + j) = phi(b_k* b_i b_j), and the
// projection E onto the embedded copy of B.
struct OperatorModel {
  Inclusion inclusion;
  AlgebraState state_d;
  AlgebraState state_b;
  std::vector<BlockElement> basis_d;
  std::vector<BlockElement> basis_b;
  int n = 0;  // dim D
  Eigen::MatrixXd m_op;  // n x n^2
  Eigen::VectorXd u_op;  // n
  Eigen::MatrixXd e_op;  // n x n
  double delta2 = 0.0;
  double beta2 = 0.0;
  double omega2 = 0.0;
};

OperatorModel build_operator_model(const Inclusion& inc,
                                   const AlgebraState& state_d);

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace diagcat
