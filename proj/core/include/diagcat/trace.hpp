#pragma once

#include <Eigen/Dense>
#include <vector>

#include "diagcat/algebra.hpp"
#include "diagcat/enumerate.hpp"

namespace diagcat {

// The bending element v = m* u : 0 -> 2 (its diagram coefficient is exactly
// one).
Morphism closure_vector(Kind kind);

// Unnormalized Markov trace: close the strands of a square morphism one
// object at a time with v.  The identity on n objects closes to delta^(2n).
Scalar markov_close(const Morphism& x);

struct GramSymbolic {
  std::vector<Diagram> basis;
  std::vector<std::vector<Scalar>> entries;  // entries[i][j] = tr(basis_j* basis_i)
};

GramSymbolic gram_symbolic(Kind kind, int dom, int cod,
                           int budget_points = kDefaultBudgetPoints);

struct GramNumeric {
  std::vector<Diagram> basis;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd eigenvalues;  // ascending
  double min_eigenvalue;
  double max_eigenvalue;
  int rank;
  bool positive_semidefinite;
};

// Symbolic Gram matrix evaluated at (beta0, omega0) with spectral data.
// Rank counts eigenvalues of magnitude above tol * max(1, |lambda|_max);
// positivity allows eigenvalues down to -tol * max(1, |lambda|_max).
GramNumeric gram_numeric(Kind kind, int dom, int cod, double beta0,
                         double omega0, double tol = 1e-9,
                         int budget_points = kDefaultBudgetPoints);

// Rank of a symmetric matrix by eigenvalue magnitude with the same
// thresholding rule.
int symmetric_rank(const Eigen::MatrixXd& sym, double tol);

}  // namespace diagcat
