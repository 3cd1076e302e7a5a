#include "diagcat/trace.hpp"

#include <cmath>

namespace diagcat {

Morphism closure_vector(Kind kind) {
  const GeneratorSet gens = GeneratorSet::build(kind, 2);
  return gens.m().adjoint().compose(gens.u());
}

Scalar markov_close(const Morphism& x) {
  if (x.dom() != x.cod()) {
    throw SignatureMismatch("Markov closure needs a square signature");
  }
  const Kind kind = x.kind();
  const Morphism v = closure_vector(kind);
  const Morphism vst = v.adjoint();
  const Morphism one = Morphism::identity(kind, 1);
  Morphism cur = x;
  for (int j = x.dom(); j >= 1; --j) {
    const Morphism left = Morphism::identity(kind, j - 1).tensor(vst);
    const Morphism right = Morphism::identity(kind, j - 1).tensor(v);
    cur = left.compose(cur.tensor(one)).compose(right);
  }
  return cur.scalar_part();
}

GramSymbolic gram_symbolic(Kind kind, int dom, int cod, int budget_points) {
  GramSymbolic out;
  out.basis = enumerate_diagrams(kind, dom, cod, budget_points);
  const std::size_t n = out.basis.size();
  std::vector<Morphism> adjoints;
  adjoints.reserve(n);
  for (const auto& d : out.basis) adjoints.push_back(Morphism::of(d).adjoint());
  out.entries.assign(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Morphism mi = Morphism::of(out.basis[i]);
    for (std::size_t j = 0; j < n; ++j) {
      out.entries[i][j] = markov_close(adjoints[j].compose(mi));
    }
  }
  return out;
}

int symmetric_rank(const Eigen::MatrixXd& sym, double tol) {
  if (sym.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  const Eigen::VectorXd vals = es.eigenvalues();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  int rank = 0;
  for (int i = 0; i < vals.size(); ++i) {
    if (std::abs(vals[i]) > tol * scale) ++rank;
  }
  return rank;
}

GramNumeric gram_numeric(Kind kind, int dom, int cod, double beta0,
                         double omega0, double tol, int budget_points) {
  const GramSymbolic sym = gram_symbolic(kind, dom, cod, budget_points);
  GramNumeric out;
  out.basis = sym.basis;
  const int n = static_cast<int>(sym.basis.size());
  out.matrix.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.matrix(i, j) = sym.entries[i][j].eval(beta0, omega0);
    }
  }
  if (n == 0) {
    out.eigenvalues.resize(0);
    out.min_eigenvalue = 0.0;
    out.max_eigenvalue = 0.0;
    out.rank = 0;
    out.positive_semidefinite = true;
    return out;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.matrix);
  out.eigenvalues = es.eigenvalues();
  out.min_eigenvalue = out.eigenvalues.minCoeff();
  out.max_eigenvalue = out.eigenvalues.maxCoeff();
  const double scale = std::max(1.0, out.eigenvalues.cwiseAbs().maxCoeff());
  out.rank = 0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(out.eigenvalues[i]) > tol * scale) ++out.rank;
  }
  out.positive_semidefinite = out.min_eigenvalue >= -tol * scale;
  return out;
}

}  // namespace diagcat
