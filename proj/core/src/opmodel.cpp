#include "diagcat/opmodel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace diagcat {

int MultiMatrixAlgebra::dim() const {
  int total = 0;
  for (int n : blocks) total += n * n;
  return total;
}

void MultiMatrixAlgebra::validate() const {
  if (blocks.empty()) throw Error("algebra needs at least one block");
  for (int n : blocks) {
    if (n < 1) throw Error("block sizes must be positive");
  }
}

BlockElement block_zero(const MultiMatrixAlgebra& a) {
  BlockElement x;
  x.reserve(a.blocks.size());
  for (int n : a.blocks) x.push_back(Eigen::MatrixXd::Zero(n, n));
  return x;
}

BlockElement block_identity(const MultiMatrixAlgebra& a) {
  BlockElement x;
  x.reserve(a.blocks.size());
  for (int n : a.blocks) x.push_back(Eigen::MatrixXd::Identity(n, n));
  return x;
}

BlockElement block_mul(const BlockElement& x, const BlockElement& y) {
  if (x.size() != y.size()) throw Error("block count mismatch");
  BlockElement r;
  r.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r.push_back(x[i] * y[i]);
  return r;
}

BlockElement block_adjoint(const BlockElement& x) {
  BlockElement r;
  r.reserve(x.size());
  for (const auto& b : x) r.push_back(b.transpose());
  return r;
}

void AlgebraState::validate(const MultiMatrixAlgebra& a) const {
  if (static_cast<int>(q.size()) != a.block_count()) {
    throw Error("state has the wrong number of blocks");
  }
  for (int i = 0; i < a.block_count(); ++i) {
    const auto& m = q[i];
    if (m.rows() != a.blocks[i] || m.cols() != a.blocks[i]) {
      throw Error("state block has the wrong shape");
    }
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw Error("state block is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.eigenvalues().minCoeff() <= 0.0) {
      throw Error("state block is not positive definite");
    }
  }
}

double state_value(const AlgebraState& s, const BlockElement& x) {
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    total += (s.q[i] * x[i]).trace();
  }
  return total;
}

AlgebraState canonical_trace(const MultiMatrixAlgebra& a) {
  a.validate();
  const double dim = static_cast<double>(a.dim());
  AlgebraState s;
  for (int n : a.blocks) {
    s.q.push_back((static_cast<double>(n) / dim) *
                  Eigen::MatrixXd::Identity(n, n));
  }
  return s;
}

BlockElement modular_automorphism(const AlgebraState& s,
                                  const BlockElement& x) {
  BlockElement r;
  r.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    r.push_back(s.q[i] * x[i] * s.q[i].inverse());
  }
  return r;
}

void Inclusion::validate() const {
  b.validate();
  d.validate();
  if (static_cast<int>(multiplicity.size()) != d.block_count()) {
    throw Error("multiplicity matrix must have one row per D block");
  }
  for (int i = 0; i < d.block_count(); ++i) {
    if (static_cast<int>(multiplicity[i].size()) != b.block_count()) {
      throw Error("multiplicity matrix must have one column per B block");
    }
    int span = 0;
    for (int j = 0; j < b.block_count(); ++j) {
      if (multiplicity[i][j] < 0) throw Error("negative multiplicity");
      span += multiplicity[i][j] * b.blocks[j];
    }
    if (span != d.blocks[i]) {
      std::ostringstream msg;
      msg << "inclusion is not unital: D block " << i << " has size "
          << d.blocks[i] << " but the embedded copies fill " << span;
      throw Error(msg.str());
    }
  }
}

BlockElement embed_element(const Inclusion& inc, const BlockElement& x) {
  BlockElement out;
  out.reserve(inc.d.block_count());
  for (int i = 0; i < inc.d.block_count(); ++i) {
    Eigen::MatrixXd block =
        Eigen::MatrixXd::Zero(inc.d.blocks[i], inc.d.blocks[i]);
    int off = 0;
    for (int j = 0; j < inc.b.block_count(); ++j) {
      const int mj = inc.b.blocks[j];
      for (int c = 0; c < inc.multiplicity[i][j]; ++c) {
        block.block(off, off, mj, mj) = x[j];
        off += mj;
      }
    }
    out.push_back(std::move(block));
  }
  return out;
}

AlgebraState restrict_state(const Inclusion& inc, const AlgebraState& state_d) {
  AlgebraState out;
  for (int j = 0; j < inc.b.block_count(); ++j) {
    out.q.push_back(Eigen::MatrixXd::Zero(inc.b.blocks[j], inc.b.blocks[j]));
  }
  for (int i = 0; i < inc.d.block_count(); ++i) {
    int off = 0;
    for (int j = 0; j < inc.b.block_count(); ++j) {
      const int mj = inc.b.blocks[j];
      for (int c = 0; c < inc.multiplicity[i][j]; ++c) {
        out.q[j] += state_d.q[i].block(off, off, mj, mj);
        off += mj;
      }
    }
  }
  return out;
}

std::vector<BlockElement> gns_basis(const MultiMatrixAlgebra& a,
                                    const AlgebraState& s) {
  a.validate();
  s.validate(a);
  std::vector<BlockElement> basis;
  for (int i = 0; i < a.block_count(); ++i) {
    const int n = a.blocks[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s.q[i]);
    // Descending eigenvalue order.
    Eigen::VectorXd lam(n);
    Eigen::MatrixXd vec(n, n);
    for (int c = 0; c < n; ++c) {
      lam[c] = es.eigenvalues()[n - 1 - c];
      vec.col(c) = es.eigenvectors().col(n - 1 - c);
    }
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        BlockElement b = block_zero(a);
        b[i] = vec.col(r) * vec.col(c).transpose() / std::sqrt(lam[c]);
        basis.push_back(std::move(b));
      }
    }
  }
  return basis;
}

Eigen::VectorXd gns_coords(const AlgebraState& s,
                           const std::vector<BlockElement>& basis,
                           const BlockElement& x) {
  Eigen::VectorXd out(static_cast<int>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    out[static_cast<int>(k)] = state_value(s, block_mul(block_adjoint(basis[k]), x));
  }
  return out;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace {

struct GnsData {
  std::vector<BlockElement> basis;
  Eigen::MatrixXd m;  // N x N^2
  Eigen::VectorXd u;  // N
};

GnsData build_gns(const MultiMatrixAlgebra& a, const AlgebraState& s) {
  GnsData g;
  g.basis = gns_basis(a, s);
  const int n = static_cast<int>(g.basis.size());
  g.u = gns_coords(s, g.basis, block_identity(a));
  g.m.resize(n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const BlockElement prod = block_mul(g.basis[i], g.basis[j]);
      const Eigen::VectorXd col = gns_coords(s, g.basis, prod);
      g.m.col(i * n + j) = col;
    }
  }
  return g;
}

double tr_q_inverse(const Eigen::MatrixXd& q) {
  return q.inverse().trace();
}

}  // namespace

DeltaFormResult is_delta_form(const MultiMatrixAlgebra& a,
                              const AlgebraState& s, double tol) {
  a.validate();
  s.validate(a);
  DeltaFormResult res{};
  double total = 0.0;
  std::vector<double> traces;
  for (int i = 0; i < a.block_count(); ++i) {
    traces.push_back(tr_q_inverse(s.q[i]));
    total += traces.back();
  }
  res.delta2 = total / a.block_count();
  res.block_spread = 0.0;
  for (double t : traces) {
    res.block_spread = std::max(res.block_spread, std::abs(t - res.delta2));
  }
  const GnsData g = build_gns(a, s);
  const int n = static_cast<int>(g.basis.size());
  res.mult_residual =
      (g.m * g.m.transpose() - res.delta2 * Eigen::MatrixXd::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  const double scale = std::max(1.0, std::abs(res.delta2));
  res.ok = res.block_spread <= tol * scale && res.mult_residual <= tol * scale;
  return res;
}

BetaOmegaFormResult is_beta_omega_form(const Inclusion& inc,
                                       const AlgebraState& state_d,
                                       double tol) {
  inc.validate();
  state_d.validate(inc.d);
  BetaOmegaFormResult res{};
  res.on_d = is_delta_form(inc.d, state_d, tol);
  res.delta2 = res.on_d.delta2;
  const AlgebraState state_b = restrict_state(inc, state_d);
  res.on_b = is_delta_form(inc.b, state_b, tol);
  res.beta2 = res.on_b.delta2;
  res.omega2 = res.delta2 / res.beta2;

  const OperatorModel model = build_operator_model(inc, state_d);
  const int n = model.n;
  const Eigen::MatrixXd rest =
      Eigen::MatrixXd::Identity(n, n) - model.e_op;
  res.unit_residual = (rest * model.u_op).norm();
  res.algebra_residual =
      (rest * model.m_op * kron(model.e_op, model.e_op)).cwiseAbs().maxCoeff();

  const double scale = std::max(1.0, std::abs(res.delta2));
  res.ok = res.on_d.ok && res.on_b.ok && res.unit_residual <= tol * scale &&
           res.algebra_residual <= tol * scale;
  return res;
}

CanonicalRestrictionResult check_canonical_restriction(const Inclusion& inc) {
  inc.validate();
  const long long dim_b = inc.b.dim();
  const long long dim_d = inc.d.dim();
  bool ok = true;
  for (int j = 0; j < inc.b.block_count(); ++j) {
    long long weighted = 0;
    for (int i = 0; i < inc.d.block_count(); ++i) {
      weighted += static_cast<long long>(inc.multiplicity[i][j]) *
                  inc.d.blocks[i];
    }
    if (weighted * dim_b != static_cast<long long>(inc.b.blocks[j]) * dim_d) {
      ok = false;
      break;
    }
  }
  return {ok, Rational(dim_d, dim_b)};
}

OperatorModel build_operator_model(const Inclusion& inc,
                                   const AlgebraState& state_d) {
  inc.validate();
  state_d.validate(inc.d);
  OperatorModel model;
  model.inclusion = inc;
  model.state_d = state_d;
  model.state_b = restrict_state(inc, state_d);

  GnsData gd = build_gns(inc.d, state_d);
  model.basis_d = std::move(gd.basis);
  model.n = static_cast<int>(model.basis_d.size());
  model.m_op = std::move(gd.m);
  model.u_op = std::move(gd.u);

  model.basis_b = gns_basis(inc.b, model.state_b);
  const int nb = static_cast<int>(model.basis_b.size());
  Eigen::MatrixXd w(model.n, nb);
  for (int l = 0; l < nb; ++l) {
    w.col(l) = gns_coords(model.state_d, model.basis_d,
                          embed_element(inc, model.basis_b[l]));
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(w);
  const Eigen::MatrixXd thin_q =
      qr.householderQ() * Eigen::MatrixXd::Identity(model.n, nb);
  model.e_op = thin_q * thin_q.transpose();

  double total_d = 0.0;
  for (const auto& q : state_d.q) total_d += tr_q_inverse(q);
  model.delta2 = total_d / inc.d.block_count();
  double total_b = 0.0;
  for (const auto& q : model.state_b.q) total_b += tr_q_inverse(q);
  model.beta2 = total_b / inc.b.block_count();
  model.omega2 = model.delta2 / model.beta2;
  return model;
}

}  // namespace diagcat
