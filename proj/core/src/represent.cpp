#include "diagcat/represent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace diagcat {

namespace {

long long ipow(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Eigen::MatrixXd eye(long long n) {
  return Eigen::MatrixXd::Identity(n, n);
}

Eigen::MatrixXd kron_power(const Eigen::MatrixXd& x, int k) {
  Eigen::MatrixXd acc = eye(1);
  for (int i = 0; i < k; ++i) acc = kron(acc, x);
  return acc;
}

}  // namespace

OperatorGenerators::OperatorGenerators(const OperatorModel& model)
    : n_(model.n), delta2_(model.delta2), beta2_(model.beta2) {
  u_ = model.u_op;
  m_ = model.m_op;
  e1_ = u_ * u_.transpose();
  e2_ = m_.transpose() * m_ / delta2_;
  p1_ = model.e_op;
  const Eigen::MatrixXd me = m_ * kron(p1_, eye(n_));
  p2_ = (1.0 / beta2_) * kron(eye(n_), me) * kron(m_.transpose(), eye(n_));
  v_ = m_.transpose() * u_;
}

Eigen::MatrixXd OperatorGenerators::jones_e(int i) const {
  if (i < 1) throw Error("Jones projection index must be positive");
  if (i == 1) return e1_;
  if (i == 2) return e2_;
  return kron(eye(n_), jones_e(i - 2));
}

Eigen::MatrixXd OperatorGenerators::jones_p(int i) const {
  if (i < 1) throw Error("Jones projection index must be positive");
  if (i == 1) return p1_;
  if (i == 2) return p2_;
  return kron(eye(n_), jones_p(i - 2));
}

Eigen::MatrixXd OperatorGenerators::pad(const Eigen::MatrixXd& g,
                                        int native_width, int w) const {
  if (native_width > w) {
    throw Error("projection does not fit inside the requested width");
  }
  return kron(g, eye(ipow(n_, w - native_width)));
}

Eigen::MatrixXd OperatorGenerators::padded_e(int i, int w) const {
  return pad(jones_e(i), width(i), w);
}

Eigen::MatrixXd OperatorGenerators::padded_p(int i, int w) const {
  return pad(jones_p(i), width(i), w);
}

std::vector<std::pair<std::string, double>> operator_relation_residuals(
    const OperatorModel& model) {
  const OperatorGenerators g(model);
  const int n = g.strand_dim();
  const Eigen::MatrixXd id1 = eye(n);
  const Eigen::MatrixXd& m = g.m();
  const Eigen::MatrixXd& u = g.u();
  const Eigen::MatrixXd& e = g.e();
  const Eigen::MatrixXd& f = g.f();

  std::vector<std::pair<std::string, double>> out;
  auto push = [&](const std::string& id, const Eigen::MatrixXd& diff) {
    out.push_back({id, diff.cwiseAbs().maxCoeff()});
  };

  push("mult.norm", m * m.transpose() - model.delta2 * id1);
  push("cup.norm", u.transpose() * u - eye(1));
  push("mult.assoc", m * kron(m, id1) - m * kron(id1, m));
  push("unit.left", m * kron(u, id1) - id1);
  push("unit.right", m * kron(id1, u) - id1);
  push("e.idem", e * e - e);
  push("e.sa", Eigen::MatrixXd(e.transpose()) - e);
  push("f.sa", Eigen::MatrixXd(f.transpose()) - f);
  push("f.shift",
       kron(id1, f) * kron(f, id1) - kron(f, id1) * kron(id1, f));
  push("eu", e * u - u);
  push("exp.left", m * kron(e, id1) * m.transpose() - model.beta2 * id1);
  push("exp.right", m * kron(id1, e) * m.transpose() - model.beta2 * id1);
  push("interchange",
       m * kron(m, id1) * kron(e, kron(e, e)) -
           e * m * kron(m, id1) * kron(e, kron(id1, e)));
  return out;
}

double operator_markov_close(const OperatorGenerators& gens,
                             const Eigen::MatrixXd& x, int strands) {
  const int n = gens.strand_dim();
  Eigen::MatrixXd cur = x;
  for (int j = strands; j >= 1; --j) {
    const Eigen::MatrixXd closing = kron(eye(ipow(n, j - 1)), gens.v());
    cur = closing.transpose() * kron(cur, eye(n)) * closing;
  }
  return cur(0, 0);
}

Representer::Representer(const Inclusion& inc, const AlgebraState& state,
                         double certification_tol)
    : model_(build_operator_model(inc, state)),
      gens_(model_),
      sym_gens_(GeneratorSet::build(Kind::FC, 8)),
      beta0_(std::sqrt(model_.beta2)),
      omega0_(std::sqrt(model_.omega2)) {
  const BetaOmegaFormResult cert =
      is_beta_omega_form(inc, state, certification_tol);
  if (!cert.ok) {
    std::ostringstream msg;
    msg << "state is not a (beta, omega) form: block spread "
        << cert.on_d.block_spread << " / " << cert.on_b.block_spread
        << ", multiplication residuals " << cert.on_d.mult_residual << " / "
        << cert.on_b.mult_residual << ", projection residuals "
        << cert.unit_residual << " / " << cert.algebra_residual;
    throw CertificationError(msg.str());
  }
}

Eigen::VectorXd Representer::coefficient_vector(const SpanCache& cache,
                                                const Morphism& x) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(cache.basis.size());
  for (const auto& [d, c] : x.terms()) {
    v[cache.index.at(d)] = c.eval(beta0_, omega0_);
  }
  return v;
}

const Representer::SpanCache& Representer::span_cache(int w) {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;

  SpanCache cache;
  cache.basis = enumerate_diagrams(Kind::FC, w, w);
  for (std::size_t i = 0; i < cache.basis.size(); ++i) {
    cache.index[cache.basis[i]] = static_cast<int>(i);
  }
  const int dim = static_cast<int>(cache.basis.size());
  const long long nw = ipow(gens_.strand_dim(), w);

  Eigen::MatrixXd ortho(dim, 0);
  auto try_add = [&](WordEntry cand) {
    const Eigen::VectorXd v = coefficient_vector(cache, cand.symbolic);
    Eigen::VectorXd resid = v;
    if (ortho.cols() > 0) resid -= ortho * (ortho.transpose() * v);
    if (resid.norm() <= 1e-7 * std::max(1.0, v.norm())) return false;
    resid.normalize();
    ortho.conservativeResize(dim, ortho.cols() + 1);
    ortho.col(ortho.cols() - 1) = resid;
    cache.words.push_back(std::move(cand));
    return true;
  };

  try_add({"1", Morphism::identity(Kind::FC, w), eye(nw)});

  struct GenEntry {
    std::string name;
    Morphism sym;
    Eigen::MatrixXd op;
  };
  std::vector<GenEntry> gens;
  for (int i = 1; i <= 2 * w - 1; ++i) {
    const int native = OperatorGenerators::width(i);
    const Morphism pad_sym = Morphism::identity(Kind::FC, w - native);
    {
      std::ostringstream name;
      name << "e" << i;
      Morphism sym = sym_gens_.jones_e(i).tensor(pad_sym);
      gens.push_back({name.str(), std::move(sym), gens_.padded_e(i, w)});
    }
    {
      std::ostringstream name;
      name << "p" << i;
      Morphism sym = sym_gens_.jones_p(i).tensor(pad_sym);
      gens.push_back({name.str(), std::move(sym), gens_.padded_p(i, w)});
    }
  }

  std::size_t frontier = 0;
  while (frontier < cache.words.size() &&
         static_cast<int>(cache.words.size()) < dim) {
    const std::size_t frontier_end = cache.words.size();
    for (std::size_t k = frontier;
         k < frontier_end && static_cast<int>(cache.words.size()) < dim; ++k) {
      for (const auto& g : gens) {
        if (static_cast<int>(cache.words.size()) >= dim) break;
        const std::string word = cache.words[k].word == "1"
                                     ? g.name
                                     : cache.words[k].word + " . " + g.name;
        try_add({word, cache.words[k].symbolic.compose(g.sym),
                 cache.words[k].op * g.op});
      }
    }
    frontier = frontier_end;
  }

  cache.coeffs.resize(dim, static_cast<int>(cache.words.size()));
  for (std::size_t j = 0; j < cache.words.size(); ++j) {
    cache.coeffs.col(static_cast<int>(j)) =
        coefficient_vector(cache, cache.words[j].symbolic);
  }
  return cache_.emplace(w, std::move(cache)).first->second;
}

const std::vector<WordEntry>& Representer::word_basis(int w) {
  return span_cache(w).words;
}

Eigen::MatrixXd Representer::represent(const Morphism& x) {
  if (x.kind() != Kind::FC) {
    throw Error("the operator model represents FC morphisms");
  }
  const int n = gens_.strand_dim();
  const Morphism v_sym = closure_vector(Kind::FC);
  const Morphism v_sym_st = v_sym.adjoint();
  const Morphism one = Morphism::identity(Kind::FC, 1);

  Morphism cur = x;
  std::vector<char> bends;
  while (cur.cod() - cur.dom() >= 2) {
    const Morphism left =
        Morphism::identity(Kind::FC, cur.cod() - 1).tensor(v_sym_st);
    cur = left.compose(cur.tensor(one));
    bends.push_back('d');
  }
  while (cur.dom() - cur.cod() >= 2) {
    const Morphism right =
        Morphism::identity(Kind::FC, cur.dom() - 1).tensor(v_sym);
    cur = cur.tensor(one).compose(right);
    bends.push_back('u');
  }

  const int l = cur.dom();
  const int k = cur.cod();
  const int w = std::max(l, k);
  const Morphism y = frobenius_transport(cur, w);

  const SpanCache& cache = span_cache(w);
  const Eigen::VectorXd c = coefficient_vector(cache, y);
  const Eigen::VectorXd sol = cache.coeffs.colPivHouseholderQr().solve(c);
  const double resid = (cache.coeffs * sol - c).norm();
  if (resid > 1e-6 * std::max(1.0, c.norm())) {
    throw Error("morphism is outside the Jones word span");
  }

  const long long nw = ipow(n, w);
  Eigen::MatrixXd yop = Eigen::MatrixXd::Zero(nw, nw);
  for (int j = 0; j < sol.size(); ++j) {
    if (sol[j] != 0.0) yop += sol[j] * cache.words[j].op;
  }

  const Eigen::MatrixXd ust = gens_.u().transpose();
  Eigen::MatrixXd xop = kron(kron_power(ust, w - k), eye(ipow(n, k))) * yop *
                        kron(kron_power(gens_.u(), w - l), eye(ipow(n, l)));

  int curl = l;
  int curk = k;
  for (auto it = bends.rbegin(); it != bends.rend(); ++it) {
    if (*it == 'd') {
      xop = kron(xop, eye(n)) * kron(eye(ipow(n, curl - 1)), gens_.v());
      curl -= 1;
      curk += 1;
    } else {
      xop = kron(eye(ipow(n, curk - 1)), gens_.v().transpose()) *
            kron(xop, eye(n));
      curl += 1;
      curk -= 1;
    }
  }
  return xop;
}

std::vector<Eigen::MatrixXd> Representer::represent_basis(
    const std::vector<Diagram>& basis) {
  std::vector<Eigen::MatrixXd> reps;
  reps.reserve(basis.size());
  for (const auto& d : basis) reps.push_back(represent(Morphism::of(d)));
  return reps;
}

Representer::SpanReport Representer::representation_span(int dom, int cod,
                                                         double tol) {
  const std::vector<Diagram> basis = enumerate_diagrams(Kind::FC, dom, cod);
  const std::vector<Eigen::MatrixXd> reps = represent_basis(basis);
  const int dim = static_cast<int>(basis.size());
  if (dim == 0) return {0, 0};
  const long long entries = reps[0].rows() * reps[0].cols();
  Eigen::MatrixXd stacked(entries, dim);
  for (int j = 0; j < dim; ++j) {
    stacked.col(j) =
        Eigen::Map<const Eigen::VectorXd>(reps[j].data(), entries);
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(stacked);
  const Eigen::VectorXd sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() > 0 ? sv[0] : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > tol * scale) ++rank;
  }
  return {dim, rank};
}

Representer::AgreementReport Representer::gram_agreement(int dom, int cod,
                                                         double span_tol) {
  const GramSymbolic sym = gram_symbolic(Kind::FC, dom, cod);
  const int dim = static_cast<int>(sym.basis.size());
  const std::vector<Eigen::MatrixXd> reps = represent_basis(sym.basis);
  double max_dev = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const Eigen::MatrixXd prod = reps[j].transpose() * reps[i];
      const double num = operator_markov_close(gens_, prod, dom);
      const double ref = sym.entries[i][j].eval(beta0_, omega0_);
      max_dev = std::max(max_dev, std::abs(num - ref));
    }
  }
  const SpanReport span = representation_span(dom, cod, span_tol);
  return {dim, max_dev, span.rank};
}

}  // namespace diagcat
