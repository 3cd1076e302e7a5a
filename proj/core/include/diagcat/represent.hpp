#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diagcat/opmodel.hpp"
#include "diagcat/trace.hpp"

namespace diagcat {

// Concrete operators realizing the colored generators on the GNS space.  One
// strand carries the coordinate space of dimension n = dim D.  Dictionary:
//   u -> U (unit coordinates, n x 1)      m -> M (n x n^2)
//   e -> E (projection onto embedded B)   f -> beta^-2 (1 x M(E x 1))(M* x 1)
//   e_1 = U U*, e_2 = M* M / delta^2, p_1 = E, p_2 = f's operator,
//   e_{i+2} and p_{i+2} are the shifts by one strand on the left.
class OperatorGenerators {
 public:
  explicit OperatorGenerators(const OperatorModel& model);

  int strand_dim() const { return n_; }
  double delta2() const { return delta2_; }
  double beta2() const { return beta2_; }

  const Eigen::MatrixXd& u() const { return u_; }
  const Eigen::MatrixXd& m() const { return m_; }
  const Eigen::MatrixXd& e() const { return p1_; }
  const Eigen::MatrixXd& f() const { return p2_; }
  const Eigen::MatrixXd& v() const { return v_; }  // n^2 x 1 bending vector

  // Native operator of a Jones projection; it acts on width(i) strands.
  Eigen::MatrixXd jones_e(int i) const;
  Eigen::MatrixXd jones_p(int i) const;
  static int width(int i) { return i / 2 + 1; }

  // Jones projection padded on the right with identity strands to width w.
  Eigen::MatrixXd padded_e(int i, int w) const;
  Eigen::MatrixXd padded_p(int i, int w) const;

 private:
  int n_;
  double delta2_, beta2_;
  Eigen::MatrixXd u_, m_, e1_, e2_, p1_, p2_, v_;

  Eigen::MatrixXd pad(const Eigen::MatrixXd& g, int native_width, int w) const;
};

// Residuals of the colored relation battery realized by the operators.
std::vector<std::pair<std::string, double>> operator_relation_residuals(
    const OperatorModel& model);

// Markov closure on the operator side: contract strands one at a time with v.
double operator_markov_close(const OperatorGenerators& gens,
                             const Eigen::MatrixXd& x, int strands);

struct WordEntry {
  std::string word;
  Morphism symbolic;
  Eigen::MatrixXd op;
};

// Represents morphisms of the colored category as operators on tensor powers
// of the GNS space.  Construction certifies the model as a (beta, omega)
// form and throws CertificationError otherwise.  A morphism dom -> cod maps
// to a matrix n^cod x n^dom.
//
// Strategy: bend the signature until |dom - cod| <= 1, transport into the
// square algebra on w = max(dom, cod) strands, expand there in a basis of
// Jones projection words (found by breadth-first search with numeric span
// pruning), assemble the same words as operators, then undo the transport
// and the bends with the unit and bending operators.
class Representer {
 public:
  Representer(const Inclusion& inc, const AlgebraState& state,
              double certification_tol = 1e-8);

  const OperatorModel& model() const { return model_; }
  const OperatorGenerators& generators() const { return gens_; }
  double beta0() const { return beta0_; }
  double omega0() const { return omega0_; }

  const std::vector<WordEntry>& word_basis(int w);

  Eigen::MatrixXd represent(const Morphism& x);

  struct SpanReport {
    int dim;
    int rank;
  };
  // Rank of the span of the represented diagram basis of the signature.
  SpanReport representation_span(int dom, int cod, double tol = 1e-7);

  struct AgreementReport {
    int dim;
    double max_abs_deviation;  // operator Gram vs symbolic Gram at (beta0, omega0)
    int span_rank;
  };
  AgreementReport gram_agreement(int dom, int cod, double span_tol = 1e-7);

 private:
  struct SpanCache {
    std::vector<WordEntry> words;
    std::vector<Diagram> basis;
    std::map<Diagram, int> index;
    Eigen::MatrixXd coeffs;  // dim x words, columns are coefficient vectors
  };

  OperatorModel model_;
  OperatorGenerators gens_;
  GeneratorSet sym_gens_;
  double beta0_, omega0_;
  std::map<int, SpanCache> cache_;

  const SpanCache& span_cache(int w);
  Eigen::VectorXd coefficient_vector(const SpanCache& cache,
                                     const Morphism& x) const;
  std::vector<Eigen::MatrixXd> represent_basis(const std::vector<Diagram>& basis);
};

}  // namespace diagcat
