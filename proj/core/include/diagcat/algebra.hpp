#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagcat/diagram.hpp"
#include "diagcat/scalar.hpp"

namespace diagcat {

// Finite linear combination of diagrams with one fixed signature and exact
// scalar coefficients.  Composition resolves the loops removed by the
// underlying diagram composition into their weights: each closed white loop
// contributes a factor beta, each closed black loop a factor omega; TL loops
// are uncolored and contribute delta = beta * omega.
class Morphism {
 public:
  explicit Morphism(Signature sig) : sig_(sig) {}

  static Morphism zero(Kind kind, int dom, int cod) {
    return Morphism({kind, dom, cod});
  }
  static Morphism identity(Kind kind, int n);
  static Morphism of(const Diagram& d, const Scalar& c = Scalar::one());

  const Signature& signature() const { return sig_; }
  Kind kind() const { return sig_.kind; }
  int dom() const { return sig_.dom; }
  int cod() const { return sig_.cod; }

  const std::map<Diagram, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of the empty diagram; only valid for signature 0 -> 0.
  Scalar scalar_part() const;

  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(const Scalar& c) const;

  // this after rhs (rhs is applied first).
  Morphism compose(const Morphism& rhs) const;
  Morphism tensor(const Morphism& o) const;
  Morphism adjoint() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

  std::string to_string() const;

 private:
  Signature sig_;
  std::map<Diagram, Scalar> terms_;

  void add_term(const Diagram& d, const Scalar& c);
};

// The normalized generators of the diagram category, plus the two families of
// Jones projections built from them:
//   e_1 = u u*, e_2 = delta^-2 m* m, e_{i+2} = 1 (x) e_i
//   p_1 = e,    p_2 = f,             p_{i+2} = 1 (x) p_i   (FC only)
class GeneratorSet {
 public:
  static GeneratorSet build(Kind kind, int max_index = 4);

  Kind kind() const { return kind_; }
  int max_index() const { return static_cast<int>(e_family_.size()); }

  const Morphism& u() const { return u_; }
  const Morphism& m() const { return m_; }
  const Morphism& e() const;  // FC only
  const Morphism& f() const;  // FC only
  const Morphism& jones_e(int i) const;  // 1-based
  const Morphism& jones_p(int i) const;  // 1-based, FC only

 private:
  GeneratorSet(Kind kind) : kind_(kind) {}

  Kind kind_;
  Morphism u_ = Morphism::zero(Kind::TL, 0, 0);
  Morphism m_ = Morphism::zero(Kind::TL, 0, 0);
  std::optional<Morphism> e_, f_;
  std::vector<Morphism> e_family_;
  std::vector<Morphism> p_family_;
};

// Evaluates a word over the generators.  Grammar:
//   chain   := tens ('.' tens)*            composition, rightmost applied first
//   tens    := atom ('ox' atom)*           tensor product
//   atom    := primary '*'*                postfix adjoint
//   primary := '(' chain ')' | '{' scalar text '}' | name
//   name    := 'id_' INT | 'u' | 'm' | 'e' | 'f' | 'e' INT | 'p' INT
// Composition pads the narrower side on the right with identity strands, so
// "m . e . m*" means m (e (x) 1) m*.  Scalar literals scale the chain.
Morphism evaluate_word(const std::string& word, const GeneratorSet& gens);

// Compare after padding the narrower morphism on the right with identity
// strands; requires the two signatures to differ by the same amount in both
// the domain and the codomain.
bool equal_padded(const Morphism& a, const Morphism& b);

// Size of the symmetric difference of the two sides after padding; 0 when
// equal_padded holds.
int padded_difference_terms(const Morphism& a, const Morphism& b);

// Bending of x: dom -> cod into the square algebra on w strands,
//   transport(x) = (u^(x)(w-cod) (x) 1_cod) . x . (u*^(x)(w-dom) (x) 1_dom),
// a linear isomorphism for any w >= max(dom, cod).
Morphism frobenius_transport(const Morphism& x, int w);

// Inverse of frobenius_transport for the stated target signature.
Morphism frobenius_inverse(const Morphism& y, int target_dom, int target_cod);

}  // namespace diagcat
