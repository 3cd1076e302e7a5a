#pragma once

#include <map>
#include <string>
#include <utility>

#include "diagcat/rational.hpp"

namespace diagcat {

// Exact element of the Laurent ring Q[b^(1/2), w^(1/2), b^(-1/2), w^(-1/2)]
// in the two loop parameters b (beta) and w (omega).  The loop parameter of
// the uncolored theory is d = b*w (delta), so d-powers need no key of their
// own.  Exponents are stored doubled so that every half-integer power has an
// integer key: the key (2, 0) means one full power of beta, (1, 1) means one
// half power of beta times one half power of omega, i.e. delta^(1/2).
class Scalar {
 public:
  using Key = std::pair<int, int>;  // (doubled beta exponent, doubled omega exponent)
  using Terms = std::map<Key, Rational>;

  Scalar() = default;  // zero

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return integer(1); }
  static Scalar integer(long long v) { return from_rational(Rational(v)); }
  static Scalar from_rational(const Rational& v);
  // c * beta^(beta2/2) * omega^(omega2/2), exponents given doubled.
  static Scalar monomial(const Rational& c, int beta2, int omega2);
  static Scalar beta_pow(int beta2) { return monomial(1, beta2, 0); }
  static Scalar omega_pow(int omega2) { return monomial(1, 0, omega2); }
  static Scalar delta_pow(int delta2) { return monomial(1, delta2, delta2); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const Scalar&, const Scalar&) = default;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Numeric value at beta = beta0, omega = omega0.  Both must be positive
  // because half powers are taken; otherwise an Error is thrown.
  double eval(double beta0, double omega0) const;

  // Canonical text: terms "c * b^(p/2) * w^(q/2)" joined by " + ", sorted by
  // doubled exponent pair, "0" for the zero scalar.  p and q are the stored
  // doubled exponents, so one power of beta prints as b^(2/2).
  std::string to_string() const;

  // Accepts the canonical form plus relaxed variants: factors may be omitted,
  // integer exponents mean full powers (b^2 == b^(4/2)), d^k abbreviates
  // (b*w)^k, rational coefficients use '/'.  Throws ParseError on bad input.
  static Scalar parse(const std::string& text);

 private:
  Terms terms_;

  void prune();
};

}  // namespace diagcat
