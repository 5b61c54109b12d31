#ifndef FNCALC_POLY_HPP
#define FNCALC_POLY_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fncalc/rational.hpp"

namespace fncalc {

/// Sparse multivariate polynomial over Rational in a fixed number of
/// variables x1..xn. Canonical form: no zero coefficients are stored and each
/// exponent vector appears at most once; the empty term map is the zero
/// polynomial. n = 0 gives the constants.
class Poly {
public:
  using Exps = std::vector<int>; // length nvars, entries >= 0

  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, Rational c);
  /// x_i, 1-based.
  static Poly variable(int nvars, int i);
  static Poly monomial(int nvars, Exps exps, Rational c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, Rational>& terms() const { return terms_; }
  /// Coefficient of the given exponent vector (zero if absent).
  Rational coeff(const Exps& e) const;
  int total_degree() const; // -1 for the zero polynomial

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rational& c) const;

  /// Formal partial derivative with respect to x_i, 1-based.
  Poly partial(int i) const;
  Rational eval(const std::vector<Rational>& point) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Canonical-form check used by property tests.
  bool well_formed() const;

  /// Display string, terms in graded-lex order, e.g. "2*x1^2*x2 - 1/3".
  std::string str() const;

private:
  void add_term(const Exps& e, const Rational& c);
  int nvars_;
  std::map<Exps, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace fncalc

#endif
