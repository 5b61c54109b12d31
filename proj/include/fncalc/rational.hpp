#ifndef FNCALC_RATIONAL_HPP
#define FNCALC_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace fncalc {

/// Arbitrary-precision rational, always canonical: denominator positive,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long n, long d);

  /// Parse "p" or "p/q" with integer p and positive integer q.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  /// a^e for e >= 0.
  static Rational pow(const Rational& a, unsigned long e);
  /// n! as a rational (exact division by factorials stays exact).
  static Rational factorial(unsigned n);

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace fncalc

#endif
