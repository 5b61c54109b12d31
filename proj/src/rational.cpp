#include "fncalc/rational.hpp"

#include <cctype>
#include <ostream>

#include "fncalc/errors.hpp"

namespace fncalc {

Rational::Rational(long n, long d) {
  if (d == 0) throw StructuralError("rational with zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

namespace {

bool valid_integer(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw ParseError("malformed rational '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) throw ParseError("zero denominator in rational '" + text + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return q_.get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw StructuralError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(const Rational& a, unsigned long e) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), a.q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), a.q_.get_den_mpz_t(), e);
  return Rational(mpq_class(n, d)); // already canonical since a is
}

Rational Rational::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

} // namespace fncalc
