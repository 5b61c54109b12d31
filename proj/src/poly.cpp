#include "fncalc/poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "fncalc/errors.hpp"

namespace fncalc {

namespace {

void check_same_vars(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars())
    throw StructuralError("polynomials over different variable counts");
}

int degree_of(const Poly::Exps& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

} // namespace

Poly Poly::constant(int nvars, Rational c) {
  Poly p(nvars);
  p.add_term(Exps(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 1 || i > nvars) throw StructuralError("variable index out of range");
  Exps e(nvars, 0);
  e[i - 1] = 1;
  return monomial(nvars, std::move(e), Rational(1));
}

Poly Poly::monomial(int nvars, Exps exps, Rational c) {
  if (static_cast<int>(exps.size()) != nvars)
    throw StructuralError("exponent vector length differs from variable count");
  for (int e : exps)
    if (e < 0) throw StructuralError("negative exponent");
  Poly p(nvars);
  p.add_term(exps, c);
  return p;
}

Rational Poly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

void Poly::add_term(const Exps& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same_vars(*this, o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_vars(*this, o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_vars(a, b);
  Poly r(a.nvars_);
  Poly::Exps e(a.nvars_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

Poly Poly::partial(int i) const {
  if (i < 1 || i > nvars_) throw StructuralError("partial index out of range");
  Poly r(nvars_);
  for (auto& [e, c] : terms_) {
    if (e[i - 1] == 0) continue;
    Exps d = e;
    --d[i - 1];
    r.add_term(d, c * Rational(e[i - 1]));
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw StructuralError("evaluation point length differs from variable count");
  Rational sum;
  for (auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t *= Rational::pow(point[i], static_cast<unsigned long>(e[i]));
    sum += t;
  }
  return sum;
}

bool Poly::well_formed() const {
  for (auto& [e, c] : terms_) {
    if (static_cast<int>(e.size()) != nvars_) return false;
    if (c.is_zero()) return false;
    if (c.den() <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.num().get_mpz_t(), c.den().get_mpz_t());
    if (g != 1) return false;
    for (int x : e)
      if (x < 0) return false;
  }
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  // graded-lex, highest degree first
  std::vector<const std::pair<const Exps, Rational>*> ts;
  for (auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
    int da = degree_of(a->first), db = degree_of(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    const auto& [e, c] = *t;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    std::string vars;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(i + 1);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      os << a.str();
    } else {
      if (!(a == Rational(1))) os << a.str() << "*";
      os << vars;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

} // namespace fncalc
