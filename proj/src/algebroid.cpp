#include "fncalc/algebroid.hpp"

#include <sstream>

#include "fncalc/errors.hpp"

namespace fncalc {

bool Section::is_zero() const {
  for (auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

std::string Section::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ", ";
    os << coeffs[i].str();
  }
  os << ")";
  return os.str();
}

Section zero_section(int rank, int nvars) {
  return Section{std::vector<Poly>(static_cast<std::size_t>(rank), Poly(nvars))};
}

namespace {
void check_same_rank(const Section& a, const Section& b) {
  if (a.rank() != b.rank()) throw StructuralError("sections of different bundles");
}
} // namespace

Section section_add(const Section& a, const Section& b) {
  check_same_rank(a, b);
  Section r = a;
  for (int i = 0; i < r.rank(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

Section section_sub(const Section& a, const Section& b) {
  check_same_rank(a, b);
  Section r = a;
  for (int i = 0; i < r.rank(); ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

Section section_scale(const Section& a, const Poly& f) {
  Section r = a;
  for (auto& c : r.coeffs) c *= f;
  return r;
}

Section section_scale(const Section& a, const Rational& c) {
  Section r = a;
  for (auto& p : r.coeffs) p = p.scaled(c);
  return r;
}

Algebroid::Algebroid(int nvars, int rank) : nvars_(nvars), rank_(rank) {
  if (rank < 1) throw StructuralError("algebroid rank must be positive");
  if (nvars < 0) throw StructuralError("negative coordinate count");
  anchor_.assign(rank_, std::vector<Poly>(nvars_, Poly(nvars_)));
  structure_.assign(static_cast<std::size_t>(rank_) * (rank_ - 1) / 2,
                    std::vector<Poly>(rank_, Poly(nvars_)));
}

int Algebroid::pair_index(int a, int b) const {
  // a < b; pairs ordered (0,1), (0,2), ..., (0,r-1), (1,2), ...
  return a * rank_ - a * (a + 1) / 2 + (b - a - 1);
}

const Poly& Algebroid::anchor(int a, int i) const {
  if (a < 0 || a >= rank_ || i < 0 || i >= nvars_)
    throw StructuralError("anchor index out of range");
  return anchor_[a][i];
}

void Algebroid::set_anchor(int a, int i, Poly p) {
  if (a < 0 || a >= rank_ || i < 0 || i >= nvars_)
    throw StructuralError("anchor index out of range");
  if (p.nvars() != nvars_) throw StructuralError("anchor entry over wrong variable count");
  anchor_[a][i] = std::move(p);
}

Poly Algebroid::structure(int a, int b, int c) const {
  if (a < 0 || a >= rank_ || b < 0 || b >= rank_ || c < 0 || c >= rank_)
    throw StructuralError("structure index out of range");
  if (a == b) return Poly(nvars_);
  if (a < b) return structure_[pair_index(a, b)][c];
  return -structure_[pair_index(b, a)][c];
}

void Algebroid::set_structure(int a, int b, int c, Poly p) {
  if (!(0 <= a && a < b && b < rank_) || c < 0 || c >= rank_)
    throw StructuralError("structure index out of range (need a < b)");
  if (p.nvars() != nvars_) throw StructuralError("structure entry over wrong variable count");
  structure_[pair_index(a, b)][c] = std::move(p);
}

Section Algebroid::basis(int a) const {
  if (a < 0 || a >= rank_) throw StructuralError("frame index out of range");
  Section s = zero_section(rank_, nvars_);
  s.coeffs[a] = Poly::constant(nvars_, Rational(1));
  return s;
}

Poly anchor_apply(const Algebroid& A, const Section& X, const Poly& f) {
  if (X.rank() != A.rank()) throw StructuralError("section does not belong to the algebroid");
  if (f.nvars() != A.nvars()) throw StructuralError("function over wrong variable count");
  Poly out(A.nvars());
  for (int i = 0; i < A.nvars(); ++i) {
    Poly df = f.partial(i + 1);
    if (df.is_zero()) continue;
    for (int a = 0; a < A.rank(); ++a) {
      if (X.coeffs[a].is_zero() || A.anchor(a, i).is_zero()) continue;
      out += X.coeffs[a] * A.anchor(a, i) * df;
    }
  }
  return out;
}

Section bracket(const Algebroid& A, const Section& X, const Section& Y) {
  if (X.rank() != A.rank() || Y.rank() != A.rank())
    throw StructuralError("bracket of sections of a different bundle");
  Section out = zero_section(A.rank(), A.nvars());
  for (int c = 0; c < A.rank(); ++c) {
    Poly v(A.nvars());
    for (int a = 0; a < A.rank(); ++a)
      for (int b = a + 1; b < A.rank(); ++b) {
        Poly s = A.structure(a, b, c);
        if (s.is_zero()) continue;
        v += (X.coeffs[a] * Y.coeffs[b] - X.coeffs[b] * Y.coeffs[a]) * s;
      }
    v += anchor_apply(A, X, Y.coeffs[c]);
    v -= anchor_apply(A, Y, X.coeffs[c]);
    out.coeffs[c] = std::move(v);
  }
  return out;
}

bool ValidationReport::passed() const {
  for (auto& e : jacobi)
    if (!e.ok) return false;
  for (auto& e : anchor_morphism)
    if (!e.ok) return false;
  return true;
}

std::string ValidationReport::str() const {
  std::ostringstream os;
  auto dump = [&](const char* what, const std::vector<Entry>& entries) {
    bool all = true;
    for (auto& e : entries) all = all && e.ok;
    os << what << ": " << (all ? "pass" : "FAIL") << "\n";
    for (auto& e : entries)
      if (!e.ok) os << "  " << e.name << ": " << e.witness << "\n";
  };
  dump("jacobi", jacobi);
  dump("anchor-morphism", anchor_morphism);
  return os.str();
}

ValidationReport validate_algebroid(const Algebroid& A) {
  ValidationReport rep;
  const int r = A.rank();
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = b + 1; c < r; ++c) {
        Section ea = A.basis(a), eb = A.basis(b), ec = A.basis(c);
        Section sum = section_add(
            section_add(bracket(A, bracket(A, ea, eb), ec), bracket(A, bracket(A, eb, ec), ea)),
            bracket(A, bracket(A, ec, ea), eb));
        ValidationReport::Entry e;
        e.name = "jacobi(e" + std::to_string(a + 1) + ",e" + std::to_string(b + 1) + ",e" +
                 std::to_string(c + 1) + ")";
        e.ok = sum.is_zero();
        if (!e.ok) e.witness = "cyclic sum = " + sum.str();
        rep.jacobi.push_back(std::move(e));
      }
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      Section ea = A.basis(a), eb = A.basis(b);
      Section br = bracket(A, ea, eb);
      ValidationReport::Entry e;
      e.name = "anchor(e" + std::to_string(a + 1) + ",e" + std::to_string(b + 1) + ")";
      e.ok = true;
      for (int i = 0; i < A.nvars() && e.ok; ++i) {
        Poly g = Poly::variable(A.nvars(), i + 1);
        Poly lhs = anchor_apply(A, br, g);
        Poly rhs = anchor_apply(A, ea, anchor_apply(A, eb, g)) -
                   anchor_apply(A, eb, anchor_apply(A, ea, g));
        if (lhs != rhs) {
          e.ok = false;
          e.witness = "on x" + std::to_string(i + 1) + ": rho([X,Y])g = " + lhs.str() +
                      " but [rho(X),rho(Y)]g = " + rhs.str();
        }
      }
      rep.anchor_morphism.push_back(std::move(e));
    }
  return rep;
}

Algebroid so3() {
  Algebroid A(0, 3);
  Poly one = Poly::constant(0, Rational(1));
  A.set_structure(0, 1, 2, one); // [e1,e2] = e3
  A.set_structure(1, 2, 0, one); // [e2,e3] = e1
  A.set_structure(0, 2, 1, -one); // [e3,e1] = e2
  return A;
}

Algebroid aff1() {
  Algebroid A(0, 2);
  A.set_structure(0, 1, 1, Poly::constant(0, Rational(1))); // [e1,e2] = e2
  return A;
}

Algebroid heisenberg3() {
  Algebroid A(0, 3);
  A.set_structure(0, 1, 2, Poly::constant(0, Rational(1))); // [e1,e2] = e3
  return A;
}

Algebroid tangent_rn(int n) {
  if (n < 1 || n > 3) throw StructuralError("tangent_rn supports 1 <= n <= 3");
  Algebroid A(n, n);
  for (int a = 0; a < n; ++a) A.set_anchor(a, a, Poly::constant(n, Rational(1)));
  return A;
}

Algebroid aff1_action() {
  Algebroid A(1, 2);
  A.set_anchor(0, 0, Poly::constant(1, Rational(1)));
  A.set_anchor(1, 0, Poly::variable(1, 1));
  A.set_structure(0, 1, 0, Poly::constant(1, Rational(1))); // [e1,e2] = e1
  return A;
}

std::vector<std::pair<std::string, Algebroid>> zoo() {
  return {
      {"so3", so3()},
      {"aff1", aff1()},
      {"heisenberg", heisenberg3()},
      {"tangent_r1", tangent_rn(1)},
      {"tangent_r2", tangent_rn(2)},
      {"aff1_action", aff1_action()},
  };
}

} // namespace fncalc
