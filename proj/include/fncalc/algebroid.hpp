#ifndef FNCALC_ALGEBROID_HPP
#define FNCALC_ALGEBROID_HPP

#include <string>
#include <vector>

#include "fncalc/poly.hpp"

namespace fncalc {

/// A rank-m vector bundle over the polynomial base in n coordinates. The
/// trivial line bundle is rank 1.
struct VectorBundle {
  int rank = 1;
  int nvars = 0;
  friend bool operator==(const VectorBundle&, const VectorBundle&) = default;
};

/// Element of Gamma(A) or Gamma(E): coefficient vector over the frame.
struct Section {
  std::vector<Poly> coeffs;

  int rank() const { return static_cast<int>(coeffs.size()); }
  bool is_zero() const;
  friend bool operator==(const Section&, const Section&) = default;
  std::string str() const;
};

Section zero_section(int rank, int nvars);
Section section_add(const Section& a, const Section& b);
Section section_sub(const Section& a, const Section& b);
Section section_scale(const Section& a, const Poly& f);
Section section_scale(const Section& a, const Rational& c);

/// Anchored frame data of a Lie algebroid over QQ[x1..xn]: anchor components
/// rho_a^i and structure functions c_ab^c (stored for a < b, extended
/// antisymmetrically). Frame and coordinate indices are 0-based throughout
/// the library; files and display are 1-based.
class Algebroid {
public:
  Algebroid(int nvars, int rank);

  int nvars() const { return nvars_; }
  int rank() const { return rank_; }

  const Poly& anchor(int a, int i) const;
  void set_anchor(int a, int i, Poly p);
  /// [e_a, e_b]^c with antisymmetric lookup; zero when a == b.
  Poly structure(int a, int b, int c) const;
  /// Requires a < b.
  void set_structure(int a, int b, int c, Poly p);

  /// Frame section e_a.
  Section basis(int a) const;
  VectorBundle line_bundle() const { return {1, nvars_}; }
  VectorBundle as_bundle() const { return {rank_, nvars_}; }

  friend bool operator==(const Algebroid&, const Algebroid&) = default;

private:
  int pair_index(int a, int b) const; // a < b
  int nvars_, rank_;
  std::vector<std::vector<Poly>> anchor_;    // [a][i]
  std::vector<std::vector<Poly>> structure_; // [pair(a<b)][c]
};

/// rho(X)f = sum_a X^a sum_i rho_a^i df/dx_i.
Poly anchor_apply(const Algebroid& A, const Section& X, const Poly& f);

/// Bracket of arbitrary sections, extending the structure functions by the
/// Leibniz rule: [X,Y]^c = sum_{a,b} X^a Y^b c_ab^c + rho(X)Y^c - rho(Y)X^c.
Section bracket(const Algebroid& A, const Section& X, const Section& Y);

/// Per-check outcome of the structural validation.
struct ValidationReport {
  struct Entry {
    std::string name;
    bool ok = false;
    std::string witness; // nonempty only on failure
  };
  std::vector<Entry> jacobi;          // one per frame triple a < b < c
  std::vector<Entry> anchor_morphism; // one per frame pair a < b
  bool passed() const;
  std::string str() const;
};

/// Check the Jacobi identity on all frame triples and the anchor-morphism
/// identity rho([e_a,e_b])g = [rho(e_a), rho(e_b)]g on every coordinate
/// generator g = x_i. Together with the built-in Leibniz extension these
/// imply both identities on all sections.
ValidationReport validate_algebroid(const Algebroid& A);

// Built-in examples. Random structure functions almost never satisfy Jacobi,
// so randomized suites draw their algebroids from this zoo.
Algebroid so3();
Algebroid aff1();
Algebroid heisenberg3();
/// Tangent algebroid of R^n (rank n, identity anchor), n <= 3.
Algebroid tangent_rn(int n);
/// Action algebroid of aff(1) acting on R: rho(e1) = d/dx, rho(e2) = x d/dx,
/// [e1, e2] = e1.
Algebroid aff1_action();

/// The named examples the verification grids quantify over.
std::vector<std::pair<std::string, Algebroid>> zoo();

} // namespace fncalc

#endif
