#ifndef FNCALC_CONNECTION_HPP
#define FNCALC_CONNECTION_HPP

#include "fncalc/vform.hpp"

namespace fncalc {

/// A-connection on a bundle, stored as a Christoffel table over the frame:
/// nabla_{e_a} e_alpha = sum_beta gamma(a, alpha, beta) e_beta. The operator
/// form is always derived from the table by the Leibniz extension, never
/// stored.
class Connection {
public:
  Connection(const Algebroid& A, Target bundle); // zero Christoffel table

  int source_rank() const { return source_rank_; }
  int nvars() const { return nvars_; }
  const Target& bundle() const { return bundle_; }

  const Poly& christoffel(int a, int alpha, int beta) const;
  void set_christoffel(int a, int alpha, int beta, Poly p);

  friend bool operator==(const Connection&, const Connection&) = default;

private:
  int idx(int a, int alpha, int beta) const;
  int source_rank_, nvars_;
  Target bundle_;
  std::vector<Poly> gamma_;
};

/// nabla_X s by Leibniz extension of the Christoffel table:
/// (nabla_X s)^beta = sum_a X^a (rho(e_a) s^beta + sum_alpha s^alpha gamma(a,alpha,beta)).
Section cov_deriv(const Algebroid& A, const Connection& conn, const Section& X,
                  const Section& s);

/// T(X,Y) = nabla_X Y - nabla_Y X - [X,Y] as an algebroid-valued 2-form.
VForm torsion(const Algebroid& A, const Connection& connA);
bool is_torsion_free(const Algebroid& A, const Connection& connA);

/// nabla - T/2: a torsion-free connection on A differing from the input by
/// half the torsion. A projection: already torsion-free inputs are fixed.
Connection symmetrize(const Algebroid& A, const Connection& connA);

/// R(e_a, e_b) as endomorphism matrices over the frame pairs a < b,
/// antisymmetric in (a, b). Produced by evaluating the defining formula
/// R(X,Y)s = nabla_X nabla_Y s - nabla_Y nabla_X s - nabla_[X,Y] s on frame
/// data; tensoriality is verified by the test suites.
class CurvatureTensor {
public:
  CurvatureTensor(int source_rank, int nvars, int bundle_rank);

  int source_rank() const { return source_rank_; }
  int bundle_rank() const { return bundle_rank_; }

  const Poly& entry(int a, int b, int alpha, int beta) const; // a < b
  void set_entry(int a, int b, int alpha, int beta, Poly p);  // a < b

  /// R(e_a, e_b) s with antisymmetric lookup in (a, b).
  Section apply_frame(int a, int b, const Section& s) const;
  /// R(X, Y) s for arbitrary sections by bilinear expansion.
  Section apply(const Section& X, const Section& Y, const Section& s) const;
  bool is_zero() const;

private:
  int source_rank_, nvars_, bundle_rank_;
  std::vector<Poly> comps_; // [pair(a<b)][alpha][beta]
};

CurvatureTensor curvature(const Algebroid& A, const Connection& conn);

/// The canonical connection nabla^rho_X f = rho(X) f on the trivial line
/// bundle (zero Christoffel table, scalar target). Flat on every algebroid
/// whose anchor is a bracket morphism.
Connection anchor_connection(const Algebroid& A);

/// Covariant exterior derivative: shuffle sum of frame covariant derivatives
/// minus the bracket correction sum. A derivation of degree 1. For scalar
/// forms over anchor_connection this is the algebroid differential d.
VForm d_nabla(const Algebroid& A, const Connection& connE, const VForm& phi);

/// The curvature-action shuffle sum that (d^nabla)^2 must equal.
VForm curvature_action(const Algebroid& A, const CurvatureTensor& R, const VForm& phi);

/// true iff d_nabla(d_nabla(phi)) equals the curvature action computed
/// independently from the CurvatureTensor.
bool d_nabla_squared_matches(const Algebroid& A, const Connection& connE, const VForm& phi);

/// Degree-preserving combined derivative on E-valued forms:
/// (nabla_X s)(Z_1..Z_p) = nabla^E_X(s(Z_1..Z_p)) - sum_t s(Z_1,..,nabla^A_X Z_t,..,Z_p).
VForm nabla_x_form(const Algebroid& A, const Connection& connA, const Connection& connE,
                   const Section& X, const VForm& s);

} // namespace fncalc

#endif
