#include "fncalc/fn_calculus.hpp"

#include "fncalc/errors.hpp"

namespace fncalc {

namespace {
void require_a_valued(const VForm& phi, const char* who) {
  if (phi.target().kind != Target::Kind::Algebroid)
    throw StructuralError(std::string(who) + " requires an algebroid-valued form");
}

void require_torsion_free(const Algebroid& A, const Connection& connA, const char* who) {
  if (connA.bundle().kind != Target::Kind::Algebroid)
    throw StructuralError(std::string(who) + " requires a connection on the algebroid itself");
  if (!is_torsion_free(A, connA))
    throw PreconditionError(std::string(who) + " requires a torsion-free connection");
}
} // namespace

VForm lie_deriv(const Algebroid& A, const Connection& connE, const VForm& phi, const VForm& s) {
  require_a_valued(phi, "lie_deriv");
  const int k = phi.degree();
  VForm first = insert(phi, d_nabla(A, connE, s));
  VForm second = d_nabla(A, connE, insert(phi, s));
  if (parity_sign(k) < 0) second = -second;
  return form_add(first, second);
}

VForm cov_phi(const Algebroid& A, const Connection& connA, const Connection& connE,
              const VForm& phi, const VForm& s) {
  require_a_valued(phi, "cov_phi");
  require_torsion_free(A, connA, "cov_phi");
  const int p = phi.degree();
  VForm lie = lie_deriv(A, connE, phi, s);
  VForm corr = insert(d_nabla(A, connA, phi), s);
  if (parity_sign(p) > 0) corr = -corr;
  return form_add(lie, corr);
}

VForm r_extended(const Algebroid& A, const Connection& connA, const VForm& phi,
                 const VForm& psi) {
  require_a_valued(phi, "r_extended");
  require_a_valued(psi, "r_extended");
  const int k = phi.degree(), l = psi.degree();
  if (phi.is_zero() || psi.is_zero())
    return VForm(A.rank(), A.nvars(), std::max(k + l + 1, -1), Target::algebroid(A));
  CurvatureTensor R = curvature(A, connA);
  auto shs = shuffles3(k, l, 1);
  return build_form(A.rank(), A.nvars(), k + l + 1, Target::algebroid(A),
                    [&](const MultiIndex& idx) {
                      std::vector<Poly> acc(static_cast<std::size_t>(A.rank()), Poly(A.nvars()));
                      MultiIndex b1(k), b2(l);
                      for (auto& sh : shs) {
                        for (int t = 0; t < k; ++t) b1[t] = idx[sh.perm[t]];
                        for (int t = 0; t < l; ++t) b2[t] = idx[sh.perm[k + t]];
                        Section u{phi.component(b1)};
                        if (u.is_zero()) continue;
                        Section v{psi.component(b2)};
                        if (v.is_zero()) continue;
                        Section w = R.apply(u, v, A.basis(idx[sh.perm[k + l]]));
                        for (int i = 0; i < A.rank(); ++i) {
                          if (w.coeffs[i].is_zero()) continue;
                          acc[i] += (sh.sign < 0) ? -w.coeffs[i] : w.coeffs[i];
                        }
                      }
                      return acc;
                    });
}

VForm fn_bracket(const Algebroid& A, const Connection& connA, const VForm& phi,
                 const VForm& psi) {
  require_a_valued(phi, "fn_bracket");
  require_a_valued(psi, "fn_bracket");
  require_torsion_free(A, connA, "fn_bracket");
  const int k = phi.degree(), l = psi.degree();
  VForm first = lie_deriv(A, connA, phi, psi);
  VForm second = lie_deriv(A, connA, psi, phi);
  if (parity_sign(static_cast<long long>(k) * l) > 0) second = -second;
  return form_add(first, second);
}

VForm fn_bracket(const Algebroid& A, const VForm& phi, const VForm& psi) {
  Connection tf = symmetrize(A, Connection(A, Target::algebroid(A)));
  return fn_bracket(A, tf, phi, psi);
}

VForm nijenhuis(const Algebroid& A, const Connection& connA, const VForm& N) {
  if (N.degree() != 1 && !N.is_zero())
    throw StructuralError("nijenhuis requires a degree-1 form");
  return fn_bracket(A, connA, N, N).scaled(Rational(1, 2));
}

VForm nijenhuis(const Algebroid& A, const VForm& N) {
  Connection tf = symmetrize(A, Connection(A, Target::algebroid(A)));
  return nijenhuis(A, tf, N);
}

DeformResult deform(const Algebroid& A, const VForm& N) {
  require_a_valued(N, "deform");
  if (N.degree() != 1) throw StructuralError("deform requires a degree-1 form");
  Algebroid out(A.nvars(), A.rank());
  // rho_N(e_a) = rho(N e_a)
  for (int a = 0; a < A.rank(); ++a) {
    Section na = eval_form(N, {A.basis(a)});
    for (int i = 0; i < A.nvars(); ++i) {
      Poly v(A.nvars());
      for (int b = 0; b < A.rank(); ++b)
        if (!na.coeffs[b].is_zero() && !A.anchor(b, i).is_zero())
          v += na.coeffs[b] * A.anchor(b, i);
      out.set_anchor(a, i, std::move(v));
    }
  }
  // [e_a, e_b]_N = [N e_a, e_b] + [e_a, N e_b] - N [e_a, e_b]
  for (int a = 0; a < A.rank(); ++a)
    for (int b = a + 1; b < A.rank(); ++b) {
      Section ea = A.basis(a), eb = A.basis(b);
      Section v = section_add(bracket(A, eval_form(N, {ea}), eb),
                              bracket(A, ea, eval_form(N, {eb})));
      v = section_sub(v, eval_form(N, {bracket(A, ea, eb)}));
      for (int c = 0; c < A.rank(); ++c)
        if (!v.coeffs[c].is_zero()) out.set_structure(a, b, c, v.coeffs[c]);
    }
  ValidationReport report = validate_algebroid(out);
  return {std::move(out), std::move(report)};
}

GradedOperator GradedOperator::insertion(const VForm& phi) {
  return GradedOperator(phi.degree() - 1, [phi](const VForm& s) { return insert(phi, s); });
}

GradedOperator GradedOperator::exterior(const Algebroid& A, const Connection& connE) {
  return GradedOperator(1, [A, connE](const VForm& s) { return d_nabla(A, connE, s); });
}

GradedOperator GradedOperator::lie(const Algebroid& A, const Connection& connE,
                                   const VForm& phi) {
  return GradedOperator(phi.degree(),
                        [A, connE, phi](const VForm& s) { return lie_deriv(A, connE, phi, s); });
}

GradedOperator GradedOperator::covariant(const Algebroid& A, const Connection& connA,
                                         const Connection& connE, const VForm& phi) {
  require_torsion_free(A, connA, "GradedOperator::covariant");
  return GradedOperator(phi.degree(), [A, connA, connE, phi](const VForm& s) {
    return cov_phi(A, connA, connE, phi, s);
  });
}

GradedOperator GradedOperator::epsilon(const VForm& omega) {
  return GradedOperator(omega.degree(), [omega](const VForm& s) { return wedge(omega, s); });
}

GradedOperator graded_commutator(const GradedOperator& a, const GradedOperator& b) {
  const int sign = parity_sign(static_cast<long long>(a.degree()) * b.degree());
  return GradedOperator(a.degree() + b.degree(), [a, b, sign](const VForm& s) {
    VForm first = a(b(s));
    VForm second = b(a(s));
    if (sign > 0) second = -second;
    return form_add(first, second);
  });
}

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
  return GradedOperator(a.degree(), [a, b](const VForm& s) { return form_add(a(s), b(s)); });
}

GradedOperator scaled(const GradedOperator& a, const Rational& c) {
  return GradedOperator(a.degree(), [a, c](const VForm& s) { return a(s).scaled(c); });
}

} // namespace fncalc
