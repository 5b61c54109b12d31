#include "fncalc/connection.hpp"

#include "fncalc/errors.hpp"

namespace fncalc {

namespace {

Poly anchor_frame_apply(const Algebroid& A, int a, const Poly& f) {
  Poly out(A.nvars());
  for (int i = 0; i < A.nvars(); ++i) {
    if (A.anchor(a, i).is_zero()) continue;
    Poly df = f.partial(i + 1);
    if (!df.is_zero()) out += A.anchor(a, i) * df;
  }
  return out;
}

Section bundle_basis(int rank, int nvars, int alpha) {
  Section s = zero_section(rank, nvars);
  s.coeffs[alpha] = Poly::constant(nvars, Rational(1));
  return s;
}

} // namespace

Connection::Connection(const Algebroid& A, Target bundle)
    : source_rank_(A.rank()), nvars_(A.nvars()), bundle_(bundle) {
  if (bundle_.kind == Target::Kind::Algebroid && bundle_.rank != A.rank())
    throw StructuralError("algebroid-target connection with wrong rank");
  gamma_.assign(static_cast<std::size_t>(source_rank_) * bundle_.rank * bundle_.rank,
                Poly(nvars_));
}

int Connection::idx(int a, int alpha, int beta) const {
  const int m = bundle_.rank;
  if (a < 0 || a >= source_rank_ || alpha < 0 || alpha >= m || beta < 0 || beta >= m)
    throw StructuralError("christoffel index out of range");
  return (a * m + alpha) * m + beta;
}

const Poly& Connection::christoffel(int a, int alpha, int beta) const {
  return gamma_[idx(a, alpha, beta)];
}

void Connection::set_christoffel(int a, int alpha, int beta, Poly p) {
  if (p.nvars() != nvars_) throw StructuralError("christoffel entry over wrong variable count");
  gamma_[idx(a, alpha, beta)] = std::move(p);
}

Section cov_deriv(const Algebroid& A, const Connection& conn, const Section& X,
                  const Section& s) {
  if (conn.source_rank() != A.rank() || conn.nvars() != A.nvars())
    throw StructuralError("connection over a different algebroid");
  if (X.rank() != A.rank()) throw StructuralError("direction is not a section of the algebroid");
  const int m = conn.bundle().rank;
  if (s.rank() != m) throw StructuralError("section does not belong to the connection's bundle");
  Section out = zero_section(m, A.nvars());
  for (int beta = 0; beta < m; ++beta) {
    Poly v(A.nvars());
    for (int a = 0; a < A.rank(); ++a) {
      if (X.coeffs[a].is_zero()) continue;
      Poly term = anchor_frame_apply(A, a, s.coeffs[beta]);
      for (int alpha = 0; alpha < m; ++alpha) {
        const Poly& g = conn.christoffel(a, alpha, beta);
        if (!g.is_zero() && !s.coeffs[alpha].is_zero()) term += s.coeffs[alpha] * g;
      }
      if (!term.is_zero()) v += X.coeffs[a] * term;
    }
    out.coeffs[beta] = std::move(v);
  }
  return out;
}

VForm torsion(const Algebroid& A, const Connection& connA) {
  if (connA.bundle().kind != Target::Kind::Algebroid)
    throw StructuralError("torsion requires a connection on the algebroid itself");
  VForm T(A.rank(), A.nvars(), 2, Target::algebroid(A));
  for (int a = 0; a < A.rank(); ++a)
    for (int b = a + 1; b < A.rank(); ++b) {
      std::vector<Poly> v;
      v.reserve(A.rank());
      for (int c = 0; c < A.rank(); ++c)
        v.push_back(connA.christoffel(a, b, c) - connA.christoffel(b, a, c) -
                    A.structure(a, b, c));
      T.set_component({a, b}, std::move(v));
    }
  return T;
}

bool is_torsion_free(const Algebroid& A, const Connection& connA) {
  return torsion(A, connA).is_zero();
}

Connection symmetrize(const Algebroid& A, const Connection& connA) {
  VForm T = torsion(A, connA);
  Connection out = connA;
  const Rational half(1, 2);
  for (int a = 0; a < A.rank(); ++a)
    for (int b = 0; b < A.rank(); ++b) {
      if (a == b) continue;
      auto t = eval_frame(T, {a, b});
      for (int c = 0; c < A.rank(); ++c) {
        if (t[c].is_zero()) continue;
        out.set_christoffel(a, b, c, connA.christoffel(a, b, c) - t[c].scaled(half));
      }
    }
  return out;
}

CurvatureTensor::CurvatureTensor(int source_rank, int nvars, int bundle_rank)
    : source_rank_(source_rank), nvars_(nvars), bundle_rank_(bundle_rank) {
  comps_.assign(static_cast<std::size_t>(source_rank * (source_rank - 1) / 2) * bundle_rank *
                    bundle_rank,
                Poly(nvars));
}

namespace {
int pair_index(int r, int a, int b) { return a * r - a * (a + 1) / 2 + (b - a - 1); }
} // namespace

const Poly& CurvatureTensor::entry(int a, int b, int alpha, int beta) const {
  if (!(0 <= a && a < b && b < source_rank_))
    throw StructuralError("curvature pair must satisfy a < b");
  const int m = bundle_rank_;
  return comps_[(pair_index(source_rank_, a, b) * m + alpha) * m + beta];
}

void CurvatureTensor::set_entry(int a, int b, int alpha, int beta, Poly p) {
  if (!(0 <= a && a < b && b < source_rank_))
    throw StructuralError("curvature pair must satisfy a < b");
  const int m = bundle_rank_;
  comps_[(pair_index(source_rank_, a, b) * m + alpha) * m + beta] = std::move(p);
}

Section CurvatureTensor::apply_frame(int a, int b, const Section& s) const {
  if (s.rank() != bundle_rank_) throw StructuralError("section rank differs from bundle rank");
  Section out = zero_section(bundle_rank_, nvars_);
  if (a == b) return out;
  const bool flip = a > b;
  if (flip) std::swap(a, b);
  for (int beta = 0; beta < bundle_rank_; ++beta) {
    Poly v(nvars_);
    for (int alpha = 0; alpha < bundle_rank_; ++alpha) {
      const Poly& e = entry(a, b, alpha, beta);
      if (!e.is_zero() && !s.coeffs[alpha].is_zero()) v += s.coeffs[alpha] * e;
    }
    out.coeffs[beta] = flip ? -v : std::move(v);
  }
  return out;
}

Section CurvatureTensor::apply(const Section& X, const Section& Y, const Section& s) const {
  if (X.rank() != source_rank_ || Y.rank() != source_rank_)
    throw StructuralError("curvature arguments are not algebroid sections");
  Section out = zero_section(bundle_rank_, nvars_);
  for (int a = 0; a < source_rank_; ++a)
    for (int b = a + 1; b < source_rank_; ++b) {
      Poly c = X.coeffs[a] * Y.coeffs[b] - X.coeffs[b] * Y.coeffs[a];
      if (c.is_zero()) continue;
      Section rab = apply_frame(a, b, s);
      for (int beta = 0; beta < bundle_rank_; ++beta)
        if (!rab.coeffs[beta].is_zero()) out.coeffs[beta] += c * rab.coeffs[beta];
    }
  return out;
}

bool CurvatureTensor::is_zero() const {
  for (auto& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

CurvatureTensor curvature(const Algebroid& A, const Connection& conn) {
  const int m = conn.bundle().rank;
  CurvatureTensor R(A.rank(), A.nvars(), m);
  for (int a = 0; a < A.rank(); ++a)
    for (int b = a + 1; b < A.rank(); ++b) {
      Section ea = A.basis(a), eb = A.basis(b);
      Section br = bracket(A, ea, eb);
      for (int alpha = 0; alpha < m; ++alpha) {
        Section s = bundle_basis(m, A.nvars(), alpha);
        Section v = section_sub(
            section_sub(cov_deriv(A, conn, ea, cov_deriv(A, conn, eb, s)),
                        cov_deriv(A, conn, eb, cov_deriv(A, conn, ea, s))),
            cov_deriv(A, conn, br, s));
        for (int beta = 0; beta < m; ++beta)
          if (!v.coeffs[beta].is_zero()) R.set_entry(a, b, alpha, beta, v.coeffs[beta]);
      }
    }
  return R;
}

Connection anchor_connection(const Algebroid& A) { return Connection(A, Target::scalar()); }

VForm d_nabla(const Algebroid& A, const Connection& connE, const VForm& phi) {
  if (phi.source_rank() != A.rank() || phi.nvars() != A.nvars())
    throw StructuralError("form over a different algebroid");
  if (!(connE.bundle() == phi.target()))
    throw StructuralError("connection bundle differs from the form's target");
  const int p = phi.degree();
  if (p < 0 || phi.is_zero())
    return VForm(A.rank(), A.nvars(), p + 1, phi.target());
  const int m = phi.target().rank;
  auto sh1 = shuffles(1, p);
  auto sh2 = shuffles(2, p - 1);
  return build_form(A.rank(), A.nvars(), p + 1, phi.target(), [&](const MultiIndex& idx) {
    std::vector<Poly> acc(static_cast<std::size_t>(m), Poly(A.nvars()));
    // sum of covariant derivatives along one argument
    MultiIndex rest(p);
    for (auto& sh : sh1) {
      for (int t = 0; t < p; ++t) rest[t] = idx[sh.perm[1 + t]];
      Section v{phi.component(rest)};
      if (v.is_zero()) continue;
      Section dv = cov_deriv(A, connE, A.basis(idx[sh.perm[0]]), v);
      for (int i = 0; i < m; ++i) {
        if (dv.coeffs[i].is_zero()) continue;
        acc[i] += (sh.sign < 0) ? -dv.coeffs[i] : dv.coeffs[i];
      }
    }
    // bracket correction sum
    std::vector<int> args(static_cast<std::size_t>(p));
    for (auto& sh : sh2) {
      const int a = idx[sh.perm[0]], b = idx[sh.perm[1]];
      for (int t = 0; t < p - 1; ++t) args[1 + t] = idx[sh.perm[2 + t]];
      for (int c = 0; c < A.rank(); ++c) {
        Poly sc = A.structure(a, b, c);
        if (sc.is_zero()) continue;
        args[0] = c;
        auto w = eval_frame(phi, args);
        if (sh.sign < 0) sc = -sc;
        for (int i = 0; i < m; ++i)
          if (!w[i].is_zero()) acc[i] -= sc * w[i];
      }
    }
    return acc;
  });
}

VForm curvature_action(const Algebroid& A, const CurvatureTensor& R, const VForm& phi) {
  const int p = phi.degree();
  if (p < 0 || phi.is_zero()) return VForm(A.rank(), A.nvars(), p + 2, phi.target());
  const int m = phi.target().rank;
  if (R.bundle_rank() != m) throw StructuralError("curvature bundle differs from form target");
  auto sh2 = shuffles(2, p);
  return build_form(A.rank(), A.nvars(), p + 2, phi.target(), [&](const MultiIndex& idx) {
    std::vector<Poly> acc(static_cast<std::size_t>(m), Poly(A.nvars()));
    MultiIndex rest(p);
    for (auto& sh : sh2) {
      for (int t = 0; t < p; ++t) rest[t] = idx[sh.perm[2 + t]];
      Section v{phi.component(rest)};
      if (v.is_zero()) continue;
      Section rv = R.apply_frame(idx[sh.perm[0]], idx[sh.perm[1]], v);
      for (int i = 0; i < m; ++i) {
        if (rv.coeffs[i].is_zero()) continue;
        acc[i] += (sh.sign < 0) ? -rv.coeffs[i] : rv.coeffs[i];
      }
    }
    return acc;
  });
}

bool d_nabla_squared_matches(const Algebroid& A, const Connection& connE, const VForm& phi) {
  VForm dd = d_nabla(A, connE, d_nabla(A, connE, phi));
  VForm ra = curvature_action(A, curvature(A, connE), phi);
  return dd == ra;
}

VForm nabla_x_form(const Algebroid& A, const Connection& connA, const Connection& connE,
                   const Section& X, const VForm& s) {
  if (connA.bundle().kind != Target::Kind::Algebroid)
    throw StructuralError("nabla_x_form requires a connection on the algebroid itself");
  if (!(connE.bundle() == s.target()))
    throw StructuralError("connection bundle differs from the form's target");
  if (X.rank() != A.rank()) throw StructuralError("direction is not a section of the algebroid");
  const int p = s.degree();
  if (p < 0 || s.is_zero()) return VForm(A.rank(), A.nvars(), p, s.target());
  const int m = s.target().rank;
  // nabla^A_X e_b over the frame, computed once
  std::vector<Section> dframe;
  dframe.reserve(A.rank());
  for (int b = 0; b < A.rank(); ++b) dframe.push_back(cov_deriv(A, connA, X, A.basis(b)));
  return build_form(A.rank(), A.nvars(), p, s.target(), [&](const MultiIndex& idx) {
    Section lead = cov_deriv(A, connE, X, Section{s.component(idx)});
    std::vector<Poly> acc = std::move(lead.coeffs);
    std::vector<int> args = idx;
    for (int t = 0; t < p; ++t) {
      const Section& u = dframe[idx[t]];
      for (int b = 0; b < A.rank(); ++b) {
        if (u.coeffs[b].is_zero()) continue;
        args[t] = b;
        auto w = eval_frame(s, args);
        for (int i = 0; i < m; ++i)
          if (!w[i].is_zero()) acc[i] -= u.coeffs[b] * w[i];
      }
      args[t] = idx[t];
    }
    return acc;
  });
}

} // namespace fncalc
