#include "fncalc/rng.hpp"

namespace fncalc {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 m(a ^ (0x9E3779B97F4A7C15ull + (b << 6) + (b >> 2)));
  m.next();
  return m.next() ^ b;
}

namespace {
void monomials_up_to(int nvars, int max_degree, Poly::Exps& cur, int pos, int left,
                     std::vector<Poly::Exps>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= left; ++e) {
    cur[pos] = e;
    monomials_up_to(nvars, max_degree, cur, pos + 1, left - e, out);
  }
  cur[pos] = 0;
}
} // namespace

Poly random_poly(SplitMix64& rng, int nvars, int max_degree, int coeff_bound) {
  std::vector<Poly::Exps> mons;
  Poly::Exps cur(nvars, 0);
  monomials_up_to(nvars, max_degree, cur, 0, max_degree, mons);
  Poly p(nvars);
  for (auto& e : mons) {
    int c = rng.range(-coeff_bound, coeff_bound);
    if (c != 0) p += Poly::monomial(nvars, e, Rational(c));
  }
  return p;
}

Section random_section(SplitMix64& rng, int rank, int nvars, int max_degree, int coeff_bound) {
  Section s = zero_section(rank, nvars);
  for (auto& c : s.coeffs) c = random_poly(rng, nvars, max_degree, coeff_bound);
  return s;
}

VForm random_vform(SplitMix64& rng, const Algebroid& A, int degree, Target target,
                   int max_degree, int coeff_bound) {
  VForm f(A.rank(), A.nvars(), degree, target);
  for (auto& idx : increasing_tuples(A.rank(), degree)) {
    std::vector<Poly> v;
    v.reserve(static_cast<std::size_t>(target.rank));
    for (int i = 0; i < target.rank; ++i)
      v.push_back(random_poly(rng, A.nvars(), max_degree, coeff_bound));
    f.set_component(idx, std::move(v));
  }
  return f;
}

Connection random_connection(SplitMix64& rng, const Algebroid& A, Target bundle, int max_degree,
                             int coeff_bound) {
  Connection conn(A, bundle);
  for (int a = 0; a < A.rank(); ++a)
    for (int alpha = 0; alpha < bundle.rank; ++alpha)
      for (int beta = 0; beta < bundle.rank; ++beta)
        conn.set_christoffel(a, alpha, beta, random_poly(rng, A.nvars(), max_degree, coeff_bound));
  return conn;
}

Connection random_torsion_free(SplitMix64& rng, const Algebroid& A, int max_degree,
                               int coeff_bound) {
  return symmetrize(A, random_connection(rng, A, Target::algebroid(A), max_degree, coeff_bound));
}

} // namespace fncalc
