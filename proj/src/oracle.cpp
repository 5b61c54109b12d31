#include "fncalc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "fncalc/errors.hpp"
#include "fncalc/parallel.hpp"

namespace fncalc::oracle {

namespace {

// Parity of a word by local inversion count; the oracle keeps its own copy.
int word_sign(const std::vector<int>& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

// Value of f on a frame tuple, resolved by sorting a copy of the tuple.
std::vector<Poly> frame_value(const VForm& f, std::vector<int> idx) {
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1] == sorted[i])
      return std::vector<Poly>(static_cast<std::size_t>(f.target().rank), Poly(f.nvars()));
  int sign = word_sign(idx);
  auto v = f.component(sorted);
  if (sign < 0)
    for (auto& p : v) p = -p;
  return v;
}

} // namespace

std::vector<Poly> eval_multilinear(const VForm& f, const std::vector<Section>& args) {
  if (static_cast<int>(args.size()) != f.degree())
    throw StructuralError("argument count differs from form degree");
  const int k = f.degree();
  const int r = f.source_rank();
  std::vector<Poly> out(static_cast<std::size_t>(f.target().rank), Poly(f.nvars()));
  if (k == 0) return f.component({});
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  while (true) {
    Poly c = Poly::constant(f.nvars(), Rational(1));
    for (int t = 0; t < k && !c.is_zero(); ++t) c *= args[t].coeffs[tuple[t]];
    if (!c.is_zero()) {
      auto v = frame_value(f, tuple);
      for (std::size_t i = 0; i < out.size(); ++i)
        if (!v[i].is_zero()) out[i] += c * v[i];
    }
    int pos = k - 1;
    while (pos >= 0 && tuple[pos] == r - 1) tuple[pos--] = 0;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return out;
}

VForm insert_bruteforce(const VForm& phi, const VForm& psi) {
  if (phi.target().kind != Target::Kind::Algebroid)
    throw StructuralError("insertion requires an algebroid-valued form");
  const int p = phi.degree(), q = psi.degree();
  const int out_deg = std::max(p + q - 1, -1);
  VForm out(phi.source_rank(), phi.nvars(), out_deg, psi.target());
  if (q <= 0 || phi.is_zero() || psi.is_zero()) return out;
  const int m = out_deg;
  const Rational norm =
      Rational(1) / (Rational::factorial(static_cast<unsigned>(p)) *
                     Rational::factorial(static_cast<unsigned>(q - 1)));
  for (auto& idx : increasing_tuples(phi.source_rank(), m)) {
    std::vector<Poly> acc(static_cast<std::size_t>(psi.target().rank), Poly(psi.nvars()));
    std::vector<int> pos(static_cast<std::size_t>(m));
    std::iota(pos.begin(), pos.end(), 0);
    do {
      const int sign = word_sign(pos);
      std::vector<int> first(static_cast<std::size_t>(p));
      for (int t = 0; t < p; ++t) first[t] = idx[pos[t]];
      auto u = frame_value(phi, first);
      Section usec{u};
      if (usec.is_zero()) continue;
      std::vector<Section> args;
      args.reserve(static_cast<std::size_t>(q));
      args.push_back(std::move(usec));
      for (int t = p; t < m; ++t) {
        Section e = zero_section(phi.source_rank(), phi.nvars());
        e.coeffs[idx[pos[t]]] = Poly::constant(phi.nvars(), Rational(1));
        args.push_back(std::move(e));
      }
      auto w = eval_multilinear(psi, args);
      for (std::size_t i = 0; i < acc.size(); ++i) {
        if (w[i].is_zero()) continue;
        acc[i] += (sign < 0) ? -w[i] : w[i];
      }
    } while (std::next_permutation(pos.begin(), pos.end()));
    for (auto& a : acc) a = a.scaled(norm);
    out.set_component(idx, std::move(acc));
  }
  return out;
}

namespace {

// Lazily evaluated scalar form: alternating multilinear map from sections to
// the coefficient ring. Operator compositions stay symbolic; everything is
// resolved on section tuples straight from the defining sums.
struct LazyForm {
  int degree = 0;
  bool zero = false;
  std::function<Poly(const std::vector<Section>&)> eval;
};

LazyForm lazy_zero(int nvars, int degree) {
  LazyForm f;
  f.degree = degree;
  f.zero = true;
  f.eval = [nvars](const std::vector<Section>&) { return Poly(nvars); };
  return f;
}

LazyForm lazy_dual(const Algebroid& A, int c) {
  LazyForm f;
  f.degree = 1;
  f.eval = [c](const std::vector<Section>& args) { return args[0].coeffs[c]; };
  return f;
}

// i_phi by the full alternation over all permutations, divided by p! k!.
LazyForm lazy_insert(const Algebroid& A, const VForm& phi, const LazyForm& inner) {
  const int p = phi.degree();
  const int out_deg = std::max(p + inner.degree - 1, -1);
  if (phi.is_zero() || inner.zero || inner.degree == 0) return lazy_zero(A.nvars(), out_deg);
  LazyForm f;
  f.degree = out_deg;
  const Rational norm =
      Rational(1) / (Rational::factorial(static_cast<unsigned>(p)) *
                     Rational::factorial(static_cast<unsigned>(inner.degree - 1)));
  f.eval = [&A, phi, inner, p, norm](const std::vector<Section>& args) {
    const int m = static_cast<int>(args.size());
    Poly acc(A.nvars());
    std::vector<int> pos(static_cast<std::size_t>(m));
    std::iota(pos.begin(), pos.end(), 0);
    do {
      const int sign = word_sign(pos);
      std::vector<Section> first;
      first.reserve(static_cast<std::size_t>(p));
      for (int t = 0; t < p; ++t) first.push_back(args[pos[t]]);
      Section u{eval_multilinear(phi, first)};
      if (u.is_zero()) continue;
      std::vector<Section> rest;
      rest.reserve(static_cast<std::size_t>(m - p + 1));
      rest.push_back(std::move(u));
      for (int t = p; t < m; ++t) rest.push_back(args[pos[t]]);
      Poly v = inner.eval(rest);
      if (v.is_zero()) continue;
      acc += (sign < 0) ? -v : v;
    } while (std::next_permutation(pos.begin(), pos.end()));
    return acc.scaled(norm);
  };
  return f;
}

// Scalar-form differential of the canonical flat line-bundle connection,
// written as full alternation sums.
LazyForm lazy_d(const Algebroid& A, const LazyForm& inner) {
  const int q = inner.degree;
  if (inner.zero) return lazy_zero(A.nvars(), q + 1);
  LazyForm f;
  f.degree = q + 1;
  const Rational norm1 = Rational(1) / Rational::factorial(static_cast<unsigned>(q));
  const Rational norm2 =
      q >= 1 ? Rational(1) / (Rational(2) * Rational::factorial(static_cast<unsigned>(q - 1)))
             : Rational(0);
  f.eval = [&A, inner, q, norm1, norm2](const std::vector<Section>& args) {
    const int m = q + 1;
    Poly acc1(A.nvars()), acc2(A.nvars());
    std::vector<int> pos(static_cast<std::size_t>(m));
    std::iota(pos.begin(), pos.end(), 0);
    do {
      const int sign = word_sign(pos);
      std::vector<Section> rest;
      rest.reserve(static_cast<std::size_t>(q));
      for (int t = 1; t < m; ++t) rest.push_back(args[pos[t]]);
      Poly v = anchor_apply(A, args[pos[0]], inner.eval(rest));
      if (!v.is_zero()) acc1 += (sign < 0) ? -v : v;
      if (q >= 1) {
        std::vector<Section> brest;
        brest.reserve(static_cast<std::size_t>(q));
        brest.push_back(bracket(A, args[pos[0]], args[pos[1]]));
        for (int t = 2; t < m; ++t) brest.push_back(args[pos[t]]);
        Poly w = inner.eval(brest);
        if (!w.is_zero()) acc2 += (sign < 0) ? -w : w;
      }
    } while (std::next_permutation(pos.begin(), pos.end()));
    return acc1.scaled(norm1) - acc2.scaled(norm2);
  };
  return f;
}

LazyForm lazy_scale(const LazyForm& a, const Rational& c) {
  LazyForm f;
  f.degree = a.degree;
  f.zero = a.zero || c.is_zero();
  f.eval = [a, c](const std::vector<Section>& args) { return a.eval(args).scaled(c); };
  return f;
}

LazyForm lazy_add(const LazyForm& a, const LazyForm& b) {
  if (a.zero) return b;
  if (b.zero) return a;
  LazyForm f;
  f.degree = a.degree;
  f.eval = [a, b](const std::vector<Section>& args) { return a.eval(args) + b.eval(args); };
  return f;
}

// L_phi = [i_phi, d] = i_phi d + (-1)^k d i_phi on scalar forms.
LazyForm lazy_lie(const Algebroid& A, const VForm& phi, const LazyForm& inner) {
  const int k = phi.degree();
  LazyForm first = lazy_insert(A, phi, lazy_d(A, inner));
  LazyForm second = lazy_d(A, lazy_insert(A, phi, inner));
  return lazy_add(first, lazy_scale(second, Rational(parity_sign(k))));
}

} // namespace

VForm fn_extract(const Algebroid& A, const Connection& connA, const VForm& phi,
                 const VForm& psi) {
  if (phi.target().kind != Target::Kind::Algebroid ||
      psi.target().kind != Target::Kind::Algebroid)
    throw StructuralError("fn_extract requires algebroid-valued forms");
  if (!is_torsion_free(A, connA))
    throw PreconditionError("fn_extract requires a torsion-free connection");
  const int k = phi.degree(), l = psi.degree();
  const int m = std::max(k + l, -1);
  VForm out(A.rank(), A.nvars(), m, Target::algebroid(A));
  if (phi.is_zero() || psi.is_zero()) return out;
  const Rational sgn(parity_sign(static_cast<long long>(k) * (l - 1)));
  const VForm ipsi_phi = insert_bruteforce(psi, phi);
  std::vector<Section> frame;
  for (int a = 0; a < A.rank(); ++a) frame.push_back(A.basis(a));
  for (auto& idx : increasing_tuples(A.rank(), m)) {
    std::vector<Section> args;
    args.reserve(idx.size());
    for (int a : idx) args.push_back(frame[a]);
    std::vector<Poly> v;
    v.reserve(static_cast<std::size_t>(A.rank()));
    for (int c = 0; c < A.rank(); ++c) {
      LazyForm ec = lazy_dual(A, c);
      LazyForm t1 = lazy_lie(A, phi, lazy_insert(A, psi, ec));
      LazyForm t2 = lazy_insert(A, psi, lazy_lie(A, phi, ec));
      LazyForm t3 = lazy_lie(A, ipsi_phi, ec);
      LazyForm o = lazy_add(t1, lazy_add(lazy_scale(t2, -sgn), lazy_scale(t3, sgn)));
      v.push_back(o.zero ? Poly(A.nvars()) : o.eval(args));
    }
    out.set_component(idx, std::move(v));
  }
  return out;
}

bool VerificationReport::passed() const {
  for (auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::size_t VerificationReport::num_passed() const {
  std::size_t n = 0;
  for (auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

std::string VerificationReport::str() const {
  std::ostringstream os;
  os << "suite=" << suite << " algebroid=" << algebroid << " seed=" << config.seed
     << " seeds=" << config.num_seeds << " checks=" << checks.size()
     << " passed=" << num_passed() << " status=" << (passed() ? "pass" : "FAIL") << "\n";
  for (auto& c : checks) {
    os << "[" << (c.pass ? "pass" : "FAIL") << "] identity=" << c.identity << " instance=\""
       << c.instance << "\" formula=\"" << c.formula << "\"\n";
    if (!c.pass && !c.witness.empty()) os << "  witness: " << c.witness << "\n";
  }
  return os.str();
}

namespace {

using CheckFn = std::function<std::pair<bool, std::string>()>;

struct JobList {
  std::vector<CheckResult> headers;
  std::vector<CheckFn> fns;

  void add(std::string identity, std::string formula, std::string instance, CheckFn fn) {
    CheckResult c;
    c.identity = std::move(identity);
    c.formula = std::move(formula);
    c.instance = std::move(instance);
    headers.push_back(std::move(c));
    fns.push_back(std::move(fn));
  }
};

std::string witness_forms(const VForm& lhs, const VForm& rhs) {
  return "lhs = " + lhs.str() + " | rhs = " + rhs.str();
}

std::pair<bool, std::string> expect_equal(const VForm& lhs, const VForm& rhs) {
  if (lhs == rhs) return {true, {}};
  return {false, witness_forms(lhs, rhs)};
}

std::string inst_str(std::uint64_t s, std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  os << "seed=" << s;
  for (auto& [k, v] : kv) os << " " << k << "=" << v;
  return os.str();
}

constexpr const char* kFormulaRN =
    "[i_phi, i_psi] = i_{i_phi psi} - (-1)^{(k-1)(l-1)} i_{i_psi phi}";
constexpr const char* kFormulaBrute =
    "sum over (p,k)-shuffles = full alternation sum / (p! k!)";
constexpr const char* kFormulaIcov =
    "[nabla_phi, i_psi] = i_{nabla_phi psi} - (-1)^{k(l-1)} nabla_{i_psi phi}";
constexpr const char* kFormulaCovcov =
    "[nabla_phi, nabla_psi] = nabla_{nabla_phi psi} - (-1)^{kl} nabla_{nabla_psi phi} - "
    "i_{R(phi,psi)}";
constexpr const char* kFormulaMain =
    "[phi,psi]_FN = L_phi psi - (-1)^{kl} L_psi phi";
constexpr const char* kFormulaDefFN =
    "[L_phi, i_psi] = i_{[phi,psi]_FN} - (-1)^{k(l-1)} L_{i_psi phi}";

void build_rn(JobList& jobs, const Algebroid& A, const SuiteConfig& cfg) {
  const Target tA = Target::algebroid(A);
  for (int s = 0; s < cfg.num_seeds; ++s)
    for (int k = 0; k <= cfg.max_phi_degree; ++k)
      for (int l = 0; l <= cfg.max_phi_degree; ++l) {
        const std::uint64_t jseed = mix_seed(cfg.seed + s, 101 + k * 8 + l);
        jobs.add("insert-commutator", kFormulaRN, inst_str(s, {{"k", k}, {"l", l}}),
                 [=, &A]() -> std::pair<bool, std::string> {
                   SplitMix64 rng(jseed);
                   const int erank = rng.range(1, cfg.max_bundle_rank);
                   const Target tE = Target::bundle(erank);
                   VForm phi = random_vform(rng, A, k, tA, cfg.poly_degree, cfg.coeff_bound);
                   VForm psi = random_vform(rng, A, l, tA, cfg.poly_degree, cfg.coeff_bound);
                   const int sgn = parity_sign(static_cast<long long>(k - 1) * (l - 1));
                   VForm iphipsi = insert(phi, psi);
                   VForm ipsiphi = insert(psi, phi);
                   for (int q = 0; q <= A.rank(); ++q) {
                     VForm w = random_vform(rng, A, q, tE, cfg.poly_degree, cfg.coeff_bound);
                     VForm second = insert(psi, insert(phi, w));
                     if (sgn > 0) second = -second;
                     VForm lhs = form_add(insert(phi, insert(psi, w)), second);
                     VForm second2 = insert(ipsiphi, w);
                     if (sgn > 0) second2 = -second2;
                     VForm rhs = form_add(insert(iphipsi, w), second2);
                     if (!(lhs == rhs))
                       return {false, "q=" + std::to_string(q) + ": " + witness_forms(lhs, rhs)};
                   }
                   return {true, {}};
                 });
      }
  // shuffle-vs-permutation cross-check of the insertion kernel
  for (int s = 0; s < cfg.num_seeds; ++s)
    for (int p = 0; p <= std::min(A.rank(), 3); ++p)
      for (int qd = 0; qd <= std::min(A.rank(), 3); ++qd) {
        if (p + qd - 1 > 4) continue;
        const std::uint64_t jseed = mix_seed(cfg.seed + s, 401 + p * 8 + qd);
        jobs.add("insert-vs-bruteforce", kFormulaBrute,
                 inst_str(s, {{"p", p}, {"psi_degree", qd}}),
                 [=, &A]() -> std::pair<bool, std::string> {
                   SplitMix64 rng(jseed);
                   const int erank = rng.range(1, cfg.max_bundle_rank);
                   VForm phi = random_vform(rng, A, p, tA, cfg.poly_degree, cfg.coeff_bound);
                   VForm psi = random_vform(rng, A, qd, Target::bundle(erank), cfg.poly_degree,
                                            cfg.coeff_bound);
                   return expect_equal(insert_bruteforce(phi, psi), insert(phi, psi));
                 });
      }
}

void build_icov(JobList& jobs, const Algebroid& A, const SuiteConfig& cfg) {
  const Target tA = Target::algebroid(A);
  for (int s = 0; s < cfg.num_seeds; ++s)
    for (int k = 0; k <= cfg.max_phi_degree; ++k)
      for (int l = 0; l <= cfg.max_phi_degree; ++l) {
        const std::uint64_t jseed = mix_seed(cfg.seed + s, 1001 + k * 8 + l);
        jobs.add("covphi-insert-commutator", kFormulaIcov, inst_str(s, {{"k", k}, {"l", l}}),
                 [=, &A]() -> std::pair<bool, std::string> {
                   SplitMix64 rng(jseed);
                   Connection connA =
                       random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
                   const int erank = rng.range(1, cfg.max_bundle_rank);
                   const Target tE = Target::bundle(erank);
                   Connection connE =
                       random_connection(rng, A, tE, cfg.poly_degree, cfg.coeff_bound);
                   VForm phi = random_vform(rng, A, k, tA, cfg.poly_degree, cfg.coeff_bound);
                   VForm psi = random_vform(rng, A, l, tA, cfg.poly_degree, cfg.coeff_bound);
                   VForm cphipsi = cov_phi(A, connA, connA, phi, psi);
                   VForm ipsiphi = insert(psi, phi);
                   const int sgn = parity_sign(static_cast<long long>(k) * (l - 1));
                   for (int q = 0; q <= A.rank(); ++q) {
                     VForm w = random_vform(rng, A, q, tE, cfg.poly_degree, cfg.coeff_bound);
                     VForm second = insert(psi, cov_phi(A, connA, connE, phi, w));
                     if (sgn > 0) second = -second;
                     VForm lhs =
                         form_add(cov_phi(A, connA, connE, phi, insert(psi, w)), second);
                     VForm second2 = cov_phi(A, connA, connE, ipsiphi, w);
                     if (sgn > 0) second2 = -second2;
                     VForm rhs = form_add(insert(cphipsi, w), second2);
                     if (!(lhs == rhs))
                       return {false, "q=" + std::to_string(q) + ": " + witness_forms(lhs, rhs)};
                   }
                   return {true, {}};
                 });
      }
}

void build_covcov(JobList& jobs, const Algebroid& A, const SuiteConfig& cfg) {
  const Target tA = Target::algebroid(A);
  for (int s = 0; s < cfg.num_seeds; ++s)
    for (int k = 0; k <= cfg.max_phi_degree; ++k)
      for (int l = 0; l <= cfg.max_phi_degree; ++l)
        for (int flat_rank = 1; flat_rank <= 2; ++flat_rank) {
          const std::uint64_t jseed = mix_seed(cfg.seed + s, 2001 + k * 32 + l * 4 + flat_rank);
          jobs.add("covphi-commutator", kFormulaCovcov,
                   inst_str(s, {{"k", k}, {"l", l}, {"flat_rank", flat_rank}}),
                   [=, &A]() -> std::pair<bool, std::string> {
                     SplitMix64 rng(jseed);
                     Connection connA =
                         random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
                     // flat connection on E: the anchor connection on the
                     // trivial line bundle, or the zero table on rank 2
                     Connection connE = flat_rank == 1
                                            ? anchor_connection(A)
                                            : Connection(A, Target::bundle(2));
                     if (!curvature(A, connE).is_zero())
                       return {false, "chosen connection on E is not flat"};
                     VForm phi = random_vform(rng, A, k, tA, cfg.poly_degree, cfg.coeff_bound);
                     VForm psi = random_vform(rng, A, l, tA, cfg.poly_degree, cfg.coeff_bound);
                     VForm cpp = cov_phi(A, connA, connA, phi, psi);
                     VForm cpp2 = cov_phi(A, connA, connA, psi, phi);
                     VForm rext = r_extended(A, connA, phi, psi);
                     const int sgn = parity_sign(static_cast<long long>(k) * l);
                     for (int q = 0; q <= A.rank(); ++q) {
                       VForm w = random_vform(rng, A, q, connE.bundle(), cfg.poly_degree,
                                              cfg.coeff_bound);
                       VForm second =
                           cov_phi(A, connA, connE, psi, cov_phi(A, connA, connE, phi, w));
                       if (sgn > 0) second = -second;
                       VForm lhs = form_add(
                           cov_phi(A, connA, connE, phi, cov_phi(A, connA, connE, psi, w)),
                           second);
                       VForm second2 = cov_phi(A, connA, connE, cpp2, w);
                       if (sgn > 0) second2 = -second2;
                       VForm rhs =
                           form_sub(form_add(cov_phi(A, connA, connE, cpp, w), second2),
                                    insert(rext, w));
                       if (!(lhs == rhs))
                         return {false,
                                 "q=" + std::to_string(q) + ": " + witness_forms(lhs, rhs)};
                     }
                     return {true, {}};
                   });
        }
  if (A.rank() >= 2)
    for (int s = 0; s < cfg.num_seeds; ++s) {
      const std::uint64_t jseed = mix_seed(cfg.seed + s, 2901);
      jobs.add("torsionful-rejected", "nabla_phi requires torsion-free nabla on A",
               inst_str(s, {}), [=, &A]() -> std::pair<bool, std::string> {
                 SplitMix64 rng(jseed);
                 Connection bad = random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
                 bad.set_christoffel(
                     0, 1, 0, bad.christoffel(0, 1, 0) + Poly::constant(A.nvars(), Rational(1)));
                 VForm phi = random_vform(rng, A, 1, Target::algebroid(A), cfg.poly_degree,
                                          cfg.coeff_bound);
                 VForm w = random_vform(rng, A, 1, Target::scalar(), cfg.poly_degree,
                                        cfg.coeff_bound);
                 try {
                   cov_phi(A, bad, anchor_connection(A), phi, w);
                 } catch (const PreconditionError&) {
                   return {true, {}};
                 }
                 return {false, "torsionful connection was accepted"};
               });
    }
}

void build_main(JobList& jobs, const Algebroid& A, const SuiteConfig& cfg) {
  const Target tA = Target::algebroid(A);
  for (int s = 0; s < cfg.num_seeds; ++s)
    for (int k = 0; k <= cfg.max_phi_degree; ++k)
      for (int l = 0; l <= cfg.max_phi_degree; ++l) {
        const std::uint64_t jseed = mix_seed(cfg.seed + s, 3001 + k * 8 + l);
        const auto inst = inst_str(s, {{"k", k}, {"l", l}});
        jobs.add("fn-vs-extract", kFormulaDefFN, inst,
                 [=, &A]() -> std::pair<bool, std::string> {
                   SplitMix64 rng(jseed);
                   Connection connA =
                       random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
                   VForm phi = random_vform(rng, A, k, tA, cfg.poly_degree, cfg.coeff_bound);
                   VForm psi = random_vform(rng, A, l, tA, cfg.poly_degree, cfg.coeff_bound);
                   return expect_equal(fn_bracket(A, connA, phi, psi),
                                       fn_extract(A, connA, phi, psi));
                 });
        jobs.add("fn-connection-independence", kFormulaMain, inst,
                 [=, &A]() -> std::pair<bool, std::string> {
                   SplitMix64 rng(jseed);
                   Connection c1 = random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
                   VForm phi = random_vform(rng, A, k, tA, cfg.poly_degree, cfg.coeff_bound);
                   VForm psi = random_vform(rng, A, l, tA, cfg.poly_degree, cfg.coeff_bound);
                   Connection c2 = random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
                   return expect_equal(fn_bracket(A, c1, phi, psi), fn_bracket(A, c2, phi, psi));
                 });
        jobs.add("fn-graded-antisymmetry", "[phi,psi] = -(-1)^{kl} [psi,phi]", inst,
                 [=, &A]() -> std::pair<bool, std::string> {
                   SplitMix64 rng(jseed);
                   Connection connA =
                       random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
                   VForm phi = random_vform(rng, A, k, tA, cfg.poly_degree, cfg.coeff_bound);
                   VForm psi = random_vform(rng, A, l, tA, cfg.poly_degree, cfg.coeff_bound);
                   VForm other = fn_bracket(A, connA, psi, phi);
                   if (parity_sign(static_cast<long long>(k) * l) < 0) other = -other;
                   VForm sum = form_add(fn_bracket(A, connA, phi, psi), other);
                   if (sum.is_zero()) return {true, {}};
                   return {false, "sum = " + sum.str()};
                 });
        if (k == 0 && l == 0)
          jobs.add("fn-degree0-bracket", "[X,Y]_FN = [X,Y]", inst,
                   [=, &A]() -> std::pair<bool, std::string> {
                     SplitMix64 rng(jseed);
                     Connection connA =
                         random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
                     VForm phi = random_vform(rng, A, 0, tA, cfg.poly_degree, cfg.coeff_bound);
                     VForm psi = random_vform(rng, A, 0, tA, cfg.poly_degree, cfg.coeff_bound);
                     VForm b = fn_bracket(A, connA, phi, psi);
                     Section expect =
                         bracket(A, Section{phi.component({})}, Section{psi.component({})});
                     return expect_equal(b, form_of_section(A, expect, tA));
                   });
      }
  // supplementary: graded Jacobi (not asserted by the operator identities
  // above; a failure here indicates an implementation bug)
  for (int s = 0; s < cfg.num_seeds; ++s)
    for (int k = 0; k <= cfg.max_phi_degree; ++k)
      for (int l = 0; l <= cfg.max_phi_degree; ++l)
        for (int m = 0; m <= cfg.max_phi_degree; ++m) {
          if (k + l + m > A.rank()) continue;
          const std::uint64_t jseed = mix_seed(cfg.seed + s, 3601 + k * 64 + l * 8 + m);
          jobs.add("fn-graded-jacobi",
                   "[phi,[psi,chi]] = [[phi,psi],chi] + (-1)^{kl} [psi,[phi,chi]]",
                   inst_str(s, {{"k", k}, {"l", l}, {"m", m}}),
                   [=, &A]() -> std::pair<bool, std::string> {
                     SplitMix64 rng(jseed);
                     Connection connA =
                         random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
                     VForm phi = random_vform(rng, A, k, tA, cfg.poly_degree, cfg.coeff_bound);
                     VForm psi = random_vform(rng, A, l, tA, cfg.poly_degree, cfg.coeff_bound);
                     VForm chi = random_vform(rng, A, m, tA, cfg.poly_degree, cfg.coeff_bound);
                     VForm lhs = fn_bracket(A, connA, phi, fn_bracket(A, connA, psi, chi));
                     VForm t2 = fn_bracket(A, connA, psi, fn_bracket(A, connA, phi, chi));
                     if (parity_sign(static_cast<long long>(k) * l) < 0) t2 = -t2;
                     VForm rhs =
                         form_add(fn_bracket(A, connA, fn_bracket(A, connA, phi, psi), chi), t2);
                     return expect_equal(lhs, rhs);
                   });
        }
}

void build_derivations(JobList& jobs, const Algebroid& A, const SuiteConfig& cfg) {
  const Target tA = Target::algebroid(A);
  struct Law {
    const char* identity;
    const char* formula;
  };
  for (int s = 0; s < cfg.num_seeds; ++s)
    for (int k = 0; k <= cfg.max_phi_degree; ++k) {
      const std::uint64_t jseed = mix_seed(cfg.seed + s, 4001 + k);
      const auto inst = inst_str(s, {{"k", k}});
      auto data = [=, &A](SplitMix64& rng) {
        Connection connA = random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
        const int erank = rng.range(1, cfg.max_bundle_rank);
        Connection connE =
            random_connection(rng, A, Target::bundle(erank), cfg.poly_degree, cfg.coeff_bound);
        VForm phi = random_vform(rng, A, k, tA, cfg.poly_degree, cfg.coeff_bound);
        return std::tuple(connA, connE, phi);
      };
      jobs.add("insert-derivation",
               "i_phi(w ^ s) = (i_phi w) ^ s + (-1)^{(k-1) deg w} w ^ (i_phi s)", inst,
               [=, &A]() -> std::pair<bool, std::string> {
                 SplitMix64 rng(jseed);
                 auto [connA, connE, phi] = data(rng);
                 for (int p = 0; p <= A.rank(); ++p)
                   for (int q = 0; q <= A.rank(); ++q) {
                     VForm w = random_vform(rng, A, p, Target::scalar(), cfg.poly_degree,
                                            cfg.coeff_bound);
                     VForm sE = random_vform(rng, A, q, connE.bundle(), cfg.poly_degree,
                                             cfg.coeff_bound);
                     VForm second = wedge(w, insert(phi, sE));
                     if (parity_sign(static_cast<long long>(k - 1) * p) < 0) second = -second;
                     VForm rhs = form_add(wedge(insert(phi, w), sE), second);
                     VForm lhs = insert(phi, wedge(w, sE));
                     if (!(lhs == rhs))
                       return {false, "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                          ": " + witness_forms(lhs, rhs)};
                   }
                 return {true, {}};
               });
      jobs.add("exterior-derivation", "d(w ^ s) = dw ^ s + (-1)^{deg w} w ^ ds", inst,
               [=, &A]() -> std::pair<bool, std::string> {
                 SplitMix64 rng(jseed);
                 auto [connA, connE, phi] = data(rng);
                 Connection dscalar = anchor_connection(A);
                 for (int p = 0; p <= A.rank(); ++p)
                   for (int q = 0; q <= A.rank(); ++q) {
                     VForm w = random_vform(rng, A, p, Target::scalar(), cfg.poly_degree,
                                            cfg.coeff_bound);
                     VForm sE = random_vform(rng, A, q, connE.bundle(), cfg.poly_degree,
                                             cfg.coeff_bound);
                     VForm second = wedge(w, d_nabla(A, connE, sE));
                     if (parity_sign(p) < 0) second = -second;
                     VForm rhs = form_add(wedge(d_nabla(A, dscalar, w), sE), second);
                     VForm lhs = d_nabla(A, connE, wedge(w, sE));
                     if (!(lhs == rhs))
                       return {false, "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                          ": " + witness_forms(lhs, rhs)};
                   }
                 return {true, {}};
               });
      jobs.add("lie-derivation",
               "L_phi(w ^ s) = (L_phi w) ^ s + (-1)^{k deg w} w ^ (L_phi s)", inst,
               [=, &A]() -> std::pair<bool, std::string> {
                 SplitMix64 rng(jseed);
                 auto [connA, connE, phi] = data(rng);
                 Connection dscalar = anchor_connection(A);
                 for (int p = 0; p <= A.rank(); ++p)
                   for (int q = 0; q <= A.rank(); ++q) {
                     VForm w = random_vform(rng, A, p, Target::scalar(), cfg.poly_degree,
                                            cfg.coeff_bound);
                     VForm sE = random_vform(rng, A, q, connE.bundle(), cfg.poly_degree,
                                             cfg.coeff_bound);
                     VForm second = wedge(w, lie_deriv(A, connE, phi, sE));
                     if (parity_sign(static_cast<long long>(k) * p) < 0) second = -second;
                     VForm rhs = form_add(wedge(lie_deriv(A, dscalar, phi, w), sE), second);
                     VForm lhs = lie_deriv(A, connE, phi, wedge(w, sE));
                     if (!(lhs == rhs))
                       return {false, "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                          ": " + witness_forms(lhs, rhs)};
                   }
                 return {true, {}};
               });
      jobs.add("covphi-derivation",
               "nabla_phi(w ^ s) = (nabla_phi w) ^ s + (-1)^{k deg w} w ^ (nabla_phi s)", inst,
               [=, &A]() -> std::pair<bool, std::string> {
                 SplitMix64 rng(jseed);
                 auto [connA, connE, phi] = data(rng);
                 Connection dscalar = anchor_connection(A);
                 for (int p = 0; p <= A.rank(); ++p)
                   for (int q = 0; q <= A.rank(); ++q) {
                     VForm w = random_vform(rng, A, p, Target::scalar(), cfg.poly_degree,
                                            cfg.coeff_bound);
                     VForm sE = random_vform(rng, A, q, connE.bundle(), cfg.poly_degree,
                                             cfg.coeff_bound);
                     VForm second = wedge(w, cov_phi(A, connA, connE, phi, sE));
                     if (parity_sign(static_cast<long long>(k) * p) < 0) second = -second;
                     VForm rhs =
                         form_add(wedge(cov_phi(A, connA, dscalar, phi, w), sE), second);
                     VForm lhs = cov_phi(A, connA, connE, phi, wedge(w, sE));
                     if (!(lhs == rhs))
                       return {false, "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                          ": " + witness_forms(lhs, rhs)};
                   }
                 return {true, {}};
               });
      jobs.add("covphi-tensoriality", "nabla_{w ^ phi} s = w ^ (nabla_phi s)", inst,
               [=, &A]() -> std::pair<bool, std::string> {
                 SplitMix64 rng(jseed);
                 auto [connA, connE, phi] = data(rng);
                 for (int p = 0; p <= A.rank(); ++p)
                   for (int q = 0; q <= A.rank(); ++q) {
                     VForm w = random_vform(rng, A, p, Target::scalar(), cfg.poly_degree,
                                            cfg.coeff_bound);
                     VForm sE = random_vform(rng, A, q, connE.bundle(), cfg.poly_degree,
                                             cfg.coeff_bound);
                     VForm lhs = cov_phi(A, connA, connE, wedge(w, phi), sE);
                     VForm rhs = wedge(w, cov_phi(A, connA, connE, phi, sE));
                     if (!(lhs == rhs))
                       return {false, "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                          ": " + witness_forms(lhs, rhs)};
                   }
                 return {true, {}};
               });
    }
}

void build_dsquare(JobList& jobs, const Algebroid& A, const SuiteConfig& cfg) {
  for (int s = 0; s < cfg.num_seeds; ++s) {
    const std::uint64_t jseed = mix_seed(cfg.seed + s, 5001);
    jobs.add("dsquare-curvature", "(d^nabla)^2 phi = sum_{(2,p)-shuffles} R(.,.) phi(..)",
             inst_str(s, {}), [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               const int erank = rng.range(1, cfg.max_bundle_rank);
               Connection connE = random_connection(rng, A, Target::bundle(erank),
                                                    cfg.poly_degree, cfg.coeff_bound);
               for (int q = 0; q <= A.rank(); ++q) {
                 VForm phi =
                     random_vform(rng, A, q, connE.bundle(), cfg.poly_degree, cfg.coeff_bound);
                 if (!d_nabla_squared_matches(A, connE, phi))
                   return {false, "mismatch at degree " + std::to_string(q)};
               }
               return {true, {}};
             });
    jobs.add("dsquare-flat", "(d^nabla)^2 = 0 for flat nabla", inst_str(s, {}),
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               Connection line = anchor_connection(A);
               Connection rank2(A, Target::bundle(2));
               for (int q = 0; q <= A.rank(); ++q) {
                 VForm w = random_vform(rng, A, q, Target::scalar(), cfg.poly_degree,
                                        cfg.coeff_bound);
                 if (!d_nabla(A, line, d_nabla(A, line, w)).is_zero())
                   return {false, "d^2 != 0 on scalars at degree " + std::to_string(q)};
                 VForm sE = random_vform(rng, A, q, Target::bundle(2), cfg.poly_degree,
                                         cfg.coeff_bound);
                 if (!d_nabla(A, rank2, d_nabla(A, rank2, sE)).is_zero())
                   return {false, "d^2 != 0 on rank-2 bundle at degree " + std::to_string(q)};
               }
               return {true, {}};
             });
  }
}

void build_tensoriality(JobList& jobs, const Algebroid& A, const SuiteConfig& cfg) {
  const Target tA = Target::algebroid(A);
  for (int s = 0; s < cfg.num_seeds; ++s) {
    const std::uint64_t jseed = mix_seed(cfg.seed + s, 6001);
    const auto inst = inst_str(s, {});
    jobs.add("torsion-tensorial", "T(X,Y) = nabla_X Y - nabla_Y X - [X,Y]", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               Connection connA =
                   random_connection(rng, A, tA, cfg.poly_degree, cfg.coeff_bound);
               Section X = random_section(rng, A.rank(), A.nvars(), cfg.poly_degree,
                                          cfg.coeff_bound);
               Section Y = random_section(rng, A.rank(), A.nvars(), cfg.poly_degree,
                                          cfg.coeff_bound);
               Section direct = section_sub(
                   section_sub(cov_deriv(A, connA, X, Y), cov_deriv(A, connA, Y, X)),
                   bracket(A, X, Y));
               Section viaform = eval_form(torsion(A, connA), {X, Y});
               if (direct == viaform) return {true, {}};
               return {false, "table gives " + viaform.str() + ", formula gives " +
                                  direct.str()};
             });
    jobs.add("curvature-tensorial",
             "R(X,Y)s = nabla_X nabla_Y s - nabla_Y nabla_X s - nabla_[X,Y] s", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               const int erank = rng.range(1, cfg.max_bundle_rank);
               Connection connE = random_connection(rng, A, Target::bundle(erank),
                                                    cfg.poly_degree, cfg.coeff_bound);
               Section X = random_section(rng, A.rank(), A.nvars(), cfg.poly_degree,
                                          cfg.coeff_bound);
               Section Y = random_section(rng, A.rank(), A.nvars(), cfg.poly_degree,
                                          cfg.coeff_bound);
               Section sE = random_section(rng, erank, A.nvars(), cfg.poly_degree,
                                           cfg.coeff_bound);
               Section direct = section_sub(
                   section_sub(cov_deriv(A, connE, X, cov_deriv(A, connE, Y, sE)),
                               cov_deriv(A, connE, Y, cov_deriv(A, connE, X, sE))),
                   cov_deriv(A, connE, bracket(A, X, Y), sE));
               Section viatable = curvature(A, connE).apply(X, Y, sE);
               if (direct == viatable) return {true, {}};
               return {false, "table gives " + viatable.str() + ", formula gives " +
                                  direct.str()};
             });
    jobs.add("symmetrize-projection", "torsion(symmetrize(nabla)) = 0, idempotent", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               Connection connA =
                   random_connection(rng, A, tA, cfg.poly_degree, cfg.coeff_bound);
               Connection sym = symmetrize(A, connA);
               if (!torsion(A, sym).is_zero()) return {false, "symmetrized torsion nonzero"};
               if (!(symmetrize(A, sym) == sym)) return {false, "not idempotent"};
               return {true, {}};
             });
    jobs.add("anchor-connection-flat", "curvature(nabla^rho) = 0", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               if (curvature(A, anchor_connection(A)).is_zero()) return {true, {}};
               return {false, "anchor connection has nonzero curvature"};
             });
    jobs.add("eval-tensorial", "phi(fX, Y) = f phi(X, Y); repeated argument gives 0", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               const int deg = std::min(2, A.rank());
               VForm phi = random_vform(rng, A, deg, tA, cfg.poly_degree, cfg.coeff_bound);
               Section X = random_section(rng, A.rank(), A.nvars(), cfg.poly_degree,
                                          cfg.coeff_bound);
               Section Y = random_section(rng, A.rank(), A.nvars(), cfg.poly_degree,
                                          cfg.coeff_bound);
               Poly f = random_poly(rng, A.nvars(), cfg.poly_degree, cfg.coeff_bound);
               std::vector<Section> args1, args2, rep;
               if (deg == 2) {
                 args1 = {section_scale(X, f), Y};
                 args2 = {X, Y};
                 rep = {X, X};
               } else {
                 args1 = {section_scale(X, f)};
                 args2 = {X};
               }
               Section lhs = eval_form(phi, args1);
               Section rhs = section_scale(eval_form(phi, args2), f);
               if (!(lhs == rhs)) return {false, "not tensorial in the first slot"};
               if (deg == 2 && !eval_form(phi, rep).is_zero())
                 return {false, "repeated argument does not vanish"};
               return {true, {}};
             });
    jobs.add("wedge-graded-commutative", "w ^ e = (-1)^{pq} e ^ w on scalars", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               for (int p = 0; p <= A.rank(); ++p)
                 for (int q = 0; q <= A.rank(); ++q) {
                   VForm w = random_vform(rng, A, p, Target::scalar(), cfg.poly_degree,
                                          cfg.coeff_bound);
                   VForm e = random_vform(rng, A, q, Target::scalar(), cfg.poly_degree,
                                          cfg.coeff_bound);
                   VForm other = wedge(e, w);
                   if (parity_sign(static_cast<long long>(p) * q) < 0) other = -other;
                   if (!(wedge(w, e) == other))
                     return {false, "p=" + std::to_string(p) + " q=" + std::to_string(q)};
                 }
               return {true, {}};
             });
    jobs.add("insert-identity", "i_id psi = (deg psi) psi", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               VForm id = identity_one_form(A);
               for (int q = 0; q <= A.rank(); ++q) {
                 const int erank = rng.range(1, cfg.max_bundle_rank);
                 VForm psi = random_vform(rng, A, q, Target::bundle(erank), cfg.poly_degree,
                                          cfg.coeff_bound);
                 VForm expect = q == 0 ? VForm(A.rank(), A.nvars(), -1, psi.target())
                                       : psi.scaled(Rational(q));
                 if (!(insert(id, psi) == expect))
                   return {false, "q=" + std::to_string(q)};
               }
               return {true, {}};
             });
    jobs.add("insert-injective", "phi is recovered from {i_phi e^c}", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               const int deg = rng.range(0, A.rank());
               VForm phi = random_vform(rng, A, deg, tA, cfg.poly_degree, cfg.coeff_bound);
               VForm rebuilt(A.rank(), A.nvars(), deg, tA);
               for (auto& idx : increasing_tuples(A.rank(), deg)) {
                 std::vector<Poly> v;
                 for (int c = 0; c < A.rank(); ++c)
                   v.push_back(eval_frame(insert(phi, dual_frame_one_form(A, c)), idx)[0]);
                 rebuilt.set_component(idx, std::move(v));
               }
               return expect_equal(rebuilt, phi);
             });
    jobs.add("bracket-leibniz", "[X, fY] = f[X,Y] + (rho(X)f) Y", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               Section X = random_section(rng, A.rank(), A.nvars(), cfg.poly_degree,
                                          cfg.coeff_bound);
               Section Y = random_section(rng, A.rank(), A.nvars(), cfg.poly_degree,
                                          cfg.coeff_bound);
               Poly f = random_poly(rng, A.nvars(), cfg.poly_degree, cfg.coeff_bound);
               Section lhs = bracket(A, X, section_scale(Y, f));
               Section rhs = section_add(section_scale(bracket(A, X, Y), f),
                                         section_scale(Y, anchor_apply(A, X, f)));
               if (lhs == rhs) return {true, {}};
               return {false, "lhs = " + lhs.str() + ", rhs = " + rhs.str()};
             });
    jobs.add("jacobi-sections", "[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y] = 0", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               Section X = random_section(rng, A.rank(), A.nvars(), 2, cfg.coeff_bound);
               Section Y = random_section(rng, A.rank(), A.nvars(), 2, cfg.coeff_bound);
               Section Z = random_section(rng, A.rank(), A.nvars(), 2, cfg.coeff_bound);
               Section sum = section_add(
                   section_add(bracket(A, bracket(A, X, Y), Z),
                               bracket(A, bracket(A, Y, Z), X)),
                   bracket(A, bracket(A, Z, X), Y));
               if (sum.is_zero()) return {true, {}};
               return {false, "cyclic sum = " + sum.str()};
             });
    jobs.add("anchor-morphism-sections", "rho([X,Y])f = rho(X)rho(Y)f - rho(Y)rho(X)f", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               Section X = random_section(rng, A.rank(), A.nvars(), 2, cfg.coeff_bound);
               Section Y = random_section(rng, A.rank(), A.nvars(), 2, cfg.coeff_bound);
               Poly f = random_poly(rng, A.nvars(), 3, cfg.coeff_bound);
               Poly lhs = anchor_apply(A, bracket(A, X, Y), f);
               Poly rhs = anchor_apply(A, X, anchor_apply(A, Y, f)) -
                          anchor_apply(A, Y, anchor_apply(A, X, f));
               if (lhs == rhs) return {true, {}};
               return {false, "lhs = " + lhs.str() + ", rhs = " + rhs.str()};
             });
    jobs.add("lie-x-decomposition", "L_X s = nabla_X s + i_{d^nabla X} s", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               Connection connA = random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
               const int erank = rng.range(1, cfg.max_bundle_rank);
               Connection connE = random_connection(rng, A, Target::bundle(erank),
                                                    cfg.poly_degree, cfg.coeff_bound);
               Section X = random_section(rng, A.rank(), A.nvars(), cfg.poly_degree,
                                          cfg.coeff_bound);
               VForm Xform = form_of_section(A, X, tA);
               for (int q = 0; q <= A.rank(); ++q) {
                 VForm sE = random_vform(rng, A, q, connE.bundle(), cfg.poly_degree,
                                         cfg.coeff_bound);
                 VForm lhs = lie_deriv(A, connE, Xform, sE);
                 VForm rhs = form_add(nabla_x_form(A, connA, connE, X, sE),
                                      insert(d_nabla(A, connA, Xform), sE));
                 if (!(lhs == rhs)) return {false, "q=" + std::to_string(q)};
                 VForm viaphi = cov_phi(A, connA, connE, Xform, sE);
                 if (!(viaphi == nabla_x_form(A, connA, connE, X, sE)))
                   return {false, "nabla_phi at degree 0 differs from nabla_X, q=" +
                                      std::to_string(q)};
               }
               return {true, {}};
             });
    jobs.add("r-extended-bruteforce",
             "R(phi,psi) shuffle sum = full alternation sum / (k! l!)", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               Connection connA = random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
               CurvatureTensor R = curvature(A, connA);
               const int k = rng.range(0, std::max(0, std::min(2, A.rank() - 1)));
               const int l = rng.range(0, std::max(0, std::min(2, A.rank() - 1 - k)));
               VForm phi = random_vform(rng, A, k, tA, cfg.poly_degree, cfg.coeff_bound);
               VForm psi = random_vform(rng, A, l, tA, cfg.poly_degree, cfg.coeff_bound);
               VForm fast = r_extended(A, connA, phi, psi);
               // full-permutation evaluation of the same trilinear sum
               const int m = k + l + 1;
               VForm slow(A.rank(), A.nvars(), m, tA);
               const Rational norm =
                   Rational(1) / (Rational::factorial(static_cast<unsigned>(k)) *
                                  Rational::factorial(static_cast<unsigned>(l)));
               for (auto& idx : increasing_tuples(A.rank(), m)) {
                 std::vector<Poly> acc(static_cast<std::size_t>(A.rank()), Poly(A.nvars()));
                 std::vector<int> pos(static_cast<std::size_t>(m));
                 std::iota(pos.begin(), pos.end(), 0);
                 do {
                   const int sign = word_sign(pos);
                   std::vector<int> b1(static_cast<std::size_t>(k)),
                       b2(static_cast<std::size_t>(l));
                   for (int t = 0; t < k; ++t) b1[t] = idx[pos[t]];
                   for (int t = 0; t < l; ++t) b2[t] = idx[pos[k + t]];
                   Section u{frame_value(phi, b1)};
                   if (u.is_zero()) continue;
                   Section v{frame_value(psi, b2)};
                   if (v.is_zero()) continue;
                   Section w = R.apply(u, v, A.basis(idx[pos[m - 1]]));
                   for (int i = 0; i < A.rank(); ++i) {
                     if (w.coeffs[i].is_zero()) continue;
                     acc[i] += (sign < 0) ? -w.coeffs[i] : w.coeffs[i];
                   }
                 } while (std::next_permutation(pos.begin(), pos.end()));
                 for (auto& a : acc) a = a.scaled(norm);
                 slow.set_component(idx, std::move(acc));
               }
               return expect_equal(fast, slow);
             });
    jobs.add("r-extended-wedge", "R(a ^ X, b ^ Y) = a ^ b ^ R(X,Y)", inst,
             [=, &A]() -> std::pair<bool, std::string> {
               SplitMix64 rng(jseed);
               Connection connA = random_torsion_free(rng, A, cfg.poly_degree, cfg.coeff_bound);
               const int k = rng.range(0, 1), l = rng.range(0, 1);
               VForm a = random_vform(rng, A, k, Target::scalar(), cfg.poly_degree,
                                      cfg.coeff_bound);
               VForm b = random_vform(rng, A, l, Target::scalar(), cfg.poly_degree,
                                      cfg.coeff_bound);
               VForm X = random_vform(rng, A, 0, tA, cfg.poly_degree, cfg.coeff_bound);
               VForm Y = random_vform(rng, A, 0, tA, cfg.poly_degree, cfg.coeff_bound);
               VForm lhs = r_extended(A, connA, wedge(a, X), wedge(b, Y));
               VForm rhs = wedge(wedge(a, b), r_extended(A, connA, X, Y));
               return expect_equal(lhs, rhs);
             });
  }
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "rn", "icov", "covcov", "main", "derivations", "dsquare", "tensoriality"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const Algebroid& A,
                             const std::string& algebroid_name, const SuiteConfig& cfg) {
  JobList jobs;
  if (suite == "rn")
    build_rn(jobs, A, cfg);
  else if (suite == "icov")
    build_icov(jobs, A, cfg);
  else if (suite == "covcov")
    build_covcov(jobs, A, cfg);
  else if (suite == "main")
    build_main(jobs, A, cfg);
  else if (suite == "derivations")
    build_derivations(jobs, A, cfg);
  else if (suite == "dsquare")
    build_dsquare(jobs, A, cfg);
  else if (suite == "tensoriality")
    build_tensoriality(jobs, A, cfg);
  else
    throw ParseError("unknown suite '" + suite + "'");

  VerificationReport rep;
  rep.suite = suite;
  rep.algebroid = algebroid_name;
  rep.config = cfg;
  rep.checks = std::move(jobs.headers);
  parallel_for(rep.checks.size(), [&](std::size_t i) {
    auto& c = rep.checks[i];
    try {
      auto [ok, wit] = jobs.fns[i]();
      c.pass = ok;
      c.witness = std::move(wit);
    } catch (const std::exception& e) {
      c.pass = false;
      c.witness = std::string("exception: ") + e.what();
    }
  });
  return rep;
}

} // namespace fncalc::oracle
