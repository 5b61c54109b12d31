#include "fncalc/vform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fncalc/errors.hpp"

namespace fncalc {

Target Target::algebroid(const Algebroid& A) { return {Kind::Algebroid, A.rank()}; }

Target Target::bundle(int m) {
  if (m < 1) throw StructuralError("bundle rank must be positive");
  return {Kind::Bundle, m};
}

std::string Target::str() const {
  switch (kind) {
    case Kind::Scalar: return "scalar";
    case Kind::Algebroid: return "A";
    case Kind::Bundle: return "bundle(" + std::to_string(rank) + ")";
  }
  return "?";
}

std::vector<MultiIndex> increasing_tuples(int r, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > r) return out;
  MultiIndex cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == r - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int perm_sign(const std::vector<int>& word) {
  int inv = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

std::vector<Shuffle> shuffles(int k, int s) {
  std::vector<Shuffle> out;
  if (k < 0 || s < 0) return out;
  const int m = k + s;
  for (auto& first : increasing_tuples(m, k)) {
    Shuffle sh;
    sh.perm = first;
    std::vector<char> used(m, 0);
    for (int v : first) used[v] = 1;
    for (int v = 0; v < m; ++v)
      if (!used[v]) sh.perm.push_back(v);
    sh.sign = perm_sign(sh.perm);
    out.push_back(std::move(sh));
  }
  return out;
}

std::vector<Shuffle> shuffles3(int k, int l, int s) {
  std::vector<Shuffle> out;
  if (k < 0 || l < 0 || s < 0) return out;
  const int m = k + l + s;
  for (auto& first : increasing_tuples(m, k)) {
    std::vector<char> used(m, 0);
    for (int v : first) used[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < m; ++v)
      if (!used[v]) rest.push_back(v);
    for (auto& mid : increasing_tuples(m - k, l)) {
      Shuffle sh;
      sh.perm = first;
      std::vector<char> taken(rest.size(), 0);
      for (int pos : mid) {
        sh.perm.push_back(rest[pos]);
        taken[pos] = 1;
      }
      for (std::size_t t = 0; t < rest.size(); ++t)
        if (!taken[t]) sh.perm.push_back(rest[t]);
      sh.sign = perm_sign(sh.perm);
      out.push_back(std::move(sh));
    }
  }
  return out;
}

VForm::VForm(int source_rank, int nvars, int degree, Target target)
    : source_rank_(source_rank), nvars_(nvars), degree_(degree), target_(target) {
  if (source_rank < 1) throw StructuralError("form over a rank-0 frame");
  if (degree < -1) degree_ = -1; // deeper underflow is still just zero
}

VForm VForm::zero(const Algebroid& A, int degree, Target target) {
  return VForm(A.rank(), A.nvars(), degree, target);
}

void VForm::check_index(const MultiIndex& idx) const {
  if (static_cast<int>(idx.size()) != degree_)
    throw StructuralError("multi-index length differs from form degree");
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0 || idx[i] >= source_rank_)
      throw StructuralError("multi-index entry out of frame range");
    if (i > 0 && idx[i - 1] >= idx[i])
      throw StructuralError("multi-index not strictly increasing");
  }
}

std::vector<Poly> VForm::component(const MultiIndex& idx) const {
  auto it = comps_.find(idx);
  if (it != comps_.end()) return it->second;
  return std::vector<Poly>(static_cast<std::size_t>(target_.rank), Poly(nvars_));
}

void VForm::set_component(MultiIndex idx, std::vector<Poly> value) {
  check_index(idx);
  if (static_cast<int>(value.size()) != target_.rank)
    throw StructuralError("component value length differs from target rank");
  bool zero = true;
  for (auto& p : value) {
    if (p.nvars() != nvars_) throw StructuralError("component entry over wrong variable count");
    zero = zero && p.is_zero();
  }
  if (zero)
    comps_.erase(idx);
  else
    comps_[std::move(idx)] = std::move(value);
}

VForm VForm::operator-() const {
  VForm r(source_rank_, nvars_, degree_, target_);
  for (auto& [idx, v] : comps_) {
    std::vector<Poly> nv;
    nv.reserve(v.size());
    for (auto& p : v) nv.push_back(-p);
    r.comps_.emplace(idx, std::move(nv));
  }
  return r;
}

VForm VForm::scaled(const Rational& c) const {
  VForm r(source_rank_, nvars_, degree_, target_);
  if (c.is_zero()) return r;
  for (auto& [idx, v] : comps_) {
    std::vector<Poly> nv;
    nv.reserve(v.size());
    for (auto& p : v) nv.push_back(p.scaled(c));
    r.comps_.emplace(idx, std::move(nv));
  }
  return r;
}

std::string VForm::str() const {
  std::ostringstream os;
  os << "form(deg=" << degree_ << ", target=" << target_.str() << ")";
  if (comps_.empty()) {
    os << " 0";
    return os.str();
  }
  for (auto& [idx, v] : comps_) {
    os << "\n  [";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i] + 1;
    os << "] -> (";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
    os << ")";
  }
  return os.str();
}

namespace {
void check_compatible(const VForm& a, const VForm& b) {
  if (a.source_rank() != b.source_rank() || a.nvars() != b.nvars())
    throw StructuralError("forms over different algebroids");
}
} // namespace

VForm form_add(const VForm& a, const VForm& b) {
  check_compatible(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() != b.degree() || !(a.target() == b.target()))
    throw StructuralError("sum of forms of different degree or target");
  VForm r = a;
  for (auto& [idx, v] : b.components()) {
    auto cur = r.component(idx);
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += v[i];
    r.set_component(idx, std::move(cur));
  }
  return r;
}

VForm form_sub(const VForm& a, const VForm& b) { return form_add(a, -b); }

bool operator==(const VForm& a, const VForm& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.source_rank() == b.source_rank() && a.nvars() == b.nvars() &&
         a.degree() == b.degree() && a.target() == b.target() &&
         a.components() == b.components();
}

std::vector<Poly> eval_frame(const VForm& f, std::vector<int> idx) {
  if (static_cast<int>(idx.size()) != f.degree())
    throw StructuralError("frame tuple length differs from form degree");
  // insertion sort with swap parity; repeated index kills the term
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j])
        return std::vector<Poly>(static_cast<std::size_t>(f.target().rank), Poly(f.nvars()));
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  auto v = f.component(idx);
  if (sign < 0)
    for (auto& p : v) p = -p;
  return v;
}

Section eval_form(const VForm& f, const std::vector<Section>& args) {
  if (static_cast<int>(args.size()) != f.degree())
    throw StructuralError("argument count differs from form degree");
  for (auto& a : args)
    if (a.rank() != f.source_rank())
      throw StructuralError("argument section does not belong to the source algebroid");
  const int k = f.degree();
  Section out = zero_section(f.target().rank, f.nvars());
  for (auto& [idx, v] : f.components()) {
    // sum over all assignments of the index entries to argument slots
    std::vector<int> perm = idx;
    do {
      Poly c = Poly::constant(f.nvars(), Rational(perm_sign(perm)));
      for (int t = 0; t < k; ++t) {
        c *= args[t].coeffs[perm[t]];
        if (c.is_zero()) break;
      }
      if (c.is_zero()) continue;
      for (int i = 0; i < f.target().rank; ++i) out.coeffs[i] += c * v[i];
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

VForm wedge(const VForm& omega, const VForm& phi) {
  check_compatible(omega, phi);
  if (omega.target().kind != Target::Kind::Scalar)
    throw StructuralError("wedge requires a scalar-valued first factor");
  const int k = omega.degree(), p = phi.degree();
  if (omega.is_zero() || phi.is_zero())
    return VForm(omega.source_rank(), omega.nvars(), std::max(k + p, -1), phi.target());
  auto shs = shuffles(k, p);
  return build_form(
      omega.source_rank(), omega.nvars(), k + p, phi.target(), [&](const MultiIndex& idx) {
        std::vector<Poly> acc(static_cast<std::size_t>(phi.target().rank), Poly(phi.nvars()));
        MultiIndex first(k), rest(p);
        for (auto& sh : shs) {
          for (int t = 0; t < k; ++t) first[t] = idx[sh.perm[t]];
          for (int t = 0; t < p; ++t) rest[t] = idx[sh.perm[k + t]];
          Poly w = omega.component(first)[0];
          if (w.is_zero()) continue;
          auto pv = phi.component(rest);
          if (sh.sign < 0) w = -w;
          for (std::size_t i = 0; i < acc.size(); ++i)
            if (!pv[i].is_zero()) acc[i] += w * pv[i];
        }
        return acc;
      });
}

VForm insert(const VForm& phi, const VForm& psi) {
  check_compatible(phi, psi);
  if (phi.target().kind != Target::Kind::Algebroid)
    throw StructuralError("insertion requires an algebroid-valued form");
  const int p = phi.degree(), q = psi.degree();
  const int out_deg = std::max(p + q - 1, -1);
  if (q <= 0 || phi.is_zero() || psi.is_zero())
    return VForm(phi.source_rank(), phi.nvars(), out_deg, psi.target());
  const int r = phi.source_rank();
  auto shs = shuffles(p, q - 1);
  return build_form(
      phi.source_rank(), phi.nvars(), out_deg, psi.target(), [&](const MultiIndex& idx) {
        std::vector<Poly> acc(static_cast<std::size_t>(psi.target().rank), Poly(psi.nvars()));
        MultiIndex first(p);
        std::vector<int> args(static_cast<std::size_t>(q));
        for (auto& sh : shs) {
          for (int t = 0; t < p; ++t) first[t] = idx[sh.perm[t]];
          for (int t = 0; t < q - 1; ++t) args[1 + t] = idx[sh.perm[p + t]];
          auto u = phi.component(first);
          for (int c = 0; c < r; ++c) {
            if (u[c].is_zero()) continue;
            args[0] = c;
            auto w = eval_frame(psi, args);
            Poly coeff = (sh.sign < 0) ? -u[c] : u[c];
            for (std::size_t i = 0; i < acc.size(); ++i)
              if (!w[i].is_zero()) acc[i] += coeff * w[i];
          }
        }
        return acc;
      });
}

VForm dual_frame_one_form(const Algebroid& A, int c) {
  VForm f(A.rank(), A.nvars(), 1, Target::scalar());
  f.set_component({c}, {Poly::constant(A.nvars(), Rational(1))});
  return f;
}

VForm identity_one_form(const Algebroid& A) {
  VForm f(A.rank(), A.nvars(), 1, Target::algebroid(A));
  for (int a = 0; a < A.rank(); ++a) f.set_component({a}, A.basis(a).coeffs);
  return f;
}

VForm form_of_section(const Algebroid& A, const Section& s, Target target) {
  if (s.rank() != target.rank)
    throw StructuralError("section rank differs from target rank");
  VForm f(A.rank(), A.nvars(), 0, target);
  f.set_component({}, s.coeffs);
  return f;
}

Section section_of_form(const VForm& f) {
  if (f.degree() != 0) throw StructuralError("not a degree-0 form");
  return Section{f.component({})};
}

} // namespace fncalc
