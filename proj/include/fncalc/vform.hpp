#ifndef FNCALC_VFORM_HPP
#define FNCALC_VFORM_HPP

#include <map>
#include <string>
#include <vector>

#include "fncalc/algebroid.hpp"
#include "fncalc/parallel.hpp"

namespace fncalc {

/// Value bundle of a form: the trivial line bundle, the algebroid itself, or
/// a plain rank-m bundle.
struct Target {
  enum class Kind { Scalar, Algebroid, Bundle } kind = Kind::Scalar;
  int rank = 1;

  static Target scalar() { return {Kind::Scalar, 1}; }
  static Target algebroid(const class Algebroid& A);
  static Target bundle(int m);
  friend bool operator==(const Target&, const Target&) = default;
  std::string str() const;
};

/// Strictly increasing tuple of 0-based frame indices.
using MultiIndex = std::vector<int>;

/// All strictly increasing k-tuples from {0..r-1}, lexicographic order.
/// Empty for k < 0 or k > r; the single empty tuple for k = 0.
std::vector<MultiIndex> increasing_tuples(int r, int k);

/// A block-ascending permutation together with its parity.
struct Shuffle {
  std::vector<int> perm; // images sigma(0), sigma(1), ... (0-based)
  int sign = 1;
};

/// (k,s)-shuffles of {0..k+s-1}: ascending on the first k slots and on the
/// last s slots. Exactly binom(k+s, k) of them.
std::vector<Shuffle> shuffles(int k, int s);
/// (k,l,s)-shuffles: ascending on each of the three blocks.
std::vector<Shuffle> shuffles3(int k, int l, int s);

int perm_sign(const std::vector<int>& word);

/// Skew-symmetric form on the algebroid frame with values in a target
/// bundle: component table over strictly increasing multi-indices, absent
/// entries are zero. Degree -1 denotes an identically-zero result one step
/// below degree 0 (it arises from insertions into low-degree forms and keeps
/// operator degree bookkeeping consistent); only zero forms carry it.
class VForm {
public:
  VForm(int source_rank, int nvars, int degree, Target target);
  static VForm zero(const Algebroid& A, int degree, Target target);

  int degree() const { return degree_; }
  int source_rank() const { return source_rank_; }
  int nvars() const { return nvars_; }
  const Target& target() const { return target_; }
  bool is_zero() const { return comps_.empty(); }

  const std::map<MultiIndex, std::vector<Poly>>& components() const { return comps_; }
  /// Component at an increasing multi-index; zero vector if absent.
  std::vector<Poly> component(const MultiIndex& idx) const;
  /// Store a component; all-zero vectors are dropped to keep the table canonical.
  void set_component(MultiIndex idx, std::vector<Poly> value);

  VForm operator-() const;
  VForm scaled(const Rational& c) const;

  std::string str() const;

private:
  void check_index(const MultiIndex& idx) const;
  int source_rank_, nvars_, degree_;
  Target target_;
  std::map<MultiIndex, std::vector<Poly>> comps_;
};

/// Sum of forms. Identically-zero operands are degree-flexible: adding a zero
/// form of any degree returns the other operand unchanged.
VForm form_add(const VForm& a, const VForm& b);
VForm form_sub(const VForm& a, const VForm& b);

/// Mathematical equality: two identically-zero forms are equal regardless of
/// recorded degree; otherwise degree, target and components must agree.
bool operator==(const VForm& a, const VForm& b);
inline bool operator!=(const VForm& a, const VForm& b) { return !(a == b); }

/// Evaluate on a frame tuple with arbitrary (possibly repeated or unsorted)
/// indices: zero on repeats, otherwise the sign-sorted component.
std::vector<Poly> eval_frame(const VForm& f, std::vector<int> idx);

/// Evaluate on arbitrary sections by multilinear expansion over the frame.
Section eval_form(const VForm& f, const std::vector<Section>& args);

/// omega wedge phi for scalar-valued omega: the shuffle-signed product.
/// This is also the module action eps_omega(phi).
VForm wedge(const VForm& omega, const VForm& phi);

/// Insertion i_phi(psi) of an algebroid-valued p-form into a (k+1)-form:
/// shuffle sum plugging phi(...) into the first slot of psi. A derivation of
/// degree p-1; degree-0 psi maps to zero.
VForm insert(const VForm& phi, const VForm& psi);

/// Dual frame 1-form e^c (scalar-valued), 0-based c.
VForm dual_frame_one_form(const Algebroid& A, int c);
/// Identity in Omega^1(A, A).
VForm identity_one_form(const Algebroid& A);
/// Degree-0 form wrapping a section.
VForm form_of_section(const Algebroid& A, const Section& s, Target target);
Section section_of_form(const VForm& f);

/// Build a form of the given degree by evaluating comp(I) on every
/// increasing multi-index I. The component evaluations are independent and
/// run through the OpenMP kernel path; assembly order is deterministic.
template <class F>
VForm build_form(int source_rank, int nvars, int degree, Target target, F&& comp) {
  VForm out(source_rank, nvars, degree, target);
  auto tuples = increasing_tuples(source_rank, degree);
  std::vector<std::vector<Poly>> vals(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) { vals[i] = comp(tuples[i]); });
  for (std::size_t i = 0; i < tuples.size(); ++i)
    out.set_component(std::move(tuples[i]), std::move(vals[i]));
  return out;
}

} // namespace fncalc

#endif
