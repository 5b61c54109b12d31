#ifndef FNCALC_ORACLE_HPP
#define FNCALC_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fncalc/fn_calculus.hpp"
#include "fncalc/rng.hpp"

namespace fncalc::oracle {

// Independent reference implementations, re-derived from the raw defining
// formulas. They share only the scalar tower and the algebroid data model
// with the main code paths: multilinear evaluation, insertion and operator
// application are written from scratch here, serially, so they can certify
// the shuffle kernels.

/// Multilinear evaluation by summing over every frame-index tuple (not just
/// increasing ones).
std::vector<Poly> eval_multilinear(const VForm& f, const std::vector<Section>& args);

/// Insertion recomputed as the full alternation over the whole permutation
/// group divided by p! k! (exact rational division).
VForm insert_bruteforce(const VForm& phi, const VForm& psi);

/// Extract the Froelicher-Nijenhuis bracket from its defining operator
/// equation on scalar forms: apply
///   O = [L_phi, i_psi] + (-1)^{k(l-1)} L_{i_psi phi}
/// to each dual frame 1-form e^c and read off the unique K with i_K = O via
/// K(e_{i1},..,e_{i_{k+l}})^c = (O e^c)(e_{i1},..). The scalar-form
/// differential is the one of the canonical flat line-bundle connection; the
/// supplied connection is required torsion-free to match the bracket
/// construction this oracle certifies.
VForm fn_extract(const Algebroid& A, const Connection& connA, const VForm& phi,
                 const VForm& psi);

struct CheckResult {
  std::string identity; // short name, e.g. "insert-commutator"
  std::string formula;  // the operator identity being verified
  std::string instance; // generation parameters, e.g. "seed=3 k=1 l=2"
  bool pass = false;
  std::string witness;  // inputs and both values, nonempty only on failure
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  int num_seeds = 1;
  int max_phi_degree = 2;  // k, l grid upper bound
  int max_bundle_rank = 2; // random E has rank in [1, this]
  int poly_degree = 2;     // random coefficient polynomials
  int coeff_bound = 5;
};

struct VerificationReport {
  std::string suite;
  std::string algebroid;
  SuiteConfig config;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t num_passed() const;
  /// Deterministic text serialization, one record per check.
  std::string str() const;
};

const std::vector<std::string>& suite_names();

/// Run one named suite on one algebroid. Checks are pure and fan out across
/// threads; the report is assembled in deterministic instance order and is
/// byte-identical for a given config.
VerificationReport run_suite(const std::string& suite, const Algebroid& A,
                             const std::string& algebroid_name, const SuiteConfig& cfg);

} // namespace fncalc::oracle

#endif
