#pragma once

#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "invforms/arrgt.hpp"
#include "invforms/extalg.hpp"
#include "invforms/gens.hpp"
#include "invforms/grp.hpp"

namespace invforms {

/// Outcome of a wedge-product criterion check.  passed means the n-fold
/// wedge equals scalar * target * vol with scalar in F^x, the exact
/// hypothesis under which the given forms generate freely.
struct FreenessCertificate {
  bool passed = false;
  DiffForm wedge;       // the computed n-form
  Polynomial target;    // the required multiple of vol
  std::optional<Fq> scalar;
  std::string diagnostic;  // empty when passed

  friend bool operator==(const FreenessCertificate& a,
                         const FreenessCertificate& b) {
    return a.passed == b.passed && a.wedge == b.wedge && a.target == b.target &&
           a.scalar == b.scalar && a.diagnostic == b.diagnostic;
  }
};

/// Basis of the degree-d (chi-)invariant polynomials, from the kernel of the
/// stacked action constraints over the degree-d monomial basis.
struct DegreeSpace {
  int degree = 0;
  std::vector<Polynomial> basis;
};

/// True iff g.x = chi(g) x for every generator (sufficient: the generators
/// generate).  Null chi means plain invariance.
bool is_invariant(const Polynomial& x, const MatrixGroup& g,
                  const Character* chi = nullptr);
bool is_invariant(const DiffForm& x, const MatrixGroup& g,
                  const Character* chi = nullptr);

/// Brute-force oracle.  Caps (n <= 3, d <= 20, <= 2000 monomials) throw
/// ScaleExceeded.
DegreeSpace invariant_degree_space(const MatrixGroup& g, int d,
                                   const Character* chi = nullptr);

/// k-forms with homogeneous degree-d coefficients fixed by every matrix in
/// mats (up to chi when chi_values is nonempty, aligned with mats).
std::vector<DiffForm> invariant_form_space(const FieldSpec& f, int n,
                                           std::span<const Mat> mats,
                                           std::span<const uint32_t> chi_values,
                                           int form_degree, int coeff_degree);

/// Wedge criterion for invariant 1-forms: passes iff
/// w_1 ^ ... ^ w_n = c Q(A~) Q_det vol, c in F^x.
FreenessCertificate check_criterion(const MatrixGroup& g,
                                    std::span<const DiffForm> forms);

/// chi-relative version with target Q(A~_chi) Q_chi^{n-1} Q_{chi det}.
/// With the trivial character this produces a certificate identical to
/// check_criterion.
FreenessCertificate check_chi_criterion(const MatrixGroup& g,
                                        const Character& chi,
                                        std::span<const DiffForm> forms);

struct TwistedProductCheck {
  std::vector<int> indices;  // 1-based subset of {1..n}
  bool divides = false;
  bool invariant = false;
};

/// Checkable hypotheses of the free-exterior-algebra structure: maximal
/// transvection root spaces, the identity delta^{n-1} = Q(A~) up to scalar,
/// the wedge criterion, and exactness plus invariance of every twisted
/// product of the given generators.
struct FreeAlgebraReport {
  bool maximality = false;
  bool delta_identity = false;
  std::optional<Fq> delta_scalar;
  FreenessCertificate criterion;
  std::vector<TwistedProductCheck> twisted_products;
  bool passed = false;
};

FreeAlgebraReport check_free_algebra(const MatrixGroup& g,
                                     std::span<const DiffForm> forms);

struct LemmaCheck {
  std::string name;
  int checks = 0;
  std::vector<std::string> counterexamples;
  bool passed() const { return counterexamples.empty(); }
};

struct LemmaSuiteReport {
  uint64_t seed = 0;
  int samples = 0;
  std::vector<LemmaCheck> lemmas;
  bool all_passed() const {
    for (const auto& l : lemmas)
      if (!l.passed()) return false;
    return true;
  }
};

/// Seeded property runs for the divisibility lemmas: reflection differences
/// s(f) - f divisible by l_H; adapted-basis coefficient divisibility for
/// stabilizer-invariant forms (by l_H and by l_H^{e_H}); n-fold wedges of
/// random invariant 1-forms divisible by Q(A~) Q_det; pairwise wedges
/// divisible by the discriminant; and constancy of (e_H, b_H) on orbits.
/// Any counterexample is reported verbatim and indicates a bug.
LemmaSuiteReport verify_lemmas(const MatrixGroup& g,
                               const std::vector<DiffForm>& known_family,
                               int samples, uint64_t seed);

/// Random F-combinations of h * w over low-degree invariant polynomials h
/// and pool forms w; every result is an invariant 1-form.
std::vector<DiffForm> sample_invariant_one_forms(const MatrixGroup& g,
                                                 const std::vector<DiffForm>& pool,
                                                 int count,
                                                 std::mt19937_64& rng);

/// Rank over the fraction field F(V), by fraction-free Gaussian elimination
/// on the polynomial matrix.
int polynomial_matrix_rank(std::vector<std::vector<Polynomial>> m);

/// Coefficient matrix of 1-forms (one row per form, one column per dz_i).
std::vector<std::vector<Polynomial>> one_form_matrix(
    std::span<const DiffForm> forms);

}  // namespace invforms
