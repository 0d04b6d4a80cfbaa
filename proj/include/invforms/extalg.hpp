#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "invforms/fqmatrix.hpp"
#include "invforms/mpoly.hpp"

namespace invforms {

/// Index sets I of increasing indices in {1..n} are stored as bitmasks,
/// bit i-1 for index i.
using IndexSet = uint32_t;

std::vector<int> index_list(IndexSet s);      // 1-based, ascending
IndexSet index_set(const std::vector<int>& indices);

/// Differential k-form with polynomial coefficients: sum of u_I dz_I over
/// strictly increasing index sets I of size k.  No zero coefficients stored.
class DiffForm {
 public:
  using TermMap = std::map<IndexSet, Polynomial>;

  DiffForm(const FieldSpec* field, int nvars, int degree);
  /// The volume form dz_1 ^ ... ^ dz_n.
  static DiffForm volume(const FieldSpec& f, int nvars);
  /// f as a 0-form.
  static DiffForm from_polynomial(const Polynomial& f);

  const FieldSpec* field() const { return field_; }
  int nvars() const { return nvars_; }
  int form_degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  const Polynomial* coefficient(IndexSet s) const;
  /// Largest total degree among coefficients; -1 for the zero form.
  int poly_degree() const;

  void add_term(IndexSet s, const Polynomial& u);

  DiffForm operator-() const;
  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(const Polynomial& h, const DiffForm& a);
  friend DiffForm operator*(const Fq& c, const DiffForm& a);

  friend bool operator==(const DiffForm& a, const DiffForm& b);
  friend bool operator!=(const DiffForm& a, const DiffForm& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  const FieldSpec* field_;
  int nvars_;
  int degree_;
  TermMap terms_;
};

/// Graded-anticommutative product.  Throws DegreeOverflow when the degrees
/// sum past n.
DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// df = sum_i (df/dz_i) dz_i.
DiffForm exterior_derivative(const Polynomial& f);
/// d extended to k-forms.
DiffForm exterior_derivative(const DiffForm& a);

/// Divide every coefficient exactly by g; on failure reports the first
/// (smallest-mask) index set whose coefficient is not divisible.
/// Throws DivisorZero on g = 0.
std::optional<DiffForm> try_divide(const DiffForm& a, const Polynomial& g,
                                   IndexSet* failing = nullptr);

/// (a ^ b) / delta.  Throws NotDivisible when delta does not divide every
/// coefficient of the wedge, naming the failing index set.
DiffForm twisted_wedge(const DiffForm& a, const DiffForm& b,
                       const Polynomial& delta);

/// Group action (g.f)(v) = f(g^{-1} v) on polynomials, extended to forms by
/// g.dz_i = d(g.z_i).  Throws SingularMatrix on non-invertible g.
Polynomial act(const Mat& g, const Polynomial& f);
DiffForm act(const Mat& g, const DiffForm& a);
LinearForm act(const Mat& g, const LinearForm& l);

}  // namespace invforms
