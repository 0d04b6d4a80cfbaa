#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "invforms/ff.hpp"

namespace invforms {

/// Exponent vector of a monomial in n variables.
class Monomial {
 public:
  explicit Monomial(int nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_)
      if (x < 0) fail("InvalidArgument", "negative exponent");
  }

  int nvars() const { return (int)e_.size(); }
  int degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
  }
  int operator[](int i) const { return e_[(size_t)i]; }
  const std::vector<int>& exponents() const { return e_; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  Monomial divide_into(const Monomial& o) const;  // o / this

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

 private:
  std::vector<int> e_;
};

/// Graded lexicographic: total degree first, then lex on exponents.
bool grlex_less(const Monomial& a, const Monomial& b);

/// Map comparator putting the leading (largest) monomial first, so iteration
/// order is the canonical graded-lex descending term order.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(b, a);
  }
};

/// Sparse multivariate polynomial over F_q in variables z1..zn.  No zero
/// coefficients are stored; the zero polynomial has an empty term map.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Fq, GrlexDesc>;

  Polynomial(const FieldSpec* field, int nvars);
  static Polynomial constant(const FieldSpec& f, int nvars, const Fq& c);
  static Polynomial constant(const FieldSpec& f, int nvars, int64_t c);
  static Polynomial variable(const FieldSpec& f, int nvars, int i);
  static Polynomial monomial(const FieldSpec& f, std::vector<int> exps, const Fq& c);

  const FieldSpec* field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Largest term under graded lex.  Throws on the zero polynomial.
  const std::pair<const Monomial, Fq>& leading_term() const;
  /// Degree if homogeneous (zero counts as homogeneous of any degree).
  std::optional<int> homogeneous_degree() const;
  Fq coeff(const Monomial& m) const;

  /// Add c * m into this polynomial, erasing the term if it cancels.
  void add_term(const Monomial& m, const Fq& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Fq& c, const Polynomial& a);
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  /// Formal partial derivative with respect to variable i (0-based);
  /// characteristic multiples vanish.  Throws IndexOutOfRange.
  Polynomial derivative(int i) const;

  /// Simultaneous substitution z_i -> images[i].
  Polynomial substitute(std::span<const Polynomial> images) const;

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;

  const FieldSpec* field_;
  int nvars_;
  TermMap terms_;
};

/// Quotient f/g when the graded-lex single-divisor division leaves no
/// remainder; std::nullopt otherwise.  Throws DivisorZero on g = 0.
std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g);

/// The scalar c in F^x with f = c*g, if any.  f = 0 never qualifies.
/// Throws DivisorZero on g = 0.
std::optional<Fq> scalar_ratio(const Polynomial& f, const Polynomial& g);

/// Determinant of the Jacobian matrix (d fs[i] / d z_j), by cofactor
/// expansion.  Requires exactly n polynomials in n variables.
Polynomial jacobian_det(std::span<const Polynomial> fs);

/// Determinant of a square polynomial matrix by cofactor expansion.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

/// A nonzero linear form on V, normalized so its first nonzero coefficient
/// is 1.  Canonical representative of the hyperplane ker l.
class LinearForm {
 public:
  LinearForm(const FieldSpec* field, std::vector<uint32_t> coeffs);

  const FieldSpec* field() const { return field_; }
  int nvars() const { return (int)c_.size(); }
  Fq coeff(int i) const { return Fq(field_, c_[(size_t)i]); }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  Polynomial to_polynomial() const;
  Fq evaluate(std::span<const uint32_t> v) const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LinearForm& a, const LinearForm& b) {
    return !(a == b);
  }
  /// Lexicographic order on coefficient vectors, for deterministic products.
  friend bool operator<(const LinearForm& a, const LinearForm& b) {
    return a.c_ < b.c_;
  }

 private:
  const FieldSpec* field_;
  std::vector<uint32_t> c_;
};

}  // namespace invforms
