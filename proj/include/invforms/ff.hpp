#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "invforms/error.hpp"

namespace invforms {

/// A finite field F_{p^k} with p an odd prime.  For k > 1 the field is
/// F_p[x]/(m) for a user-supplied monic irreducible m of degree k.
///
/// Elements are integer codes in [0, p^k); the base-p digits of a code,
/// little-endian, are the coordinates over F_p.  This is also the serialized
/// form.  Instances are interned by field_make() and live for the program
/// duration, so values can hold a bare pointer and pointer equality means
/// same field.
class FieldSpec {
 public:
  uint32_t characteristic() const { return p_; }
  uint32_t extension_degree() const { return k_; }
  uint32_t order() const { return q_; }
  /// Monic modulus as k+1 little-endian coefficients; empty for k == 1.
  const std::vector<uint32_t>& modulus_poly() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws DivisionByZero on 0
  uint32_t div(uint32_t a, uint32_t b) const;
  uint32_t pow(uint32_t a, int64_t e) const;

  /// Reduce an arbitrary integer into the prime subfield.
  uint32_t from_int(int64_t v) const;
  /// Base-p digits of a code, little-endian, length k.
  std::vector<uint32_t> digits(uint32_t a) const;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

 private:
  FieldSpec(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);
  friend const FieldSpec& field_make(uint32_t, uint32_t,
                                     const std::vector<uint32_t>&);

  uint32_t mul_generic(uint32_t a, uint32_t b) const;
  uint32_t inv_generic(uint32_t a) const;

  uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> mul_table_;  // q*q entries, built only for small q
  std::vector<uint32_t> inv_table_;
};

/// Validate and intern a field description.
///
/// Errors: CharTwoRejected (p == 2), NotPrime, ReducibleModulus (missing,
/// non-monic, wrong degree, or reducible modulus for k > 1), ScaleExceeded
/// (p^k too large for exact desk-scale work).
const FieldSpec& field_make(uint32_t p, uint32_t k,
                            const std::vector<uint32_t>& modulus_poly = {});

/// A field element: integer code plus owning field.  Mixing elements of
/// different interned FieldSpec instances throws MixedFields.
class Fq {
 public:
  Fq() = default;
  Fq(const FieldSpec* f, uint32_t code) : f_(f), v_(code) {
    if (f_ == nullptr) fail("InvalidArgument", "null field");
    if (v_ >= f_->order()) fail("InvalidArgument", "element code out of range");
  }

  const FieldSpec* field() const { return f_; }
  uint32_t code() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fq operator-() const { return Fq(f_, f_->neg(v_)); }
  Fq inv() const { return Fq(f_, f_->inv(v_)); }
  Fq pow(int64_t e) const { return Fq(f_, f_->pow(v_, e)); }

  friend Fq operator+(const Fq& a, const Fq& b) {
    return Fq(same(a, b), a.f_->add(a.v_, b.v_));
  }
  friend Fq operator-(const Fq& a, const Fq& b) {
    return Fq(same(a, b), a.f_->sub(a.v_, b.v_));
  }
  friend Fq operator*(const Fq& a, const Fq& b) {
    return Fq(same(a, b), a.f_->mul(a.v_, b.v_));
  }
  friend Fq operator/(const Fq& a, const Fq& b) {
    return Fq(same(a, b), a.f_->div(a.v_, b.v_));
  }
  Fq& operator+=(const Fq& b) { return *this = *this + b; }
  Fq& operator-=(const Fq& b) { return *this = *this - b; }
  Fq& operator*=(const Fq& b) { return *this = *this * b; }
  Fq& operator/=(const Fq& b) { return *this = *this / b; }

  friend bool operator==(const Fq& a, const Fq& b) {
    return a.f_ == b.f_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Fq& a, const Fq& b) { return !(a == b); }

 private:
  static const FieldSpec* same(const Fq& a, const Fq& b) {
    if (a.f_ == nullptr || b.f_ == nullptr)
      fail("InvalidArgument", "arithmetic on default-constructed element");
    if (a.f_ != b.f_) fail("MixedFields", "elements of different fields");
    return a.f_;
  }

  const FieldSpec* f_ = nullptr;
  uint32_t v_ = 0;
};

inline Fq zero(const FieldSpec& f) { return Fq(&f, 0); }
inline Fq one(const FieldSpec& f) { return Fq(&f, 1); }
inline Fq make_fq(const FieldSpec& f, int64_t v) { return Fq(&f, f.from_int(v)); }

/// Smallest m >= 1 with a^m = 1.  Throws ZeroElement on a = 0.
int mult_order(const Fq& a);

}  // namespace invforms

template <>
struct std::hash<invforms::Fq> {
  size_t operator()(const invforms::Fq& a) const noexcept {
    return std::hash<uint32_t>()(a.code());
  }
};
