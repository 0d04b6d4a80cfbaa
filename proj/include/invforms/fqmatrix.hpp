#pragma once

#include <span>
#include <string>
#include <vector>

#include "invforms/ff.hpp"

namespace invforms {

/// Dense matrix over F_q with exact arithmetic.  Entries are element codes.
/// Sized for desk scale: group matrices are n x n with n <= 4, and the
/// invariant-space solvers stack a few hundred rows at most.
class Mat {
 public:
  Mat(const FieldSpec* field, int rows, int cols);
  static Mat identity(const FieldSpec& f, int n);
  static Mat from_rows(const FieldSpec& f,
                       const std::vector<std::vector<uint32_t>>& rows);

  const FieldSpec* field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  uint32_t at(int i, int j) const { return a_[(size_t)i * cols_ + j]; }
  void set(int i, int j, uint32_t v);

  Mat transpose() const;
  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::vector<uint32_t> apply(std::span<const uint32_t> v) const;

  uint32_t det() const;        // square only
  Mat inverse() const;         // throws SingularMatrix
  int rank() const;

  /// In-place reduced row echelon form; returns the pivot column of each
  /// pivot row.
  std::vector<int> rref();
  /// Basis of the right kernel, one coefficient vector per basis element,
  /// in the canonical form induced by the RREF of the matrix.
  std::vector<std::vector<uint32_t>> kernel_basis() const;

  /// Flat row-major entry list, usable as a hash key.
  const std::vector<uint32_t>& data() const { return a_; }

 private:
  const FieldSpec* field_;
  int rows_, cols_;
  std::vector<uint32_t> a_;
};

struct MatHash {
  size_t operator()(const Mat& m) const noexcept {
    size_t h = 1469598103934665603ull;
    for (uint32_t v : m.data()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace invforms
