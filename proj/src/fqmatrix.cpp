#include "invforms/fqmatrix.hpp"

namespace invforms {

Mat::Mat(const FieldSpec* field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), a_((size_t)rows * cols, 0) {
  if (field_ == nullptr) fail("InvalidArgument", "null field");
  if (rows < 0 || cols < 0) fail("InvalidArgument", "negative dimension");
}

Mat Mat::identity(const FieldSpec& f, int n) {
  Mat m(&f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(const FieldSpec& f,
                   const std::vector<std::vector<uint32_t>>& rows) {
  if (rows.empty()) fail("InvalidArgument", "no rows");
  Mat m(&f, (int)rows.size(), (int)rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      fail("DimensionMismatch", "ragged rows");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.set((int)i, (int)j, rows[i][j]);
  }
  return m;
}

void Mat::set(int i, int j, uint32_t v) {
  if (v >= field_->order()) fail("InvalidArgument", "entry out of range");
  a_[(size_t)i * cols_ + j] = v;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.field_ != b.field_) fail("MixedFields", "matrix product");
  if (a.cols_ != b.rows_) fail("DimensionMismatch", "matrix product");
  const FieldSpec& f = *a.field_;
  Mat c(a.field_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      uint32_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        c.set(i, j, f.add(c.at(i, j), f.mul(aik, b.at(k, j))));
    }
  return c;
}

std::vector<uint32_t> Mat::apply(std::span<const uint32_t> v) const {
  if ((int)v.size() != cols_) fail("DimensionMismatch", "vector length");
  std::vector<uint32_t> r((size_t)rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      r[(size_t)i] = field_->add(r[(size_t)i], field_->mul(at(i, j), v[(size_t)j]));
  return r;
}

std::vector<int> Mat::rref() {
  const FieldSpec& f = *field_;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int pivot = -1;
    for (int i = row; i < rows_; ++i)
      if (at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < cols_; ++j) {
        uint32_t t = at(row, j);
        set(row, j, at(pivot, j));
        set(pivot, j, t);
      }
    uint32_t s = f.inv(at(row, col));
    for (int j = 0; j < cols_; ++j) set(row, j, f.mul(s, at(row, j)));
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      uint32_t factor = at(i, col);
      for (int j = 0; j < cols_; ++j)
        set(i, j, f.sub(at(i, j), f.mul(factor, at(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Mat::rank() const {
  Mat copy = *this;
  return (int)copy.rref().size();
}

uint32_t Mat::det() const {
  if (rows_ != cols_) fail("DimensionMismatch", "determinant of non-square");
  const FieldSpec& f = *field_;
  Mat m = *this;
  uint32_t d = 1;
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int i = col; i < rows_; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) {
        uint32_t t = m.at(col, j);
        m.set(col, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
      d = f.neg(d);
    }
    d = f.mul(d, m.at(col, col));
    uint32_t s = f.inv(m.at(col, col));
    for (int i = col + 1; i < rows_; ++i) {
      if (m.at(i, col) == 0) continue;
      uint32_t factor = f.mul(s, m.at(i, col));
      for (int j = col; j < cols_; ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(col, j))));
    }
  }
  return d;
}

Mat Mat::inverse() const {
  if (rows_ != cols_) fail("DimensionMismatch", "inverse of non-square");
  Mat aug(field_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
    aug.set(i, cols_ + i, 1);
  }
  auto pivots = aug.rref();
  bool ok = (int)pivots.size() == rows_;
  for (int r = 0; ok && r < rows_; ++r) ok = pivots[(size_t)r] == r;
  if (!ok) fail("SingularMatrix", "matrix is not invertible");
  Mat inv(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.set(i, j, aug.at(i, cols_ + j));
  return inv;
}

std::vector<std::vector<uint32_t>> Mat::kernel_basis() const {
  Mat m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot((size_t)cols_, false);
  for (int c : pivots) is_pivot[(size_t)c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (int freec = 0; freec < cols_; ++freec) {
    if (is_pivot[(size_t)freec]) continue;
    std::vector<uint32_t> v((size_t)cols_, 0);
    v[(size_t)freec] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[(size_t)pivots[r]] = field_->neg(m.at((int)r, freec));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace invforms
