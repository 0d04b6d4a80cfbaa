#pragma once

// Shared test fixtures: the groups the toolkit is exercised on.

#include <initializer_list>
#include <vector>

#include "invforms/grp.hpp"

namespace invforms::fixtures {

inline Mat mat(const FieldSpec& f, int n, std::initializer_list<uint32_t> rm) {
  Mat m(&f, n, n);
  auto it = rm.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, *it++);
  return m;
}

// |GL_2(F_3)| = 48
inline MatrixGroup gl2_f3() {
  const FieldSpec& f = field_make(3, 1);
  return MatrixGroup(&f, 2,
                     {mat(f, 2, {1, 1, 0, 1}), mat(f, 2, {2, 0, 0, 1}),
                      mat(f, 2, {0, 1, 1, 0})});
}

// |SL_2(F_3)| = 24, generated by two transvections
inline MatrixGroup sl2_f3() {
  const FieldSpec& f = field_make(3, 1);
  return MatrixGroup(&f, 2, {mat(f, 2, {1, 1, 0, 1}), mat(f, 2, {1, 0, 1, 1})});
}

// lower unitriangular, order 3
inline MatrixGroup u2_f3() {
  const FieldSpec& f = field_make(3, 1);
  return MatrixGroup(&f, 2, {mat(f, 2, {1, 0, 1, 1})});
}

// lower unitriangular, order 27
inline MatrixGroup u3_f3() {
  const FieldSpec& f = field_make(3, 1);
  return MatrixGroup(&f, 3,
                     {mat(f, 3, {1, 0, 0, 1, 1, 0, 0, 0, 1}),
                      mat(f, 3, {1, 0, 0, 0, 1, 0, 1, 0, 1}),
                      mat(f, 3, {1, 0, 0, 0, 1, 0, 0, 1, 1})});
}

// order 6, fixes ker z2 pointwise; e_H = 2, b_H = 1
inline MatrixGroup single_hyperplane_f3() {
  const FieldSpec& f = field_make(3, 1);
  return MatrixGroup(&f, 2, {mat(f, 2, {1, 1, 0, 1}), mat(f, 2, {1, 0, 0, 2})});
}

// order 2 diagonal reflection group, no transvections
inline MatrixGroup diag12_f3() {
  const FieldSpec& f = field_make(3, 1);
  return MatrixGroup(&f, 2, {mat(f, 2, {1, 0, 0, 2})});
}

// cyclic of order 4, contains no reflections
inline MatrixGroup cyclic_nonreflection_f3() {
  const FieldSpec& f = field_make(3, 1);
  return MatrixGroup(&f, 2, {mat(f, 2, {0, 1, 2, 0})});
}

// trivial group in GL_2(F_3)
inline MatrixGroup trivial_f3() {
  const FieldSpec& f = field_make(3, 1);
  return MatrixGroup(&f, 2, {});
}

// diag(1,2,1): one reflecting hyperplane in GL_3 with b_H = 0 < n-1
inline MatrixGroup diag121_f3() {
  const FieldSpec& f = field_make(3, 1);
  return MatrixGroup(&f, 3, {mat(f, 3, {1, 0, 0, 0, 2, 0, 0, 0, 1})});
}

}  // namespace invforms::fixtures
