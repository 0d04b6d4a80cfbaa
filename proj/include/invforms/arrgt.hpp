#pragma once

#include <vector>

#include "invforms/grp.hpp"
#include "invforms/mpoly.hpp"

namespace invforms {

/// The arrangement polynomials of a reflection group:
///   q_det     = prod l_H^{e_H - 1}
///   q_tilde   = prod l_H^{e_H b_H}      (multi-arrangement polynomial)
///   delta_max = prod over {b_H = n-1} of l_H^{e_H}   (discriminant twist)
/// Products run over the reflecting hyperplanes, with the linear forms in
/// lex order on their normalized coefficient vectors.
struct ArrangementPolys {
  Polynomial q_det;
  Polynomial q_tilde;
  Polynomial delta_max;
};

ArrangementPolys build_arrangement_polys(const FieldSpec& f, int nvars,
                                         const std::vector<HyperplaneData>& table);

/// Per-character data: a_H is the smallest nonnegative integer with
/// chi(s_H) = det(s_H)^{-a_H}; q_chi = prod l_H^{a_H}; q_tilde_chi is the
/// multi-arrangement polynomial restricted to hyperplanes with chi(s_H) = 1.
struct ChiArrangement {
  std::vector<int> a;  // aligned with the arrangement entries of the table
  Polynomial q_chi;
  Polynomial q_tilde_chi;
};

ChiArrangement chi_arrangement(const FieldSpec& f, int nvars,
                               const std::vector<HyperplaneData>& table,
                               const Character& chi);

/// Smallest a in [0, e) with chi_val * det_val^a = 1, if any.
std::optional<int> twist_exponent(const Fq& chi_val, const Fq& det_val, int e);

}  // namespace invforms
