#pragma once

#include <string>
#include <vector>

#include "invforms/extalg.hpp"
#include "invforms/grp.hpp"
#include "invforms/mpoly.hpp"

namespace invforms {

enum class FamilyTag { dickson_glsl, unipotent, single_hyperplane, chern };

std::string to_string(FamilyTag tag);
FamilyTag family_tag_from_string(const std::string& s);

/// A constructed family of invariant polynomials and candidate generating
/// 1-forms.  The family constructors that take a group verify invariance of
/// every listed form against all generators before returning.
struct GeneratorFamily {
  FamilyTag tag;
  const FieldSpec* field;
  int nvars;
  std::vector<Polynomial> invariant_polys;
  std::vector<DiffForm> one_forms;
  std::string notes;
};

/// The Dickson invariants d_{n,0}, ..., d_{n,n-1} of GL_n(F_q), of degree
/// q^n - q^i, computed literally as sums over codimension-i subspaces of
/// products of the linear forms not vanishing on them.
std::vector<Polynomial> dickson_invariants(const FieldSpec& f, int n);

/// For SL_n <= G <= GL_n with det image of order e: the forms
/// d(d_{n,i-1}) / f with f = prod over all hyperplanes of l_H^{q-e-1}.
GeneratorFamily slgl_forms(const MatrixGroup& g, int e);

/// The orbit-product invariants f_1, ..., f_n of the lower unitriangular
/// group, of degree 1, q, ..., q^{n-1}.
std::vector<Polynomial> unipotent_invariants(const FieldSpec& f, int n);

/// The forms df_k / prod_{i<k} f_i^{q-2} for G = U_n(F_q) in its standard
/// lower unitriangular representation.
GeneratorFamily unipotent_forms(const MatrixGroup& g);

/// Generating forms for a group fixing a single hyperplane pointwise, built
/// in an adapted basis and pulled back to the original coordinates.
GeneratorFamily single_hyperplane_forms(const MatrixGroup& g);

/// Chern classes of the orbit union of the dual basis: expands
/// prod_{u in U} (T - u) and greedily selects n classes whose exterior
/// derivatives keep a nonzero running wedge.  Works for any finite group.
GeneratorFamily chern_forms(const MatrixGroup& g);

}  // namespace invforms
