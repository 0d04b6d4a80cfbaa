#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "invforms/extalg.hpp"
#include "invforms/fqmatrix.hpp"
#include "invforms/mpoly.hpp"

namespace invforms {

/// A finite matrix group, fully enumerated from its generators by
/// breadth-first closure under left multiplication.  Element order is
/// discovery order with the identity first; enumeration is deterministic.
class MatrixGroup {
 public:
  MatrixGroup(const FieldSpec* field, int n, std::vector<Mat> generators,
              size_t cap = 200000);

  const FieldSpec* field() const { return field_; }
  int dim() const { return n_; }
  size_t size() const { return elements_.size(); }
  const std::vector<Mat>& generators() const { return generators_; }
  const std::vector<Mat>& elements() const { return elements_; }
  const Mat& element(int i) const { return elements_[(size_t)i]; }
  /// Index of the matrix in the enumeration, or -1.
  int index_of(const Mat& m) const;
  /// (generator index, parent element index) along the BFS; (-1,-1) for the
  /// identity.
  const std::vector<std::pair<int, int>>& bfs_edges() const { return edges_; }

 private:
  const FieldSpec* field_;
  int n_;
  std::vector<Mat> generators_;
  std::vector<Mat> elements_;
  std::vector<std::pair<int, int>> edges_;
  std::unordered_map<Mat, int, MatHash> index_;
};

/// A reflection: a non-identity element whose fixed space is a hyperplane.
/// The decomposition g = 1 + alpha l^T is taken with l the normalized
/// defining form, so g(v) = v + l(v) alpha.
struct Reflection {
  int elem;                     // index into the group enumeration
  LinearForm hyperplane;        // normalized l_H
  std::vector<uint32_t> root;   // alpha, as element codes
  bool transvection;            // l(alpha) = 0, det = 1
  uint32_t eigenvalue;          // 1 + l(alpha); 1 exactly for transvections
};

std::vector<Reflection> find_reflections(const MatrixGroup& g);

/// Everything the arrangement machinery needs to know about one hyperplane.
struct HyperplaneData {
  LinearForm l;                 // normalized defining form
  int e = 1;                    // e_H = |G_H : K_H|
  int b = 0;                    // b_H = dim of the transvection root space
  Mat s;                        // s_H; identity when e_H = 1
  int orbit = -1;
  bool in_arrangement = false;  // some reflection fixes H pointwise
  int stab_order = 1;           // |G_H|, computed directly
  int kernel_order = 1;         // |K_H|
  std::vector<int> stab_elems;  // indices of G_H in discovery order
  std::vector<std::vector<uint32_t>> transvection_roots;
};

/// One entry per reflecting hyperplane; with include_all, one entry per
/// hyperplane of V (orbit products over all hyperplanes need the b_H = 0
/// ones too).  Orbit ids come from the G-action on normalized linear forms.
std::vector<HyperplaneData> hyperplane_table(const MatrixGroup& g,
                                             bool include_all = false);

/// Basis change matrix whose columns v_1..v_n satisfy: v_1..v_{n-1} span
/// ker l_H, v_1..v_{b_H} are independent transvection roots, and v_n is an
/// s_H-eigenvector with l_H(v_n) = 1.
Mat adapted_basis(const HyperplaneData& h);
/// Lookup wrapper; throws NoSuchHyperplane.
Mat adapted_basis(const std::vector<HyperplaneData>& table, const LinearForm& l);

/// A linear character G -> F^x, stored as one value per enumerated element.
struct Character {
  const MatrixGroup* group = nullptr;
  std::string name;
  std::vector<uint32_t> values;

  Fq at(int elem_index) const {
    return Fq(group->field(), values[(size_t)elem_index]);
  }
  /// Value on an arbitrary member matrix; throws if not in the group.
  Fq of(const Mat& m) const;
};

Character trivial_character(const MatrixGroup& g);
Character det_character(const MatrixGroup& g);
Character inverse_character(const Character& chi);
Character character_product(const Character& a, const Character& b);
/// Extend per-generator values along the BFS words.  Multiplicativity is
/// verified on the full multiplication table for |G| <= 5000 and on seeded
/// samples above; failure throws InconsistentCharacter.
Character character_extend(const MatrixGroup& g, const std::string& name,
                           const std::vector<uint32_t>& gen_values);

}  // namespace invforms
