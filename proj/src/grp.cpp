#include "invforms/grp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace invforms {

MatrixGroup::MatrixGroup(const FieldSpec* field, int n,
                         std::vector<Mat> generators, size_t cap)
    : field_(field), n_(n), generators_(std::move(generators)) {
  if (field_ == nullptr) fail("InvalidArgument", "null field");
  if (n_ < 1) fail("InvalidArgument", "dimension must be >= 1");
  for (const Mat& g : generators_) {
    if (g.field() != field_) fail("MixedFields", "generator field");
    if (g.rows() != n_ || g.cols() != n_)
      fail("DimensionMismatch", "generator size");
    if (g.det() == 0) fail("SingularGenerator", "generator is not invertible");
  }

  Mat id = Mat::identity(*field_, n_);
  elements_.push_back(id);
  edges_.emplace_back(-1, -1);
  index_.emplace(id, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (size_t gi = 0; gi < generators_.size(); ++gi) {
      Mat next = generators_[gi] * elements_[(size_t)cur];
      if (index_.contains(next)) continue;
      if (elements_.size() >= cap)
        fail("CapExceeded", "group enumeration exceeded cap of " +
                                std::to_string(cap));
      int idx = (int)elements_.size();
      index_.emplace(next, idx);
      elements_.push_back(std::move(next));
      edges_.emplace_back((int)gi, cur);
      queue.push_back(idx);
    }
  }
}

int MatrixGroup::index_of(const Mat& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

namespace {

// g - 1 as a matrix of codes.
Mat minus_identity(const Mat& g) {
  const FieldSpec& f = *g.field();
  Mat m(&f, g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      uint32_t v = g.at(i, j);
      if (i == j) v = f.sub(v, 1);
      m.set(i, j, v);
    }
  return m;
}

}  // namespace

std::vector<Reflection> find_reflections(const MatrixGroup& g) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();
  std::vector<Reflection> out;
  for (int idx = 1; idx < (int)g.size(); ++idx) {
    Mat m = minus_identity(g.element(idx));
    if (m.rank() != 1) continue;
    // rank-1 decomposition m = alpha l^T
    int j0 = -1, i0 = -1;
    for (int j = 0; j < n && j0 < 0; ++j)
      for (int i = 0; i < n; ++i)
        if (m.at(i, j) != 0) {
          j0 = j;
          break;
        }
    std::vector<uint32_t> alpha0((size_t)n);
    for (int i = 0; i < n; ++i) {
      alpha0[(size_t)i] = m.at(i, j0);
      if (i0 < 0 && alpha0[(size_t)i] != 0) i0 = i;
    }
    std::vector<uint32_t> l0((size_t)n);
    uint32_t s = f.inv(alpha0[(size_t)i0]);
    for (int j = 0; j < n; ++j) l0[(size_t)j] = f.mul(m.at(i0, j), s);
    // exactness is guaranteed by rank 1, but keep it checked
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m.at(i, j) != f.mul(alpha0[(size_t)i], l0[(size_t)j]))
          fail("InternalError", "rank-1 decomposition failed");
    // normalize l and rescale alpha so that g(v) = v + l(v) alpha
    size_t lead = 0;
    while (l0[lead] == 0) ++lead;
    uint32_t scale = l0[lead];
    LinearForm l(&f, l0);
    std::vector<uint32_t> alpha((size_t)n);
    for (int i = 0; i < n; ++i) alpha[(size_t)i] = f.mul(alpha0[(size_t)i], scale);
    uint32_t lv = l.evaluate(alpha).code();
    out.push_back(Reflection{idx, l, std::move(alpha), lv == 0, f.add(1, lv)});
  }
  return out;
}

namespace {

// Vectors spanning ker l, for normalized l with leading coefficient at j0.
std::vector<std::vector<uint32_t>> kernel_vectors(const LinearForm& l) {
  const FieldSpec& f = *l.field();
  const int n = l.nvars();
  int j0 = 0;
  while (l.coeffs()[(size_t)j0] == 0) ++j0;
  std::vector<std::vector<uint32_t>> basis;
  for (int i = 0; i < n; ++i) {
    if (i == j0) continue;
    std::vector<uint32_t> v((size_t)n, 0);
    v[(size_t)i] = 1;
    v[(size_t)j0] = f.neg(l.coeffs()[(size_t)i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool fixes_pointwise(const Mat& g, const std::vector<std::vector<uint32_t>>& vs) {
  for (const auto& v : vs)
    if (g.apply(v) != v) return false;
  return true;
}

std::vector<LinearForm> all_hyperplanes(const FieldSpec& f, int n) {
  uint64_t count = 1;
  std::vector<LinearForm> out;
  for (int i = 0; i < n; ++i) count *= f.order();
  if (count > 200000) fail("ScaleExceeded", "too many hyperplanes to enumerate");
  // normalized forms: leading position with coefficient 1, free tail
  for (int lead = 0; lead < n; ++lead) {
    uint64_t tail = 1;
    for (int i = lead + 1; i < n; ++i) tail *= f.order();
    for (uint64_t code = 0; code < tail; ++code) {
      std::vector<uint32_t> c((size_t)n, 0);
      c[(size_t)lead] = 1;
      uint64_t x = code;
      for (int i = lead + 1; i < n; ++i) {
        c[(size_t)i] = (uint32_t)(x % f.order());
        x /= f.order();
      }
      out.emplace_back(&f, std::move(c));
    }
  }
  return out;
}

}  // namespace

std::vector<HyperplaneData> hyperplane_table(const MatrixGroup& g,
                                             bool include_all) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();
  std::vector<Reflection> refl = find_reflections(g);

  std::vector<LinearForm> hyperplanes;
  if (include_all) {
    hyperplanes = all_hyperplanes(f, n);
  } else {
    for (const Reflection& r : refl)
      if (std::find(hyperplanes.begin(), hyperplanes.end(), r.hyperplane) ==
          hyperplanes.end())
        hyperplanes.push_back(r.hyperplane);
  }

  std::vector<HyperplaneData> table;
  table.reserve(hyperplanes.size());
  for (const LinearForm& l : hyperplanes) {
    HyperplaneData h{l, 1, 0, Mat::identity(f, n), -1, false, 1, 1, {}, {}};
    auto kv = kernel_vectors(l);
    int j0 = 0;
    while (l.coeffs()[(size_t)j0] == 0) ++j0;
    std::vector<uint32_t> v0((size_t)n, 0);
    v0[(size_t)j0] = 1;  // l(v0) = 1

    for (int idx = 0; idx < (int)g.size(); ++idx) {
      if (!fixes_pointwise(g.element(idx), kv)) continue;
      h.stab_elems.push_back(idx);
    }
    h.stab_order = (int)h.stab_elems.size();
    int max_det_order = 1;
    for (int idx : h.stab_elems) {
      const Mat& m = g.element(idx);
      uint32_t d = m.det();
      if (d == 1) {
        if (idx != 0) {
          // transvection root alpha = (g - 1) v0
          Mat diff = minus_identity(m);
          h.transvection_roots.push_back(diff.apply(v0));
        }
      } else {
        max_det_order = std::max(max_det_order, mult_order(Fq(&f, d)));
      }
    }
    h.kernel_order = 1 + (int)h.transvection_roots.size();
    h.e = max_det_order;
    if (!h.transvection_roots.empty())
      h.b = Mat::from_rows(f, h.transvection_roots).rank();
    if (h.e > 1) {
      for (int idx : h.stab_elems) {
        const Mat& m = g.element(idx);
        uint32_t d = m.det();
        if (d != 1 && mult_order(Fq(&f, d)) == h.e) {
          h.s = m;
          break;
        }
      }
    }
    h.in_arrangement = h.stab_order > 1;
    table.push_back(std::move(h));
  }

  // orbit ids under the action on normalized forms
  std::map<std::vector<uint32_t>, int> pos;
  for (size_t i = 0; i < table.size(); ++i) pos[table[i].l.coeffs()] = (int)i;
  int next_orbit = 0;
  for (size_t i = 0; i < table.size(); ++i) {
    if (table[i].orbit >= 0) continue;
    std::deque<int> queue{(int)i};
    table[i].orbit = next_orbit;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (const Mat& gen : g.generators()) {
        LinearForm img = act(gen, table[(size_t)cur].l);
        auto it = pos.find(img.coeffs());
        if (it == pos.end()) {
          if (!include_all)
            // orbits of reflecting hyperplanes stay reflecting; missing image
            // means an inconsistent table
            fail("InternalError", "hyperplane orbit left the table");
          continue;
        }
        if (table[(size_t)it->second].orbit < 0) {
          table[(size_t)it->second].orbit = next_orbit;
          queue.push_back(it->second);
        }
      }
    }
    ++next_orbit;
  }

  // hyperplanes in one orbit carry conjugate stabilizers, so (e, b) must be
  // constant along each orbit
  std::map<int, std::pair<int, int>> orbit_data;
  for (const HyperplaneData& h : table) {
    auto [it, inserted] = orbit_data.emplace(h.orbit, std::make_pair(h.e, h.b));
    if (!inserted && it->second != std::make_pair(h.e, h.b))
      fail("InternalError", "(e_H, b_H) varies along a hyperplane orbit");
  }
  return table;
}

Mat adapted_basis(const HyperplaneData& h) {
  const FieldSpec& f = *h.l.field();
  const int n = h.l.nvars();
  std::vector<std::vector<uint32_t>> cols;

  auto rank_with = [&](const std::vector<uint32_t>& v) {
    std::vector<std::vector<uint32_t>> rows = cols;
    rows.push_back(v);
    return Mat::from_rows(f, rows).rank();
  };

  // independent transvection roots first
  for (const auto& r : h.transvection_roots) {
    if ((int)cols.size() == h.b) break;
    if (rank_with(r) > (int)cols.size()) cols.push_back(r);
  }
  if ((int)cols.size() != h.b)
    fail("InternalError", "could not realize the transvection root space");
  // complete to a basis of ker l
  int j0 = 0;
  while (h.l.coeffs()[(size_t)j0] == 0) ++j0;
  for (int i = 0; i < n && (int)cols.size() < n - 1; ++i) {
    if (i == j0) continue;
    std::vector<uint32_t> v((size_t)n, 0);
    v[(size_t)i] = 1;
    v[(size_t)j0] = f.neg(h.l.coeffs()[(size_t)i]);
    if (rank_with(v) > (int)cols.size()) cols.push_back(std::move(v));
  }
  if ((int)cols.size() != n - 1)
    fail("InternalError", "could not complete a basis of the hyperplane");
  // v_n: eigenvector of s_H with l(v_n) = 1
  std::vector<uint32_t> vn((size_t)n, 0);
  if (h.e > 1) {
    Mat diff = minus_identity(h.s);
    std::vector<uint32_t> v0((size_t)n, 0);
    v0[(size_t)j0] = 1;
    std::vector<uint32_t> alpha = diff.apply(v0);
    uint32_t lv = h.l.evaluate(alpha).code();
    if (lv == 0) fail("InternalError", "s_H root lies in the hyperplane");
    uint32_t s = f.inv(lv);
    for (int i = 0; i < n; ++i) vn[(size_t)i] = f.mul(alpha[(size_t)i], s);
  } else {
    vn[(size_t)j0] = 1;
  }
  cols.push_back(std::move(vn));

  Mat c(&f, n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) c.set(i, j, cols[(size_t)j][(size_t)i]);
  if (c.det() == 0) fail("InternalError", "adapted basis is singular");
  return c;
}

Mat adapted_basis(const std::vector<HyperplaneData>& table,
                  const LinearForm& l) {
  for (const HyperplaneData& h : table)
    if (h.l == l) return adapted_basis(h);
  fail("NoSuchHyperplane", "hyperplane not in the table");
}

Fq Character::of(const Mat& m) const {
  int idx = group->index_of(m);
  if (idx < 0) fail("InvalidArgument", "matrix is not a group member");
  return at(idx);
}

Character trivial_character(const MatrixGroup& g) {
  return Character{&g, "trivial", std::vector<uint32_t>(g.size(), 1)};
}

Character det_character(const MatrixGroup& g) {
  std::vector<uint32_t> values(g.size());
  for (size_t i = 0; i < g.size(); ++i) values[i] = g.element((int)i).det();
  return Character{&g, "det", std::move(values)};
}

Character inverse_character(const Character& chi) {
  const FieldSpec& f = *chi.group->field();
  std::vector<uint32_t> values(chi.values.size());
  for (size_t i = 0; i < values.size(); ++i) values[i] = f.inv(chi.values[i]);
  return Character{chi.group, chi.name + "^-1", std::move(values)};
}

Character character_product(const Character& a, const Character& b) {
  if (a.group != b.group) fail("InvalidArgument", "characters of different groups");
  const FieldSpec& f = *a.group->field();
  std::vector<uint32_t> values(a.values.size());
  for (size_t i = 0; i < values.size(); ++i)
    values[i] = f.mul(a.values[i], b.values[i]);
  return Character{a.group, a.name + "*" + b.name, std::move(values)};
}

Character character_extend(const MatrixGroup& g, const std::string& name,
                           const std::vector<uint32_t>& gen_values) {
  const FieldSpec& f = *g.field();
  if (gen_values.size() != g.generators().size())
    fail("InconsistentCharacter", "need one value per generator");
  for (uint32_t v : gen_values) {
    if (v == 0 || v >= f.order())
      fail("InconsistentCharacter", "character values must lie in F^x");
  }
  std::vector<uint32_t> values(g.size(), 0);
  values[0] = 1;
  // element i was discovered as gen * parent, so chi(i) = chi(gen) chi(parent)
  for (size_t i = 1; i < g.size(); ++i) {
    auto [gi, parent] = g.bfs_edges()[i];
    values[i] = f.mul(gen_values[(size_t)gi], values[(size_t)parent]);
  }
  Character chi{&g, name, std::move(values)};

  auto check_pair = [&](int i, int j) {
    Mat prod = g.element(i) * g.element(j);
    int idx = g.index_of(prod);
    if (f.mul(chi.values[(size_t)i], chi.values[(size_t)j]) !=
        chi.values[(size_t)idx])
      fail("InconsistentCharacter",
           "values are not multiplicative on the group");
  };
  if (g.size() <= 5000) {
    for (int i = 0; i < (int)g.size(); ++i)
      for (int j = 0; j < (int)g.size(); ++j) check_pair(i, j);
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_int_distribution<int> pick(0, (int)g.size() - 1);
    for (int t = 0; t < 20000; ++t) check_pair(pick(rng), pick(rng));
    // generator pairs always
    for (const Mat& a : g.generators())
      for (const Mat& b : g.generators())
        check_pair(g.index_of(a), g.index_of(b));
  }
  return chi;
}

}  // namespace invforms
