#include "invforms/gens.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "invforms/arrgt.hpp"

namespace invforms {

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::dickson_glsl: return "dickson_glsl";
    case FamilyTag::unipotent: return "unipotent";
    case FamilyTag::single_hyperplane: return "single_hyperplane";
    case FamilyTag::chern: return "chern";
  }
  fail("InvalidArgument", "unknown family tag");
}

FamilyTag family_tag_from_string(const std::string& s) {
  if (s == "dickson_glsl") return FamilyTag::dickson_glsl;
  if (s == "unipotent") return FamilyTag::unipotent;
  if (s == "single_hyperplane") return FamilyTag::single_hyperplane;
  if (s == "chern") return FamilyTag::chern;
  fail("ParseError", "unknown family tag: " + s);
}

namespace {

void verify_family_invariance(const MatrixGroup& g,
                              const std::vector<DiffForm>& forms) {
  for (const DiffForm& w : forms)
    for (const Mat& gen : g.generators())
      if (act(gen, w) != w)
        fail("InvarianceCheckFailed",
             "constructed form is not invariant under a generator");
}

uint64_t int_pow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Coefficient vector of a dual vector from its mixed-radix code.
std::vector<uint32_t> decode_vector(uint64_t code, uint32_t q, int n) {
  std::vector<uint32_t> v((size_t)n);
  for (int i = 0; i < n; ++i) {
    v[(size_t)i] = (uint32_t)(code % q);
    code /= q;
  }
  return v;
}

Polynomial linear_from_coeffs(const FieldSpec& f,
                              const std::vector<uint32_t>& c) {
  Polynomial r(&f, (int)c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    std::vector<int> e(c.size(), 0);
    e[i] = 1;
    r.add_term(Monomial(std::move(e)), Fq(&f, c[i]));
  }
  return r;
}

}  // namespace

std::vector<Polynomial> dickson_invariants(const FieldSpec& f, int n) {
  if (n < 1) fail("InvalidArgument", "n must be >= 1");
  const uint64_t q = f.order();
  const uint64_t qn = int_pow(q, n);
  if (qn > 256) fail("ScaleExceeded", "q^n too large for the subspace sum");

  // All i-dimensional subspaces of V*, as sorted member-code lists.
  auto subspaces_of_dim = [&](int i) {
    std::set<std::vector<uint64_t>> spans;
    std::vector<uint64_t> nonzero;
    for (uint64_t v = 1; v < qn; ++v) nonzero.push_back(v);
    // iterate i-tuples of independent vectors
    std::vector<uint64_t> tuple((size_t)i, 0);
    std::vector<std::vector<uint32_t>> rows;
    std::function<void(int, size_t)> rec = [&](int depth, size_t start) {
      if (depth == i) {
        // span = all F_q-combinations of the tuple
        std::set<uint64_t> members{0};
        std::vector<uint64_t> frontier{0};
        for (int t = 0; t < depth; ++t) {
          std::set<uint64_t> next;
          for (uint64_t m : members)
            for (uint64_t c = 0; c < q; ++c) {
              // m + c * tuple[t], componentwise in the field
              auto vm = decode_vector(m, (uint32_t)q, n);
              auto vt = decode_vector(tuple[(size_t)t], (uint32_t)q, n);
              uint64_t code = 0, mult = 1;
              for (int j = 0; j < n; ++j) {
                uint32_t x = f.add(vm[(size_t)j],
                                   f.mul((uint32_t)c, vt[(size_t)j]));
                code += (uint64_t)x * mult;
                mult *= q;
              }
              next.insert(code);
            }
          members = std::move(next);
        }
        spans.insert(std::vector<uint64_t>(members.begin(), members.end()));
        return;
      }
      for (size_t idx = start; idx < nonzero.size(); ++idx) {
        rows.push_back(decode_vector(nonzero[idx], (uint32_t)q, n));
        if (Mat::from_rows(f, rows).rank() == depth + 1) {
          tuple[(size_t)depth] = nonzero[idx];
          rec(depth + 1, idx + 1);
        }
        rows.pop_back();
      }
    };
    if (i == 0)
      spans.insert(std::vector<uint64_t>{0});
    else
      rec(0, 0);
    return spans;
  };

  std::vector<Polynomial> out;
  for (int i = 0; i < n; ++i) {
    Polynomial d(&f, n);
    for (const auto& span : subspaces_of_dim(i)) {
      Polynomial prod = Polynomial::constant(f, n, one(f));
      for (uint64_t v = 1; v < qn; ++v) {
        if (std::binary_search(span.begin(), span.end(), v)) continue;
        prod = prod * linear_from_coeffs(f, decode_vector(v, (uint32_t)q, n));
      }
      d += prod;
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Polynomial> unipotent_invariants(const FieldSpec& f, int n) {
  if (n < 1) fail("InvalidArgument", "n must be >= 1");
  const uint64_t q = f.order();
  if (int_pow(q, n - 1) > 4096)
    fail("ScaleExceeded", "q^{n-1} too large for the orbit product");
  std::vector<Polynomial> out;
  for (int k = 1; k <= n; ++k) {
    Polynomial prod = Polynomial::constant(f, n, one(f));
    const uint64_t count = int_pow(q, k - 1);
    for (uint64_t code = 0; code < count; ++code) {
      std::vector<uint32_t> c((size_t)n, 0);
      uint64_t x = code;
      for (int i = 0; i < k - 1; ++i) {
        c[(size_t)i] = (uint32_t)(x % q);
        x /= q;
      }
      c[(size_t)k - 1] = 1;
      prod = prod * linear_from_coeffs(f, c);
    }
    out.push_back(std::move(prod));
  }
  return out;
}

GeneratorFamily unipotent_forms(const MatrixGroup& g) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();
  const uint64_t q = f.order();
  if (g.size() != int_pow(q, n * (n - 1) / 2))
    fail("NotUnipotentStandard", "group order is not q^{n(n-1)/2}");
  for (const Mat& m : g.elements())
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        if (m.at(i, j) != (i == j ? 1u : 0u))
          fail("NotUnipotentStandard",
               "an element is not lower unitriangular");

  std::vector<Polynomial> fs = unipotent_invariants(f, n);
  std::vector<DiffForm> forms;
  for (int k = 1; k <= n; ++k) {
    Polynomial divisor = Polynomial::constant(f, n, one(f));
    for (int i = 1; i < k; ++i)
      divisor = divisor * fs[(size_t)i - 1].pow((int)q - 2);
    IndexSet bad = 0;
    auto w = try_divide(exterior_derivative(fs[(size_t)k - 1]), divisor, &bad);
    if (!w)
      fail("NotDivisible", "df_" + std::to_string(k) +
                               " is not divisible by the expected product");
    forms.push_back(std::move(*w));
  }
  verify_family_invariance(g, forms);
  return GeneratorFamily{FamilyTag::unipotent, &f, n, std::move(fs),
                         std::move(forms),
                         "orbit-product invariants and df_k / prod f_i^{q-2}"};
}

GeneratorFamily slgl_forms(const MatrixGroup& g, int e) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();
  const uint64_t q = f.order();

  int det_order = 1;
  for (const Mat& m : g.elements()) {
    uint32_t d = m.det();
    if (d != 1) det_order = std::max(det_order, mult_order(Fq(&f, d)));
  }
  if (det_order != e)
    fail("NotSLGLFamily", "det(G) has order " + std::to_string(det_order) +
                              ", not " + std::to_string(e));

  auto table = hyperplane_table(g);
  uint64_t expected = (int_pow(q, n) - 1) / (q - 1);
  if (table.size() != expected)
    fail("NotSLGLFamily", "not every hyperplane is reflecting");
  for (const HyperplaneData& h : table)
    if (h.e != e || h.b != n - 1)
      fail("NotSLGLFamily", "hyperplane data is not (e_H, b_H) = (e, n-1)");

  Polynomial div = Polynomial::constant(f, n, one(f));
  for (const HyperplaneData& h : table)
    div = div * h.l.to_polynomial().pow((int)q - e - 1);

  std::vector<Polynomial> dicksons = dickson_invariants(f, n);
  std::vector<DiffForm> forms;
  for (int i = 0; i < n; ++i) {
    IndexSet bad = 0;
    auto w = try_divide(exterior_derivative(dicksons[(size_t)i]), div, &bad);
    if (!w)
      fail("NotDivisible", "d(d_{n," + std::to_string(i) +
                               "}) is not divisible by the hyperplane product");
    forms.push_back(std::move(*w));
  }
  verify_family_invariance(g, forms);
  return GeneratorFamily{FamilyTag::dickson_glsl, &f, n, std::move(dicksons),
                         std::move(forms),
                         "Dickson derivatives divided by prod l_H^{q-e-1}, e = " +
                             std::to_string(e)};
}

GeneratorFamily single_hyperplane_forms(const MatrixGroup& g) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();
  auto table = hyperplane_table(g);
  if (table.size() != 1)
    fail("NotSingleHyperplane", "the arrangement has " +
                                    std::to_string(table.size()) +
                                    " hyperplanes");
  const HyperplaneData& h = table[0];
  if ((size_t)h.stab_order != g.size())
    fail("NotSingleHyperplane", "the group does not fix the hyperplane pointwise");

  Mat c = adapted_basis(h);
  const int e = h.e;
  const int k = h.b;
  auto zvar = [&](int i) { return Polynomial::variable(f, n, i); };
  Polynomial zn = zvar(n - 1);

  std::vector<DiffForm> adapted;
  for (int i = 1; i <= k; ++i) {
    // z_n^e dz_i - z_i z_n^{e-1} dz_n
    DiffForm w(&f, n, 1);
    w.add_term(1u << (i - 1), zn.pow(e));
    w.add_term(1u << (n - 1), -(zvar(i - 1) * zn.pow(e - 1)));
    adapted.push_back(std::move(w));
  }
  for (int i = k + 1; i <= n - 1; ++i) {
    DiffForm w(&f, n, 1);
    w.add_term(1u << (i - 1), Polynomial::constant(f, n, one(f)));
    adapted.push_back(std::move(w));
  }
  {
    DiffForm w(&f, n, 1);
    w.add_term(1u << (n - 1), zn.pow(e - 1));
    adapted.push_back(std::move(w));
  }

  std::vector<DiffForm> forms;
  for (const DiffForm& w : adapted) forms.push_back(act(c, w));
  verify_family_invariance(g, forms);
  return GeneratorFamily{FamilyTag::single_hyperplane, &f, n, {},
                         std::move(forms),
                         "single-hyperplane generators pulled back from an "
                         "adapted basis (e = " + std::to_string(e) +
                             ", b = " + std::to_string(k) + ")"};
}

GeneratorFamily chern_forms(const MatrixGroup& g) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();

  // U = union of the G-orbits of the dual basis, as exact coefficient rows
  std::set<std::vector<uint32_t>> orbit_union;
  for (int i = 0; i < n; ++i) {
    std::vector<uint32_t> zi((size_t)n, 0);
    zi[(size_t)i] = 1;
    std::vector<std::vector<uint32_t>> frontier{zi};
    orbit_union.insert(zi);
    while (!frontier.empty()) {
      std::vector<std::vector<uint32_t>> next;
      for (const auto& v : frontier)
        for (const Mat& gen : g.generators()) {
          // row vector v times gen^{-1}
          Mat m = gen.inverse();
          std::vector<uint32_t> img((size_t)n, 0);
          for (int jj = 0; jj < n; ++jj) {
            uint32_t acc = 0;
            for (int ii = 0; ii < n; ++ii)
              acc = f.add(acc, f.mul(v[(size_t)ii], m.at(ii, jj)));
            img[(size_t)jj] = acc;
          }
          if (orbit_union.insert(img).second) next.push_back(std::move(img));
        }
      frontier = std::move(next);
    }
  }
  if (orbit_union.size() > 64)
    fail("ScaleExceeded", "orbit union too large to expand the Chern product");

  // prod (T - u): coeffs[j] is the coefficient of T^j
  const int r = (int)orbit_union.size();
  std::vector<Polynomial> coeffs{Polynomial::constant(f, n, one(f))};
  for (const auto& u : orbit_union) {
    Polynomial up = linear_from_coeffs(f, u);
    std::vector<Polynomial> next((size_t)coeffs.size() + 1, Polynomial(&f, n));
    for (size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= up * coeffs[j];
    }
    coeffs = std::move(next);
  }

  // c_i = coefficient of T^{r-i}; greedy selection by increasing index
  std::vector<Polynomial> selected;
  std::vector<DiffForm> forms;
  DiffForm running = DiffForm::from_polynomial(
      Polynomial::constant(f, n, one(f)));
  for (int i = 1; i <= r && (int)selected.size() < n; ++i) {
    const Polynomial& ci = coeffs[(size_t)(r - i)];
    if (ci.is_zero()) continue;
    DiffForm dci = exterior_derivative(ci);
    if (dci.is_zero()) continue;
    DiffForm candidate = wedge(running, dci);
    if (candidate.is_zero()) continue;
    running = std::move(candidate);
    selected.push_back(ci);
    forms.push_back(std::move(dci));
  }
  if ((int)forms.size() != n)
    fail("SelectionFailed",
         "could not select n Chern classes with independent differentials");
  verify_family_invariance(g, forms);
  return GeneratorFamily{FamilyTag::chern, &f, n, std::move(selected),
                         std::move(forms),
                         "differentials of Chern classes of the dual-basis "
                         "orbit union (|U| = " + std::to_string(r) + ")"};
}

}  // namespace invforms
