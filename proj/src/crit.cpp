#include "invforms/crit.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>

namespace invforms {

bool is_invariant(const Polynomial& x, const MatrixGroup& g,
                  const Character* chi) {
  for (const Mat& gen : g.generators()) {
    Polynomial expected = chi ? chi->of(gen) * x : x;
    if (act(gen, x) != expected) return false;
  }
  return true;
}

bool is_invariant(const DiffForm& x, const MatrixGroup& g,
                  const Character* chi) {
  for (const Mat& gen : g.generators()) {
    DiffForm expected = chi ? chi->of(gen) * x : x;
    if (act(gen, x) != expected) return false;
  }
  return true;
}

namespace {

std::vector<Monomial> degree_monomials(int n, int d) {
  std::vector<Monomial> out;
  std::vector<int> e((size_t)n, 0);
  // lexicographically descending enumeration of compositions of d
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == n - 1) {
      e[(size_t)pos] = rest;
      out.emplace_back(e);
      return;
    }
    for (int v = rest; v >= 0; --v) {
      e[(size_t)pos] = v;
      rec(pos + 1, rest - v);
    }
  };
  rec(0, d);
  return out;
}

}  // namespace

DegreeSpace invariant_degree_space(const MatrixGroup& g, int d,
                                   const Character* chi) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();
  if (n > 3 || d > 20) fail("ScaleExceeded", "degree-space oracle caps: n <= 3, d <= 20");
  std::vector<Monomial> basis = degree_monomials(n, d);
  if (basis.size() > 2000) fail("ScaleExceeded", "too many monomials");
  const int dim = (int)basis.size();

  std::vector<std::vector<uint32_t>> rows;
  for (const Mat& gen : g.generators()) {
    uint32_t chi_val = chi ? chi->of(gen).code() : 1;
    // columns: action images of basis monomials
    std::vector<std::vector<uint32_t>> cols;
    for (const Monomial& m : basis) {
      Polynomial img =
          act(gen, Polynomial::monomial(f, m.exponents(), one(f)));
      std::vector<uint32_t> col((size_t)dim, 0);
      for (const auto& [mm, c] : img.terms()) {
        auto it = std::find(basis.begin(), basis.end(), mm);
        if (it == basis.end()) fail("InternalError", "action left the degree space");
        col[(size_t)(it - basis.begin())] = c.code();
      }
      cols.push_back(std::move(col));
    }
    for (int r = 0; r < dim; ++r) {
      std::vector<uint32_t> row((size_t)dim, 0);
      for (int c = 0; c < dim; ++c) {
        uint32_t v = cols[(size_t)c][(size_t)r];
        if (r == c) v = f.sub(v, chi_val);
        row[(size_t)c] = v;
      }
      rows.push_back(std::move(row));
    }
  }

  DegreeSpace out;
  out.degree = d;
  if (rows.empty()) {
    // trivial group: everything is invariant
    for (const Monomial& m : basis)
      out.basis.push_back(Polynomial::monomial(f, m.exponents(), one(f)));
    return out;
  }
  Mat system = Mat::from_rows(f, rows);
  for (const auto& v : system.kernel_basis()) {
    Polynomial p(&f, n);
    for (int c = 0; c < dim; ++c)
      if (v[(size_t)c] != 0)
        p.add_term(basis[(size_t)c], Fq(&f, v[(size_t)c]));
    out.basis.push_back(std::move(p));
  }
  return out;
}

std::vector<DiffForm> invariant_form_space(const FieldSpec& f, int n,
                                           std::span<const Mat> mats,
                                           std::span<const uint32_t> chi_values,
                                           int form_degree, int coeff_degree) {
  if (!chi_values.empty() && chi_values.size() != mats.size())
    fail("DimensionMismatch", "one character value per matrix");
  std::vector<Monomial> monos = degree_monomials(n, coeff_degree);
  std::vector<IndexSet> masks;
  for (IndexSet s = 0; s < (1u << n); ++s)
    if (std::popcount(s) == form_degree) masks.push_back(s);
  const int dim = (int)(monos.size() * masks.size());
  if (dim > 4000) fail("ScaleExceeded", "form-space system too large");

  auto basis_form = [&](size_t mask_i, size_t mono_i) {
    DiffForm w(&f, n, form_degree);
    w.add_term(masks[mask_i],
               Polynomial::monomial(f, monos[mono_i].exponents(), one(f)));
    return w;
  };
  auto coordinates = [&](const DiffForm& w) {
    std::vector<uint32_t> col((size_t)dim, 0);
    for (const auto& [s, u] : w.terms()) {
      auto mit = std::find(masks.begin(), masks.end(), s);
      for (const auto& [m, c] : u.terms()) {
        auto it = std::find(monos.begin(), monos.end(), m);
        if (it == monos.end() || mit == masks.end())
          fail("InternalError", "action left the form space");
        size_t idx = (size_t)(mit - masks.begin()) * monos.size() +
                     (size_t)(it - monos.begin());
        col[idx] = c.code();
      }
    }
    return col;
  };

  std::vector<std::vector<uint32_t>> rows;
  for (size_t gi = 0; gi < mats.size(); ++gi) {
    uint32_t chi_val = chi_values.empty() ? 1 : chi_values[gi];
    std::vector<std::vector<uint32_t>> cols;
    for (size_t mask_i = 0; mask_i < masks.size(); ++mask_i)
      for (size_t mono_i = 0; mono_i < monos.size(); ++mono_i)
        cols.push_back(coordinates(act(mats[gi], basis_form(mask_i, mono_i))));
    for (int r = 0; r < dim; ++r) {
      std::vector<uint32_t> row((size_t)dim, 0);
      for (int c = 0; c < dim; ++c) {
        uint32_t v = cols[(size_t)c][(size_t)r];
        if (r == c) v = f.sub(v, chi_val);
        row[(size_t)c] = v;
      }
      rows.push_back(std::move(row));
    }
  }

  std::vector<DiffForm> out;
  if (rows.empty()) {
    for (size_t mask_i = 0; mask_i < masks.size(); ++mask_i)
      for (size_t mono_i = 0; mono_i < monos.size(); ++mono_i)
        out.push_back(basis_form(mask_i, mono_i));
    return out;
  }
  Mat system = Mat::from_rows(f, rows);
  for (const auto& v : system.kernel_basis()) {
    DiffForm w(&f, n, form_degree);
    for (size_t mask_i = 0; mask_i < masks.size(); ++mask_i)
      for (size_t mono_i = 0; mono_i < monos.size(); ++mono_i) {
        uint32_t c = v[mask_i * monos.size() + mono_i];
        if (c != 0)
          w.add_term(masks[mask_i],
                     Polynomial::monomial(f, monos[mono_i].exponents(),
                                          Fq(&f, c)));
      }
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

FreenessCertificate run_chi_criterion(const MatrixGroup& g,
                                      const Character& chi,
                                      std::span<const DiffForm> forms,
                                      bool trivial_chi) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();
  if ((int)forms.size() != n)
    fail("WrongCount", "need exactly n = " + std::to_string(n) + " forms, got " +
                           std::to_string(forms.size()));
  for (const DiffForm& w : forms) {
    if (w.form_degree() != 1) fail("WrongCount", "inputs must be 1-forms");
    if (!is_invariant(w, g, &chi))
      fail(trivial_chi ? "InputNotInvariant" : "InputNotChiInvariant",
           "an input form is not " +
               std::string(trivial_chi ? "invariant" : "chi-invariant"));
  }

  DiffForm w = forms[0];
  for (int i = 1; i < n; ++i) w = wedge(w, forms[(size_t)i]);

  auto table = hyperplane_table(g);
  ArrangementPolys polys = build_arrangement_polys(f, n, table);
  ChiArrangement chi_data = chi_arrangement(f, n, table, chi);
  Character chi_det = character_product(chi, det_character(g));
  ChiArrangement chi_det_data = chi_arrangement(f, n, table, chi_det);
  Polynomial target =
      chi_data.q_tilde_chi * chi_data.q_chi.pow(n - 1) * chi_det_data.q_chi;

  FreenessCertificate cert{false, w, target, std::nullopt, ""};
  const Polynomial* coeff = w.coefficient((1u << n) - 1);
  if (coeff == nullptr) {
    cert.diagnostic = "wedge product vanishes";
    return cert;
  }
  auto c = scalar_ratio(*coeff, target);
  if (!c) {
    std::ostringstream os;
    if (coeff->degree() != target.degree())
      os << "degree mismatch: wedge coefficient has degree " << coeff->degree()
         << ", target has degree " << target.degree();
    else
      os << "wedge coefficient is not a nonzero scalar multiple of the target";
    cert.diagnostic = os.str();
    return cert;
  }
  cert.passed = true;
  cert.scalar = *c;
  return cert;
}

}  // namespace

FreenessCertificate check_criterion(const MatrixGroup& g,
                                    std::span<const DiffForm> forms) {
  Character triv = trivial_character(g);
  return run_chi_criterion(g, triv, forms, true);
}

FreenessCertificate check_chi_criterion(const MatrixGroup& g,
                                        const Character& chi,
                                        std::span<const DiffForm> forms) {
  bool trivial = true;
  for (uint32_t v : chi.values)
    if (v != 1) {
      trivial = false;
      break;
    }
  return run_chi_criterion(g, chi, forms, trivial);
}

FreeAlgebraReport check_free_algebra(const MatrixGroup& g,
                                     std::span<const DiffForm> forms) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();
  FreeAlgebraReport report{false, false, std::nullopt,
                           check_criterion(g, forms), {}, false};

  auto table = hyperplane_table(g);
  report.maximality = true;
  for (const HyperplaneData& h : table)
    if (h.b != n - 1) report.maximality = false;

  ArrangementPolys polys = build_arrangement_polys(f, n, table);
  auto c = scalar_ratio(polys.delta_max.pow(n - 1), polys.q_tilde);
  report.delta_identity = c.has_value();
  report.delta_scalar = c;

  for (IndexSet s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) < 2) continue;
    std::vector<int> indices = index_list(s);
    DiffForm w = forms[(size_t)indices[0] - 1];
    bool divides = true;
    for (size_t i = 1; i < indices.size(); ++i) {
      DiffForm ww = wedge(w, forms[(size_t)indices[i] - 1]);
      auto q = try_divide(ww, polys.delta_max, nullptr);
      if (!q) {
        divides = false;
        break;
      }
      w = std::move(*q);
    }
    TwistedProductCheck check;
    check.indices = indices;
    check.divides = divides;
    check.invariant = divides && is_invariant(w, g);
    report.twisted_products.push_back(std::move(check));
  }

  report.passed = report.maximality && report.delta_identity &&
                  report.criterion.passed;
  for (const auto& t : report.twisted_products)
    if (!t.divides || !t.invariant) report.passed = false;
  return report;
}

namespace {

Polynomial random_polynomial(const FieldSpec& f, int n, int max_degree,
                             std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> coin(0, 2);
  std::uniform_int_distribution<uint32_t> pick(0, f.order() - 1);
  Polynomial out(&f, n);
  for (int d = 0; d <= max_degree; ++d)
    for (const Monomial& m : degree_monomials(n, d))
      if (coin(rng) == 0) out.add_term(m, Fq(&f, pick(rng)));
  return out;
}

std::string describe_form(const DiffForm& w) {
  std::string s = w.to_string();
  if (s.size() > 160) s = s.substr(0, 157) + "...";
  return s;
}

}  // namespace

std::vector<DiffForm> sample_invariant_one_forms(
    const MatrixGroup& g, const std::vector<DiffForm>& pool, int count,
    std::mt19937_64& rng) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();
  std::vector<Polynomial> h_pool;
  for (int d = 0; d <= 4; ++d) {
    DegreeSpace sp = invariant_degree_space(g, d);
    for (auto& p : sp.basis) h_pool.push_back(std::move(p));
  }
  if (pool.empty()) fail("InvalidArgument", "empty form pool");
  std::uniform_int_distribution<size_t> pick_w(0, pool.size() - 1);
  std::uniform_int_distribution<size_t> pick_h(0, h_pool.size() - 1);
  std::uniform_int_distribution<uint32_t> pick_c(0, f.order() - 1);
  std::vector<DiffForm> out;
  for (int i = 0; i < count; ++i) {
    DiffForm w(&f, n, 1);
    for (int t = 0; t < 2; ++t) {
      Fq c(&f, pick_c(rng));
      w += c * (h_pool[pick_h(rng)] * pool[pick_w(rng)]);
    }
    out.push_back(std::move(w));
  }
  return out;
}

LemmaSuiteReport verify_lemmas(const MatrixGroup& g,
                               const std::vector<DiffForm>& known_family,
                               int samples, uint64_t seed) {
  const FieldSpec& f = *g.field();
  const int n = g.dim();
  std::mt19937_64 rng(seed);
  LemmaSuiteReport report;
  report.seed = seed;
  report.samples = samples;

  auto table = hyperplane_table(g);
  ArrangementPolys polys = build_arrangement_polys(f, n, table);
  auto reflections = find_reflections(g);

  // s(f) - f divisible by l_H, for every reflection
  {
    LemmaCheck check{"reflection_difference_divisibility", 0, {}};
    for (const Reflection& r : reflections) {
      const Mat& s = g.element(r.elem);
      Polynomial l = r.hyperplane.to_polynomial();
      for (int i = 0; i < samples; ++i) {
        Polynomial p = random_polynomial(f, n, 4, rng);
        Polynomial diff = act(s, p) - p;
        ++check.checks;
        if (!diff.is_zero() && !try_divide(diff, l))
          check.counterexamples.push_back(
              "s(f) - f not divisible by " + l.to_string() +
              " for f = " + p.to_string());
      }
    }
    report.lemmas.push_back(std::move(check));
  }

  // adapted-basis coefficient divisibility for stabilizer-invariant forms
  {
    LemmaCheck part1{"stabilizer_coefficient_divisibility_1", 0, {}};
    LemmaCheck part2{"stabilizer_coefficient_divisibility_2", 0, {}};
    for (const HyperplaneData& h : table) {
      Mat c = adapted_basis(h);
      Mat cinv = c.inverse();
      std::vector<Mat> full, kernel;
      for (int idx : h.stab_elems) {
        Mat conj = cinv * g.element(idx) * c;
        if (g.element(idx).det() == 1) kernel.push_back(conj);
        full.push_back(conj);
      }
      Polynomial zn = Polynomial::variable(f, n, n - 1);
      auto relevant = [&](IndexSet s) {
        // J with J cap {1..b} nonempty and n not in J
        if (s & (1u << (n - 1))) return false;
        return (s & ((1u << h.b) - 1)) != 0;
      };
      auto run = [&](const std::vector<Mat>& mats, const Polynomial& divisor,
                     LemmaCheck& check) {
        for (int k = 1; k <= std::min(2, n - 1); ++k)
          for (int d = 1; d <= 3; ++d) {
            auto basis = invariant_form_space(f, n, mats, {}, k, d);
            if (basis.empty()) continue;
            std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
            std::uniform_int_distribution<uint32_t> pick_c(0, f.order() - 1);
            std::vector<DiffForm> tests = basis;
            for (int i = 0; i < samples; ++i) {
              DiffForm w(&f, n, k);
              w += Fq(&f, pick_c(rng)) * basis[pick(rng)];
              w += Fq(&f, pick_c(rng)) * basis[pick(rng)];
              tests.push_back(std::move(w));
            }
            for (const DiffForm& w : tests) {
              for (const auto& [s, u] : w.terms()) {
                if (!relevant(s)) continue;
                ++check.checks;
                if (!try_divide(u, divisor))
                  check.counterexamples.push_back(
                      "coefficient " + u.to_string() +
                      " not divisible at hyperplane " +
                      h.l.to_polynomial().to_string());
              }
            }
          }
      };
      run(kernel, zn, part1);
      run(full, zn.pow(h.e), part2);
    }
    report.lemmas.push_back(std::move(part1));
    report.lemmas.push_back(std::move(part2));
  }

  // n-fold wedges divisible by Q(A~) Q_det; pairs divisible by delta
  {
    LemmaCheck wedge_check{"wedge_divisibility_multiarrangement", 0, {}};
    LemmaCheck pair_check{"pair_divisibility_discriminant", 0, {}};
    std::vector<DiffForm> pool = known_family;
    GeneratorFamily chern = chern_forms(g);
    for (auto& w : chern.one_forms) pool.push_back(std::move(w));
    Polynomial target = polys.q_tilde * polys.q_det;
    for (int i = 0; i < samples; ++i) {
      auto ws = sample_invariant_one_forms(g, pool, n, rng);
      DiffForm w = ws[0];
      for (int j = 1; j < n; ++j) w = wedge(w, ws[(size_t)j]);
      ++wedge_check.checks;
      if (!try_divide(w, target, nullptr))
        wedge_check.counterexamples.push_back(
            "n-fold wedge not divisible by Q(A~) Q_det: " + describe_form(w));
      auto pair = sample_invariant_one_forms(g, pool, 2, rng);
      DiffForm pw = wedge(pair[0], pair[1]);
      ++pair_check.checks;
      if (!try_divide(pw, polys.delta_max, nullptr))
        pair_check.counterexamples.push_back(
            "pairwise wedge not divisible by delta: " + describe_form(pw));
    }
    report.lemmas.push_back(std::move(wedge_check));
    report.lemmas.push_back(std::move(pair_check));
  }

  // (e_H, b_H) constant on orbits
  {
    LemmaCheck check{"orbit_data_constancy", 0, {}};
    auto full = hyperplane_table(g, true);
    std::map<int, std::pair<int, int>> seen;
    for (const HyperplaneData& h : full) {
      ++check.checks;
      auto [it, inserted] = seen.emplace(h.orbit, std::make_pair(h.e, h.b));
      if (!inserted && it->second != std::make_pair(h.e, h.b))
        check.counterexamples.push_back(
            "orbit " + std::to_string(h.orbit) + " mixes (e, b) at " +
            h.l.to_polynomial().to_string());
    }
    report.lemmas.push_back(std::move(check));
  }

  return report;
}

std::vector<std::vector<Polynomial>> one_form_matrix(
    std::span<const DiffForm> forms) {
  if (forms.empty()) fail("InvalidArgument", "no forms");
  const FieldSpec& f = *forms[0].field();
  const int n = forms[0].nvars();
  std::vector<std::vector<Polynomial>> m;
  for (const DiffForm& w : forms) {
    if (w.form_degree() != 1) fail("InvalidArgument", "need 1-forms");
    std::vector<Polynomial> row;
    for (int j = 0; j < n; ++j) {
      const Polynomial* u = w.coefficient(1u << j);
      row.push_back(u ? *u : Polynomial(&f, n));
    }
    m.push_back(std::move(row));
  }
  return m;
}

int polynomial_matrix_rank(std::vector<std::vector<Polynomial>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  const FieldSpec& f = *m[0][0].field();
  const int n = m[0][0].nvars();
  Polynomial prev = Polynomial::constant(f, n, one(f));
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t pivot = rows;
    for (size_t i = r; i < rows; ++i)
      if (!m[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    // one-step fraction-free elimination; division by the previous pivot is
    // exact by Sylvester's identity
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) {
        if (j == col) continue;
        Polynomial num = m[r][col] * m[i][j] - m[i][col] * m[r][j];
        auto q = try_divide(num, prev);
        if (!q) fail("InternalError", "fraction-free elimination lost exactness");
        m[i][j] = std::move(*q);
      }
      m[i][col] = Polynomial(&f, n);
    }
    prev = m[r][col];
    ++r;
  }
  return (int)r;
}

}  // namespace invforms
