// Acceptance suite: runs the end-to-end checks, one line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "invforms/crit.hpp"
#include "invforms/serial.hpp"

using namespace invforms;
using namespace invforms::fixtures;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure(msg);
}

Fq require_proportional(const Polynomial& a, const Polynomial& b,
                        const std::string& what) {
  auto c = scalar_ratio(a, b);
  require(c.has_value(), what + ": not proportional");
  return *c;
}

// ---- criteria ----

void criterion_gl2_end_to_end() {
  const FieldSpec& f3 = field_make(3, 1);
  MatrixGroup g = gl2_f3();
  require(g.size() == 48, "|GL_2(F_3)| = 48");

  auto table = hyperplane_table(g);
  require(table.size() == 4, "four reflecting hyperplanes");
  std::set<int> orbits;
  for (const HyperplaneData& h : table) {
    require(h.e == 2 && h.b == 1, "(e_H, b_H) = (2, 1)");
    orbits.insert(h.orbit);
  }
  require(orbits.size() == 1, "one hyperplane orbit");

  auto ds = dickson_invariants(f3, 2);
  require(ds[0].degree() == 8 && ds[1].degree() == 6,
          "Dickson degrees (8, 6)");

  Polynomial j = jacobian_det(ds);
  Polynomial prod = Polynomial::constant(f3, 2, one(f3));
  for (const HyperplaneData& h : table)
    prod = prod * h.l.to_polynomial().pow(3);
  require_proportional(j, prod, "Jacobian vs hyperplane product");

  std::vector<DiffForm> dd = {exterior_derivative(ds[0]),
                              exterior_derivative(ds[1])};
  FreenessCertificate cert = check_criterion(g, dd);
  require(cert.passed, "criterion passes");
  require(cert.target.degree() == 12, "target degree 12");
}

void criterion_sl2() {
  MatrixGroup g = sl2_f3();
  GeneratorFamily fam = slgl_forms(g, 1);
  const FieldSpec& f3 = field_make(3, 1);
  // deg f = 4 shows up as the degree drop of the first form: 7 - 4 = 3
  require(fam.one_forms[0].poly_degree() == 3 &&
              fam.one_forms[1].poly_degree() == 1,
          "coefficient degrees (3, 1) after dividing by the degree-4 product");
  FreenessCertificate cert = check_criterion(g, fam.one_forms);
  require(cert.passed, "criterion passes");
  require(cert.target.degree() == 4, "target degree 4");
  ArrangementPolys polys =
      build_arrangement_polys(f3, 2, hyperplane_table(g));
  require(polys.q_det == Polynomial::constant(f3, 2, one(f3)), "Q_det = 1");
  require(cert.target == polys.q_tilde, "target = Q(A~)");
}

void criterion_free_algebra() {
  for (int which = 0; which < 2; ++which) {
    MatrixGroup g = which == 0 ? gl2_f3() : sl2_f3();
    GeneratorFamily fam = slgl_forms(g, which == 0 ? 2 : 1);
    FreeAlgebraReport r = check_free_algebra(g, fam.one_forms);
    require(r.maximality, "b_H = n - 1 for every hyperplane");
    require(r.delta_identity, "delta^{n-1} = Q(A~) up to F^x");
    require(r.criterion.passed, "criterion passes");
    for (const auto& t : r.twisted_products) {
      require(t.divides, "twisted product divides exactly");
      require(t.invariant, "twisted product is invariant");
    }
    require(r.passed, "report passes");
  }
}

void criterion_unipotent() {
  const FieldSpec& f3 = field_make(3, 1);
  for (int n = 2; n <= 3; ++n) {
    MatrixGroup g = n == 2 ? u2_f3() : u3_f3();
    GeneratorFamily fam = unipotent_forms(g);
    const auto& fs = fam.invariant_polys;
    for (int k = 1; k <= n; ++k) {
      int want = 1;
      for (int t = 1; t < k; ++t) want *= 3;
      require(fs[(size_t)k - 1].degree() == want,
              "invariant degrees 1, q, ..., q^{n-1}");
    }

    // triangular Jacobian identity J = (prod_k prod_{i<k} f_i)^{q-1}
    Polynomial j = jacobian_det(fs);
    Polynomial base = Polynomial::constant(f3, n, one(f3));
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i < k; ++i) base = base * fs[(size_t)i - 1];
    require_proportional(j, base.pow(2), "triangular Jacobian identity");

    // f_i = prod over {b_H = n-i} of l_H against the full hyperplane table
    auto full = hyperplane_table(g, true);
    for (int i = 1; i <= n; ++i) {
      Polynomial prod = Polynomial::constant(f3, n, one(f3));
      int count = 0;
      for (const HyperplaneData& h : full)
        if (h.b == n - i) {
          prod = prod * h.l.to_polynomial();
          ++count;
        }
      require(count > 0, "orbit {b_H = n-i} is nonempty");
      require_proportional(fs[(size_t)i - 1], prod,
                           "f_i vs the orbit product from the table");
    }

    FreenessCertificate cert = check_criterion(g, fam.one_forms);
    require(cert.passed, "criterion passes");
    ArrangementPolys polys =
        build_arrangement_polys(f3, n, hyperplane_table(g));
    require(polys.q_det == Polynomial::constant(f3, n, one(f3)), "Q_det = 1");
    require(cert.target.degree() == (n == 2 ? 1 : 5),
            "target degree = deg Q(A~)");
  }
}

void criterion_single_hyperplane() {
  const FieldSpec& f3 = field_make(3, 1);
  MatrixGroup g = single_hyperplane_f3();
  require(g.size() == 6, "order 6");
  GeneratorFamily fam = single_hyperplane_forms(g);
  DiffForm w = wedge(fam.one_forms[0], fam.one_forms[1]);
  Polynomial z2cubed =
      Polynomial::monomial(f3, std::vector<int>{0, 3}, one(f3));
  require_proportional(*w.coefficient(0b11), z2cubed, "wedge vs z2^3");
  ArrangementPolys polys =
      build_arrangement_polys(f3, 2, hyperplane_table(g));
  require_proportional(z2cubed, polys.q_tilde * polys.q_det,
                       "z2^3 vs Q(A~) Q_det");
  require(check_criterion(g, fam.one_forms).passed, "certificate passes");
}

void criterion_degree_space_oracle() {
  MatrixGroup g = gl2_f3();
  const FieldSpec& f3 = field_make(3, 1);
  auto table = hyperplane_table(g);
  std::vector<Character> chis = {trivial_character(g), det_character(g),
                                 inverse_character(det_character(g))};
  for (const Character& chi : chis) {
    ChiArrangement cd = chi_arrangement(f3, 2, table, chi);
    for (int d = 0; d <= 10; ++d) {
      DegreeSpace chi_space = invariant_degree_space(g, d, &chi);
      int shifted = d - cd.q_chi.degree();
      size_t expect =
          shifted < 0 ? 0u
                      : invariant_degree_space(g, shifted).basis.size();
      require(chi_space.basis.size() == expect,
              "dim F[V]^G_{chi,d} = dim F[V]^G_{d - deg Q_chi}");
      for (const Polynomial& p : chi_space.basis) {
        auto q = try_divide(p, cd.q_chi);
        require(q.has_value(), "chi-invariant divisible by Q_chi");
        require(is_invariant(*q, g), "quotient is invariant");
      }
    }
  }
}

void criterion_lemma_suites() {
  for (int which = 0; which < 2; ++which) {
    MatrixGroup g = which == 0 ? gl2_f3() : u3_f3();
    std::vector<DiffForm> family =
        which == 0 ? slgl_forms(g, 2).one_forms : unipotent_forms(g).one_forms;
    LemmaSuiteReport report = verify_lemmas(g, family, 50, 20250809);
    for (const LemmaCheck& l : report.lemmas) {
      require(l.checks > 0, l.name + " ran");
      std::ostringstream os;
      os << l.name << ": " << l.counterexamples.size() << " counterexample(s)";
      require(l.passed(), os.str());
    }
  }
}

void criterion_chern_rank() {
  std::mt19937_64 rng(20250810);
  std::vector<MatrixGroup> groups;
  groups.push_back(trivial_f3());
  groups.push_back(diag12_f3());
  groups.push_back(cyclic_nonreflection_f3());
  groups.push_back(u2_f3());
  groups.push_back(gl2_f3());
  for (const MatrixGroup& g : groups) {
    const int n = g.dim();
    GeneratorFamily fam = chern_forms(g);
    require((int)fam.one_forms.size() == n, "n Chern forms");
    DiffForm w = fam.one_forms[0];
    for (int i = 1; i < n; ++i) w = wedge(w, fam.one_forms[(size_t)i]);
    require(!w.is_zero(), "nonzero wedge");
    for (const DiffForm& form : fam.one_forms)
      require(is_invariant(form, g), "forms invariant");

    for (int s = 0; s < 10; ++s) {
      auto ws = sample_invariant_one_forms(g, fam.one_forms, n + 1, rng);
      require(polynomial_matrix_rank(one_form_matrix(ws)) <= n,
              "n+1 invariant forms have rank <= n");
    }
  }
}

void criterion_chi_consistency() {
  struct Case {
    MatrixGroup g;
    std::vector<DiffForm> forms;
  };
  std::vector<Case> cases;
  {
    MatrixGroup g = gl2_f3();
    auto forms = slgl_forms(g, 2).one_forms;
    cases.push_back({std::move(g), std::move(forms)});
  }
  {
    MatrixGroup g = sl2_f3();
    auto forms = slgl_forms(g, 1).one_forms;
    cases.push_back({std::move(g), std::move(forms)});
  }
  {
    MatrixGroup g = u3_f3();
    auto forms = unipotent_forms(g).one_forms;
    cases.push_back({std::move(g), std::move(forms)});
  }
  for (const Case& c : cases) {
    FreenessCertificate plain = check_criterion(c.g, c.forms);
    FreenessCertificate chi =
        check_chi_criterion(c.g, trivial_character(c.g), c.forms);
    require(plain == chi, "identical certificates under the trivial character");
  }
}

void criterion_negative_controls() {
  const FieldSpec& f3 = field_make(3, 1);
  MatrixGroup sl2 = sl2_f3();
  std::vector<DiffForm> raw;
  for (const Polynomial& d : dickson_invariants(f3, 2))
    raw.push_back(exterior_derivative(d));
  FreenessCertificate cert = check_criterion(sl2, raw);
  require(!cert.passed, "undivided derivatives fail");
  require(cert.diagnostic.find("degree mismatch") != std::string::npos,
          "degree-mismatch diagnostic");

  bool rejected = false;
  try {
    field_make(2, 1);
  } catch (const Error& e) {
    rejected = e.code() == "CharTwoRejected";
  }
  require(rejected, "characteristic 2 rejected at construction");
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void()> fn;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"1. GL_2(F_3) end-to-end (order, table, Dickson, Jacobian, criterion)",
       10.0, criterion_gl2_end_to_end},
      {"2. SL_2(F_3) forms from Dickson derivatives over the hyperplane product",
       10.0, criterion_sl2},
      {"3. free exterior algebra checks for GL_2(F_3) and SL_2(F_3)", 10.0,
       criterion_free_algebra},
      {"4. unipotent U_2(F_3) and U_3(F_3): degrees, Jacobian, orbit products, "
       "criterion", 30.0, criterion_unipotent},
      {"5. single-hyperplane group of order 6: wedge = z2^3 vol", 1.0,
       criterion_single_hyperplane},
      {"6. degree-space oracle: relative invariants factor through Q_chi",
       30.0, criterion_degree_space_oracle},
      {"7. seeded lemma property suites, 50 samples, zero counterexamples",
       120.0, criterion_lemma_suites},
      {"8. Chern forms for five groups; rank bound on sampled form tuples",
       60.0, criterion_chern_rank},
      {"9. trivial-character consistency of the two criterion checkers", 30.0,
       criterion_chi_consistency},
      {"10. negative controls: undivided forms fail; characteristic 2 rejected",
       10.0, criterion_negative_controls},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.fn();
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failures;
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (verdict == "PASS" && secs > c.budget_seconds) {
      verdict = "FAIL";
      detail = "runtime budget exceeded";
      ++failures;
    }
    std::ostringstream line;
    line << "[" << verdict << "] " << c.name << "  (" << secs << "s)";
    if (!detail.empty()) line << "  -- " << detail;
    std::cout << line.str() << "\n";
  }
  if (failures != 0)
    std::cout << failures << " criterion(s) failed" << std::endl;
  else
    std::cout << "all criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
