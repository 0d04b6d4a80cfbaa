#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "invforms/crit.hpp"

using namespace invforms;
using namespace invforms::fixtures;

namespace {

template <typename F>
std::string error_code(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

DiffForm dz(const FieldSpec& f, int n, int i) {
  DiffForm w(&f, n, 1);
  w.add_term(1u << (i - 1), Polynomial::constant(f, n, one(f)));
  return w;
}

}  // namespace

TEST_CASE("invariance tests") {
  MatrixGroup gl2 = gl2_f3();
  const FieldSpec& f3 = field_make(3, 1);
  auto table = hyperplane_table(gl2);
  ArrangementPolys polys = build_arrangement_polys(f3, 2, table);
  Character det = det_character(gl2);

  CHECK(is_invariant(polys.q_det, gl2, &det));
  CHECK(is_invariant(polys.q_tilde, gl2));
  CHECK(!is_invariant(polys.q_det, gl2));  // det-invariant, not invariant

  // a dz_i moved by a transvection is not invariant
  MatrixGroup u2 = u2_f3();  // lower unitriangular: moves z2, fixes z1
  CHECK(is_invariant(dz(f3, 2, 1), u2));
  CHECK(!is_invariant(dz(f3, 2, 2), u2));
  MatrixGroup upper(&f3, 2, {mat(f3, 2, {1, 1, 0, 1})});
  CHECK(!is_invariant(dz(f3, 2, 1), upper));  // t dz1 = dz1 - dz2

  // vol is invariant under any subgroup of SL
  MatrixGroup sl2 = sl2_f3();
  CHECK(is_invariant(DiffForm::volume(f3, 2), sl2));
  // and det^{-1}-invariant in general
  Character dinv = inverse_character(det_character(gl2));
  CHECK(is_invariant(DiffForm::volume(f3, 2), gl2, &dinv));
}

TEST_CASE("invariant degree spaces") {
  const FieldSpec& f3 = field_make(3, 1);
  MatrixGroup trivial = trivial_f3();
  CHECK(invariant_degree_space(trivial, 2).basis.size() == 3);

  MatrixGroup u2 = u2_f3();
  DegreeSpace sp = invariant_degree_space(u2, 1);
  REQUIRE(sp.basis.size() == 1);
  CHECK(sp.basis[0] == Polynomial::variable(f3, 2, 0));  // span{z1}

  MatrixGroup gl2 = gl2_f3();
  Character det = det_character(gl2);
  DegreeSpace dsp = invariant_degree_space(gl2, 4, &det);
  REQUIRE(dsp.basis.size() == 1);
  auto table = hyperplane_table(gl2);
  ArrangementPolys polys = build_arrangement_polys(f3, 2, table);
  CHECK(scalar_ratio(dsp.basis[0], polys.q_det).has_value());

  // basis elements are homogeneous and invariant
  for (int d = 0; d <= 8; ++d)
    for (const Polynomial& p : invariant_degree_space(gl2, d).basis) {
      CHECK(p.homogeneous_degree() == d);
      CHECK(is_invariant(p, gl2));
    }

  CHECK(error_code([&] { invariant_degree_space(gl2, 21); }) == "ScaleExceeded");
}

TEST_CASE("degree-space dimensions match the known invariant rings") {
  // F[V]^G is polynomial on generators of known degrees for these groups,
  // so dim F[V]^G_d counts the monomials in the generators of degree d.
  auto monomial_count = [](const std::vector<int>& degs, int d) {
    std::vector<size_t> ways((size_t)d + 1, 0);
    ways[0] = 1;
    for (int g : degs)
      for (int total = g; total <= d; ++total)
        ways[(size_t)total] += ways[(size_t)(total - g)];
    return ways[(size_t)d];
  };

  MatrixGroup gl2 = gl2_f3();   // Dickson algebra, degrees 6, 8
  MatrixGroup sl2 = sl2_f3();   // degrees 4, 6
  MatrixGroup u3 = u3_f3();     // degrees 1, 3, 9
  for (int d = 0; d <= 14; ++d) {
    CHECK(invariant_degree_space(gl2, d).basis.size() ==
          monomial_count({6, 8}, d));
    CHECK(invariant_degree_space(sl2, d).basis.size() ==
          monomial_count({4, 6}, d));
  }
  for (int d = 0; d <= 8; ++d)
    CHECK(invariant_degree_space(u3, d).basis.size() ==
          monomial_count({1, 3, 9}, d));
}

TEST_CASE("generator constraints suffice: all-element systems agree") {
  // solving the invariance system over every group element instead of the
  // generators must give the same space
  MatrixGroup g = gl2_f3();
  const FieldSpec& f = *g.field();
  for (int d = 1; d <= 8; ++d) {
    DegreeSpace from_gens = invariant_degree_space(g, d);
    auto all = invariant_form_space(f, 2, g.elements(), {}, 0, d);
    CHECK(from_gens.basis.size() == all.size());
    for (const DiffForm& w : all) {
      REQUIRE(w.coefficient(0) != nullptr);
      CHECK(is_invariant(*w.coefficient(0), g));
    }
  }
}

TEST_CASE("wedge criterion") {
  const FieldSpec& f3 = field_make(3, 1);
  MatrixGroup gl2 = gl2_f3();
  GeneratorFamily glfam = slgl_forms(gl2, 2);
  FreenessCertificate cert = check_criterion(gl2, glfam.one_forms);
  CHECK(cert.passed);
  CHECK(cert.target.degree() == 12);
  CHECK(cert.scalar.has_value());

  MatrixGroup u3 = u3_f3();
  GeneratorFamily ufam = unipotent_forms(u3);
  FreenessCertificate ucert = check_criterion(u3, ufam.one_forms);
  CHECK(ucert.passed);
  CHECK(ucert.target.degree() == 5);
  auto u3polys = build_arrangement_polys(f3, 3, hyperplane_table(u3));
  CHECK(ucert.target == u3polys.q_tilde);  // Q_det = 1

  // undivided Dickson derivatives fail for SL_2 with a degree diagnostic
  MatrixGroup sl2 = sl2_f3();
  std::vector<DiffForm> raw;
  for (const Polynomial& d : dickson_invariants(f3, 2))
    raw.push_back(exterior_derivative(d));
  FreenessCertificate bad = check_criterion(sl2, raw);
  CHECK(!bad.passed);
  CHECK(bad.diagnostic.find("degree mismatch") != std::string::npos);
  CHECK(bad.diagnostic.find("12") != std::string::npos);
  CHECK(bad.diagnostic.find("4") != std::string::npos);

  // wrong count / non-invariant inputs
  std::vector<DiffForm> one = {glfam.one_forms[0]};
  CHECK(error_code([&] { check_criterion(gl2, one); }) == "WrongCount");
  CHECK(error_code([&] { check_criterion(u3_f3(), std::vector<DiffForm>{
                             dz(f3, 3, 1), dz(f3, 3, 2), dz(f3, 3, 3)}); }) ==
        "InputNotInvariant");
}

TEST_CASE("chi criterion") {
  const FieldSpec& f3 = field_make(3, 1);
  MatrixGroup gl2 = gl2_f3();
  Character det = det_character(gl2);
  Character dinv = inverse_character(det);

  // the SL-family forms are det^{-1}-invariant under the full group and
  // generate: the criterion passes with target Q_chi^{n-1} = Q_det
  auto ds = dickson_invariants(f3, 2);
  auto table = hyperplane_table(gl2);
  ArrangementPolys polys = build_arrangement_polys(f3, 2, table);
  Polynomial hyperplane_product = Polynomial::constant(f3, 2, one(f3));
  for (const HyperplaneData& h : table)
    hyperplane_product = hyperplane_product * h.l.to_polynomial();
  std::vector<DiffForm> chi_forms;
  for (const Polynomial& d : ds) {
    auto q = try_divide(exterior_derivative(d), hyperplane_product, nullptr);
    REQUIRE(q.has_value());
    chi_forms.push_back(std::move(*q));
  }
  for (const DiffForm& w : chi_forms) CHECK(is_invariant(w, gl2, &dinv));
  FreenessCertificate cert = check_chi_criterion(gl2, dinv, chi_forms);
  CHECK(cert.passed);
  CHECK(cert.target.degree() == 4);

  // Q_det-multiples of the invariant basis are chi-invariant but do not
  // generate: divisibility holds, proportionality fails
  std::vector<DiffForm> multiples;
  for (const Polynomial& d : ds)
    multiples.push_back(polys.q_det * exterior_derivative(d));
  for (const DiffForm& w : multiples) CHECK(is_invariant(w, gl2, &det));
  FreenessCertificate mc = check_chi_criterion(gl2, det, multiples);
  CHECK(!mc.passed);
  CHECK(mc.diagnostic.find("degree mismatch") != std::string::npos);
  DiffForm w = wedge(multiples[0], multiples[1]);
  CHECK(try_divide(*w.coefficient(0b11), mc.target).has_value());

  // wrong count and chi-invariance errors
  std::vector<DiffForm> one = {multiples[0]};
  CHECK(error_code([&] { check_chi_criterion(gl2, det, one); }) == "WrongCount");
  std::vector<DiffForm> wrong = {dz(f3, 2, 1), dz(f3, 2, 2)};
  CHECK(error_code([&] { check_chi_criterion(gl2, det, wrong); }) ==
        "InputNotChiInvariant");
}

TEST_CASE("trivial character reduces to the plain criterion") {
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
    CHECK(plain == chi);
    CHECK(plain.passed);
  }
}

TEST_CASE("free exterior algebra checks") {
  MatrixGroup gl2 = gl2_f3();
  FreeAlgebraReport r1 = check_free_algebra(gl2, slgl_forms(gl2, 2).one_forms);
  CHECK(r1.maximality);
  CHECK(r1.delta_identity);
  CHECK(r1.criterion.passed);
  REQUIRE(r1.twisted_products.size() == 1);
  CHECK(r1.twisted_products[0].divides);
  CHECK(r1.twisted_products[0].invariant);
  CHECK(r1.passed);

  MatrixGroup sl2 = sl2_f3();
  FreeAlgebraReport r2 = check_free_algebra(sl2, slgl_forms(sl2, 1).one_forms);
  CHECK(r2.passed);

  // b_H = 0 < n-1 in GL_3: the maximality hypothesis fails
  MatrixGroup d = diag121_f3();
  GeneratorFamily cfam = chern_forms(d);
  FreeAlgebraReport r3 = check_free_algebra(d, cfam.one_forms);
  CHECK(!r3.maximality);
  CHECK(!r3.passed);
}

TEST_CASE("seeded lemma suites find no counterexamples") {
  MatrixGroup gl2 = gl2_f3();
  LemmaSuiteReport report =
      verify_lemmas(gl2, slgl_forms(gl2, 2).one_forms, 10, 20240901);
  CHECK(report.all_passed());
  for (const LemmaCheck& l : report.lemmas) CHECK(l.checks > 0);

  // determinism: identical seeds give identical reports
  LemmaSuiteReport again =
      verify_lemmas(gl2, slgl_forms(gl2, 2).one_forms, 10, 20240901);
  CHECK(report.lemmas.size() == again.lemmas.size());
  for (size_t i = 0; i < report.lemmas.size(); ++i)
    CHECK(report.lemmas[i].checks == again.lemmas[i].checks);
}

TEST_CASE("criteria in one variable") {
  // GL_1(F_3): the single-hyperplane family is z1 dz1, and the target is
  // Q_det = z1
  const FieldSpec& f3 = field_make(3, 1);
  Mat s(&f3, 1, 1);
  s.set(0, 0, 2);
  MatrixGroup g(&f3, 1, {s});
  GeneratorFamily fam = single_hyperplane_forms(g);
  REQUIRE(fam.one_forms.size() == 1);
  FreenessCertificate cert = check_criterion(g, fam.one_forms);
  CHECK(cert.passed);
  CHECK(cert.target.degree() == 1);
  FreeAlgebraReport report = check_free_algebra(g, fam.one_forms);
  CHECK(report.passed);  // b_H = 0 = n - 1 and delta^0 = 1 = Q(A~)
}

TEST_CASE("polynomial matrix rank over the fraction field") {
  const FieldSpec& f3 = field_make(3, 1);
  MatrixGroup gl2 = gl2_f3();
  GeneratorFamily fam = slgl_forms(gl2, 2);

  // n independent forms have rank n
  CHECK(polynomial_matrix_rank(one_form_matrix(fam.one_forms)) == 2);

  // proportional forms degenerate
  Polynomial z1 = Polynomial::variable(f3, 2, 0);
  std::vector<DiffForm> degenerate = {fam.one_forms[0],
                                      z1 * fam.one_forms[0]};
  CHECK(polynomial_matrix_rank(one_form_matrix(degenerate)) == 1);

  // any n+1 invariant 1-forms have rank <= n
  std::mt19937_64 rng(7777);
  GeneratorFamily chern = chern_forms(gl2);
  std::vector<DiffForm> pool = fam.one_forms;
  for (const DiffForm& w : chern.one_forms) pool.push_back(w);
  for (int i = 0; i < 10; ++i) {
    auto ws = sample_invariant_one_forms(gl2, pool, 3, rng);
    CHECK(polynomial_matrix_rank(one_form_matrix(ws)) <= 2);
  }
}
