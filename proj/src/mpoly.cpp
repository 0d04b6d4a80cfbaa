#include "invforms/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace invforms {

Monomial Monomial::times(const Monomial& o) const {
  if (nvars() != o.nvars()) fail("DimensionMismatch", "monomial sizes differ");
  std::vector<int> e = e_;
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  if (nvars() != o.nvars()) fail("DimensionMismatch", "monomial sizes differ");
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
  std::vector<int> e = o.e_;
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] -= e_[i];
    if (e[i] < 0) fail("InvalidArgument", "monomial does not divide");
  }
  return Monomial(std::move(e));
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

Polynomial::Polynomial(const FieldSpec* field, int nvars)
    : field_(field), nvars_(nvars) {
  if (field_ == nullptr) fail("InvalidArgument", "null field");
  if (nvars_ < 1) fail("InvalidArgument", "need at least one variable");
}

Polynomial Polynomial::constant(const FieldSpec& f, int nvars, const Fq& c) {
  Polynomial r(&f, nvars);
  r.add_term(Monomial(nvars), c);
  return r;
}

Polynomial Polynomial::constant(const FieldSpec& f, int nvars, int64_t c) {
  return constant(f, nvars, make_fq(f, c));
}

Polynomial Polynomial::variable(const FieldSpec& f, int nvars, int i) {
  if (i < 0 || i >= nvars) fail("IndexOutOfRange", "variable index");
  std::vector<int> e(nvars, 0);
  e[(size_t)i] = 1;
  Polynomial r(&f, nvars);
  r.add_term(Monomial(std::move(e)), one(f));
  return r;
}

Polynomial Polynomial::monomial(const FieldSpec& f, std::vector<int> exps,
                                const Fq& c) {
  Polynomial r(&f, (int)exps.size());
  r.add_term(Monomial(std::move(exps)), c);
  return r;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

const std::pair<const Monomial, Fq>& Polynomial::leading_term() const {
  if (terms_.empty()) fail("InvalidArgument", "leading term of zero polynomial");
  return *terms_.begin();
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

Fq Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? zero(*field_) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Fq& c) {
  if (m.nvars() != nvars_) fail("DimensionMismatch", "monomial size");
  if (c.field() != field_) fail("MixedFields", "coefficient field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (field_ != o.field_) fail("MixedFields", "polynomials over different fields");
  if (nvars_ != o.nvars_) fail("DimensionMismatch", "variable counts differ");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.field_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Polynomial operator*(const Fq& c, const Polynomial& a) {
  Polynomial r(a.field(), a.nvars());
  if (c.is_zero()) return r;
  for (const auto& [m, x] : a.terms()) r.add_term(m, c * x);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) fail("InvalidArgument", "negative polynomial power");
  Polynomial r = constant(*field_, nvars_, one(*field_));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::derivative(int i) const {
  if (i < 0 || i >= nvars_) fail("IndexOutOfRange", "derivative variable");
  Polynomial r(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m[i];
    if (e == 0) continue;
    Fq factor = make_fq(*field_, e);
    if (factor.is_zero()) continue;  // characteristic kill
    std::vector<int> exps = m.exponents();
    exps[(size_t)i] -= 1;
    r.add_term(Monomial(std::move(exps)), c * factor);
  }
  return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if ((int)images.size() != nvars_)
    fail("DimensionMismatch", "need one image per variable");
  int out_vars = images.empty() ? nvars_ : images[0].nvars();
  Polynomial r(field_, out_vars);
  // memoized powers of each image
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](int i, int e) -> const Polynomial& {
    auto& cache = powers[(size_t)i];
    if (cache.empty())
      cache.push_back(Polynomial::constant(*field_, out_vars, one(*field_)));
    while ((int)cache.size() <= e) cache.push_back(cache.back() * images[(size_t)i]);
    return cache[(size_t)e];
  };
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(*field_, out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (m[i] > 0) t = t * power(i, m[i]);
    r += t;
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool unit = c.is_one() && m.degree() > 0;
    if (!unit) os << c.code();
    bool printed = !unit;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << "z" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      printed = true;
    }
  }
  return os.str();
}

std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) fail("DivisorZero", "division by the zero polynomial");
  Polynomial q(f.field(), f.nvars());
  Polynomial r = f;
  const auto& [gm, gc] = g.leading_term();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading_term();
    if (!gm.divides(rm)) return std::nullopt;  // nonzero remainder
    Monomial qm = gm.divide_into(rm);
    Fq qc = rc / gc;
    q.add_term(qm, qc);
    r -= Polynomial::monomial(*f.field(), qm.exponents(), qc) * g;
  }
  return q;
}

std::optional<Fq> scalar_ratio(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) fail("DivisorZero", "proportionality against zero");
  if (f.is_zero()) return std::nullopt;  // 0 is not an F^x multiple
  if (f.term_count() != g.term_count()) return std::nullopt;
  std::optional<Fq> c;
  auto itf = f.terms().begin();
  auto itg = g.terms().begin();
  for (; itf != f.terms().end(); ++itf, ++itg) {
    if (itf->first != itg->first) return std::nullopt;
    Fq ratio = itf->second / itg->second;
    if (!c)
      c = ratio;
    else if (*c != ratio)
      return std::nullopt;
  }
  return c;
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
  const size_t n = m.size();
  if (n == 0) fail("InvalidArgument", "empty matrix");
  for (const auto& row : m)
    if (row.size() != n) fail("DimensionMismatch", "matrix is not square");
  if (n > 6) fail("ScaleExceeded", "cofactor expansion limited to n <= 6");
  const FieldSpec& f = *m[0][0].field();
  const int nv = m[0][0].nvars();
  if (n == 1) return m[0][0];
  Polynomial det(&f, nv);
  // expand along the first row
  std::vector<std::vector<Polynomial>> minor(n - 1);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    for (size_t i = 1; i < n; ++i) {
      minor[i - 1].clear();
      for (size_t jj = 0; jj < n; ++jj)
        if (jj != j) minor[i - 1].push_back(m[i][jj]);
    }
    Polynomial cof = m[0][j] * poly_det(minor);
    if (j % 2 == 0)
      det += cof;
    else
      det -= cof;
  }
  return det;
}

Polynomial jacobian_det(std::span<const Polynomial> fs) {
  if (fs.empty()) fail("DimensionMismatch", "no polynomials");
  const int n = fs[0].nvars();
  if ((int)fs.size() != n)
    fail("DimensionMismatch", "need exactly n polynomials in n variables");
  std::vector<std::vector<Polynomial>> j((size_t)n);
  for (int i = 0; i < n; ++i) {
    if (fs[(size_t)i].nvars() != n) fail("DimensionMismatch", "variable counts differ");
    for (int v = 0; v < n; ++v) j[(size_t)i].push_back(fs[(size_t)i].derivative(v));
  }
  return poly_det(j);
}

LinearForm::LinearForm(const FieldSpec* field, std::vector<uint32_t> coeffs)
    : field_(field), c_(std::move(coeffs)) {
  if (field_ == nullptr) fail("InvalidArgument", "null field");
  if (c_.empty()) fail("InvalidArgument", "empty linear form");
  size_t lead = c_.size();
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] >= field_->order()) fail("InvalidArgument", "coefficient out of range");
    if (c_[i] != 0 && lead == c_.size()) lead = i;
  }
  if (lead == c_.size()) fail("InvalidArgument", "zero linear form");
  if (c_[lead] != 1) {
    uint32_t s = field_->inv(c_[lead]);
    for (auto& x : c_) x = field_->mul(x, s);
  }
}

Polynomial LinearForm::to_polynomial() const {
  Polynomial r(field_, nvars());
  for (int i = 0; i < nvars(); ++i) {
    if (c_[(size_t)i] == 0) continue;
    std::vector<int> e((size_t)nvars(), 0);
    e[(size_t)i] = 1;
    r.add_term(Monomial(std::move(e)), Fq(field_, c_[(size_t)i]));
  }
  return r;
}

Fq LinearForm::evaluate(std::span<const uint32_t> v) const {
  if ((int)v.size() != nvars()) fail("DimensionMismatch", "vector length");
  uint32_t acc = 0;
  for (size_t i = 0; i < c_.size(); ++i)
    acc = field_->add(acc, field_->mul(c_[i], v[i]));
  return Fq(field_, acc);
}

}  // namespace invforms
