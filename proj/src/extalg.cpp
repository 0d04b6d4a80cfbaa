#include "invforms/extalg.hpp"

#include <bit>
#include <sstream>

namespace invforms {

std::vector<int> index_list(IndexSet s) {
  std::vector<int> v;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1) v.push_back(i + 1);
  return v;
}

IndexSet index_set(const std::vector<int>& indices) {
  IndexSet s = 0;
  for (int i : indices) {
    if (i < 1 || i > 31) fail("IndexOutOfRange", "form index");
    IndexSet bit = 1u << (i - 1);
    if (s & bit) fail("InvalidArgument", "repeated form index");
    s |= bit;
  }
  return s;
}

namespace {

// Sign of sorting the concatenation (I, J) of disjoint ascending index sets:
// (-1)^{number of pairs i in I, j in J with j < i}.
int merge_sign(IndexSet i_set, IndexSet j_set) {
  int inversions = 0;
  for (int i = 0; i < 32; ++i) {
    if (!(i_set & (1u << i))) continue;
    uint32_t below = j_set & ((1u << i) - 1);
    inversions += std::popcount(below);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

DiffForm::DiffForm(const FieldSpec* field, int nvars, int degree)
    : field_(field), nvars_(nvars), degree_(degree) {
  if (field_ == nullptr) fail("InvalidArgument", "null field");
  if (nvars_ < 1 || nvars_ > 31) fail("InvalidArgument", "variable count");
  if (degree_ < 0 || degree_ > nvars_)
    fail("DegreeOverflow", "form degree outside [0, n]");
}

DiffForm DiffForm::volume(const FieldSpec& f, int nvars) {
  DiffForm v(&f, nvars, nvars);
  v.add_term((1u << nvars) - 1, Polynomial::constant(f, nvars, one(f)));
  return v;
}

DiffForm DiffForm::from_polynomial(const Polynomial& f) {
  DiffForm v(f.field(), f.nvars(), 0);
  v.add_term(0, f);
  return v;
}

const Polynomial* DiffForm::coefficient(IndexSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? nullptr : &it->second;
}

int DiffForm::poly_degree() const {
  int d = -1;
  for (const auto& [s, u] : terms_) d = std::max(d, u.degree());
  return d;
}

void DiffForm::add_term(IndexSet s, const Polynomial& u) {
  if (u.field() != field_) fail("MixedFields", "coefficient field");
  if (u.nvars() != nvars_) fail("DimensionMismatch", "coefficient variables");
  if (std::popcount(s) != degree_)
    fail("InvalidArgument", "index set size does not match form degree");
  if (s >= (1u << nvars_)) fail("IndexOutOfRange", "index set");
  if (u.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, u);
  if (!inserted) {
    it->second += u;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffForm DiffForm::operator-() const {
  DiffForm r(field_, nvars_, degree_);
  for (const auto& [s, u] : terms_) r.terms_.emplace(s, -u);
  return r;
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  if (field_ != o.field_ || nvars_ != o.nvars_)
    fail("DimensionMismatch", "incompatible forms");
  if (degree_ != o.degree_) fail("DegreeOverflow", "adding forms of different degree");
  for (const auto& [s, u] : o.terms_) add_term(s, u);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
  return *this += -o;
}

DiffForm operator*(const Polynomial& h, const DiffForm& a) {
  DiffForm r(a.field_, a.nvars_, a.degree_);
  if (h.is_zero()) return r;
  for (const auto& [s, u] : a.terms_) r.add_term(s, h * u);
  return r;
}

DiffForm operator*(const Fq& c, const DiffForm& a) {
  return Polynomial::constant(*a.field(), a.nvars(), c) * a;
}

bool operator==(const DiffForm& a, const DiffForm& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ &&
         a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string DiffForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, u] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << u.to_string() << ")";
    for (int i : index_list(s)) os << " dz" << i;
  }
  return os.str();
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (a.field() != b.field() || a.nvars() != b.nvars())
    fail("DimensionMismatch", "incompatible forms");
  if (a.form_degree() + b.form_degree() > a.nvars())
    fail("DegreeOverflow", "wedge degree exceeds n");
  DiffForm r(a.field(), a.nvars(), a.form_degree() + b.form_degree());
  for (const auto& [si, u] : a.terms())
    for (const auto& [sj, v] : b.terms()) {
      if (si & sj) continue;
      Polynomial c = u * v;
      if (merge_sign(si, sj) < 0) c = -c;
      r.add_term(si | sj, c);
    }
  return r;
}

DiffForm exterior_derivative(const Polynomial& f) {
  DiffForm r(f.field(), f.nvars(), 1);
  for (int i = 0; i < f.nvars(); ++i)
    r.add_term(1u << i, f.derivative(i));
  return r;
}

DiffForm exterior_derivative(const DiffForm& a) {
  if (a.form_degree() + 1 > a.nvars())
    fail("DegreeOverflow", "d of a top-degree form");
  DiffForm r(a.field(), a.nvars(), a.form_degree() + 1);
  for (const auto& [s, u] : a.terms()) {
    for (int i = 0; i < a.nvars(); ++i) {
      IndexSet bit = 1u << i;
      if (s & bit) continue;
      Polynomial du = u.derivative(i);
      if (du.is_zero()) continue;
      if (merge_sign(bit, s) < 0) du = -du;
      r.add_term(bit | s, du);
    }
  }
  return r;
}

std::optional<DiffForm> try_divide(const DiffForm& a, const Polynomial& g,
                                   IndexSet* failing) {
  if (g.is_zero()) fail("DivisorZero", "form division by zero polynomial");
  DiffForm r(a.field(), a.nvars(), a.form_degree());
  for (const auto& [s, u] : a.terms()) {
    auto q = try_divide(u, g);
    if (!q) {
      if (failing != nullptr) *failing = s;
      return std::nullopt;
    }
    r.add_term(s, *q);
  }
  return r;
}

DiffForm twisted_wedge(const DiffForm& a, const DiffForm& b,
                       const Polynomial& delta) {
  DiffForm w = wedge(a, b);
  IndexSet bad = 0;
  auto q = try_divide(w, delta, &bad);
  if (!q) {
    std::ostringstream os;
    os << "twist divisor does not divide the coefficient at dz_{";
    for (int i : index_list(bad)) os << i;
    os << "}";
    fail("NotDivisible", os.str());
  }
  return *q;
}

Polynomial act(const Mat& g, const Polynomial& f) {
  if (g.rows() != g.cols() || g.rows() != f.nvars())
    fail("DimensionMismatch", "matrix size vs variables");
  Mat m = g.inverse();  // throws SingularMatrix
  std::vector<Polynomial> images;
  images.reserve((size_t)f.nvars());
  for (int i = 0; i < f.nvars(); ++i) {
    Polynomial img(f.field(), f.nvars());
    for (int j = 0; j < f.nvars(); ++j) {
      if (m.at(i, j) == 0) continue;
      std::vector<int> e((size_t)f.nvars(), 0);
      e[(size_t)j] = 1;
      img.add_term(Monomial(std::move(e)), Fq(f.field(), m.at(i, j)));
    }
    images.push_back(std::move(img));
  }
  return f.substitute(images);
}

DiffForm act(const Mat& g, const DiffForm& a) {
  if (g.rows() != g.cols() || g.rows() != a.nvars())
    fail("DimensionMismatch", "matrix size vs variables");
  const FieldSpec& f = *a.field();
  Mat m = g.inverse();
  const int n = a.nvars();
  const int k = a.form_degree();
  DiffForm r(a.field(), n, k);

  // Enumerate size-k index sets once.
  std::vector<IndexSet> subsets;
  for (IndexSet s = 0; s < (1u << n); ++s)
    if (std::popcount(s) == k) subsets.push_back(s);

  for (const auto& [si, u] : a.terms()) {
    Polynomial gu = act(g, u);
    std::vector<int> rows = index_list(si);
    // wedge over i in I of sum_j m_ij dz_j expands into minors of m
    for (IndexSet sj : subsets) {
      std::vector<int> cols = index_list(sj);
      Mat minor(&f, k, k);
      for (int r1 = 0; r1 < k; ++r1)
        for (int c1 = 0; c1 < k; ++c1)
          minor.set(r1, c1, m.at(rows[(size_t)r1] - 1, cols[(size_t)c1] - 1));
      uint32_t d = k == 0 ? 1 : minor.det();
      if (d == 0) continue;
      r.add_term(sj, Fq(&f, d) * gu);
    }
  }
  return r;
}

LinearForm act(const Mat& g, const LinearForm& l) {
  if (g.rows() != g.cols() || g.rows() != l.nvars())
    fail("DimensionMismatch", "matrix size vs variables");
  Mat m = g.inverse();
  // (g.l)_j = sum_i l_i (g^{-1})_{ij}
  std::vector<uint32_t> c((size_t)l.nvars(), 0);
  const FieldSpec& f = *l.field();
  for (int j = 0; j < l.nvars(); ++j) {
    uint32_t acc = 0;
    for (int i = 0; i < l.nvars(); ++i)
      acc = f.add(acc, f.mul(l.coeffs()[(size_t)i], m.at(i, j)));
    c[(size_t)j] = acc;
  }
  return LinearForm(&f, std::move(c));
}

}  // namespace invforms
