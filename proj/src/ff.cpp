#include "invforms/ff.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace invforms {

namespace {

constexpr uint32_t kMaxOrder = 1u << 20;   // exact desk-scale bound
constexpr uint32_t kTableLimit = 512;      // precompute tables below this

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense little-endian polynomials over F_p, used only for modulus validation
// and extension-field arithmetic.
using PolyP = std::vector<uint32_t>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod m, m monic.
PolyP poly_rem(PolyP a, const PolyP& m, uint32_t p) {
  trim(a);
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const uint32_t lead = a.back();
    const size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (size_t i = 0; i <= dm; ++i) {
        uint64_t sub = (uint64_t)lead * m[i] % p;
        a[i + shift] = (a[i + shift] + p - (uint32_t)sub) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

PolyP poly_mul(const PolyP& a, const PolyP& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (uint32_t)((c[i + j] + (uint64_t)a[i] * b[j]) % p);
  trim(c);
  return c;
}

bool poly_is_irreducible(const PolyP& m, uint32_t p) {
  const size_t k = m.size() - 1;
  // Trial division by every monic polynomial of degree 1..k/2.
  for (size_t d = 1; 2 * d <= k; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      PolyP g(d + 1, 0);
      uint64_t c = code;
      for (size_t i = 0; i < d; ++i) {
        g[i] = (uint32_t)(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_rem(m, g, p).empty()) return false;
    }
  }
  return true;
}

// Extended Euclid in F_p[x]: returns u with u*a = gcd (gcd normalized monic),
// assuming gcd(a, m) = 1 on the call sites.
PolyP poly_modinv(const PolyP& a, const PolyP& m, uint32_t p) {
  PolyP r0 = m, r1 = poly_rem(a, m, p);
  PolyP t0 = {}, t1 = {1};
  auto inv_mod_p = [&](uint32_t x) {
    // Fermat
    uint64_t r = 1, b = x;
    uint32_t e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return (uint32_t)r;
  };
  while (!r1.empty()) {
    // long division r0 = q*r1 + r
    PolyP r = r0, q(r0.size(), 0);
    const uint32_t lc_inv = inv_mod_p(r1.back());
    while (r.size() >= r1.size() && !r.empty()) {
      uint32_t coef = (uint32_t)((uint64_t)r.back() * lc_inv % p);
      size_t shift = r.size() - r1.size();
      q[shift] = coef;
      for (size_t i = 0; i < r1.size(); ++i) {
        uint64_t sub = (uint64_t)coef * r1[i] % p;
        r[i + shift] = (r[i + shift] + p - (uint32_t)sub) % p;
      }
      trim(r);
    }
    trim(q);
    // (r0, r1) <- (r1, r); (t0, t1) <- (t1, t0 - q*t1)
    PolyP qt = poly_mul(q, t1, p);
    PolyP t2(std::max(t0.size(), qt.size()), 0);
    for (size_t i = 0; i < t2.size(); ++i) {
      uint32_t x = i < t0.size() ? t0[i] : 0;
      uint32_t y = i < qt.size() ? qt[i] : 0;
      t2[i] = (x + p - y) % p;
    }
    trim(t2);
    r0 = r1;
    r1 = r;
    t0 = t1;
    t1 = t2;
  }
  // r0 = gcd; normalize so that u*a = 1 mod m
  const uint32_t lc_inv = inv_mod_p(r0.back());
  PolyP u = t0;
  for (auto& v : u) v = (uint32_t)((uint64_t)v * lc_inv % p);
  trim(u);
  return poly_rem(u, m, p);
}

}  // namespace

FieldSpec::FieldSpec(uint32_t p, uint32_t k, std::vector<uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  uint64_t q = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    q *= p_;
    if (q > kMaxOrder) fail("ScaleExceeded", "field order exceeds desk scale");
  }
  q_ = (uint32_t)q;
  if (q_ <= kTableLimit) {
    inv_table_.assign(q_, 0);
    mul_table_.assign((size_t)q_ * q_, 0);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = a; b < q_; ++b) {
        uint32_t m = mul_generic(a, b);
        mul_table_[(size_t)a * q_ + b] = m;
        mul_table_[(size_t)b * q_ + a] = m;
        if (m == 1) {
          inv_table_[a] = b;
          inv_table_[b] = a;
        }
      }
  }
}

uint32_t FieldSpec::add(uint32_t a, uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

uint32_t FieldSpec::neg(uint32_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

uint32_t FieldSpec::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FieldSpec::mul_generic(uint32_t a, uint32_t b) const {
  if (k_ == 1) return (uint32_t)((uint64_t)a * b % p_);
  PolyP da(k_), db(k_);
  for (uint32_t i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  trim(da);
  trim(db);
  PolyP c = poly_rem(poly_mul(da, db, p_), modulus_, p_);
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    r += (i < c.size() ? c[i] : 0) * mult;
    mult *= p_;
  }
  return r;
}

uint32_t FieldSpec::mul(uint32_t a, uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[(size_t)a * q_ + b];
  return mul_generic(a, b);
}

uint32_t FieldSpec::inv_generic(uint32_t a) const {
  if (k_ == 1) {
    // Fermat
    return pow(a, (int64_t)p_ - 2);
  }
  PolyP da(k_);
  uint32_t x = a;
  for (uint32_t i = 0; i < k_; ++i) {
    da[i] = x % p_;
    x /= p_;
  }
  trim(da);
  PolyP u = poly_modinv(da, modulus_, p_);
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < k_; ++i) {
    r += (i < u.size() ? u[i] : 0) * mult;
    mult *= p_;
  }
  return r;
}

uint32_t FieldSpec::inv(uint32_t a) const {
  if (a == 0) fail("DivisionByZero", "inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return inv_generic(a);
}

uint32_t FieldSpec::div(uint32_t a, uint32_t b) const {
  if (b == 0) fail("DivisionByZero", "division by zero");
  return mul(a, inv(b));
}

uint32_t FieldSpec::pow(uint32_t a, int64_t e) const {
  if (e < 0) {
    a = inv(a);  // throws on zero
    e = -e;
  }
  uint32_t r = 1;
  uint64_t ee = (uint64_t)e;
  while (ee) {
    if (ee & 1) r = mul(r, a);
    a = mul(a, a);
    ee >>= 1;
  }
  return r;
}

uint32_t FieldSpec::from_int(int64_t v) const {
  int64_t m = v % (int64_t)p_;
  if (m < 0) m += p_;
  return (uint32_t)m;
}

std::vector<uint32_t> FieldSpec::digits(uint32_t a) const {
  std::vector<uint32_t> d(k_);
  for (uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

const FieldSpec& field_make(uint32_t p, uint32_t k,
                            const std::vector<uint32_t>& modulus_poly) {
  if (p == 2) fail("CharTwoRejected", "characteristic 2 is not supported");
  if (!is_prime(p)) fail("NotPrime", "p = " + std::to_string(p) + " is not prime");
  if (k < 1) fail("InvalidArgument", "extension degree must be >= 1");

  std::vector<uint32_t> modulus;
  if (k > 1) {
    if (modulus_poly.empty())
      fail("ReducibleModulus", "extension fields require an explicit modulus");
    if (modulus_poly.size() != k + 1)
      fail("ReducibleModulus", "modulus must have degree k");
    modulus = modulus_poly;
    for (auto& c : modulus) {
      if (c >= p) fail("ReducibleModulus", "modulus coefficients must lie in F_p");
    }
    if (modulus.back() != 1) fail("ReducibleModulus", "modulus must be monic");
    if (!poly_is_irreducible(modulus, p))
      fail("ReducibleModulus", "modulus is reducible over F_p");
  }

  static std::mutex mu;
  static std::vector<std::unique_ptr<FieldSpec>> pool;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& f : pool)
    if (f->p_ == p && f->k_ == k && f->modulus_ == modulus) return *f;
  pool.emplace_back(new FieldSpec(p, k, modulus));
  return *pool.back();
}

int mult_order(const Fq& a) {
  if (a.is_zero()) fail("ZeroElement", "multiplicative order of zero");
  Fq acc = a;
  int m = 1;
  while (!acc.is_one()) {
    acc *= a;
    ++m;
  }
  return m;
}

}  // namespace invforms
