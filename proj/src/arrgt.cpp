#include "invforms/arrgt.hpp"

#include <algorithm>

namespace invforms {

namespace {

std::vector<const HyperplaneData*> arrangement_sorted(
    const std::vector<HyperplaneData>& table) {
  std::vector<const HyperplaneData*> hs;
  for (const HyperplaneData& h : table)
    if (h.in_arrangement) hs.push_back(&h);
  std::sort(hs.begin(), hs.end(),
            [](const HyperplaneData* a, const HyperplaneData* b) {
              return a->l < b->l;
            });
  return hs;
}

}  // namespace

ArrangementPolys build_arrangement_polys(
    const FieldSpec& f, int nvars, const std::vector<HyperplaneData>& table) {
  Polynomial q_det = Polynomial::constant(f, nvars, one(f));
  Polynomial q_tilde = q_det;
  Polynomial delta_max = q_det;
  for (const HyperplaneData* h : arrangement_sorted(table)) {
    Polynomial l = h->l.to_polynomial();
    q_det = q_det * l.pow(h->e - 1);
    q_tilde = q_tilde * l.pow(h->e * h->b);
    if (h->b == nvars - 1) delta_max = delta_max * l.pow(h->e);
  }
  return ArrangementPolys{std::move(q_det), std::move(q_tilde),
                          std::move(delta_max)};
}

std::optional<int> twist_exponent(const Fq& chi_val, const Fq& det_val, int e) {
  Fq acc = chi_val;
  for (int a = 0; a < e; ++a) {
    if (acc.is_one()) return a;
    acc *= det_val;
  }
  return std::nullopt;
}

ChiArrangement chi_arrangement(const FieldSpec& f, int nvars,
                               const std::vector<HyperplaneData>& table,
                               const Character& chi) {
  Polynomial q_chi = Polynomial::constant(f, nvars, one(f));
  Polynomial q_tilde_chi = q_chi;
  std::vector<int> exps;
  for (const HyperplaneData* h : arrangement_sorted(table)) {
    Fq chi_s = chi.of(h->s);
    Fq det_s = Fq(&f, h->s.det());
    auto a = twist_exponent(chi_s, det_s, h->e);
    if (!a)
      fail("NoSolution", "chi(s_H) is not a power of det(s_H)^{-1} on " +
                             h->l.to_polynomial().to_string());
    exps.push_back(*a);
    Polynomial l = h->l.to_polynomial();
    q_chi = q_chi * l.pow(*a);
    if (chi_s.is_one()) q_tilde_chi = q_tilde_chi * l.pow(h->e * h->b);
  }
  return ChiArrangement{std::move(exps), std::move(q_chi),
                        std::move(q_tilde_chi)};
}

}  // namespace invforms
