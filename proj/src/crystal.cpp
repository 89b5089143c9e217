#include "unitl/crystal.hpp"

namespace unitl {

bool crystal_is_prenormalized(const UnitCrystalSpec& c) {
  if (c.m_denom != 0) return false;
  std::vector<i64> lo, hi;
  for (const auto& entry : c.matrix) {
    if (lp_is_zero(entry)) continue;
    lp_exponent_box(entry, lo, hi);
    for (i64 v : lo)
      if (v < 1) return false;
  }
  if (!lp_is_one(c.a)) {
    for (const auto& entry : c.matrix)
      if (!lp_divide(entry, c.a).has_value()) return false;
  }
  return true;
}

UnitCrystalSpec normalize_denominators(const UnitCrystalSpec& c, u32 n_max) {
  UnitCrystalSpec out = c;
  if (lp_is_one(c.a)) {
    out.denominators_cleared = true;
    out.m_denom = 0;
    return out;
  }
  LaurentPoly fa = frobenius_pullback(c.a);
  LaurentPoly h = lp_one(c.ring, c.dim);
  bool found = false;
  u32 ne = 0;
  for (; ne <= n_max; ++ne) {
    // probe a^(ne+1) | (F*a)^ne
    auto q = lp_divide(lp_pow(fa, ne), lp_pow(c.a, ne + 1));
    if (q.has_value()) {
      h = *q;
      found = true;
      break;
    }
  }
  require(found, errc::search_exhausted,
          "no exponent up to " + std::to_string(n_max) +
              " clears the denominators; supply a pre-normalized matrix");
  // s/a^M * (F*a/a)^((M+1)Ne) = s * h^(M+1) * a
  LaurentPoly factor = lp_mul(lp_pow(h, c.m_denom + 1), c.a);
  for (auto& entry : out.matrix) entry = lp_mul(entry, factor);
  out.m_denom = 0;
  out.denominators_cleared = true;
  return out;
}

UnitCrystalSpec monomial_twist(const UnitCrystalSpec& c) {
  require(c.denominators_cleared, errc::normal_form_missing,
          "monomial twist needs cleared denominators");
  i64 s = 0;
  for (const auto& entry : c.matrix)
    s = std::max(s, lp_max_negative_exponent(entry));
  const i64 pm1 = static_cast<i64>(c.ring->p) - 1;
  u32 t = static_cast<u32>(s / pm1) + 1;  // least t with (p-1)t > s
  std::vector<i64> e(c.dim, pm1 * static_cast<i64>(t));
  LaurentPoly mono = lp_monomial(c.ring, c.dim, e, one(c.ring));
  UnitCrystalSpec out = c;
  for (auto& entry : out.matrix) entry = lp_mul(entry, mono);
  out.monomial_twisted = true;
  return out;
}

u32 sheaf_twist_value(const UnitCrystalSpec& c) {
  require(c.monomial_twisted, errc::normal_form_missing,
          "sheaf twist needs the monomial twist first");
  i64 maxdeg = 0;
  for (const auto& entry : c.matrix)
    maxdeg = std::max(maxdeg, lp_max_total_degree(entry));
  const i64 pm1 = static_cast<i64>(c.ring->p) - 1;
  return static_cast<u32>(maxdeg / pm1) + 1;  // least u with (p-1)u > maxdeg
}

UnitCrystalSpec choose_sheaf_twist(const UnitCrystalSpec& c) {
  UnitCrystalSpec out = c;
  out.u = sheaf_twist_value(c);
  out.u_set = true;
  return out;
}

CrystalPair lift_crystal(const UnitCrystalSpec& c, const FlatLift& fl) {
  require(ring_eq(*c.ring, *fl.lambda), errc::wrong_kind,
          "crystal must live over the lift's local algebra");
  auto lift_poly = [&](const LaurentPoly& f) {
    return lp_map_coeffs(f, fl.lambda_tilde,
                         [&](const Elt& x) { return section(fl, x); });
  };
  auto project_poly = [&](const LaurentPoly& f) {
    return lp_map_coeffs(f, fl.lambda,
                         [&](const Elt& x) { return project(fl, x); });
  };

  UnitCrystalSpec up = c;
  up.ring = fl.lambda_tilde;
  up.a = lift_poly(c.a);
  const bool through_quotient = c.denominators_cleared && !lp_is_one(c.a);
  for (u32 k = 0; k < c.matrix.size(); ++k) {
    if (through_quotient) {
      // lift a*(entry/a) so exact a-divisibility holds upstairs too
      auto q = lp_divide(c.matrix[k], c.a);
      require(q.has_value(), errc::internal,
              "cleared entry is not an exact a-multiple");
      up.matrix[k] = lp_mul(up.a, lift_poly(*q));
    } else {
      up.matrix[k] = lift_poly(c.matrix[k]);
    }
    require(lp_eq(project_poly(up.matrix[k]), c.matrix[k]), errc::internal,
            "lift does not project back to the input entry");
  }
  CrystalPair pair;
  pair.lambda_crystal = c;
  pair.lifted = std::move(up);
  pair.lift = fl;
  return pair;
}

}  // namespace unitl
