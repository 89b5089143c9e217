#include "unitl/verify.hpp"

#include <algorithm>

namespace unitl {

const char* check_status_name(check_status s) {
  switch (s) {
    case check_status::pass:
      return "pass";
    case check_status::fail:
      return "fail";
    case check_status::certified_to_bound:
      return "certified-to-bound";
  }
  return "unknown";
}

std::string elt_to_string(const Elt& a) {
  if (a.c.size() == 1) return std::to_string(a.c[0]);
  std::string s = "[";
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.c[i]);
  }
  return s + "]";
}

static u64 binom(u32 n, u32 k) {
  if (k > n) return 0;
  u64 r = 1;
  for (u32 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ------------------------------------------------------------- ring change

static std::function<Elt(const Elt&)> ring_change_fn(const RingPtr& target,
                                                     const FlatLift& fl) {
  if (ring_eq(*target, *fl.lambda))
    return [fl](const Elt& a) { return project(fl, a); };
  if (ring_eq(*target, *fl.lambda_tilde))
    return [fl](const Elt& a) { return section(fl, a); };
  fail(errc::wrong_kind, "target is neither side of the lift");
}

Series change_ring(const Series& f, const RingPtr& target,
                   const FlatLift& fl) {
  return series_map(f, target, ring_change_fn(target, fl));
}

Poly change_ring(const Poly& f, const RingPtr& target, const FlatLift& fl) {
  return poly_map(f, target, ring_change_fn(target, fl));
}

// ---------------------------------------------------------- small reports

VerificationReport series_match_report(const std::string& check,
                                       const Series& lhs, const Series& rhs,
                                       errc on_fail) {
  VerificationReport rep;
  rep.check = check;
  require(lhs.bound == rhs.bound, errc::precision_mismatch,
          "compared series have different bounds");
  for (u32 i = 0; i <= lhs.bound; ++i)
    if (!eq(lhs.c[i], rhs.c[i])) {
      rep.status = check_status::fail;
      rep.code = on_fail;
      rep.has_witness = true;
      rep.witness_index = i;
      rep.witness_lhs = elt_to_string(lhs.c[i]);
      rep.witness_rhs = elt_to_string(rhs.c[i]);
      rep.detail = "first differing coefficient at degree " +
                   std::to_string(i);
      return rep;
    }
  rep.detail =
      "sides agree through degree " + std::to_string(lhs.bound);
  return rep;
}

VerificationReport maximal_ideal_report(const std::string& check,
                                        const Series& q) {
  VerificationReport rep;
  rep.check = check;
  if (!eq(q.c[0], one(q.ring))) {
    rep.status = check_status::fail;
    rep.code = errc::mismatch;
    rep.has_witness = true;
    rep.witness_index = 0;
    rep.witness_lhs = elt_to_string(q.c[0]);
    rep.witness_rhs = "1";
    rep.detail = "constant term must be 1";
    return rep;
  }
  for (u32 i = 1; i <= q.bound; ++i)
    if (!is_in_maximal_ideal(q.c[i])) {
      rep.status = check_status::fail;
      rep.code = errc::coefficient_not_in_maximal_ideal;
      rep.has_witness = true;
      rep.witness_index = i;
      rep.witness_lhs = elt_to_string(q.c[i]);
      rep.witness_rhs = "(maximal ideal)";
      rep.detail = "coefficient of degree " + std::to_string(i) +
                   " is a unit";
      return rep;
    }
  rep.detail = "constant term 1, higher coefficients in the maximal ideal "
               "through degree " +
               std::to_string(q.bound);
  return rep;
}

// --------------------------------------------------------- the identities

VerificationReport check_prop_4_16(const UnitCrystalSpec& lifted,
                                   const Poly& P, u32 B,
                                   const EulerOptions& opt) {
  Series lhs = euler_product(lifted, point_region::gm, B, opt);
  const RingPtr R = lifted.ring;
  Series rhs = series_one(R, B);
  const u32 d = lifted.dim;
  for (u32 i = 0; i <= d; ++i) {
    i64 e = static_cast<i64>(binom(d, i));
    if ((d + 1 - i) % 2) e = -e;  // exponent (-1)^(d+1-i) binom(d, i)
    Elt scale = from_int(R, static_cast<i64>(pow_u64(R->p, i)));
    Series fac = series_pow_signed(
        series_scale_variable(poly_to_series(P, B), scale), e);
    rhs = series_mul(rhs, fac);
  }
  return series_match_report("product-identity", lhs, rhs, errc::mismatch);
}

Series katz_ratio(const UnitCrystalSpec& lifted, const Poly& p_unit, u32 B,
                  const EulerOptions& opt) {
  Series num = euler_product(lifted, point_region::d_of_a, B, opt);
  Series lst = structure_map_L(p_unit, lifted.dim, B);
  return series_mul(num, series_inverse(lst));
}

// product of local factors over the vanishing locus, dimension 1 only;
// every such point has degree at most the residue exponent span
static Poly zero_locus_polynomial(const UnitCrystalSpec& lifted) {
  const RingPtr R = lifted.ring;
  RegionPoly ra = region_poly(lifted.a);
  require(!ra.terms.empty(), errc::zero_residue,
          "locus polynomial vanishes mod p");
  i64 lo = ra.terms.front().first[0], hi = lo;
  for (const auto& [e, c] : ra.terms) {
    lo = std::min(lo, e[0]);
    hi = std::max(hi, e[0]);
  }
  Poly z = poly_one(R);
  const u32 span = static_cast<u32>(hi - lo);
  for (u32 dl = 1; dl <= span; ++dl) {
    auto pts = enumerate_closed_points(R->p, 1, dl, lifted.a, span);
    for (const auto& pt : pts)
      if (pt.on_zero_locus) z = poly_mul(z, local_factor(lifted, pt));
  }
  return z;
}

VerificationReport check_theorem_1_5(const CrystalPair& pr,
                                     const DworkMatrix& dm, u32 B,
                                     const EulerOptions& opt) {
  const std::string name = "structure-ratio";
  auto [p_unit, p_nil] = unit_nil_split(dm);
  Series q_tilde = katz_ratio(pr.lifted, p_unit, B, opt);
  const RingPtr L = pr.lift.lambda;
  Series q = change_ring(q_tilde, L, pr.lift);

  if (pr.lifted.dim == 1) {
    // exact reconstruction: nil factor times zero-locus factors divided by
    // P(pT), whose defect from 1 has nilpotent coefficients
    Poly z_l = change_ring(zero_locus_polynomial(pr.lifted), L, pr.lift);
    Poly pn_l = change_ring(p_nil, L, pr.lift);
    Poly p_l = change_ring(dm.P, L, pr.lift);
    Poly d_poly =
        poly_scale_variable(p_l, from_int(L, static_cast<i64>(L->p)));
    Poly e_poly = poly_sub(d_poly, poly_one(L));
    Poly neg_e = poly_sub(poly_zero(L), e_poly);
    Poly d_inv = poly_one(L), term = poly_one(L);
    for (u32 j = 1; j < L->lambda_pexp; ++j) {
      term = poly_mul(term, neg_e);
      d_inv = poly_add(d_inv, term);
    }
    Poly q_poly = poly_mul(poly_mul(pn_l, z_l), d_inv);

    VerificationReport cmp = series_match_report(
        name, q, poly_to_series(q_poly, B), errc::not_polynomial);
    if (!cmp.ok()) {
      cmp.detail = "ratio differs from its polynomial reconstruction at "
                   "degree " +
                   std::to_string(cmp.witness_index);
      return cmp;
    }
    const u32 full = static_cast<u32>(std::max(q_poly.deg(), 0));
    VerificationReport mi =
        maximal_ideal_report(name, poly_to_series(q_poly, full));
    if (!mi.ok()) return mi;
    mi.detail = "exact certificate: the ratio is a polynomial of degree " +
                std::to_string(q_poly.deg()) +
                " with higher coefficients in the maximal ideal";
    return mi;
  }

  VerificationReport mi = maximal_ideal_report(name, q);
  if (!mi.ok()) return mi;
  mi.status = check_status::certified_to_bound;
  mi.detail = "coefficient conditions hold through degree " +
              std::to_string(B);
  return mi;
}

VerificationReport check_trace_identity(const UnitCrystalSpec& lifted,
                                        const DworkMatrix& dm, u32 n_max) {
  VerificationReport rep;
  rep.check = "power-traces";
  for (u32 n = 1; n <= n_max; ++n) {
    Elt lhs = trace_power(dm, n);
    Elt rhs = trace_formula_rhs(lifted, n);
    if (!eq(lhs, rhs)) {
      rep.status = check_status::fail;
      rep.code = errc::mismatch;
      rep.has_witness = true;
      rep.witness_index = n;
      rep.witness_lhs = elt_to_string(lhs);
      rep.witness_rhs = elt_to_string(rhs);
      rep.detail = "trace of power " + std::to_string(n) + " disagrees";
      return rep;
    }
  }
  rep.detail = "powers 1.." + std::to_string(n_max) + " agree";
  return rep;
}

VerificationReport check_stratification(const UnitCrystalSpec& lifted,
                                        const LaurentPoly& b, u32 B,
                                        u32 workers) {
  RegionPoly ra = region_poly(lifted.a);
  RegionPoly rb = region_poly(b);
  auto da = [ra](const Fq& k, const std::vector<u64>& x) {
    return !region_vanishes(k, ra, x);
  };
  auto dab = [ra, rb](const Fq& k, const std::vector<u64>& x) {
    return !region_vanishes(k, ra, x) && !region_vanishes(k, rb, x);
  };
  auto zb_da = [ra, rb](const Fq& k, const std::vector<u64>& x) {
    return !region_vanishes(k, ra, x) && region_vanishes(k, rb, x);
  };
  Series lhs = euler_product_filtered(lifted, B, workers, da);
  Series rhs = series_mul(euler_product_filtered(lifted, B, workers, dab),
                          euler_product_filtered(lifted, B, workers, zb_da));
  return series_match_report("stratification", lhs, rhs, errc::mismatch);
}

VerificationReport zeta_sanity(u64 p, u32 d, u32 B) {
  require(d >= 1 && d <= 4 && B >= 1 && B <= 12,
          errc::degree_bound_exceeded, "zeta check bounds out of range");
  const RingPtr R = make_base(p, 9);

  // closed-point counts by exact degree, from the rational-point counts
  std::vector<u64> counts(B + 1, 0);
  for (u32 dl = 1; dl <= B; ++dl) {
    u64 total = 1;
    const u64 pd = pow_u64(p, dl) - 1;
    for (u32 i = 0; i < d; ++i) total *= pd;
    for (u32 e = 1; e < dl; ++e)
      if (dl % e == 0) total -= static_cast<u64>(e) * counts[e];
    require(total % dl == 0, errc::internal, "count recursion broke");
    counts[dl] = total / dl;
  }

  Series lhs = series_one(R, B);
  for (u32 dl = 1; dl <= B; ++dl) {
    Series f = series_one(R, B);
    f.c[dl] = neg(one(R));
    lhs = series_mul(lhs,
                     series_pow_signed(f, -static_cast<i64>(counts[dl])));
  }

  Series rhs = series_one(R, B);
  for (u32 i = 0; i <= d; ++i) {
    i64 e = static_cast<i64>(binom(d, i));
    if ((d - i + 1) % 2) e = -e;
    Series f = series_one(R, B);
    f.c[1] = neg(from_int(R, static_cast<i64>(pow_u64(p, i))));
    rhs = series_mul(rhs, series_pow_signed(f, e));
  }
  return series_match_report("zeta-count", lhs, rhs, errc::mismatch);
}

}  // namespace unitl
