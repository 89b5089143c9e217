#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_util.hpp"
#include "unitl/crystal.hpp"
#include "unitl/euler.hpp"

using namespace unitl;
using unitl_test::thrown_code;

// rank-one crystal over the given local algebra
static UnitCrystalSpec make_spec(const RingPtr& L, u32 dim,
                                 const std::string& a,
                                 const std::string& entry, u32 m_denom = 0) {
  UnitCrystalSpec c;
  c.ring = L;
  c.dim = dim;
  c.rank = 1;
  c.m_denom = m_denom;
  c.a = parse_laurent(a, L, dim);
  c.matrix = {parse_laurent(entry, L, dim)};
  return c;
}

TEST_CASE("prenormalized detection") {
  RingPtr L = make_local_algebra(2, 3, 1, {0, 1});  // F_2
  CHECK(crystal_is_prenormalized(make_spec(L, 1, "1", "z")));
  CHECK(crystal_is_prenormalized(make_spec(L, 1, "1+z", "z+z^2")));
  CHECK_FALSE(crystal_is_prenormalized(make_spec(L, 1, "1", "z^-1+1")));
  CHECK_FALSE(crystal_is_prenormalized(make_spec(L, 1, "1", "1+z")));
  CHECK_FALSE(crystal_is_prenormalized(make_spec(L, 1, "1+z", "z")));
  CHECK_FALSE(crystal_is_prenormalized(make_spec(L, 1, "1", "z", 1)));
}

TEST_CASE("denominator clearing finds the minimal exponent") {
  // entry z/a with a = 1+z over F_2: (F*a) = a^2 exactly, so Ne = 1 and the
  // clearing factor is h^2 a = a with h = (F*a)/a^2 = 1
  RingPtr L = make_local_algebra(2, 3, 1, {0, 1});
  UnitCrystalSpec c = make_spec(L, 1, "1+z", "z", 1);
  UnitCrystalSpec n = normalize_denominators(c);
  CHECK(n.denominators_cleared);
  CHECK(lp_eq(n.at(0, 0), parse_laurent("z+z^2", L, 1)));
  // the cleared entry is an exact a-multiple
  CHECK(lp_divide(n.at(0, 0), n.a).has_value());
}

TEST_CASE("denominator clearing beyond the residue field") {
  // over Z/4 with a = 1+z the probe first succeeds at Ne = 2, because
  // (1+z)^4 = (1+z^2)^2 mod 4; the quotient h = 1+z gives the factor
  // h^2 * a = (1+z)^3
  RingPtr L = make_local_algebra(2, 4, 2, {0, 1});
  UnitCrystalSpec c = make_spec(L, 1, "1+z", "z", 1);
  UnitCrystalSpec n = normalize_denominators(c);
  CHECK(n.denominators_cleared);
  CHECK(lp_eq(n.at(0, 0), parse_laurent("z+3*z^2+3*z^3+z^4", L, 1)));
  CHECK(lp_divide(n.at(0, 0), n.a).has_value());
}

TEST_CASE("denominator clearing can give up") {
  // mod 8 none of Ne = 0..3 makes (1+z)^(Ne+1) divide (1+z^2)^Ne
  RingPtr L = make_local_algebra(2, 3, 3, {0, 1});
  UnitCrystalSpec c = make_spec(L, 1, "1+z", "z", 1);
  CHECK(thrown_code([&] { normalize_denominators(c, 3); }) ==
        errc::search_exhausted);
}

TEST_CASE("monomial twist clears negative exponents") {
  RingPtr L = make_local_algebra(2, 3, 1, {0, 1});
  UnitCrystalSpec c = make_spec(L, 1, "1", "z^-1+1");
  c.denominators_cleared = true;  // nothing to clear for a = 1
  UnitCrystalSpec t = monomial_twist(c);
  CHECK(t.monomial_twisted);
  CHECK(lp_eq(t.at(0, 0), parse_laurent("z+z^2", L, 1)));

  UnitCrystalSpec u = choose_sheaf_twist(t);
  CHECK(u.u_set);
  CHECK(u.u == 3);
}

TEST_CASE("sheaf twist values") {
  RingPtr L2 = make_local_algebra(2, 3, 1, {0, 1});
  RingPtr L3 = make_local_algebra(3, 3, 1, {0, 1});
  UnitCrystalSpec a = make_spec(L2, 1, "1", "z");
  a.denominators_cleared = a.monomial_twisted = true;
  CHECK(sheaf_twist_value(a) == 2);  // ceil-ish: 1/(2-1) + 1

  UnitCrystalSpec b = make_spec(L3, 1, "1", "z");
  b.denominators_cleared = b.monomial_twisted = true;
  CHECK(sheaf_twist_value(b) == 1);  // 1/(3-1) + 1 = 1 by integer division

  UnitCrystalSpec c = make_spec(L2, 2, "1", "z1*z2^2");
  c.denominators_cleared = c.monomial_twisted = true;
  CHECK(sheaf_twist_value(c) == 4);  // 3/(2-1) + 1
}

TEST_CASE("lift round trips through the projection") {
  RingPtr L = make_local_algebra(2, 3, 1, {1, 1, 1});
  FlatLift fl = make_flat_lift(L, 3);
  UnitCrystalSpec c;
  c.ring = L;
  c.dim = 1;
  c.rank = 2;
  c.a = parse_laurent("1+z", L, 1);
  c.matrix = {parse_laurent("z+z^2", L, 1), parse_laurent("[x]*z+[x]*z^2", L, 1),
              parse_laurent("0", L, 1), parse_laurent("z+z^2", L, 1)};
  c.denominators_cleared = true;
  c.monomial_twisted = true;
  CrystalPair pr = lift_crystal(c, fl);
  CHECK(ring_eq(*pr.lifted.ring, *fl.lambda_tilde));
  for (u32 i = 0; i < 2; ++i)
    for (u32 j = 0; j < 2; ++j) {
      LaurentPoly back = lp_map_coeffs(
          pr.lifted.at(i, j), L, [&](const Elt& e) { return project(fl, e); });
      CHECK(lp_eq(back, pr.lambda_crystal.at(i, j)));
    }
  // the lifted locus polynomial reduces back too
  LaurentPoly abar = lp_map_coeffs(
      pr.lifted.a, L, [&](const Elt& e) { return project(fl, e); });
  CHECK(lp_eq(abar, c.a));
  // cleared entries stay exact a-multiples upstairs
  CHECK(lp_divide(pr.lifted.at(0, 0), pr.lifted.a).has_value());
}

TEST_CASE("unit check flags only the zero locus") {
  RingPtr L = make_local_algebra(2, 3, 1, {0, 1});
  FlatLift fl = make_flat_lift(L, 3);
  UnitCrystalSpec c = make_spec(L, 1, "1+z", "z+z^2");
  c.denominators_cleared = c.monomial_twisted = true;
  CrystalPair pr = lift_crystal(c, fl);
  UnitCheckReport rep = validate_unit_on_points(pr.lifted, 2);
  CHECK(rep.points_checked == 2);  // z = 1, and one quadratic orbit
  REQUIRE(rep.nonunits.size() == 1);
  CHECK(rep.nonunits[0].delta == 1);
  CHECK(rep.nonunits[0].on_zero_locus);
  CHECK(rep.clean());

  UnitCrystalSpec good = make_spec(L, 1, "1", "z");
  good.denominators_cleared = good.monomial_twisted = true;
  CrystalPair pg = lift_crystal(good, fl);
  UnitCheckReport rg = validate_unit_on_points(pg.lifted, 3);
  CHECK(rg.nonunits.empty());
  CHECK(rg.clean());
}

TEST_CASE("twist leaves open-locus local factors alone") {
  // multiplying the matrix by a monomial power of (z_1...z_d)^(p-1) scales
  // each Teichmueller evaluation by a norm-one unit; the twisted product
  // telescopes and every local factor off the twist support is unchanged
  RingPtr L = make_local_algebra(2, 4, 2, {0, 1});  // Z/4
  FlatLift fl = make_flat_lift(L, 4);

  UnitCrystalSpec plain = make_spec(L, 1, "1", "z+3*z^2");
  plain.denominators_cleared = plain.monomial_twisted = true;
  CrystalPair pp = lift_crystal(plain, fl);

  UnitCrystalSpec tw = plain;
  tw.matrix = {lp_mul(plain.at(0, 0), parse_laurent("z", L, 1))};  // z^(p-1)
  CrystalPair pt = lift_crystal(tw, fl);

  for (u32 dl = 1; dl <= 3; ++dl) {
    auto pts = enumerate_closed_points(2, 1, dl, pp.lifted.a);
    for (const auto& pt_ : pts) {
      Poly f0 = local_factor(pp.lifted, pt_);
      Poly f1 = local_factor(pt.lifted, pt_);
      CHECK(poly_eq(f0, f1));
    }
  }
}
