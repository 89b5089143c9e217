#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_util.hpp"
#include "unitl/series.hpp"

using namespace unitl;
using unitl_test::thrown_code;

static Series geom(const RingPtr& R, i64 c, u32 B) {
  // 1 - cT as a series
  Series f = series_one(R, B);
  f.c[1] = from_int(R, -c);
  return f;
}

TEST_CASE("inverse of 1 - 2T over Z/8") {
  RingPtr R = make_base(2, 3);
  Series inv = series_inverse(geom(R, 2, 5));
  std::vector<u64> want = {1, 2, 4, 0, 0, 0};
  for (u32 i = 0; i <= 5; ++i) CHECK(inv.c[i].c == std::vector<u64>{want[i]});
  CHECK(eq(series_mul(inv, geom(R, 2, 5)).c[0], one(R)));
  CHECK(series_eq(series_mul(inv, geom(R, 2, 5)), series_one(R, 5)));
}

TEST_CASE("inverse requires a unit constant term") {
  RingPtr R = make_base(2, 3);
  Series f = series_one(R, 3);
  f.c[0] = from_int(R, 2);
  CHECK(thrown_code([&] { series_inverse(f); }) ==
        errc::non_unit_constant_term);
}

TEST_CASE("truncation is compatible with multiplication") {
  RingPtr R = make_base(3, 2);
  Series f = series_zero(R, 6), g = series_zero(R, 6);
  for (u32 i = 0; i <= 6; ++i) {
    f.c[i] = from_int(R, static_cast<i64>(i * i + 1));
    g.c[i] = from_int(R, static_cast<i64>(2 * i + 3));
  }
  Series full = series_mul(f, g);
  Series trunc =
      series_mul(series_truncate(f, 4), series_truncate(g, 4));
  CHECK(series_eq(series_truncate(full, 4), trunc));
}

TEST_CASE("signed powers") {
  RingPtr R = make_base(2, 4);
  Series f = geom(R, 3, 6);
  Series id = series_mul(series_pow_signed(f, 3), series_pow_signed(f, -3));
  CHECK(series_eq(id, series_one(R, 6)));
  CHECK(series_eq(series_pow_signed(f, 0), series_one(R, 6)));
  CHECK(series_eq(series_pow_signed(f, 1), f));
}

TEST_CASE("variable scaling") {
  RingPtr R = make_base(5, 3);
  Series f = series_zero(R, 4);
  for (u32 i = 0; i <= 4; ++i) f.c[i] = from_int(R, static_cast<i64>(i + 1));
  Series g = series_scale_variable(f, from_int(R, 5));
  for (u32 i = 0; i <= 4; ++i) {
    i64 want = static_cast<i64>((i + 1) * pow_u64(5, i) % 125);
    CHECK(eq(g.c[i], from_int(R, want)));
  }
}

TEST_CASE("polynomial division by monic divisors") {
  RingPtr R = make_base(3, 2);
  Poly d = poly_from_coeffs(R, {from_int(R, 2), one(R)});  // T + 2
  Poly f = poly_from_coeffs(
      R, {from_int(R, 1), zero(R), one(R)});  // T^2 + 1
  Poly fq_, fr;
  poly_divmod_monic(poly_mul(f, d), d, fq_, fr);
  CHECK(poly_eq(fq_, f));
  CHECK(poly_eq(fr, poly_zero(R)));

  Poly g = poly_add(poly_mul(f, d), poly_one(R));
  poly_divmod_monic(g, d, fq_, fr);
  CHECK(poly_eq(fq_, f));
  CHECK(poly_eq(fr, poly_one(R)));

  Poly bad = poly_from_coeffs(R, {one(R), from_int(R, 3)});
  CHECK(thrown_code([&] {
          Poly q2, r2;
          poly_divmod_monic(f, bad, q2, r2);
        }) == errc::not_monic);
}

TEST_CASE("polynomial reversal with explicit length") {
  RingPtr R = make_base(3, 2);
  Poly f = poly_from_coeffs(R, {one(R), from_int(R, 2), from_int(R, 3)});
  Poly r2 = poly_reverse(f, 2);
  CHECK(r2.c.size() == 3);
  CHECK(eq(r2.c[0], from_int(R, 3)));
  CHECK(eq(r2.c[1], from_int(R, 2)));
  CHECK(eq(r2.c[2], one(R)));
  Poly r4 = poly_reverse(f, 4);
  CHECK(r4.c.size() == 5);
  CHECK(is_zero(r4.c[0]));
  CHECK(is_zero(r4.c[1]));
  CHECK(eq(r4.c[4], one(R)));
  // reversal is multiplicative at matched lengths
  Poly g = poly_from_coeffs(R, {one(R), one(R)});
  CHECK(poly_eq(poly_mul(poly_reverse(f, 2), poly_reverse(g, 1)),
                poly_reverse(poly_mul(f, g), 3)));
}

TEST_CASE("poly to series and scaling") {
  RingPtr R = make_base(2, 3);
  Poly f = poly_from_coeffs(R, {one(R), from_int(R, 7)});  // 1 - T
  Series s = poly_to_series(f, 4);
  CHECK(s.c[0].c == std::vector<u64>{1});
  CHECK(s.c[1].c == std::vector<u64>{7});
  CHECK(is_zero(s.c[2]));
  Poly sc = poly_scale_variable(f, from_int(R, 2));  // 1 - 2T
  CHECK(sc.c[1].c == std::vector<u64>{6});
}

TEST_CASE("series map between rings") {
  RingPtr L = make_local_algebra(2, 4, 2, {1, 1, 1});
  FlatLift fl = make_flat_lift(L, 4);
  Series f = series_zero(fl.lambda_tilde, 3);
  for (u32 i = 0; i <= 3; ++i)
    f.c[i] = from_int(fl.lambda_tilde, static_cast<i64>(5 * i + 1));
  Series g =
      series_map(f, L, [&](const Elt& a) { return project(fl, a); });
  for (u32 i = 0; i <= 3; ++i)
    CHECK(eq(g.c[i], from_int(L, static_cast<i64>(5 * i + 1))));
}
