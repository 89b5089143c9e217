#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "test_util.hpp"
#include "unitl/laurent.hpp"

using namespace unitl;
using unitl_test::thrown_code;

static RingPtr z8() { return make_base(2, 3); }

TEST_CASE("parse simple sums") {
  RingPtr R = z8();
  LaurentPoly f = parse_laurent("1+z^2", R, 1);
  CHECK(f.terms.size() == 2);
  CHECK(eq(coeff_extract(f, {0}), one(R)));
  CHECK(eq(coeff_extract(f, {2}), one(R)));
  CHECK(is_zero(coeff_extract(f, {1})));

  LaurentPoly g = parse_laurent("3*z1^2*z2^-1+z2", R, 2);
  CHECK(eq(coeff_extract(g, {2, -1}), from_int(R, 3)));
  CHECK(eq(coeff_extract(g, {0, 1}), one(R)));

  LaurentPoly h = parse_laurent("-2*z+5", R, 1);
  CHECK(eq(coeff_extract(h, {1}), from_int(R, -2)));
  CHECK(eq(coeff_extract(h, {0}), from_int(R, 5)));

  CHECK(lp_is_zero(parse_laurent("0", R, 1)));
  CHECK(lp_is_one(parse_laurent("1", R, 1)));
}

TEST_CASE("bracketed coefficients use the algebra generator") {
  RingPtr L = make_local_algebra(2, 4, 2, {1, 1, 1});
  LaurentPoly f = parse_laurent("[1+2x]*z^3+[x]", L, 1);
  Elt c = coeff_extract(f, {3});
  CHECK(c.c == std::vector<u64>{1, 2});
  CHECK(coeff_extract(f, {0}).c == std::vector<u64>{0, 1});
}

TEST_CASE("parser rejects malformed input with positions") {
  RingPtr R = z8();
  auto code = thrown_code([&] { parse_laurent("1+*z", R, 1); });
  CHECK(code == errc::syntax_error);
  try {
    parse_laurent("1+*z", R, 1);
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  CHECK(thrown_code([&] { parse_laurent("2z", R, 1); }) ==
        errc::syntax_error);
  CHECK(thrown_code([&] { parse_laurent("z^", R, 1); }) ==
        errc::syntax_error);
  CHECK(thrown_code([&] { parse_laurent("", R, 1); }) == errc::syntax_error);

  // bare z needs dim 1; out-of-range indices are named errors
  CHECK(thrown_code([&] { parse_laurent("z", R, 2); }) ==
        errc::unknown_variable);
  CHECK(thrown_code([&] { parse_laurent("z3", R, 2); }) ==
        errc::unknown_variable);
  CHECK(thrown_code([&] { parse_laurent("[x]*z", R, 1); }) ==
        errc::unknown_variable);  // base ring has no generator
}

TEST_CASE("print and reparse round trip") {
  RingPtr L = make_local_algebra(2, 4, 2, {1, 1, 1});
  LaurentPoly f = parse_laurent("2*z1^2*z2^-1+[1+x]*z1+3", L, 2);
  LaurentPoly g = parse_laurent(print_laurent(f), L, 2);
  CHECK(lp_eq(f, g));
  CHECK(print_laurent(lp_one(L, 1)) == "1");
  CHECK(print_laurent(lp_zero(L, 1)) == "0");

  RingPtr R = z8();
  LaurentPoly h = parse_laurent("z^-2+7*z", R, 1);
  CHECK(lp_eq(parse_laurent(print_laurent(h), R, 1), h));
}

TEST_CASE("ring algebra on laurent polynomials") {
  RingPtr R = z8();
  LaurentPoly f = parse_laurent("1+z", R, 1);
  LaurentPoly g = parse_laurent("1+7*z", R, 1);  // 1 - z
  CHECK(lp_eq(lp_mul(f, g), parse_laurent("1+7*z^2", R, 1)));
  CHECK(lp_eq(lp_pow(f, 2), parse_laurent("1+2*z+z^2", R, 1)));
  CHECK(lp_is_zero(lp_sub(f, f)));
  CHECK(lp_eq(lp_mul_elt(f, from_int(R, 2)), parse_laurent("2+2*z", R, 1)));
}

TEST_CASE("frobenius pullback raises exponents") {
  RingPtr R = z8();
  LaurentPoly f = parse_laurent("3*z^-1+z^2", R, 1);
  CHECK(lp_eq(frobenius_pullback(f), parse_laurent("3*z^-2+z^4", R, 1)));
  CHECK(lp_eq(frobenius_pullback(f, 2), parse_laurent("3*z^-4+z^8", R, 1)));
  LaurentPoly g = parse_laurent("z1*z2^2", R, 2);
  CHECK(lp_eq(frobenius_pullback(g), parse_laurent("z1^2*z2^4", R, 2)));
}

TEST_CASE("evaluation at invertible points") {
  RingPtr B = make_base(3, 2);  // Z/9
  LaurentPoly f = parse_laurent("z^-1+1", B, 1);
  RingPtr W = make_witt_ring(3, 2, 1);
  Elt t = teichmuller(W, 2);  // 8 = -1 mod 9
  CHECK(is_zero(eval_at_point(f, {t})));

  LaurentPoly g = parse_laurent("z1*z2+2", B, 2);
  Elt o = one(W);
  CHECK(eval_at_point(g, {o, o}).c == std::vector<u64>{3});

  CHECK(thrown_code([&] { eval_at_point(f, {zero(W)}); }) ==
        errc::non_invertible_coordinate);
}

TEST_CASE("exponent statistics") {
  RingPtr R = z8();
  LaurentPoly f = parse_laurent("z1^2*z2^-1+z1*z2^3", R, 2);
  std::vector<i64> lo, hi;
  lp_exponent_box(f, lo, hi);
  CHECK(lo == std::vector<i64>{1, -1});
  CHECK(hi == std::vector<i64>{2, 3});
  CHECK(lp_max_total_degree(f) == 4);
  CHECK(lp_max_negative_exponent(f) == 1);
}

TEST_CASE("forced division finds laurent inverses when they exist") {
  RingPtr R4 = make_base(2, 2);  // Z/4
  LaurentPoly one_p = lp_one(R4, 1);

  // 1/(2+z) = z^-1 + 2z^-2 exactly mod 4
  auto q = lp_divide(one_p, parse_laurent("2+z", R4, 1));
  REQUIRE(q.has_value());
  CHECK(lp_eq(*q, parse_laurent("z^-1+2*z^-2", R4, 1)));
  CHECK(lp_eq(lp_mul(*q, parse_laurent("2+z", R4, 1)), one_p));

  // 1/(1+z) has an infinite expansion in both directions: undecided
  CHECK_FALSE(lp_divide(one_p, parse_laurent("1+z", R4, 1)).has_value());

  // leading coefficient 2 is not a unit even though 1+2z is invertible
  CHECK(thrown_code([&] {
          lp_divide(one_p, parse_laurent("1+2*z", R4, 1));
        }) == errc::division_undecidable);
}

TEST_CASE("forced division inverts known products") {
  RingPtr R = z8();
  LaurentPoly f = parse_laurent("1+z1*z2", R, 2);
  LaurentPoly g = parse_laurent("z1+z2", R, 2);
  auto q = lp_divide(lp_mul(f, g), g);
  REQUIRE(q.has_value());
  CHECK(lp_eq(*q, f));

  LaurentPoly h = parse_laurent("z^2+2*z^3", R, 1);
  auto q2 = lp_divide(h, parse_laurent("z^2", R, 1));
  REQUIRE(q2.has_value());
  CHECK(lp_eq(*q2, parse_laurent("1+2*z", R, 1)));
}

TEST_CASE("x polynomial grammar") {
  CHECK(parse_x_polynomial("x^2+2x+1") == std::vector<i64>{1, 2, 1});
  CHECK(parse_x_polynomial("x") == std::vector<i64>{0, 1});
  CHECK(parse_x_polynomial("5") == std::vector<i64>{5});
  CHECK(parse_x_polynomial("x^2-1") == std::vector<i64>{-1, 0, 1});
  CHECK(thrown_code([] { parse_x_polynomial("x^"); }) == errc::syntax_error);
}
