#ifndef UNITL_LAURENT_HPP
#define UNITL_LAURENT_HPP

// Sparse multivariate Laurent polynomials over a ring-tower coefficient ring:
// finitely supported maps from exponent vectors in Z^d to nonzero
// coefficients. This is where the crystal data lives (the matrix entries and
// the locus polynomial a), so the parser/printer here define the config wire
// format: sums of terms like `3*z1^2*z2^-1`, with bracketed coefficients
// `[1+2x]` when the coefficient ring has a generator x.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unitl/ring.hpp"

namespace unitl {

struct LaurentPoly {
  RingPtr ring;  // coefficient ring: base, local algebra, or flat lift
  u32 dim = 0;
  std::map<std::vector<i64>, Elt> terms;  // canonical: no zero coefficients
};

LaurentPoly lp_zero(const RingPtr& R, u32 dim);
LaurentPoly lp_one(const RingPtr& R, u32 dim);
LaurentPoly lp_const(const RingPtr& R, u32 dim, const Elt& c);
LaurentPoly lp_monomial(const RingPtr& R, u32 dim, const std::vector<i64>& e,
                        const Elt& c);

bool lp_is_zero(const LaurentPoly& f);
bool lp_eq(const LaurentPoly& f, const LaurentPoly& g);
bool lp_is_one(const LaurentPoly& f);

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_sub(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_neg(const LaurentPoly& f);
LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly lp_mul_elt(const LaurentPoly& f, const Elt& c);
LaurentPoly lp_pow(const LaurentPoly& f, u32 k);

// coefficient at e, zero if absent
Elt coeff_extract(const LaurentPoly& f, const std::vector<i64>& e);

// z_i -> z_i^(p^k), coefficients unchanged
LaurentPoly frobenius_pullback(const LaurentPoly& f, u32 k = 1);

// exact substitution of invertible point coordinates; coefficients are
// embedded into the ring of the coordinates
Elt eval_at_point(const LaurentPoly& f, const std::vector<Elt>& point);

// coefficientwise image under fn into the target ring, dropping zeros
LaurentPoly lp_map_coeffs(const LaurentPoly& f, const RingPtr& target,
                          const std::function<Elt(const Elt&)>& fn);

// componentwise exponent bounds over the support; zero vectors when f = 0
void lp_exponent_box(const LaurentPoly& f, std::vector<i64>& lo,
                     std::vector<i64>& hi);
i64 lp_max_total_degree(const LaurentPoly& f);  // 0 when f = 0
i64 lp_max_negative_exponent(const LaurentPoly& f);

// Forced exact division in the Laurent ring. Returns the quotient when
// f = q*g is solvable and detectable, nullopt when the bounded descent rules
// it out. The divisor's graded-lex leading coefficient must be a unit
// (DivisionUndecidable otherwise). A returned quotient is always exact: the
// loop maintains f = q*g + r and only returns at r = 0.
std::optional<LaurentPoly> lp_divide(const LaurentPoly& f,
                                     const LaurentPoly& g);

// Config wire format. parse_laurent accepts sums of terms
// `[coeff][*z<i>^<int>]...`; print_laurent emits the same grammar and
// round-trips through the parser.
LaurentPoly parse_laurent(const std::string& text, const RingPtr& R, u32 dim);
std::string print_laurent(const LaurentPoly& f);

// A polynomial in the coefficient-ring generator x with integer
// coefficients, e.g. "x^2+2x+1"; shared by bracketed coefficients and the
// [ring] lambda_modulus key. base_pos offsets reported error positions.
std::vector<i64> parse_x_polynomial(const std::string& text,
                                    size_t base_pos = 0);

}  // namespace unitl

#endif
