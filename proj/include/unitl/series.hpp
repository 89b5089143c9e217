#ifndef UNITL_SERIES_HPP
#define UNITL_SERIES_HPP

// Truncated power series in T over a ring-tower ring, exact mod
// (p^N, T^(B+1)), plus exact polynomials in T for the characteristic
// polynomial and the rational-function certification path. All L-function
// values live here.

#include <functional>
#include <vector>

#include "unitl/ring.hpp"

namespace unitl {

struct Series {
  RingPtr ring;
  u32 bound = 0;         // exact mod T^(bound+1)
  std::vector<Elt> c;    // size bound+1
};

Series series_zero(const RingPtr& R, u32 B);
Series series_one(const RingPtr& R, u32 B);
bool series_eq(const Series& f, const Series& g);
Series series_add(const Series& f, const Series& g);
Series series_sub(const Series& f, const Series& g);
Series series_mul(const Series& f, const Series& g);
// requires a unit constant term
Series series_inverse(const Series& f);
Series series_pow_signed(const Series& f, i64 e);
// T -> c*T
Series series_scale_variable(const Series& f, const Elt& scale);
Series series_truncate(const Series& f, u32 B);
// coefficientwise image under a recorded ring map
Series series_map(const Series& f, const RingPtr& target,
                  const std::function<Elt(const Elt&)>& fn);

// Exact polynomials in T (trailing zeros trimmed; zero = empty).
struct Poly {
  RingPtr ring;
  std::vector<Elt> c;

  int deg() const { return static_cast<int>(c.size()) - 1; }
};

Poly poly_zero(const RingPtr& R);
Poly poly_one(const RingPtr& R);
Poly poly_from_coeffs(const RingPtr& R, std::vector<Elt> c);
Poly poly_trim(Poly f);
bool poly_eq(const Poly& f, const Poly& g);
bool poly_is_one(const Poly& f);
Poly poly_add(const Poly& f, const Poly& g);
Poly poly_sub(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
// division by a monic divisor, exact over the coefficient ring
void poly_divmod_monic(const Poly& f, const Poly& g, Poly& q, Poly& r);
// T^n * f(1/T) for n >= deg f
Poly poly_reverse(const Poly& f, u32 n);
// T -> c*T at the polynomial level
Poly poly_scale_variable(const Poly& f, const Elt& scale);
Poly poly_map(const Poly& f, const RingPtr& target,
              const std::function<Elt(const Elt&)>& fn);
Series poly_to_series(const Poly& f, u32 B);

}  // namespace unitl

#endif
