#ifndef UNITL_FQ_HPP
#define UNITL_FQ_HPP

// Polynomials over F_p and a discrete-log model of F_{p^deg}.
//
// Everything here is desk scale: p in {2,3,5,...} small, degrees <= 32 for
// modulus factorization, field sizes up to a few hundred thousand. The field
// class precomputes exp/log tables relative to a generator so that
// multiplication, inversion and Frobenius are O(1) table operations; this is
// what keeps full point-orbit scans over (F_{p^delta}^x)^d affordable.

#include <cstdint>
#include <vector>

#include "unitl/errors.hpp"

namespace unitl {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------- F_p[x]

// Dense coefficient vector, c[i] = coefficient of x^i, no trailing zeros.
// The zero polynomial has empty c.
struct FpPoly {
  u64 p = 0;
  std::vector<u64> c;

  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  u64 lead() const { return c.back(); }
};

FpPoly fp_make(u64 p, std::vector<u64> coeffs);  // reduces mod p, trims
FpPoly fp_x(u64 p);
FpPoly fp_const(u64 p, u64 v);
bool fp_eq(const FpPoly& a, const FpPoly& b);
FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
// division with remainder; divisor must have invertible (nonzero) lead
void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic gcd
FpPoly fp_monic(const FpPoly& a);
// x^(p^k) mod f, by k rounds of p-th powering
FpPoly fp_frob_power(const FpPoly& f, u32 k);
FpPoly fp_powmod(const FpPoly& a, u64 e, const FpPoly& f);
bool fp_irreducible(const FpPoly& f);  // monic f, deg >= 1, Rabin test

// Lexicographically smallest irreducible monic polynomial of degree delta
// over F_p, ordering coefficient tuples by their integer encoding sum c_i p^i.
FpPoly fp_first_irreducible(u64 p, u32 delta);

// Decides whether fbar is a power of a single irreducible; returns that
// irreducible and the exponent. Errors: not_local when two distinct
// irreducible factors exist, not_monic when the lead is not 1.
struct FpPrimePower {
  FpPoly irr;
  u32 e = 0;
};
FpPrimePower fp_prime_power_split(const FpPoly& fbar);

// ------------------------------------------------------------- F_{p^deg}

// Field elements are integer encodings sum c_i p^i of their coordinate
// vectors on the power basis of x mod the (irreducible monic) modulus.
// Zero encodes as 0. Nonzero elements also carry a discrete log.
class Fq {
 public:
  explicit Fq(FpPoly modulus);

  u64 p() const { return p_; }
  u32 deg() const { return deg_; }
  u64 q() const { return q_; }
  const FpPoly& modulus() const { return mod_; }

  u64 encode(const FpPoly& a) const;  // deg(a) < deg required
  FpPoly decode(u64 a) const;

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;        // a != 0
  u64 pow(u64 a, i64 k) const; // a != 0 when k < 0
  u64 frob(u64 a) const;       // a^p
  u64 frob_iter(u64 a, u32 k) const;
  // multiplicative order of nonzero a
  u64 order(u64 a) const;

 private:
  FpPoly decode_raw_(u64 a) const;  // table-free decode (constructor use)

  u64 p_;
  u32 deg_;
  u64 q_;
  FpPoly mod_;
  std::vector<u64> exp_;   // exp_[k] = g^k, k in [0, q-1)
  std::vector<u64> log_;   // log_[e] for e in [1, q); log_[0] unused
  std::vector<u64> frob_;  // frob_[e] = e^p, tabulated
};

// Polynomials with Fq coefficients (encodings); just enough for the Bezout
// setup of the Hensel factorization. Dense, no trailing zeros.
struct FqPoly {
  std::vector<u64> c;
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
};

FqPoly fq_trim(FqPoly a);
FqPoly fq_add(const Fq& k, const FqPoly& a, const FqPoly& b);
FqPoly fq_sub(const Fq& k, const FqPoly& a, const FqPoly& b);
FqPoly fq_mul(const Fq& k, const FqPoly& a, const FqPoly& b);
void fq_divmod(const Fq& k, const FqPoly& a, const FqPoly& b, FqPoly& quo,
               FqPoly& rem);
// s*a + t*b = gcd (monic); a, b not both zero
void fq_xgcd(const Fq& k, FqPoly a, FqPoly b, FqPoly& g, FqPoly& s, FqPoly& t);

}  // namespace unitl

#endif
