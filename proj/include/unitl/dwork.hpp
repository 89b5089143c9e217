#ifndef UNITL_DWORK_HPP
#define UNITL_DWORK_HPP

// The cohomological side: the matrix of the twisted Cartier operator on the
// monomial basis of top forms z^beta dz/(z_1...z_d) with 0 < beta_i,
// |beta| < u, its division-free reciprocal characteristic polynomial
// P(T) = det(1 - Psi T), the power-trace identity data, and the Hensel
// splitting P = P_unit * P_nil along the residue factorization.

#include <utility>
#include <vector>

#include "unitl/crystal.hpp"
#include "unitl/series.hpp"

namespace unitl {

// all beta with beta_i > 0 and sum(beta) < u, lexicographic; size C(u-1, d)
std::vector<std::vector<i64>> omega_basis(u32 d, u32 u);

// Cartier action on g dz/(z_1...z_d): keep monomials of g whose exponents
// are all divisible by p^n, divide them by p^n.
LaurentPoly cartier(const LaurentPoly& g, u32 n = 1);

struct DworkMatrix {
  u32 size = 0;
  RingPtr ring;
  std::vector<Elt> psi;  // size x size, row-major
  Poly P;                // det(1 - psi T), exact
  std::vector<std::vector<i64>> betas;
  u32 rank = 1;
};

// entry[(i,b'),(j,b)] = coefficient of z^(p b' - b) in entry (i,j);
// requires the normal form (monomial twist done, u chosen)
DworkMatrix dwork_matrix(const UnitCrystalSpec& c);

// Division-free det(1 - M T) for an n x n matrix over any tower ring.
Poly char_poly_reciprocal(const std::vector<Elt>& M, u32 n, const RingPtr& R);

// trace of the n-th power of the Dwork matrix
Elt trace_power(const DworkMatrix& dm, u32 n);

// Hensel-split P into the unit-root factor and the factor congruent to 1
// mod the maximal ideal; exact, with P_unit * P_nil == P.
std::pair<Poly, Poly> unit_nil_split(const DworkMatrix& dm);

// P_unit^((-1)^(d+1)) as a truncated series: the L-function of the
// pushforward to the point.
Series structure_map_L(const Poly& p_unit, u32 d, u32 B);

}  // namespace unitl

#endif
