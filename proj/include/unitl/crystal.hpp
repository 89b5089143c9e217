#ifndef UNITL_CRYSTAL_HPP
#define UNITL_CRYSTAL_HPP

// The unit-crystal data object: an m x m matrix of Laurent polynomials with
// its locus polynomial a, plus the normalization transforms that bring a raw
// matrix into the shape the cohomological pipeline needs (denominators
// cleared into an exact a-multiple, all exponents pushed >= 1 by a monomial
// twist, and the sheaf-twist parameter u fixed by the degree condition).

#include <string>
#include <vector>

#include "unitl/laurent.hpp"

namespace unitl {

struct UnitCrystalSpec {
  RingPtr ring;  // coefficient ring of the entries (local algebra or lift)
  u32 dim = 1;
  u32 rank = 1;
  LaurentPoly a;                    // locus polynomial over `ring`
  std::vector<LaurentPoly> matrix;  // rank*rank entries, row-major
  u32 m_denom = 0;                  // entries given as matrix[i]/a^m_denom
  bool denominators_cleared = false;
  bool monomial_twisted = false;
  u32 u = 0;
  bool u_set = false;

  const LaurentPoly& at(u32 i, u32 j) const { return matrix[i * rank + j]; }
};

struct CrystalPair {
  UnitCrystalSpec lambda_crystal;  // over the local algebra
  UnitCrystalSpec lifted;          // over the flat lift
  FlatLift lift;
};

// True when the input already satisfies both normal forms: no recorded
// denominator power, every entry exponent >= 1 in every variable, and every
// entry an exact a-multiple. Such inputs skip the transforms (re-running
// them would change the sheaf twist the worked examples pin down).
bool crystal_is_prenormalized(const UnitCrystalSpec& c);

// Finds the least Ne <= n_max with a^(Ne+1) dividing (F*a)^Ne exactly, then
// multiplies the matrix by (F*a / a)^((m_denom+1)*Ne): with h the quotient
// (F*a)^Ne / a^(Ne+1), each entry s/a^M becomes s*h^(M+1)*a, an exact
// a-multiple. Sets denominators_cleared.
UnitCrystalSpec normalize_denominators(const UnitCrystalSpec& c,
                                       u32 n_max = 8);

// Multiplies every entry by (z_1...z_d)^((p-1)t) for the least t with
// (p-1)t strictly above the deepest negative exponent; afterwards every
// exponent is >= 1. Sets monomial_twisted.
UnitCrystalSpec monomial_twist(const UnitCrystalSpec& c);

// Least u with (p-1)u strictly above the max total degree of any entry;
// stores it on the returned spec.
UnitCrystalSpec choose_sheaf_twist(const UnitCrystalSpec& c);
u32 sheaf_twist_value(const UnitCrystalSpec& c);

// Canonical coefficientwise lift to the flat ring. When denominators are
// cleared and a is not a unit, the entry is lifted as a*(entry/a) so the
// exact-divisibility invariant survives upstairs; the projection of the
// result always equals the input.
CrystalPair lift_crystal(const UnitCrystalSpec& c, const FlatLift& fl);

// Pointwise unit diagnostic, implemented with the point-enumeration
// machinery (see euler): at every closed point of degree <= degree_bound,
// det of the evaluated matrix should be a unit except on the zero locus.
struct UnitCheckEntry {
  u32 delta = 0;
  std::vector<u64> coords;
  bool on_zero_locus = false;
  bool unit = false;
};
struct UnitCheckReport {
  std::vector<UnitCheckEntry> nonunits;  // unit points are not listed
  u32 points_checked = 0;
  bool clean() const {  // nonunits off Z(a) are real failures
    for (const auto& e : nonunits)
      if (!e.on_zero_locus) return false;
    return true;
  }
};
UnitCheckReport validate_unit_on_points(const UnitCrystalSpec& lifted,
                                        u32 degree_bound);

}  // namespace unitl

#endif
