#ifndef UNITL_EULER_HPP
#define UNITL_EULER_HPP

// Closed-point enumeration on the d-torus and the point-side L-function
// pipeline: local factors det(1 - A T^delta) from sigma-twisted matrix
// products at Teichmueller-lifted points, and their truncated Euler product
// over a region cut out by the locus polynomial.

#include <functional>
#include <string>
#include <vector>

#include "unitl/crystal.hpp"
#include "unitl/series.hpp"

namespace unitl {

enum class point_region { gm, d_of_a, z_of_a };

struct ClosedPoint {
  u32 delta = 0;
  std::vector<u64> coords;  // field encodings, lex-least orbit member
  bool on_zero_locus = false;
};

// The locus polynomial restricted to where points can see it: residue
// coefficients must be prime-field scalars.
struct RegionPoly {
  std::vector<std::pair<std::vector<i64>, u64>> terms;
};
RegionPoly region_poly(const LaurentPoly& a);
bool region_vanishes(const Fq& k, const RegionPoly& a,
                     const std::vector<u64>& coords);

// All closed points of exact degree delta on the d-torus, one orbit each,
// classified against a. Full scan of the nonzero coordinate tuples.
std::vector<ClosedPoint> enumerate_closed_points(u64 p, u32 d, u32 delta,
                                                 const LaurentPoly& a,
                                                 u32 delta_cap = 8);

// det(1 - A T^delta) over the entry ring, A the ordered product of the
// matrix evaluated at the sigma-conjugates of the Teichmueller lift of x.
Poly local_factor(const UnitCrystalSpec& c, const ClosedPoint& x);

struct EulerOptions {
  u32 workers = 1;
  std::string cache_dir;  // empty disables the cache
  std::string cache_key;  // content hash; computed from the spec if empty
  u32 delta_cap = 8;
  u32 bound_cap = 12;
};

// Product over the region's points of degree <= B of local_factor^(-1),
// exact mod T^(B+1). Bit-identical for every worker count.
Series euler_product(const UnitCrystalSpec& c, point_region reg, u32 B,
                     const EulerOptions& opt = {});

// Same product over a caller-chosen set of points (used by the
// stratification check); no caching.
Series euler_product_filtered(
    const UnitCrystalSpec& c, u32 B, u32 workers,
    const std::function<bool(const Fq&, const std::vector<u64>&)>& include);

// (p^n - 1)^(-d) times the trace of the full rational-point sum of the
// n-fold sigma-twisted matrix products; the right-hand side of the trace
// identity that the Dwork matrix's power traces must match.
Elt trace_formula_rhs(const UnitCrystalSpec& c, u32 n);

// Deterministic helper: body(i) runs once per index, any schedule.
void parallel_for(u32 workers, size_t n,
                  const std::function<void(size_t)>& body);

}  // namespace unitl

#endif
