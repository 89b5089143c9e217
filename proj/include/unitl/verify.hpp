#ifndef UNITL_VERIFY_HPP
#define UNITL_VERIFY_HPP

// The identities the engine is built to check, each returning a structured
// report: the product identity relating the full Euler product to the
// alternating product of scaled characteristic polynomials, the ratio of the
// open-locus L-function by the unit-root structure factor together with its
// polynomiality certificate, the power-trace identity, the two-region
// stratification, and the torus zeta count.

#include <string>

#include "unitl/dwork.hpp"
#include "unitl/euler.hpp"

namespace unitl {

enum class check_status { pass, fail, certified_to_bound };
const char* check_status_name(check_status s);

struct VerificationReport {
  std::string check;
  check_status status = check_status::pass;
  errc code = errc::internal;  // meaningful only when status == fail
  bool has_witness = false;
  u32 witness_index = 0;  // T-degree (or power index) where it went wrong
  std::string witness_lhs, witness_rhs;
  std::string detail;

  bool ok() const { return status != check_status::fail; }
};

// human-readable coordinates of a tower element, for witnesses
std::string elt_to_string(const Elt& a);

// coefficientwise projection (to the local algebra) or section (to its flat
// lift); target must be one side of the given lift
Series change_ring(const Series& f, const RingPtr& target, const FlatLift& fl);
Poly change_ring(const Poly& f, const RingPtr& target, const FlatLift& fl);

// first-mismatch comparison; on_fail names the failure family
VerificationReport series_match_report(const std::string& check,
                                       const Series& lhs, const Series& rhs,
                                       errc on_fail);

// constant term 1 and every higher coefficient in the maximal ideal
VerificationReport maximal_ideal_report(const std::string& check,
                                        const Series& q);

// full Euler product against the alternating product of P(p^i T)
VerificationReport check_prop_4_16(const UnitCrystalSpec& lifted,
                                   const Poly& P, u32 B,
                                   const EulerOptions& opt = {});

// open-locus Euler product divided by the structure factor, over the lift
Series katz_ratio(const UnitCrystalSpec& lifted, const Poly& p_unit, u32 B,
                  const EulerOptions& opt = {});

// the ratio is a polynomial over the local algebra, constant term 1, higher
// coefficients in the maximal ideal; dim 1 gets an exact certificate, higher
// dimension is certified to the requested bound
VerificationReport check_theorem_1_5(const CrystalPair& pr,
                                     const DworkMatrix& dm, u32 B,
                                     const EulerOptions& opt = {});

// trace of the n-th operator power against the point-sum side, n = 1..n_max
VerificationReport check_trace_identity(const UnitCrystalSpec& lifted,
                                        const DworkMatrix& dm, u32 n_max);

// product over D(a) equals product over D(ab) times product over Z(b)|D(a)
VerificationReport check_stratification(const UnitCrystalSpec& lifted,
                                        const LaurentPoly& b, u32 B,
                                        u32 workers = 1);

// torus point-count zeta against the closed product formula, both exact
VerificationReport zeta_sanity(u64 p, u32 d, u32 B);

}  // namespace unitl

#endif
