#ifndef UNITL_RING_HPP
#define UNITL_RING_HPP

// Exact arithmetic in the coefficient-ring tower:
//
//   base        Z/p^N
//   local       L  = (Z/p^n)[x]/(g),  gbar = irr^e over F_p  (forces locality)
//   flat        Lt = Z_p[x]/(ghat) represented mod p^N, ghat the canonical
//               coefficientwise lift of g; reduction Lt -> L is coordinatewise
//   witt        W  = (Z/p^N)[y]/(w), wbar irreducible of degree delta; carries
//               the Frobenius sigma with sigma(y) the Hensel root of w lying
//               over y^p
//   tensor      Lt[y]/(w) = Lt (x) W, coordinates blocked y-major
//
// Elements are coordinate vectors over Z/p^cexp where cexp is the working
// modulus exponent of the ring (n for local algebras, N elsewhere; a tensor
// requires its factors to agree). All operations are exact; nothing rounds.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "unitl/errors.hpp"
#include "unitl/fq.hpp"

namespace unitl {

enum class ring_kind { base, local_algebra, flat_lift, witt, tensor };

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Ring {
  ring_kind kind = ring_kind::base;
  u64 p = 0;
  u32 precision = 0;  // configured N
  u32 cexp = 0;       // coordinates live mod p^cexp
  u64 cmod = 0;       // p^cexp
  u32 rank = 1;       // free rank of the coordinate module over Z/p^cexp

  // quotient kinds: monic modulus, coefficients mod cmod, size deg+1
  std::vector<u64> modulus;

  // local_algebra / flat_lift: residue data, gbar = irr^epow over F_p
  FpPoly irr;
  u32 epow = 0;
  u32 lambda_pexp = 0;  // n, local_algebra only

  // witt: delta and sigma(y) coordinates
  u32 delta = 0;
  std::vector<u64> frob_y;

  // tensor factors: left is base/local/flat, right is witt
  RingPtr left, right;
};

struct Elt {
  RingPtr ring;
  std::vector<u64> c;
};

// The lift pair L -> Lt with its canonical projection and section.
struct FlatLift {
  RingPtr lambda;
  RingPtr lambda_tilde;
  u32 kernel_exponent = 0;  // n: kernel of the projection contains p^n
};

// ------------------------------------------------------------ construction

RingPtr make_base(u64 p, u32 N);
// g given by integer coefficients (reduced mod p^n); must be monic and a
// prime power mod p
RingPtr make_local_algebra(u64 p, u32 N, u32 n, const std::vector<i64>& g);
FlatLift make_flat_lift(const RingPtr& lambda, u32 N);
RingPtr make_witt_ring(u64 p, u32 N, u32 delta);
RingPtr tensor_ring(const RingPtr& left, const RingPtr& witt);

bool ring_eq(const Ring& a, const Ring& b);

// ----------------------------------------------------------------- algebra

Elt zero(const RingPtr& R);
Elt one(const RingPtr& R);
Elt from_int(const RingPtr& R, i64 v);
bool is_zero(const Elt& a);
bool eq(const Elt& a, const Elt& b);
Elt add(const Elt& a, const Elt& b);
Elt sub(const Elt& a, const Elt& b);
Elt neg(const Elt& a);
Elt mul(const Elt& a, const Elt& b);
Elt mul_int(const Elt& a, i64 v);
Elt pow(const Elt& a, u64 k);
std::optional<Elt> inverse(const Elt& a);
bool is_unit(const Elt& a);

// canonical coordinate projection Lt -> L and its section
Elt project(const FlatLift& fl, const Elt& a);
Elt section(const FlatLift& fl, const Elt& a);

// image of a local/flat element in the residue field F_p[x]/(irr)
FpPoly residue_image(const Elt& a);
bool is_in_maximal_ideal(const Elt& a);

// ring maps up the tower: base -> any, left -> tensor, witt -> tensor,
// identical ring -> copy
Elt embed(const Elt& a, const RingPtr& target);

// ------------------------------------------------------------ witt features

// Teichmueller lift of the residue-field element with the given encoding
// (sum c_i p^i on the y-power basis); the unique t = t^(p^delta) over it.
Elt teichmuller(const RingPtr& W, u64 residue_encoding);
// sigma^k; witt elements directly, tensor elements as id (x) sigma
Elt witt_frobenius(const Elt& a, u32 k);
// extract the left component of a tensor element whose higher y-blocks all
// vanish; failure means a sigma-invariance guarantee broke upstream
Elt coerce_to_scalar(const Elt& a);

// scalar helpers
u64 pow_u64(u64 b, u32 e);
u64 modinv_u64(u64 v, u64 m);  // v invertible mod m

}  // namespace unitl

#endif
