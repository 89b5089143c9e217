#include "unitl/ring.hpp"

#include <algorithm>
#include <string>

namespace unitl {

u64 pow_u64(u64 b, u32 e) {
  u64 r = 1;
  while (e--) r *= b;
  return r;
}

u64 modinv_u64(u64 v, u64 m) {
  i64 t = 0, nt = 1, r = static_cast<i64>(m), nr = static_cast<i64>(v % m);
  while (nr != 0) {
    i64 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  require(r == 1, errc::internal, "not invertible in Z/m");
  return static_cast<u64>((t % static_cast<i64>(m) + static_cast<i64>(m)) %
                          static_cast<i64>(m));
}

static inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

static inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

static inline u64 submod(u64 a, u64 b, u64 m) { return addmod(a, m - b, m); }

// --------------------------------------------------------- raw arithmetic

// in-place reduction of a raw coefficient vector (size 2*r-1) by the monic
// modulus (size r+1)
static void quot_reduce(std::vector<u64>& t, const std::vector<u64>& mod,
                        u64 m) {
  int r = static_cast<int>(mod.size()) - 1;
  for (int i = static_cast<int>(t.size()) - 1; i >= r; --i) {
    u64 c = t[i];
    if (c == 0) continue;
    t[i] = 0;
    for (int j = 0; j < r; ++j)
      t[i - r + j] = submod(t[i - r + j], mulmod(c, mod[j], m), m);
  }
  t.resize(r);
}

static std::vector<u64> conv(const u64* a, size_t na, const u64* b, size_t nb,
                             u64 m) {
  std::vector<u64> t(na + nb - 1, 0);
  for (size_t i = 0; i < na; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < nb; ++j)
      t[i + j] = addmod(t[i + j], mulmod(a[i], b[j], m), m);
  }
  return t;
}

static std::vector<u64> ring_mul_raw(const Ring& R, const u64* a,
                                     const u64* b) {
  const u64 m = R.cmod;
  switch (R.kind) {
    case ring_kind::base:
      return {mulmod(a[0], b[0], m)};
    case ring_kind::local_algebra:
    case ring_kind::flat_lift:
    case ring_kind::witt: {
      auto t = conv(a, R.rank, b, R.rank, m);
      quot_reduce(t, R.modulus, m);
      return t;
    }
    case ring_kind::tensor: {
      const u32 ld = R.left->rank;
      const u32 dl = R.right->delta;
      // bivariate convolution, blocks y-major
      std::vector<std::vector<u64>> wide(2 * dl - 1);
      for (u32 i = 0; i < dl; ++i) {
        for (u32 j = 0; j < dl; ++j) {
          auto t = conv(a + i * ld, ld, b + j * ld, ld, m);
          auto& acc = wide[i + j];
          if (acc.empty())
            acc = std::move(t);
          else
            for (size_t k = 0; k < t.size(); ++k)
              acc[k] = addmod(acc[k], t[k], m);
        }
      }
      for (auto& blk : wide)
        if (R.left->kind != ring_kind::base) quot_reduce(blk, R.left->modulus, m);
      // reduce y-degree by the scalar-coefficient witt modulus
      const auto& w = R.right->modulus;
      for (int k = static_cast<int>(wide.size()) - 1;
           k >= static_cast<int>(dl); --k) {
        for (u32 j = 0; j < dl; ++j) {
          u64 wc = w[j];
          if (wc == 0) continue;
          auto& dst = wide[k - dl + j];
          for (u32 t2 = 0; t2 < ld; ++t2)
            dst[t2] = submod(dst[t2], mulmod(wc, wide[k][t2], m), m);
        }
      }
      std::vector<u64> out(R.rank, 0);
      for (u32 k = 0; k < dl; ++k)
        for (u32 t2 = 0; t2 < ld; ++t2) out[k * ld + t2] = wide[k][t2];
      return out;
    }
  }
  fail(errc::internal, "bad ring kind");
}

// ------------------------------------------------------------ construction

bool ring_eq(const Ring& a, const Ring& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind || a.p != b.p || a.cexp != b.cexp || a.rank != b.rank)
    return false;
  if (a.modulus != b.modulus) return false;
  if (a.kind == ring_kind::tensor)
    return ring_eq(*a.left, *b.left) && ring_eq(*a.right, *b.right);
  return true;
}

RingPtr make_base(u64 p, u32 N) {
  require(N >= 1, errc::precision_mismatch, "precision must be >= 1");
  auto R = std::make_shared<Ring>();
  R->kind = ring_kind::base;
  R->p = p;
  R->precision = N;
  R->cexp = N;
  R->cmod = pow_u64(p, N);
  R->rank = 1;
  return R;
}

RingPtr make_local_algebra(u64 p, u32 N, u32 n, const std::vector<i64>& g) {
  require(n >= 1, errc::precision_mismatch, "lambda_pexp must be >= 1");
  require(N >= n, errc::precision_mismatch,
          "precision must be >= lambda_pexp");
  u64 pn = pow_u64(p, n);
  std::vector<u64> gc(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    i64 v = g[i] % static_cast<i64>(pn);
    if (v < 0) v += static_cast<i64>(pn);
    gc[i] = static_cast<u64>(v);
  }
  while (!gc.empty() && gc.back() == 0) gc.pop_back();
  require(gc.size() >= 2, errc::not_monic, "modulus must be nonconstant");
  require(gc.back() == 1, errc::not_monic, "modulus must be monic");

  std::vector<u64> gbar(gc.size());
  for (size_t i = 0; i < gc.size(); ++i) gbar[i] = gc[i] % p;
  auto split = fp_prime_power_split(fp_make(p, gbar));

  auto R = std::make_shared<Ring>();
  R->kind = ring_kind::local_algebra;
  R->p = p;
  R->precision = N;
  R->cexp = n;
  R->cmod = pn;
  R->rank = static_cast<u32>(gc.size() - 1);
  R->modulus = std::move(gc);
  R->irr = split.irr;
  R->epow = split.e;
  R->lambda_pexp = n;
  return R;
}

FlatLift make_flat_lift(const RingPtr& lambda, u32 N) {
  require(lambda && lambda->kind == ring_kind::local_algebra, errc::wrong_kind,
          "flat lift needs a local algebra");
  require(N >= lambda->lambda_pexp, errc::precision_mismatch,
          "lift precision below lambda_pexp");
  auto R = std::make_shared<Ring>();
  R->kind = ring_kind::flat_lift;
  R->p = lambda->p;
  R->precision = N;
  R->cexp = N;
  R->cmod = pow_u64(lambda->p, N);
  R->rank = lambda->rank;
  R->modulus = lambda->modulus;  // canonical representatives, reread mod p^N
  R->irr = lambda->irr;
  R->epow = lambda->epow;
  R->lambda_pexp = lambda->lambda_pexp;
  FlatLift fl;
  fl.lambda = lambda;
  fl.lambda_tilde = R;
  fl.kernel_exponent = lambda->lambda_pexp;
  return fl;
}

// Horner evaluation of a scalar-coefficient polynomial at a ring element
static Elt eval_scalar_poly(const std::vector<u64>& coeffs, const Elt& s) {
  Elt acc = zero(s.ring);
  for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
    acc = mul(acc, s);
    acc.c[0] = addmod(acc.c[0], coeffs[j] % s.ring->cmod, s.ring->cmod);
  }
  return acc;
}

RingPtr make_witt_ring(u64 p, u32 N, u32 delta) {
  require(delta >= 1, errc::precision_mismatch, "delta must be >= 1");
  require(N >= 1, errc::precision_mismatch, "precision must be >= 1");
  FpPoly wbar = fp_first_irreducible(p, delta);
  auto R = std::make_shared<Ring>();
  R->kind = ring_kind::witt;
  R->p = p;
  R->precision = N;
  R->cexp = N;
  R->cmod = pow_u64(p, N);
  R->rank = delta;
  R->delta = delta;
  R->modulus.assign(delta + 1, 0);
  for (int i = 0; i <= wbar.deg(); ++i) R->modulus[i] = wbar.c[i];

  if (delta == 1) {
    // W_1 = Z/p^N, sigma the identity; y is 0 in the quotient by (y - 0)
    R->frob_y = {submod(0, R->modulus[0], R->cmod)};
    return R;
  }

  // sigma(y): the root of w over y^p, by Newton iteration. wbar is
  // irreducible over a perfect field, hence separable, so w'(y^p) is a unit
  // and every step divides by a unit.
  Elt s;
  s.ring = R;
  s.c.assign(delta, 0);
  // y^p mod w
  {
    std::vector<u64> t(p + 1, 0);
    t[p] = 1;
    if (t.size() > delta) {
      quot_reduce(t, R->modulus, R->cmod);
      s.c = std::move(t);
    } else {
      t.resize(delta, 0);
      s.c = std::move(t);
    }
  }
  std::vector<u64> dw(delta);  // w'
  for (u32 i = 1; i <= delta; ++i)
    dw[i - 1] = mulmod(i % R->cmod, R->modulus[i], R->cmod);
  for (u32 iter = 0; iter < 2 * N + 6; ++iter) {
    Elt ws = eval_scalar_poly(R->modulus, s);
    if (is_zero(ws)) break;
    Elt dws = eval_scalar_poly(dw, s);
    auto inv = inverse(dws);
    require(inv.has_value(), errc::internal, "w' not a unit at Newton step");
    s = sub(s, mul(ws, *inv));
  }
  require(is_zero(eval_scalar_poly(R->modulus, s)), errc::internal,
          "Newton iteration for sigma(y) did not converge");
  R->frob_y = s.c;
  return R;
}

RingPtr tensor_ring(const RingPtr& left, const RingPtr& witt) {
  require(left && witt, errc::internal, "null ring");
  require(witt->kind == ring_kind::witt, errc::wrong_kind,
          "right tensor factor must be a witt ring");
  require(left->kind == ring_kind::base ||
              left->kind == ring_kind::local_algebra ||
              left->kind == ring_kind::flat_lift,
          errc::wrong_kind, "left tensor factor must be base/local/flat");
  require(left->p == witt->p, errc::precision_mismatch,
          "tensor factors have different p");
  require(left->cexp == witt->cexp, errc::precision_mismatch,
          "tensor factors have different working precision");
  auto R = std::make_shared<Ring>();
  R->kind = ring_kind::tensor;
  R->p = left->p;
  R->precision = std::min(left->precision, witt->precision);
  R->cexp = left->cexp;
  R->cmod = left->cmod;
  R->rank = left->rank * witt->rank;
  R->delta = witt->delta;
  R->left = left;
  R->right = witt;
  return R;
}

// ----------------------------------------------------------------- algebra

Elt zero(const RingPtr& R) { return Elt{R, std::vector<u64>(R->rank, 0)}; }

Elt one(const RingPtr& R) {
  Elt e = zero(R);
  e.c[0] = 1 % R->cmod;
  return e;
}

Elt from_int(const RingPtr& R, i64 v) {
  Elt e = zero(R);
  i64 m = static_cast<i64>(R->cmod);
  i64 r = v % m;
  if (r < 0) r += m;
  e.c[0] = static_cast<u64>(r);
  return e;
}

bool is_zero(const Elt& a) {
  for (u64 v : a.c)
    if (v) return false;
  return true;
}

bool eq(const Elt& a, const Elt& b) {
  return ring_eq(*a.ring, *b.ring) && a.c == b.c;
}

static void check_same(const Elt& a, const Elt& b) {
  require(a.ring.get() == b.ring.get() || ring_eq(*a.ring, *b.ring),
          errc::precision_mismatch, "elements of different rings");
}

Elt add(const Elt& a, const Elt& b) {
  check_same(a, b);
  Elt r{a.ring, a.c};
  for (size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = addmod(r.c[i], b.c[i], a.ring->cmod);
  return r;
}

Elt sub(const Elt& a, const Elt& b) {
  check_same(a, b);
  Elt r{a.ring, a.c};
  for (size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = submod(r.c[i], b.c[i], a.ring->cmod);
  return r;
}

Elt neg(const Elt& a) {
  Elt r{a.ring, a.c};
  for (auto& v : r.c) v = v ? a.ring->cmod - v : 0;
  return r;
}

Elt mul(const Elt& a, const Elt& b) {
  check_same(a, b);
  return Elt{a.ring, ring_mul_raw(*a.ring, a.c.data(), b.c.data())};
}

Elt mul_int(const Elt& a, i64 v) {
  u64 m = a.ring->cmod;
  i64 r = v % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  Elt out{a.ring, a.c};
  for (auto& x : out.c) x = mulmod(x, static_cast<u64>(r), m);
  return out;
}

Elt pow(const Elt& a, u64 k) {
  Elt r = one(a.ring);
  Elt base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::optional<Elt> inverse(const Elt& a) {
  const Ring& R = *a.ring;
  const u64 m = R.cmod;
  const u32 r = R.rank;
  // multiplication-by-a matrix on the coordinate basis
  std::vector<std::vector<u64>> M(r, std::vector<u64>(r + 1, 0));
  std::vector<u64> basis(r, 0);
  for (u32 j = 0; j < r; ++j) {
    std::fill(basis.begin(), basis.end(), 0);
    basis[j] = 1;
    auto col = ring_mul_raw(R, a.c.data(), basis.data());
    for (u32 i = 0; i < r; ++i) M[i][j] = col[i];
  }
  M[0][r] = 1 % m;  // rhs = coords of 1
  // Gaussian elimination over Z/p^cexp; a pivot works iff it is a unit,
  // and the matrix is invertible iff its mod-p reduction is
  for (u32 col = 0; col < r; ++col) {
    u32 piv = r;
    for (u32 row = col; row < r; ++row)
      if (M[row][col] % R.p != 0) {
        piv = row;
        break;
      }
    if (piv == r) return std::nullopt;
    std::swap(M[col], M[piv]);
    u64 inv = modinv_u64(M[col][col], m);
    for (u32 j = col; j <= r; ++j) M[col][j] = mulmod(M[col][j], inv, m);
    for (u32 row = 0; row < r; ++row) {
      if (row == col || M[row][col] == 0) continue;
      u64 f = M[row][col];
      for (u32 j = col; j <= r; ++j)
        M[row][j] = submod(M[row][j], mulmod(f, M[col][j], m), m);
    }
  }
  Elt out = zero(a.ring);
  for (u32 i = 0; i < r; ++i) out.c[i] = M[i][r];
  return out;
}

bool is_unit(const Elt& a) { return inverse(a).has_value(); }

Elt project(const FlatLift& fl, const Elt& a) {
  require(ring_eq(*a.ring, *fl.lambda_tilde), errc::wrong_kind,
          "projection expects a flat-lift element");
  Elt out = zero(fl.lambda);
  for (u32 i = 0; i < out.c.size(); ++i) out.c[i] = a.c[i] % fl.lambda->cmod;
  return out;
}

Elt section(const FlatLift& fl, const Elt& a) {
  require(ring_eq(*a.ring, *fl.lambda), errc::wrong_kind,
          "section expects a lambda element");
  Elt out = zero(fl.lambda_tilde);
  for (u32 i = 0; i < out.c.size(); ++i) out.c[i] = a.c[i];
  return out;
}

FpPoly residue_image(const Elt& a) {
  const Ring& R = *a.ring;
  if (R.kind == ring_kind::base) return fp_make(R.p, {a.c[0] % R.p});
  require(R.kind == ring_kind::local_algebra || R.kind == ring_kind::flat_lift,
          errc::wrong_kind, "residue image needs base/local/flat kind");
  std::vector<u64> c(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i] % R.p;
  return fp_mod(fp_make(R.p, std::move(c)), R.irr);
}

bool is_in_maximal_ideal(const Elt& a) { return residue_image(a).is_zero(); }

Elt embed(const Elt& a, const RingPtr& target) {
  if (ring_eq(*a.ring, *target)) return Elt{target, a.c};
  if (a.ring->kind == ring_kind::base) {
    require(a.ring->p == target->p, errc::precision_mismatch,
            "embedding across different p");
    Elt out = zero(target);
    out.c[0] = a.c[0] % target->cmod;
    return out;
  }
  if (target->kind == ring_kind::tensor) {
    if (ring_eq(*a.ring, *target->left)) {
      Elt out = zero(target);
      for (u32 i = 0; i < target->left->rank; ++i) out.c[i] = a.c[i];
      return out;
    }
    if (ring_eq(*a.ring, *target->right)) {
      Elt out = zero(target);
      const u32 ld = target->left->rank;
      for (u32 j = 0; j < target->right->rank; ++j) out.c[j * ld] = a.c[j];
      return out;
    }
  }
  fail(errc::wrong_kind, "no embedding between these rings");
}

// ------------------------------------------------------------ witt features

Elt teichmuller(const RingPtr& W, u64 residue_encoding) {
  require(W->kind == ring_kind::witt, errc::wrong_kind,
          "teichmuller lives in a witt ring");
  require(residue_encoding != 0, errc::zero_residue,
          "points of the torus have nonzero coordinates");
  Elt t = zero(W);
  u64 v = residue_encoding;
  for (u32 i = 0; i < W->delta; ++i) {
    t.c[i] = v % W->p;
    v /= W->p;
  }
  require(v == 0, errc::zero_residue, "residue encoding out of range");
  u64 q = pow_u64(W->p, W->delta);
  // t <- t^q contracts to the unique fixed point over the residue
  for (u32 i = 0; i < W->precision; ++i) t = pow(t, q);
  return t;
}

Elt witt_frobenius(const Elt& a, u32 k) {
  const Ring& R = *a.ring;
  if (R.kind == ring_kind::witt) {
    u32 dl = R.delta;
    k %= dl;
    Elt cur = a;
    for (u32 rep = 0; rep < k; ++rep) {
      // sigma(sum a_j y^j) = sum a_j sigma(y)^j, Horner
      Elt s{a.ring, R.frob_y};
      Elt acc = zero(a.ring);
      for (int j = static_cast<int>(dl) - 1; j >= 0; --j) {
        acc = mul(acc, s);
        acc.c[0] = addmod(acc.c[0], cur.c[j], R.cmod);
      }
      cur = std::move(acc);
    }
    return cur;
  }
  if (R.kind == ring_kind::tensor) {
    u32 dl = R.right->delta;
    k %= dl;
    const u32 ld = R.left->rank;
    Elt s = embed(Elt{R.right, R.right->frob_y}, a.ring);
    Elt cur = a;
    for (u32 rep = 0; rep < k; ++rep) {
      Elt acc = zero(a.ring);
      for (int j = static_cast<int>(dl) - 1; j >= 0; --j) {
        acc = mul(acc, s);
        for (u32 i = 0; i < ld; ++i)
          acc.c[i] = addmod(acc.c[i], cur.c[j * ld + i], R.cmod);
      }
      cur = std::move(acc);
    }
    return cur;
  }
  fail(errc::wrong_kind, "frobenius needs a witt or tensor element");
}

Elt coerce_to_scalar(const Elt& a) {
  const Ring& R = *a.ring;
  require(R.kind == ring_kind::tensor, errc::wrong_kind,
          "scalar coercion expects a tensor element");
  const u32 ld = R.left->rank;
  for (u32 j = 1; j < R.right->rank; ++j)
    for (u32 i = 0; i < ld; ++i)
      require(a.c[j * ld + i] == 0, errc::not_scalar,
              "sigma-invariance violated: nonzero higher witt component");
  Elt out = zero(R.left);
  for (u32 i = 0; i < ld; ++i) out.c[i] = a.c[i];
  return out;
}

}  // namespace unitl
