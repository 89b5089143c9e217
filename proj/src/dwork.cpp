#include "unitl/dwork.hpp"

#include <algorithm>

#include "unitl/fq.hpp"

namespace unitl {

// ------------------------------------------------------------------ basis

static void omega_rec(u32 d, u32 u, u32 pos, i64 sum, std::vector<i64>& cur,
                      std::vector<std::vector<i64>>& out) {
  if (pos == d) {
    out.push_back(cur);
    return;
  }
  const i64 rest = d - pos - 1;  // later slots still need one each
  for (i64 b = 1; sum + b + rest < static_cast<i64>(u); ++b) {
    cur[pos] = b;
    omega_rec(d, u, pos + 1, sum + b, cur, out);
  }
}

std::vector<std::vector<i64>> omega_basis(u32 d, u32 u) {
  std::vector<std::vector<i64>> out;
  std::vector<i64> cur(d, 0);
  omega_rec(d, u, 0, 0, cur, out);
  return out;
}

// ---------------------------------------------------------------- Cartier

LaurentPoly cartier(const LaurentPoly& g, u32 n) {
  i64 pn = 1;
  for (u32 i = 0; i < n; ++i) pn *= static_cast<i64>(g.ring->p);
  LaurentPoly out = lp_zero(g.ring, g.dim);
  for (const auto& [e, c] : g.terms) {
    bool keep = true;
    for (i64 ei : e)
      if (ei % pn != 0) {
        keep = false;
        break;
      }
    if (!keep) continue;
    std::vector<i64> e2(e);
    for (i64& ei : e2) ei /= pn;
    out.terms.emplace(std::move(e2), c);
  }
  return out;
}

// ------------------------------------------------------------ the matrix

DworkMatrix dwork_matrix(const UnitCrystalSpec& c) {
  require(c.denominators_cleared && c.monomial_twisted && c.u_set,
          errc::normal_form_missing,
          "entries must be in normal form with a chosen twist before the "
          "operator matrix exists");
  DworkMatrix dm;
  dm.ring = c.ring;
  dm.rank = c.rank;
  dm.betas = omega_basis(c.dim, c.u);
  const u32 nb = static_cast<u32>(dm.betas.size());
  dm.size = nb * c.rank;
  dm.psi.assign(static_cast<size_t>(dm.size) * dm.size, zero(c.ring));
  const i64 p = static_cast<i64>(c.ring->p);
  for (u32 i = 0; i < c.rank; ++i)
    for (u32 j = 0; j < c.rank; ++j) {
      const LaurentPoly& r = c.at(i, j);
      for (u32 bi = 0; bi < nb; ++bi)
        for (u32 bj = 0; bj < nb; ++bj) {
          std::vector<i64> e(c.dim);
          for (u32 t = 0; t < c.dim; ++t)
            e[t] = p * dm.betas[bi][t] - dm.betas[bj][t];
          dm.psi[(i * nb + bi) * static_cast<size_t>(dm.size) + j * nb + bj] =
              coeff_extract(r, e);
        }
    }
  dm.P = char_poly_reciprocal(dm.psi, dm.size, c.ring);
  return dm;
}

// --------------------------------------------------- division-free charpoly

Poly char_poly_reciprocal(const std::vector<Elt>& M, u32 n,
                          const RingPtr& R) {
  require(M.size() == static_cast<size_t>(n) * n, errc::internal,
          "matrix shape");
  std::vector<Elt> v = {one(R)};
  for (u32 k = 1; k <= n; ++k) {
    // first column of the Toeplitz step: 1, -corner, -R M^s C
    std::vector<Elt> t;
    t.reserve(k + 1);
    t.push_back(one(R));
    t.push_back(neg(M[(k - 1) * static_cast<size_t>(n) + (k - 1)]));
    if (k >= 2) {
      std::vector<Elt> w(k - 1, zero(R));
      for (u32 i = 0; i < k - 1; ++i) w[i] = M[i * static_cast<size_t>(n) + (k - 1)];
      for (u32 s = 0; s + 2 <= k; ++s) {
        Elt dot = zero(R);
        for (u32 i = 0; i < k - 1; ++i)
          dot = add(dot, mul(M[(k - 1) * static_cast<size_t>(n) + i], w[i]));
        t.push_back(neg(dot));
        if (s + 3 <= k) {
          std::vector<Elt> w2(k - 1, zero(R));
          for (u32 i = 0; i < k - 1; ++i) {
            Elt acc = zero(R);
            for (u32 j = 0; j < k - 1; ++j)
              acc = add(acc, mul(M[i * static_cast<size_t>(n) + j], w[j]));
            w2[i] = acc;
          }
          w = std::move(w2);
        }
      }
    }
    std::vector<Elt> v2(k + 1, zero(R));
    for (u32 r = 0; r <= k; ++r)
      for (u32 col = 0; col < k && col <= r; ++col)
        v2[r] = add(v2[r], mul(t[r - col], v[col]));
    v = std::move(v2);
  }
  Poly out;
  out.ring = R;
  out.c = std::move(v);
  return poly_trim(std::move(out));
}

// ------------------------------------------------------------ power trace

static std::vector<Elt> mat_mul(const RingPtr& R, u32 n,
                                const std::vector<Elt>& A,
                                const std::vector<Elt>& B) {
  std::vector<Elt> C(static_cast<size_t>(n) * n, zero(R));
  for (u32 i = 0; i < n; ++i)
    for (u32 l = 0; l < n; ++l) {
      if (is_zero(A[i * static_cast<size_t>(n) + l])) continue;
      for (u32 j = 0; j < n; ++j)
        C[i * static_cast<size_t>(n) + j] =
            add(C[i * static_cast<size_t>(n) + j],
                mul(A[i * static_cast<size_t>(n) + l],
                    B[l * static_cast<size_t>(n) + j]));
    }
  return C;
}

Elt trace_power(const DworkMatrix& dm, u32 n) {
  require(n >= 1, errc::degree_bound_exceeded, "power must be positive");
  Elt tr = zero(dm.ring);
  if (dm.size == 0) return tr;
  std::vector<Elt> A = dm.psi;
  for (u32 i = 1; i < n; ++i) A = mat_mul(dm.ring, dm.size, A, dm.psi);
  for (u32 i = 0; i < dm.size; ++i)
    tr = add(tr, A[i * static_cast<size_t>(dm.size) + i]);
  return tr;
}

// -------------------------------------------------------------- the split

static FqPoly residue_poly(const Fq& k, const Poly& f) {
  FqPoly out;
  out.c.reserve(f.c.size());
  for (const auto& e : f.c) out.c.push_back(k.encode(residue_image(e)));
  return fq_trim(std::move(out));
}

static Poly lift_from_residue(const RingPtr& R, const Fq& k,
                              const FqPoly& f) {
  Poly out;
  out.ring = R;
  out.c.reserve(f.c.size());
  for (u64 enc : f.c) {
    FpPoly a = k.decode(enc);
    Elt e = zero(R);
    for (size_t i = 0; i < a.c.size() && i < e.c.size(); ++i) e.c[i] = a.c[i];
    out.c.push_back(std::move(e));
  }
  return poly_trim(std::move(out));
}

std::pair<Poly, Poly> unit_nil_split(const DworkMatrix& dm) {
  const RingPtr R = dm.ring;
  const u32 n = dm.size;
  if (n == 0) return {poly_one(R), poly_one(R)};

  // chi(S) = S^n det(1 - psi/S) shares its coefficient vector with P
  Poly chi;
  chi.ring = R;
  chi.c.assign(n + 1, zero(R));
  for (u32 j = 0; j <= n; ++j)
    if (n - j <= static_cast<u32>(dm.P.deg())) chi.c[j] = dm.P.c[n - j];

  Fq k(R->irr);
  FqPoly chibar = residue_poly(k, chi);
  u32 nu = 0;
  while (nu < chibar.c.size() && chibar.c[nu] == 0) ++nu;

  Poly p_unit, p_nil;
  if (nu == 0) {
    p_unit = dm.P;
    p_nil = poly_one(R);
  } else if (nu >= n) {
    p_unit = poly_one(R);
    p_nil = dm.P;
  } else {
    // residue factorization S^nu * h0 with h0(0) a unit, then a quadratic
    // lift; the maximal ideal is nilpotent so the loop reaches e == 0
    FqPoly g0;
    g0.c.assign(nu + 1, 0);
    g0.c[nu] = 1;
    FqPoly h0;
    h0.c.assign(chibar.c.begin() + nu, chibar.c.end());
    FqPoly gg, sb, tb;
    fq_xgcd(k, g0, h0, gg, sb, tb);
    require(gg.deg() == 0, errc::internal, "residue factors not coprime");

    Poly g = lift_from_residue(R, k, g0);
    Poly h = lift_from_residue(R, k, h0);
    Poly s = lift_from_residue(R, k, sb);
    Poly t = lift_from_residue(R, k, tb);
    bool done = false;
    for (u32 it = 0; it < 64 && !done; ++it) {
      Poly e = poly_sub(chi, poly_mul(g, h));
      if (poly_eq(e, poly_zero(R))) {
        done = true;
        break;
      }
      Poly q, r;
      poly_divmod_monic(poly_mul(s, e), h, q, r);
      Poly g1 = poly_add(poly_add(g, poly_mul(t, e)), poly_mul(q, g));
      Poly h1 = poly_add(h, r);
      Poly b = poly_sub(poly_add(poly_mul(s, g1), poly_mul(t, h1)),
                        poly_one(R));
      Poly cq, dd;
      poly_divmod_monic(poly_mul(s, b), h1, cq, dd);
      Poly s1 = poly_sub(s, dd);
      Poly t1 = poly_sub(poly_sub(t, poly_mul(t, b)), poly_mul(cq, g1));
      g = std::move(g1);
      h = std::move(h1);
      s = std::move(s1);
      t = std::move(t1);
    }
    require(done || poly_eq(poly_sub(chi, poly_mul(g, h)), poly_zero(R)),
            errc::internal, "factor lift did not converge");
    Poly quo, rem;
    poly_divmod_monic(chi, h, quo, rem);
    require(poly_eq(rem, poly_zero(R)), errc::internal,
            "lifted factor does not divide");
    p_unit = poly_reverse(h, n - nu);
    p_nil = poly_reverse(quo, nu);
  }
  require(poly_eq(poly_mul(p_unit, p_nil), dm.P), errc::internal,
          "split does not multiply back");
  return {p_unit, p_nil};
}

// ---------------------------------------------------------- the structure

Series structure_map_L(const Poly& p_unit, u32 d, u32 B) {
  const i64 sign = (d % 2 == 0) ? -1 : 1;
  return series_pow_signed(poly_to_series(p_unit, B), sign);
}

}  // namespace unitl
