#include "unitl/euler.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "unitl/cache.hpp"
#include "unitl/dwork.hpp"

namespace unitl {

void parallel_for(u32 workers, size_t n,
                  const std::function<void(size_t)>& body) {
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  size_t k = std::min<size_t>(workers, n);
  std::atomic<size_t> next{0};
  std::exception_ptr first_error = nullptr;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  pool.reserve(k);
  for (size_t t = 0; t < k; ++t)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

// ----------------------------------------------------------------- regions

RegionPoly region_poly(const LaurentPoly& a) {
  RegionPoly r;
  for (const auto& [e, c] : a.terms) {
    FpPoly res = residue_image(c);
    require(res.deg() <= 0, errc::not_scalar,
            "locus polynomial needs prime-field scalar coefficients");
    if (!res.is_zero()) r.terms.emplace_back(e, res.c[0]);
  }
  return r;
}

bool region_vanishes(const Fq& k, const RegionPoly& a,
                     const std::vector<u64>& coords) {
  u64 acc = 0;
  for (const auto& [e, c] : a.terms) {
    u64 t = c;  // constants encode as themselves
    for (size_t i = 0; i < coords.size(); ++i)
      if (e[i]) t = k.mul(t, k.pow(coords[i], e[i]));
    acc = k.add(acc, t);
  }
  return acc == 0;
}

// ------------------------------------------------------------- enumeration

static std::vector<ClosedPoint> enumerate_in_field(const Fq& k, u32 d,
                                                   const RegionPoly& ra) {
  const u32 delta = k.deg();
  const u64 q = k.q();
  std::vector<ClosedPoint> out;
  std::vector<u64> coords(d, 1), tmp(d);
  while (true) {
    bool keep = true;
    tmp = coords;
    for (u32 j = 1; j < delta && keep; ++j) {
      for (u32 i = 0; i < d; ++i) tmp[i] = k.frob(tmp[i]);
      // a proper period means lower degree; a smaller orbit member means
      // this tuple is not the canonical representative
      if (tmp == coords || tmp < coords) keep = false;
    }
    if (keep) {
      ClosedPoint pt;
      pt.delta = delta;
      pt.coords = coords;
      pt.on_zero_locus = region_vanishes(k, ra, coords);
      out.push_back(std::move(pt));
    }
    u32 i = 0;
    for (; i < d; ++i) {
      if (++coords[i] < q) break;
      coords[i] = 1;
    }
    if (i == d) break;
  }
  return out;
}

std::vector<ClosedPoint> enumerate_closed_points(u64 p, u32 d, u32 delta,
                                                 const LaurentPoly& a,
                                                 u32 delta_cap) {
  require(delta >= 1 && delta <= delta_cap, errc::degree_bound_exceeded,
          "point degree " + std::to_string(delta) + " above the cap " +
              std::to_string(delta_cap));
  Fq k(fp_first_irreducible(p, delta));
  return enumerate_in_field(k, d, region_poly(a));
}

// ------------------------------------------------- per-degree evaluation

namespace {

struct EntryTerms {
  std::vector<std::pair<Elt, std::vector<i64>>> terms;
};

// Everything degree-delta evaluation needs: the field with its tables, the
// Witt ring at matching working precision, the tensor ring, the Teichmueller
// table walked along generator powers, and the crystal entries flattened.
struct DeltaCtx {
  u32 dim, rank, delta;
  RingPtr left, W, TT;
  Fq k;
  std::vector<Elt> teich;
  std::vector<EntryTerms> entries;
  std::vector<i64> maxpos, maxneg;

  DeltaCtx(const UnitCrystalSpec& c, u32 dl)
      : dim(c.dim),
        rank(c.rank),
        delta(dl),
        left(c.ring),
        k(fp_first_irreducible(c.ring->p, dl)) {
    W = make_witt_ring(left->p, left->cexp, dl);
    TT = tensor_ring(left, W);
    const u64 q = k.q();
    u64 gen = 1;
    for (u64 e = 1; e < q; ++e)
      if (k.order(e) == q - 1) {
        gen = e;
        break;
      }
    teich.assign(q, zero(W));
    Elt tg = teichmuller(W, gen);
    Elt cur = one(W);
    u64 enc = 1;
    for (u64 j = 0; j + 1 < q; ++j) {
      teich[enc] = cur;
      cur = mul(cur, tg);
      enc = k.mul(enc, gen);
    }
    maxpos.assign(dim, 0);
    maxneg.assign(dim, 0);
    entries.reserve(c.matrix.size());
    for (const auto& f : c.matrix) {
      EntryTerms ent;
      for (const auto& [e, coeff] : f.terms) {
        ent.terms.emplace_back(coeff, e);
        for (u32 i = 0; i < dim; ++i) {
          maxpos[i] = std::max(maxpos[i], e[i]);
          maxneg[i] = std::max(maxneg[i], -e[i]);
        }
      }
      entries.push_back(std::move(ent));
    }
  }
};

// powers of the Teichmueller coordinates of sigma^j(x), per variable
struct PowScratch {
  std::vector<std::vector<Elt>> pos, neg;
};

void fill_powers(const DeltaCtx& ctx, const std::vector<u64>& coords, u32 j,
                 PowScratch& s) {
  s.pos.assign(ctx.dim, {});
  s.neg.assign(ctx.dim, {});
  for (u32 i = 0; i < ctx.dim; ++i) {
    u64 enc = ctx.k.frob_iter(coords[i], j);
    s.pos[i].push_back(one(ctx.W));
    for (i64 e = 1; e <= ctx.maxpos[i]; ++e)
      s.pos[i].push_back(mul(s.pos[i].back(), ctx.teich[enc]));
    if (ctx.maxneg[i] > 0) {
      u64 iv = ctx.k.inv(enc);
      s.neg[i].push_back(one(ctx.W));
      for (i64 e = 1; e <= ctx.maxneg[i]; ++e)
        s.neg[i].push_back(mul(s.neg[i].back(), ctx.teich[iv]));
    }
  }
}

// entry value as a tensor element: sum of coeff (x) monomial-value outer
// products, no tensor reduction needed
Elt eval_entry(const DeltaCtx& ctx, const EntryTerms& ent,
               const PowScratch& s) {
  Elt out = zero(ctx.TT);
  const u64 m = ctx.TT->cmod;
  const u32 ld = ctx.left->rank;
  for (const auto& [coeff, e] : ent.terms) {
    Elt w = one(ctx.W);
    for (u32 i = 0; i < ctx.dim; ++i) {
      if (e[i] > 0)
        w = mul(w, s.pos[i][e[i]]);
      else if (e[i] < 0)
        w = mul(w, s.neg[i][-e[i]]);
    }
    for (u32 b = 0; b < ctx.delta; ++b) {
      u64 wb = w.c[b];
      if (!wb) continue;
      for (u32 t = 0; t < ld; ++t) {
        u64 ct = coeff.c[t];
        if (!ct) continue;
        u64& dst = out.c[b * ld + t];
        dst = (dst + static_cast<u64>(static_cast<u128>(ct) * wb % m)) % m;
      }
    }
  }
  return out;
}

std::vector<Elt> eval_matrix(const DeltaCtx& ctx,
                             const std::vector<u64>& coords, u32 j) {
  PowScratch s;
  fill_powers(ctx, coords, j, s);
  std::vector<Elt> M;
  M.reserve(ctx.entries.size());
  for (const auto& ent : ctx.entries) M.push_back(eval_entry(ctx, ent, s));
  return M;
}

std::vector<Elt> mat_mul(const RingPtr& R, u32 n, const std::vector<Elt>& A,
                         const std::vector<Elt>& B) {
  std::vector<Elt> C(n * n, zero(R));
  for (u32 i = 0; i < n; ++i)
    for (u32 l = 0; l < n; ++l) {
      if (is_zero(A[i * n + l])) continue;
      for (u32 j = 0; j < n; ++j)
        C[i * n + j] = add(C[i * n + j], mul(A[i * n + l], B[l * n + j]));
    }
  return C;
}

// A = M(x) M(sigma x) ... M(sigma^(delta-1) x)
std::vector<Elt> sigma_product(const DeltaCtx& ctx,
                               const std::vector<u64>& coords) {
  std::vector<Elt> A = eval_matrix(ctx, coords, 0);
  for (u32 j = 1; j < ctx.delta; ++j)
    A = mat_mul(ctx.TT, ctx.rank, A, eval_matrix(ctx, coords, j));
  return A;
}

Poly factor_from_product(const DeltaCtx& ctx, const std::vector<Elt>& A) {
  const u32 m = ctx.rank;
  std::vector<Elt> cs;  // det(1 - A S) coefficients over the tensor ring
  if (m == 1) {
    cs = {one(ctx.TT), neg(A[0])};
  } else if (m == 2) {
    Elt tr = add(A[0], A[3]);
    Elt dt = sub(mul(A[0], A[3]), mul(A[1], A[2]));
    cs = {one(ctx.TT), neg(tr), dt};
  } else {
    cs = char_poly_reciprocal(A, m, ctx.TT).c;
  }
  Poly f;
  f.ring = ctx.left;
  f.c.assign((cs.size() - 1) * ctx.delta + 1, zero(ctx.left));
  for (size_t i = 0; i < cs.size(); ++i)
    f.c[i * ctx.delta] = coerce_to_scalar(cs[i]);  // sigma-invariance
  return poly_trim(std::move(f));
}

Poly local_factor_ctx(const DeltaCtx& ctx, const std::vector<u64>& coords) {
  return factor_from_product(ctx, sigma_product(ctx, coords));
}

}  // namespace

Poly local_factor(const UnitCrystalSpec& c, const ClosedPoint& x) {
  DeltaCtx ctx(c, x.delta);
  return local_factor_ctx(ctx, x.coords);
}

// ----------------------------------------------------------------- product

static void fold_pointwise(const DeltaCtx& ctx,
                           const std::vector<ClosedPoint>& pts, u32 B,
                           u32 workers, Series& da, Series& za) {
  std::vector<Series> parts(pts.size());
  parallel_for(workers, pts.size(), [&](size_t i) {
    Poly f = local_factor_ctx(ctx, pts[i].coords);
    parts[i] = series_inverse(poly_to_series(f, B));
  });
  for (size_t i = 0; i < pts.size(); ++i) {
    Series& dst = pts[i].on_zero_locus ? za : da;
    dst = series_mul(dst, parts[i]);
  }
}

static std::vector<std::vector<u64>> pack_series(const Series& s) {
  std::vector<std::vector<u64>> out;
  out.reserve(s.c.size());
  for (const auto& e : s.c) out.push_back(e.c);
  return out;
}

static bool unpack_series(const RingPtr& R, u32 B,
                          const std::vector<std::vector<u64>>& in,
                          u32 stored_bound, Series& out) {
  if (in.size() != static_cast<size_t>(stored_bound) + 1) return false;
  out = series_zero(R, B);
  for (u32 i = 0; i <= B; ++i) {
    if (in[i].size() != R->rank) return false;
    for (u64 v : in[i])
      if (v >= R->cmod) return false;
    out.c[i].c = in[i];
  }
  return true;
}

Series euler_product(const UnitCrystalSpec& c, point_region reg, u32 B,
                     const EulerOptions& opt) {
  require(B <= opt.bound_cap, errc::degree_bound_exceeded,
          "series bound " + std::to_string(B) + " above the cap " +
              std::to_string(opt.bound_cap));
  const RegionPoly ra = region_poly(c.a);
  const std::string key =
      opt.cache_dir.empty()
          ? std::string()
          : (opt.cache_key.empty() ? crystal_content_hash(c) : opt.cache_key);
  Series res = series_one(c.ring, B);
  for (u32 dl = 1; dl <= B; ++dl) {
    require(dl <= opt.delta_cap, errc::degree_bound_exceeded,
            "point degree " + std::to_string(dl) + " above the cap " +
                std::to_string(opt.delta_cap));
    Series da = series_one(c.ring, B), za = series_one(c.ring, B);
    bool have = false;
    if (!opt.cache_dir.empty()) {
      auto hit = cache_load(opt.cache_dir, key, dl);
      if (hit && hit->bound >= B) {
        Series sda, sza;
        if (unpack_series(c.ring, B, hit->da, hit->bound, sda) &&
            unpack_series(c.ring, B, hit->za, hit->bound, sza)) {
          da = std::move(sda);
          za = std::move(sza);
          have = true;
        }
      }
    }
    if (!have) {
      DeltaCtx ctx(c, dl);
      auto pts = enumerate_in_field(ctx.k, c.dim, ra);
      fold_pointwise(ctx, pts, B, opt.workers, da, za);
      if (!opt.cache_dir.empty()) {
        CachedDelta entry;
        entry.bound = B;
        entry.da = pack_series(da);
        entry.za = pack_series(za);
        cache_store(opt.cache_dir, key, dl, entry);
      }
    }
    if (reg == point_region::gm || reg == point_region::d_of_a)
      res = series_mul(res, da);
    if (reg == point_region::gm || reg == point_region::z_of_a)
      res = series_mul(res, za);
  }
  return res;
}

Series euler_product_filtered(
    const UnitCrystalSpec& c, u32 B, u32 workers,
    const std::function<bool(const Fq&, const std::vector<u64>&)>& include) {
  RegionPoly triv;  // classification not used on this path
  Series res = series_one(c.ring, B);
  for (u32 dl = 1; dl <= B; ++dl) {
    DeltaCtx ctx(c, dl);
    auto pts = enumerate_in_field(ctx.k, c.dim, triv);
    std::vector<ClosedPoint> sel;
    for (auto& pt : pts)
      if (include(ctx.k, pt.coords)) {
        pt.on_zero_locus = false;  // kept points all fold into one side
        sel.push_back(pt);
      }
    Series da = series_one(c.ring, B), za = series_one(c.ring, B);
    fold_pointwise(ctx, sel, B, workers, da, za);
    res = series_mul(res, da);  // none are flagged, all fold into da
  }
  return res;
}

// -------------------------------------------------------- unit diagnostic

UnitCheckReport validate_unit_on_points(const UnitCrystalSpec& lifted,
                                        u32 degree_bound) {
  UnitCheckReport rep;
  const RegionPoly ra = region_poly(lifted.a);
  for (u32 dl = 1; dl <= degree_bound; ++dl) {
    DeltaCtx ctx(lifted, dl);
    auto pts = enumerate_in_field(ctx.k, lifted.dim, ra);
    for (const auto& pt : pts) {
      std::vector<Elt> M = eval_matrix(ctx, pt.coords, 0);
      Elt det = zero(ctx.TT);
      if (ctx.rank == 1) {
        det = M[0];
      } else if (ctx.rank == 2) {
        det = sub(mul(M[0], M[3]), mul(M[1], M[2]));
      } else {
        // up to sign, the top coefficient of det(1 - MT)
        Poly cp = char_poly_reciprocal(M, ctx.rank, ctx.TT);
        det = cp.deg() == static_cast<int>(ctx.rank) ? cp.c[ctx.rank]
                                                     : zero(ctx.TT);
      }
      ++rep.points_checked;
      if (!is_unit(det))
        rep.nonunits.push_back(
            UnitCheckEntry{dl, pt.coords, pt.on_zero_locus, false});
    }
  }
  return rep;
}

// ------------------------------------------------------------ trace side

Elt trace_formula_rhs(const UnitCrystalSpec& c, u32 n) {
  require(n >= 1 && n <= 12, errc::degree_bound_exceeded,
          "trace exponent out of range");
  const RingPtr R = c.ring;
  Elt total = zero(R);
  RegionPoly triv;
  for (u32 dl = 1; dl <= n; ++dl) {
    if (n % dl) continue;
    DeltaCtx ctx(c, dl);
    auto pts = enumerate_in_field(ctx.k, c.dim, triv);
    const u32 s = n / dl;
    for (const auto& pt : pts) {
      auto A = sigma_product(ctx, pt.coords);
      auto As = A;
      for (u32 i = 1; i < s; ++i) As = mat_mul(ctx.TT, ctx.rank, As, A);
      Elt tr = zero(ctx.TT);
      for (u32 i = 0; i < ctx.rank; ++i)
        tr = add(tr, As[i * ctx.rank + i]);
      // the orbit's rational points contribute the sigma-translates
      Elt acc = tr, cur = tr;
      for (u32 j = 1; j < dl; ++j) {
        cur = witt_frobenius(cur, 1);
        acc = add(acc, cur);
      }
      total = add(total, coerce_to_scalar(acc));
    }
  }
  const u64 m = R->cmod;
  u64 v = (pow_u64(R->p, n) - 1) % m;
  u64 inv = modinv_u64(v, m);
  u64 invd = 1;
  for (u32 i = 0; i < c.dim; ++i)
    invd = static_cast<u64>(static_cast<u128>(invd) * inv % m);
  return mul(total, from_int(R, static_cast<i64>(invd)));
}

}  // namespace unitl
