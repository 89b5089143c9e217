#include "unitl/series.hpp"

namespace unitl {

Series series_zero(const RingPtr& R, u32 B) {
  Series s;
  s.ring = R;
  s.bound = B;
  s.c.assign(B + 1, zero(R));
  return s;
}

Series series_one(const RingPtr& R, u32 B) {
  Series s = series_zero(R, B);
  s.c[0] = one(R);
  return s;
}

static void check_series(const Series& f, const Series& g) {
  require(f.bound == g.bound && ring_eq(*f.ring, *g.ring),
          errc::precision_mismatch, "series of different bound or ring");
}

bool series_eq(const Series& f, const Series& g) {
  if (f.bound != g.bound || !ring_eq(*f.ring, *g.ring)) return false;
  for (u32 i = 0; i <= f.bound; ++i)
    if (!eq(f.c[i], g.c[i])) return false;
  return true;
}

Series series_add(const Series& f, const Series& g) {
  check_series(f, g);
  Series r = f;
  for (u32 i = 0; i <= f.bound; ++i) r.c[i] = add(r.c[i], g.c[i]);
  return r;
}

Series series_sub(const Series& f, const Series& g) {
  check_series(f, g);
  Series r = f;
  for (u32 i = 0; i <= f.bound; ++i) r.c[i] = sub(r.c[i], g.c[i]);
  return r;
}

Series series_mul(const Series& f, const Series& g) {
  check_series(f, g);
  Series r = series_zero(f.ring, f.bound);
  for (u32 i = 0; i <= f.bound; ++i) {
    if (is_zero(f.c[i])) continue;
    for (u32 j = 0; i + j <= f.bound; ++j) {
      if (is_zero(g.c[j])) continue;
      r.c[i + j] = add(r.c[i + j], mul(f.c[i], g.c[j]));
    }
  }
  return r;
}

Series series_inverse(const Series& f) {
  auto c0 = inverse(f.c[0]);
  require(c0.has_value(), errc::non_unit_constant_term,
          "series inverse needs a unit constant term");
  Series r = series_zero(f.ring, f.bound);
  r.c[0] = *c0;
  // r_k = -c0^{-1} * sum_{j=1}^{k} f_j r_{k-j}
  for (u32 k = 1; k <= f.bound; ++k) {
    Elt s = zero(f.ring);
    for (u32 j = 1; j <= k; ++j) {
      if (is_zero(f.c[j])) continue;
      s = add(s, mul(f.c[j], r.c[k - j]));
    }
    r.c[k] = neg(mul(*c0, s));
  }
  return r;
}

Series series_pow_signed(const Series& f, i64 e) {
  Series base = e < 0 ? series_inverse(f) : f;
  u64 k = static_cast<u64>(e < 0 ? -e : e);
  Series r = series_one(f.ring, f.bound);
  while (k) {
    if (k & 1) r = series_mul(r, base);
    if (k >>= 1) base = series_mul(base, base);
  }
  return r;
}

Series series_scale_variable(const Series& f, const Elt& scale) {
  Series r = f;
  Elt ck = one(f.ring);
  for (u32 i = 1; i <= f.bound; ++i) {
    ck = mul(ck, scale);
    r.c[i] = mul(r.c[i], ck);
  }
  return r;
}

Series series_truncate(const Series& f, u32 B) {
  require(B <= f.bound, errc::precision_mismatch,
          "cannot truncate to a larger bound");
  Series r;
  r.ring = f.ring;
  r.bound = B;
  r.c.assign(f.c.begin(), f.c.begin() + B + 1);
  return r;
}

Series series_map(const Series& f, const RingPtr& target,
                  const std::function<Elt(const Elt&)>& fn) {
  Series r;
  r.ring = target;
  r.bound = f.bound;
  r.c.reserve(f.bound + 1);
  for (const auto& x : f.c) r.c.push_back(fn(x));
  return r;
}

// ------------------------------------------------------------- polynomials

Poly poly_zero(const RingPtr& R) { return Poly{R, {}}; }

Poly poly_one(const RingPtr& R) { return Poly{R, {one(R)}}; }

Poly poly_trim(Poly f) {
  while (!f.c.empty() && is_zero(f.c.back())) f.c.pop_back();
  return f;
}

Poly poly_from_coeffs(const RingPtr& R, std::vector<Elt> c) {
  return poly_trim(Poly{R, std::move(c)});
}

bool poly_eq(const Poly& f, const Poly& g) {
  if (!ring_eq(*f.ring, *g.ring) || f.c.size() != g.c.size()) return false;
  for (size_t i = 0; i < f.c.size(); ++i)
    if (!eq(f.c[i], g.c[i])) return false;
  return true;
}

bool poly_is_one(const Poly& f) {
  return f.c.size() == 1 && eq(f.c[0], one(f.ring));
}

Poly poly_add(const Poly& f, const Poly& g) {
  Poly r = f;
  if (g.c.size() > r.c.size()) r.c.resize(g.c.size(), zero(f.ring));
  for (size_t i = 0; i < g.c.size(); ++i) r.c[i] = add(r.c[i], g.c[i]);
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& f, const Poly& g) {
  Poly r = f;
  if (g.c.size() > r.c.size()) r.c.resize(g.c.size(), zero(f.ring));
  for (size_t i = 0; i < g.c.size(); ++i) r.c[i] = sub(r.c[i], g.c[i]);
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& f, const Poly& g) {
  if (f.c.empty() || g.c.empty()) return poly_zero(f.ring);
  Poly r;
  r.ring = f.ring;
  r.c.assign(f.c.size() + g.c.size() - 1, zero(f.ring));
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (is_zero(f.c[i])) continue;
    for (size_t j = 0; j < g.c.size(); ++j)
      r.c[i + j] = add(r.c[i + j], mul(f.c[i], g.c[j]));
  }
  return poly_trim(std::move(r));
}

void poly_divmod_monic(const Poly& f, const Poly& g, Poly& q, Poly& r) {
  require(!g.c.empty() && eq(g.c.back(), one(g.ring)), errc::not_monic,
          "divisor must be monic");
  r = f;
  q = poly_zero(f.ring);
  int dg = g.deg();
  if (f.deg() >= dg) q.c.assign(f.deg() - dg + 1, zero(f.ring));
  while (r.deg() >= dg) {
    Elt c = r.c.back();
    int shift = r.deg() - dg;
    q.c[shift] = add(q.c[shift], c);
    for (int i = 0; i <= dg; ++i)
      r.c[shift + i] = sub(r.c[shift + i], mul(c, g.c[i]));
    r = poly_trim(std::move(r));
  }
  q = poly_trim(std::move(q));
}

Poly poly_reverse(const Poly& f, u32 n) {
  require(f.deg() <= static_cast<int>(n), errc::internal,
          "reversal length below the degree");
  Poly r;
  r.ring = f.ring;
  r.c.assign(n + 1, zero(f.ring));
  for (size_t i = 0; i < f.c.size(); ++i) r.c[n - i] = f.c[i];
  return poly_trim(std::move(r));
}

Poly poly_scale_variable(const Poly& f, const Elt& scale) {
  Poly r = f;
  Elt ck = one(f.ring);
  for (size_t i = 1; i < r.c.size(); ++i) {
    ck = mul(ck, scale);
    r.c[i] = mul(r.c[i], ck);
  }
  return poly_trim(std::move(r));
}

Poly poly_map(const Poly& f, const RingPtr& target,
              const std::function<Elt(const Elt&)>& fn) {
  Poly r;
  r.ring = target;
  r.c.reserve(f.c.size());
  for (const auto& x : f.c) r.c.push_back(fn(x));
  return poly_trim(std::move(r));
}

Series poly_to_series(const Poly& f, u32 B) {
  Series s = series_zero(f.ring, B);
  for (size_t i = 0; i < f.c.size() && i <= B; ++i) s.c[i] = f.c[i];
  return s;
}

}  // namespace unitl
