#include "unitl/fq.hpp"

#include <algorithm>
#include <string>

namespace unitl {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_local: return "NotLocal";
    case errc::not_monic: return "NotMonic";
    case errc::wrong_kind: return "WrongKind";
    case errc::zero_residue: return "ZeroResidue";
    case errc::precision_mismatch: return "PrecisionMismatch";
    case errc::not_scalar: return "NotScalar";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_variable: return "UnknownVariable";
    case errc::non_invertible_coordinate: return "NonInvertibleCoordinate";
    case errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::division_undecidable: return "DivisionUndecidable";
    case errc::degree_bound_exceeded: return "DegreeBoundExceeded";
    case errc::normal_form_missing: return "NormalFormMissing";
    case errc::mismatch: return "Mismatch";
    case errc::coefficient_not_in_maximal_ideal:
      return "CoefficientNotInMaximalIdeal";
    case errc::not_polynomial: return "NotPolynomial";
    case errc::internal: return "Internal";
  }
  return "Internal";
}

bool errc_is_verification(errc c) {
  return c == errc::mismatch || c == errc::coefficient_not_in_maximal_ideal ||
         c == errc::not_polynomial;
}

// ---------------------------------------------------------------- F_p[x]

static void fp_trim(FpPoly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

FpPoly fp_make(u64 p, std::vector<u64> coeffs) {
  FpPoly a;
  a.p = p;
  a.c = std::move(coeffs);
  for (auto& v : a.c) v %= p;
  fp_trim(a);
  return a;
}

FpPoly fp_x(u64 p) { return fp_make(p, {0, 1}); }
FpPoly fp_const(u64 p, u64 v) { return fp_make(p, {v}); }

bool fp_eq(const FpPoly& a, const FpPoly& b) {
  return a.p == b.p && a.c == b.c;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    u64 v = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
    r.c[i] = v % a.p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    u64 av = i < a.c.size() ? a.c[i] : 0;
    u64 bv = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = (av + a.p - bv) % a.p;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.p;
  }
  fp_trim(r);
  return r;
}

static u64 fp_scalar_inv(u64 v, u64 p) {
  // extended Euclid in Z
  i64 t = 0, nt = 1, r = static_cast<i64>(p), nr = static_cast<i64>(v % p);
  while (nr != 0) {
    i64 qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  require(r == 1, errc::internal, "scalar not invertible mod p");
  return static_cast<u64>((t % static_cast<i64>(p) + static_cast<i64>(p)) %
                          static_cast<i64>(p));
}

void fp_divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
  require(!b.is_zero(), errc::internal, "division by zero polynomial");
  q.p = a.p;
  q.c.clear();
  r = a;
  if (a.deg() < b.deg()) return;
  q.c.assign(a.deg() - b.deg() + 1, 0);
  u64 linv = fp_scalar_inv(b.lead(), a.p);
  for (int i = a.deg(); i >= b.deg(); --i) {
    if (static_cast<size_t>(i) >= r.c.size() || r.c[i] == 0) continue;
    u64 f = (r.c[i] * linv) % a.p;
    q.c[i - b.deg()] = f;
    for (int j = 0; j <= b.deg(); ++j) {
      size_t k = static_cast<size_t>(i - b.deg() + j);
      r.c[k] = (r.c[k] + a.p - (f * b.c[j]) % a.p) % a.p;
    }
  }
  fp_trim(q);
  fp_trim(r);
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  fp_divmod(a, b, q, r);
  return r;
}

FpPoly fp_monic(const FpPoly& a) {
  if (a.is_zero() || a.lead() == 1) return a;
  u64 linv = fp_scalar_inv(a.lead(), a.p);
  FpPoly r = a;
  for (auto& v : r.c) v = (v * linv) % a.p;
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a);
}

FpPoly fp_powmod(const FpPoly& a, u64 e, const FpPoly& f) {
  FpPoly r = fp_const(a.p, 1);
  FpPoly base = fp_mod(a, f);
  while (e) {
    if (e & 1) r = fp_mod(fp_mul(r, base), f);
    base = fp_mod(fp_mul(base, base), f);
    e >>= 1;
  }
  return r;
}

FpPoly fp_frob_power(const FpPoly& f, u32 k) {
  FpPoly r = fp_mod(fp_x(f.p), f);
  for (u32 i = 0; i < k; ++i) r = fp_powmod(r, f.p, f);
  return r;
}

bool fp_irreducible(const FpPoly& f) {
  int n = f.deg();
  if (n < 1) return false;
  // Rabin: x^(p^n) == x mod f, and x^(p^(n/l)) - x coprime to f for every
  // prime l dividing n.
  FpPoly xn = fp_frob_power(f, static_cast<u32>(n));
  if (!fp_eq(xn, fp_mod(fp_x(f.p), f))) return false;
  int m = n;
  for (int l = 2; l * l <= m; ++l) {
    if (m % l) continue;
    while (m % l == 0) m /= l;
    FpPoly d = fp_sub(fp_frob_power(f, static_cast<u32>(n / l)), fp_x(f.p));
    if (fp_gcd(d, f).deg() != 0) return false;
  }
  if (m > 1) {
    FpPoly d = fp_sub(fp_frob_power(f, static_cast<u32>(n / m)), fp_x(f.p));
    if (fp_gcd(d, f).deg() != 0) return false;
  }
  return true;
}

FpPoly fp_first_irreducible(u64 p, u32 delta) {
  require(delta >= 1, errc::internal, "degree must be positive");
  if (delta == 1) return fp_x(p);  // y itself: W_1 = Z/p^N
  u64 count = 1;
  for (u32 i = 0; i < delta; ++i) count *= p;
  for (u64 enc = 0; enc < count; ++enc) {
    std::vector<u64> c(delta + 1, 0);
    u64 v = enc;
    for (u32 i = 0; i < delta; ++i) {
      c[i] = v % p;
      v /= p;
    }
    c[delta] = 1;
    FpPoly f = fp_make(p, std::move(c));
    if (fp_irreducible(f)) return f;
  }
  fail(errc::internal, "no irreducible polynomial found");
}

FpPrimePower fp_prime_power_split(const FpPoly& fbar) {
  require(!fbar.is_zero() && fbar.lead() == 1, errc::not_monic,
          "modulus must be monic with unit lead mod p");
  require(fbar.deg() >= 1, errc::not_monic, "modulus must be nonconstant");
  require(fbar.deg() <= 32, errc::degree_bound_exceeded,
          "factorization bounded at degree 32");
  // The irreducible factors of degree dividing l are exactly the factors of
  // gcd(fbar, x^(p^l) - x). The smallest l with a nontrivial gcd therefore
  // isolates the minimal factor degree; a gcd of larger degree than l means
  // two distinct irreducible factors of that degree.
  for (u32 l = 1; l <= static_cast<u32>(fbar.deg()); ++l) {
    FpPoly d = fp_sub(fp_frob_power(fbar, l), fp_x(fbar.p));
    FpPoly g = fp_gcd(d, fbar);
    if (g.deg() == 0) continue;
    require(g.deg() == static_cast<int>(l), errc::not_local,
            "reduction mod p has two distinct irreducible factors");
    FpPrimePower out;
    out.irr = g;
    FpPoly rest = fbar;
    while (!fp_eq(rest, fp_const(fbar.p, 1))) {
      FpPoly q, r;
      fp_divmod(rest, g, q, r);
      require(r.is_zero(), errc::not_local,
              "reduction mod p is not a power of a single irreducible");
      rest = std::move(q);
      ++out.e;
    }
    return out;
  }
  fail(errc::internal, "unreachable: monic nonconstant poly has a factor");
}

// ------------------------------------------------------------- F_{p^deg}

Fq::Fq(FpPoly modulus) : mod_(std::move(modulus)) {
  require(!mod_.is_zero() && mod_.lead() == 1, errc::not_monic,
          "field modulus must be monic");
  p_ = mod_.p;
  deg_ = static_cast<u32>(mod_.deg());
  q_ = 1;
  for (u32 i = 0; i < deg_; ++i) q_ *= p_;
  require(fp_irreducible(mod_) || deg_ == 1, errc::internal,
          "field modulus must be irreducible");

  // find a generator of the multiplicative group
  u64 n = q_ - 1;
  std::vector<u64> primes;
  u64 m = n;
  for (u64 l = 2; l * l <= m; ++l) {
    if (m % l) continue;
    primes.push_back(l);
    while (m % l == 0) m /= l;
  }
  if (m > 1) primes.push_back(m);

  auto enc = [&](const FpPoly& a) {
    u64 e = 0, w = 1;
    for (u32 i = 0; i < deg_; ++i) {
      e += (i < a.c.size() ? a.c[i] : 0) * w;
      w *= p_;
    }
    return e;
  };

  u64 gen = 0;
  for (u64 cand = p_ == 2 && deg_ == 1 ? 1 : 2; cand < q_; ++cand) {
    FpPoly a = decode_raw_(cand);
    bool ok = true;
    for (u64 l : primes) {
      FpPoly t = fp_powmod(a, n / l, mod_);
      if (fp_eq(t, fp_const(p_, 1))) {
        ok = false;
        break;
      }
    }
    if (ok && !fp_eq(fp_powmod(a, n, mod_), fp_const(p_, 1))) ok = false;
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (gen == 0) gen = 1;  // q = 2: the unit group is trivial

  exp_.assign(n, 0);
  log_.assign(q_, 0);
  FpPoly g = decode_raw_(gen);
  FpPoly acc = fp_const(p_, 1);
  for (u64 k = 0; k < n; ++k) {
    u64 e = enc(acc);
    exp_[k] = e;
    log_[e] = k;
    acc = fp_mod(fp_mul(acc, g), mod_);
  }
  require(fp_eq(acc, fp_const(p_, 1)), errc::internal,
          "generator order mismatch");

  frob_.assign(q_, 0);
  for (u64 e = 1; e < q_; ++e)
    frob_[e] = exp_[(static_cast<u128>(log_[e]) * p_) % n];
}

// decode without relying on tables (constructor helper)
FpPoly Fq::decode_raw_(u64 a) const {
  std::vector<u64> c(deg_, 0);
  for (u32 i = 0; i < deg_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return fp_make(p_, std::move(c));
}

u64 Fq::encode(const FpPoly& a) const {
  require(a.deg() < static_cast<int>(deg_), errc::internal,
          "encode: degree too large");
  u64 e = 0, w = 1;
  for (u32 i = 0; i < deg_; ++i) {
    e += (i < a.c.size() ? a.c[i] : 0) * w;
    w *= p_;
  }
  return e;
}

FpPoly Fq::decode(u64 a) const { return decode_raw_(a); }

u64 Fq::add(u64 a, u64 b) const {
  u64 e = 0, w = 1;
  for (u32 i = 0; i < deg_; ++i) {
    e += ((a % p_ + b % p_) % p_) * w;
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return e;
}

u64 Fq::neg(u64 a) const {
  u64 e = 0, w = 1;
  for (u32 i = 0; i < deg_; ++i) {
    e += ((p_ - a % p_) % p_) * w;
    a /= p_;
    w *= p_;
  }
  return e;
}

u64 Fq::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 Fq::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  u64 n = q_ - 1;
  return exp_[(log_[a] + log_[b]) % n];
}

u64 Fq::inv(u64 a) const {
  require(a != 0, errc::internal, "inverse of zero");
  u64 n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

u64 Fq::pow(u64 a, i64 k) const {
  u64 n = q_ - 1;
  if (a == 0) {
    require(k > 0, errc::internal, "0^k needs k > 0");
    return 0;
  }
  i64 e = static_cast<i64>(log_[a]) % static_cast<i64>(n);
  i64 kk = k % static_cast<i64>(n);
  i64 idx = (e * kk) % static_cast<i64>(n);
  if (idx < 0) idx += static_cast<i64>(n);
  return exp_[static_cast<u64>(idx)];
}

u64 Fq::frob(u64 a) const { return frob_[a]; }

u64 Fq::frob_iter(u64 a, u32 k) const {
  for (u32 i = 0; i < k; ++i) a = frob_[a];
  return a;
}

u64 Fq::order(u64 a) const {
  require(a != 0, errc::internal, "order of zero");
  u64 n = q_ - 1;
  u64 l = log_[a];
  // order = n / gcd(n, l)
  u64 x = n, y = l;
  while (y) {
    u64 t = x % y;
    x = y;
    y = t;
  }
  return n / x;
}

// ---------------------------------------------------------------- Fq[S]

FqPoly fq_trim(FqPoly a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
  return a;
}

FqPoly fq_add(const Fq& k, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = k.add(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
  return fq_trim(std::move(r));
}

FqPoly fq_sub(const Fq& k, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = k.sub(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
  return fq_trim(std::move(r));
}

FqPoly fq_mul(const Fq& k, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
  }
  return fq_trim(std::move(r));
}

void fq_divmod(const Fq& k, const FqPoly& a, const FqPoly& b, FqPoly& quo,
               FqPoly& rem) {
  require(!b.is_zero(), errc::internal, "fq division by zero");
  quo.c.clear();
  rem = a;
  if (a.deg() < b.deg()) return;
  quo.c.assign(a.deg() - b.deg() + 1, 0);
  u64 linv = k.inv(b.c.back());
  for (int i = a.deg(); i >= b.deg(); --i) {
    if (static_cast<size_t>(i) >= rem.c.size() || rem.c[i] == 0) continue;
    u64 f = k.mul(rem.c[i], linv);
    quo.c[i - b.deg()] = f;
    for (int j = 0; j <= b.deg(); ++j) {
      size_t at = static_cast<size_t>(i - b.deg() + j);
      rem.c[at] = k.sub(rem.c[at], k.mul(f, b.c[j]));
    }
  }
  quo = fq_trim(std::move(quo));
  rem = fq_trim(std::move(rem));
}

void fq_xgcd(const Fq& k, FqPoly a, FqPoly b, FqPoly& g, FqPoly& s,
             FqPoly& t) {
  FqPoly s0{{1}}, s1{}, t0{}, t1{{1}};
  s0 = fq_trim(std::move(s0));
  t1 = fq_trim(std::move(t1));
  while (!b.is_zero()) {
    FqPoly q, r;
    fq_divmod(k, a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    FqPoly ns = fq_sub(k, s0, fq_mul(k, q, s1));
    s0 = std::move(s1);
    s1 = std::move(ns);
    FqPoly nt = fq_sub(k, t0, fq_mul(k, q, t1));
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  // normalize gcd monic
  require(!a.is_zero(), errc::internal, "xgcd of two zero polynomials");
  u64 linv = k.inv(a.c.back());
  for (auto& v : a.c) v = k.mul(v, linv);
  for (auto& v : s0.c) v = k.mul(v, linv);
  for (auto& v : t0.c) v = k.mul(v, linv);
  g = std::move(a);
  s = std::move(s0);
  t = std::move(t0);
}

}  // namespace unitl
