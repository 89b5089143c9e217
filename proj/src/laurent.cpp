#include "unitl/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace unitl {

static const i64 kExpLimit = i64(1) << 31;

static void check_exponents(const std::vector<i64>& e) {
  for (i64 v : e)
    require(v <= kExpLimit && v >= -kExpLimit, errc::degree_bound_exceeded,
            "exponent magnitude exceeds 2^31");
}

// ------------------------------------------------------------ construction

LaurentPoly lp_zero(const RingPtr& R, u32 dim) {
  LaurentPoly f;
  f.ring = R;
  f.dim = dim;
  return f;
}

LaurentPoly lp_one(const RingPtr& R, u32 dim) {
  return lp_const(R, dim, one(R));
}

LaurentPoly lp_const(const RingPtr& R, u32 dim, const Elt& c) {
  LaurentPoly f = lp_zero(R, dim);
  if (!is_zero(c)) f.terms.emplace(std::vector<i64>(dim, 0), c);
  return f;
}

LaurentPoly lp_monomial(const RingPtr& R, u32 dim, const std::vector<i64>& e,
                        const Elt& c) {
  LaurentPoly f = lp_zero(R, dim);
  check_exponents(e);
  if (!is_zero(c)) f.terms.emplace(e, c);
  return f;
}

bool lp_is_zero(const LaurentPoly& f) { return f.terms.empty(); }

bool lp_is_one(const LaurentPoly& f) {
  return f.terms.size() == 1 && f.terms.begin()->first ==
         std::vector<i64>(f.dim, 0) && eq(f.terms.begin()->second, one(f.ring));
}

bool lp_eq(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.dim != g.dim || !ring_eq(*f.ring, *g.ring)) return false;
  if (f.terms.size() != g.terms.size()) return false;
  auto it = f.terms.begin(), jt = g.terms.begin();
  for (; it != f.terms.end(); ++it, ++jt)
    if (it->first != jt->first || !eq(it->second, jt->second)) return false;
  return true;
}

// -------------------------------------------------------------- arithmetic

static void add_term(LaurentPoly& f, const std::vector<i64>& e, const Elt& c) {
  if (is_zero(c)) return;
  auto it = f.terms.find(e);
  if (it == f.terms.end()) {
    check_exponents(e);
    f.terms.emplace(e, c);
    return;
  }
  it->second = add(it->second, c);
  if (is_zero(it->second)) f.terms.erase(it);
}

static void check_operands(const LaurentPoly& f, const LaurentPoly& g) {
  require(f.dim == g.dim && ring_eq(*f.ring, *g.ring),
          errc::precision_mismatch, "operands live in different rings");
}

LaurentPoly lp_add(const LaurentPoly& f, const LaurentPoly& g) {
  check_operands(f, g);
  LaurentPoly r = f;
  for (const auto& [e, c] : g.terms) add_term(r, e, c);
  return r;
}

LaurentPoly lp_sub(const LaurentPoly& f, const LaurentPoly& g) {
  check_operands(f, g);
  LaurentPoly r = f;
  for (const auto& [e, c] : g.terms) add_term(r, e, neg(c));
  return r;
}

LaurentPoly lp_neg(const LaurentPoly& f) {
  LaurentPoly r = lp_zero(f.ring, f.dim);
  for (const auto& [e, c] : f.terms) r.terms.emplace(e, neg(c));
  return r;
}

LaurentPoly lp_mul(const LaurentPoly& f, const LaurentPoly& g) {
  check_operands(f, g);
  LaurentPoly r = lp_zero(f.ring, f.dim);
  std::vector<i64> e(f.dim);
  for (const auto& [ef, cf] : f.terms)
    for (const auto& [eg, cg] : g.terms) {
      for (u32 i = 0; i < f.dim; ++i) e[i] = ef[i] + eg[i];
      add_term(r, e, mul(cf, cg));
    }
  return r;
}

LaurentPoly lp_mul_elt(const LaurentPoly& f, const Elt& c) {
  LaurentPoly r = lp_zero(f.ring, f.dim);
  for (const auto& [e, fc] : f.terms) add_term(r, e, mul(fc, c));
  return r;
}

LaurentPoly lp_pow(const LaurentPoly& f, u32 k) {
  LaurentPoly r = lp_one(f.ring, f.dim);
  LaurentPoly b = f;
  while (k) {
    if (k & 1) r = lp_mul(r, b);
    if (k >>= 1) b = lp_mul(b, b);
  }
  return r;
}

Elt coeff_extract(const LaurentPoly& f, const std::vector<i64>& e) {
  auto it = f.terms.find(e);
  return it == f.terms.end() ? zero(f.ring) : it->second;
}

LaurentPoly frobenius_pullback(const LaurentPoly& f, u32 k) {
  i64 pk = 1;
  for (u32 i = 0; i < k; ++i) pk *= static_cast<i64>(f.ring->p);
  LaurentPoly r = lp_zero(f.ring, f.dim);
  std::vector<i64> e(f.dim);
  for (const auto& [ef, c] : f.terms) {
    for (u32 i = 0; i < f.dim; ++i) e[i] = ef[i] * pk;
    check_exponents(e);
    r.terms.emplace(e, c);
  }
  return r;
}

Elt eval_at_point(const LaurentPoly& f, const std::vector<Elt>& point) {
  require(point.size() == f.dim, errc::wrong_kind,
          "point dimension does not match the polynomial");
  RingPtr T = f.dim ? point[0].ring : f.ring;
  if (lp_is_zero(f)) return zero(T);
  std::vector<i64> lo, hi;
  lp_exponent_box(f, lo, hi);
  // power tables per variable, negative exponents through the inverse
  std::vector<std::vector<Elt>> pos(f.dim), negp(f.dim);
  for (u32 i = 0; i < f.dim; ++i) {
    pos[i].push_back(one(T));
    for (i64 k = 1; k <= std::max<i64>(hi[i], 0); ++k)
      pos[i].push_back(mul(pos[i].back(), point[i]));
    if (lo[i] < 0) {
      auto inv = inverse(point[i]);
      require(inv.has_value(), errc::non_invertible_coordinate,
              "negative exponent at a non-invertible coordinate");
      negp[i].push_back(one(T));
      for (i64 k = 1; k <= -lo[i]; ++k)
        negp[i].push_back(mul(negp[i].back(), *inv));
    }
  }
  Elt acc = zero(T);
  for (const auto& [e, c] : f.terms) {
    Elt v = embed(c, T);
    for (u32 i = 0; i < f.dim; ++i) {
      if (e[i] == 0) continue;
      v = mul(v, e[i] > 0 ? pos[i][e[i]] : negp[i][-e[i]]);
    }
    acc = add(acc, v);
  }
  return acc;
}

LaurentPoly lp_map_coeffs(const LaurentPoly& f, const RingPtr& target,
                          const std::function<Elt(const Elt&)>& fn) {
  LaurentPoly r = lp_zero(target, f.dim);
  for (const auto& [e, c] : f.terms) {
    Elt v = fn(c);
    if (!is_zero(v)) r.terms.emplace(e, v);
  }
  return r;
}

void lp_exponent_box(const LaurentPoly& f, std::vector<i64>& lo,
                     std::vector<i64>& hi) {
  lo.assign(f.dim, 0);
  hi.assign(f.dim, 0);
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    (void)c;
    for (u32 i = 0; i < f.dim; ++i) {
      if (first || e[i] < lo[i]) lo[i] = e[i];
      if (first || e[i] > hi[i]) hi[i] = e[i];
    }
    first = false;
  }
}

static i64 total_degree(const std::vector<i64>& e) {
  i64 s = 0;
  for (i64 v : e) s += v;
  return s;
}

i64 lp_max_total_degree(const LaurentPoly& f) {
  i64 best = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    (void)c;
    i64 t = total_degree(e);
    if (first || t > best) best = t;
    first = false;
  }
  return best;
}

i64 lp_max_negative_exponent(const LaurentPoly& f) {
  i64 s = 0;
  for (const auto& [e, c] : f.terms) {
    (void)c;
    for (i64 v : e)
      if (-v > s) s = -v;
  }
  return s;
}

// ---------------------------------------------------------------- division

// graded-lex: total degree first, then lexicographic
static bool gl_less(const std::vector<i64>& a, const std::vector<i64>& b) {
  i64 ta = total_degree(a), tb = total_degree(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

static std::map<std::vector<i64>, Elt>::const_iterator lead_term(
    const LaurentPoly& f) {
  auto best = f.terms.begin();
  for (auto it = std::next(best); it != f.terms.end(); ++it)
    if (gl_less(best->first, it->first)) best = it;
  return best;
}

std::optional<LaurentPoly> lp_divide(const LaurentPoly& f,
                                     const LaurentPoly& g) {
  check_operands(f, g);
  require(!lp_is_zero(g), errc::division_undecidable, "divisor is zero");
  if (lp_is_zero(f)) return lp_zero(f.ring, f.dim);
  auto lg = lead_term(g);
  auto lcg_inv = inverse(lg->second);
  require(lcg_inv.has_value(), errc::division_undecidable,
          "divisor has a non-unit leading coefficient");
  // Descent floor: true quotients cancel their way down by at most one
  // p-valuation step per divisor span, so a lead wandering this far below
  // the dividend's support cannot belong to an exact quotient.
  i64 min_f = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    (void)c;
    i64 t = total_degree(e);
    if (first || t < min_f) min_f = t;
    first = false;
  }
  i64 span_g = 0;
  for (const auto& [e, c] : g.terms) {
    (void)c;
    span_g = std::max(span_g, total_degree(lg->first) - total_degree(e));
  }
  const i64 floor_deg =
      min_f - static_cast<i64>(f.ring->cexp + 3) * (span_g + 1) - 8;
  const u32 max_steps = 4096;

  LaurentPoly r = f;
  LaurentPoly q = lp_zero(f.ring, f.dim);
  std::vector<i64> te(f.dim);
  for (u32 step = 0; !lp_is_zero(r); ++step) {
    if (step >= max_steps) return std::nullopt;
    auto lr = lead_term(r);
    if (total_degree(lr->first) < floor_deg) return std::nullopt;
    for (u32 i = 0; i < f.dim; ++i) te[i] = lr->first[i] - lg->first[i];
    Elt tc = mul(lr->second, *lcg_inv);
    add_term(q, te, tc);
    // r -= t*g; the lead cancels exactly
    LaurentPoly tg = lp_mul_elt(g, tc);
    std::vector<i64> e(f.dim);
    for (const auto& [eg, cg] : tg.terms) {
      for (u32 i = 0; i < f.dim; ++i) e[i] = eg[i] + te[i];
      add_term(r, e, neg(cg));
    }
  }
  return q;
}

// ------------------------------------------------------------------ parser

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return pos < s.size() ? s[pos] : '\0'; }
  [[noreturn]] void err(const std::string& what) const {
    fail(errc::syntax_error, what + " at position " + std::to_string(pos));
  }
  u64 digits(const char* what) {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      err(std::string("expected ") + what);
    u64 v = 0;
    size_t n = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (++n > 18) err("integer literal too large");
      v = v * 10 + static_cast<u64>(peek() - '0');
      ++pos;
    }
    return v;
  }
};

}  // namespace

std::vector<i64> parse_x_polynomial(const std::string& text, size_t base_pos) {
  Cursor c{text, 0};
  std::vector<i64> out;
  auto bump = [&](size_t k, i64 v) {
    if (k > 64) fail(errc::syntax_error, "x-exponent too large at position " +
                                             std::to_string(base_pos + c.pos));
    if (out.size() <= k) out.resize(k + 1, 0);
    out[k] += v;
  };
  c.ws();
  if (c.done())
    fail(errc::syntax_error,
         "empty coefficient at position " + std::to_string(base_pos));
  bool first = true;
  while (true) {
    c.ws();
    i64 sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.pos;
      c.ws();
    } else if (!first) {
      fail(errc::syntax_error, "expected + or - at position " +
                                   std::to_string(base_pos + c.pos));
    }
    first = false;
    bool have_num = false;
    i64 val = 1;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      size_t at = c.pos;
      u64 raw = c.digits("integer");
      if (raw > (u64(1) << 62))
        fail(errc::syntax_error, "integer literal too large at position " +
                                     std::to_string(base_pos + at));
      val = static_cast<i64>(raw);
      have_num = true;
      c.ws();
      if (c.peek() == '*') {
        ++c.pos;
        c.ws();
        if (c.peek() != 'x')
          fail(errc::syntax_error,
               "expected x at position " + std::to_string(base_pos + c.pos));
      }
    }
    size_t xexp = 0;
    bool have_x = false;
    if (c.peek() == 'x') {
      ++c.pos;
      have_x = true;
      xexp = 1;
      c.ws();
      if (c.peek() == '^') {
        ++c.pos;
        c.ws();
        xexp = static_cast<size_t>(c.digits("exponent"));
      }
    }
    if (!have_num && !have_x)
      fail(errc::syntax_error, "expected coefficient term at position " +
                                   std::to_string(base_pos + c.pos));
    bump(xexp, sign * val);
    c.ws();
    if (c.done()) break;
    if (c.peek() != '+' && c.peek() != '-')
      fail(errc::syntax_error, "unexpected character at position " +
                                   std::to_string(base_pos + c.pos));
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// element of R from integer coefficients on powers of the generator x
static Elt elt_from_x_poly(const RingPtr& R, const std::vector<i64>& coeffs,
                           size_t pos) {
  bool needs_x = coeffs.size() > 1;
  if (needs_x) {
    if (R->kind != ring_kind::local_algebra && R->kind != ring_kind::flat_lift)
      fail(errc::unknown_variable, "coefficient generator x is not available "
                                   "over this ring, at position " +
                                       std::to_string(pos));
  }
  Elt x = zero(R);
  if (R->rank >= 2)
    x.c[1] = 1;
  else if (needs_x)
    x = from_int(R, -static_cast<i64>(R->modulus[0]));  // x = -g0 mod (x+g0)
  Elt acc = zero(R);
  for (size_t k = coeffs.size(); k-- > 0;)
    acc = add(mul(acc, x), from_int(R, coeffs[k]));
  return acc;
}

LaurentPoly parse_laurent(const std::string& text, const RingPtr& R, u32 dim) {
  Cursor c{text, 0};
  LaurentPoly f = lp_zero(R, dim);
  c.ws();
  if (c.done()) c.err("empty polynomial");
  bool first = true;
  while (true) {
    c.ws();
    i64 sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1;
      ++c.pos;
      c.ws();
    } else if (!first) {
      c.err("expected + or -");
    }
    first = false;

    Elt coeff = one(R);
    bool have_coeff = false;
    std::vector<i64> e(dim, 0);
    bool have_var = false;

    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      size_t at = c.pos;
      u64 raw = c.digits("integer");
      if (raw > (u64(1) << 62)) {
        c.pos = at;
        c.err("integer literal too large");
      }
      coeff = from_int(R, static_cast<i64>(raw));
      have_coeff = true;
    } else if (c.peek() == '[') {
      size_t open = c.pos;
      size_t close = text.find(']', open + 1);
      if (close == std::string::npos) {
        c.pos = open;
        c.err("unterminated bracket");
      }
      auto coeffs =
          parse_x_polynomial(text.substr(open + 1, close - open - 1), open + 1);
      coeff = elt_from_x_poly(R, coeffs, open);
      c.pos = close + 1;
      have_coeff = true;
    }

    auto varpow = [&]() {
      ++c.pos;  // past 'z'
      u32 idx;
      if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        size_t at = c.pos;
        u64 raw = c.digits("variable index");
        if (raw < 1 || raw > dim)
          fail(errc::unknown_variable, "no variable z" + std::to_string(raw) +
                                           " at position " +
                                           std::to_string(at));
        idx = static_cast<u32>(raw);
      } else {
        if (dim != 1)
          fail(errc::unknown_variable,
               "bare z is ambiguous in dimension " + std::to_string(dim) +
                   ", use z1..z" + std::to_string(dim) + ", at position " +
                   std::to_string(c.pos - 1));
        idx = 1;
      }
      i64 exp = 1;
      c.ws();
      if (c.peek() == '^') {
        ++c.pos;
        c.ws();
        i64 esign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
          if (c.peek() == '-') esign = -1;
          ++c.pos;
        }
        size_t at = c.pos;
        u64 raw = c.digits("exponent");
        if (raw > (u64(1) << 31)) {
          c.pos = at;
          c.err("exponent too large");
        }
        exp = esign * static_cast<i64>(raw);
      }
      e[idx - 1] += exp;
      have_var = true;
    };

    if (c.peek() == 'z') {
      if (have_coeff) c.err("expected * before variable");
      varpow();
    } else if (!have_coeff) {
      c.err("expected term");
    }
    while (true) {
      c.ws();
      if (c.peek() != '*') break;
      ++c.pos;
      c.ws();
      if (c.peek() != 'z') c.err("expected variable after *");
      varpow();
    }
    (void)have_var;
    add_term(f, e, sign < 0 ? neg(coeff) : coeff);
    c.ws();
    if (c.done()) break;
    if (c.peek() != '+' && c.peek() != '-') c.err("unexpected character");
  }
  return f;
}

// ----------------------------------------------------------------- printer

static bool elt_is_scalar(const Elt& c) {
  for (size_t i = 1; i < c.c.size(); ++i)
    if (c.c[i]) return false;
  return true;
}

static std::string x_poly_string(const Elt& c) {
  std::string out;
  for (size_t k = 0; k < c.c.size(); ++k) {
    if (c.c[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(c.c[0]);
    } else {
      if (c.c[k] != 1) out += std::to_string(c.c[k]);
      out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::string print_laurent(const LaurentPoly& f) {
  if (lp_is_zero(f)) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms) {
    if (!out.empty()) out += " + ";
    std::string vars;
    for (u32 i = 0; i < f.dim; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "z" + std::to_string(i + 1);
      if (e[i] != 1) vars += "^" + std::to_string(e[i]);
    }
    std::string cs =
        elt_is_scalar(c) ? std::to_string(c.c[0]) : "[" + x_poly_string(c) + "]";
    if (vars.empty())
      out += cs;
    else if (elt_is_scalar(c) && c.c[0] == 1)
      out += vars;
    else
      out += cs + "*" + vars;
  }
  return out;
}

}  // namespace unitl
