#ifndef UNITL_TESTS_CORPUS_HPP
#define UNITL_TESTS_CORPUS_HPP

// Shared randomized corpus: small crystals in normal form spanning the
// supported primes, dimensions, ranks, residue algebras, and open loci.
// Shapes are fixed so the runtime stays bounded; coefficients and exponents
// come from a seeded generator, so every run sees the same corpus and any
// failure reproduces.

#include <random>
#include <string>
#include <vector>

#include "unitl/config.hpp"

namespace unitl_test {

struct CorpusItem {
  std::string name;
  unitl::RunConfig cfg;
  bool unit_diagonal = false;  // diagonal coefficients prime to p
};

namespace corpus_detail {

struct Shape {
  unitl::u64 p;
  unitl::u32 dim, rank, pexp, precision, bound;
  const char* modulus;
  bool open_locus;  // a = 1 + z1, entries exact multiples of a
  bool triangular;  // rank 2: zero below the diagonal, unit diagonal
  bool unit_diag;   // force diagonal coefficients prime to p
  unitl::u32 workers;
};

// Degree bounds shrink with the point count per degree so the full suite
// stays inside its runtime budget on one core.
inline const std::vector<Shape>& shapes() {
  static const std::vector<Shape> s = {
      {2, 1, 1, 1, 3, 6, "x", false, false, true, 1},
      {2, 1, 1, 1, 2, 6, "x^2+x+1", false, false, true, 1},
      {2, 1, 1, 2, 3, 6, "x^2", true, false, true, 1},
      {2, 1, 2, 1, 3, 6, "x", false, true, true, 2},
      {2, 1, 2, 2, 4, 6, "x^2+x+1", false, false, false, 1},
      {2, 2, 1, 1, 3, 6, "x", false, false, true, 1},
      {2, 2, 1, 2, 2, 6, "x^2", true, false, true, 1},
      {2, 2, 2, 1, 3, 6, "x", false, true, true, 1},
      {3, 1, 1, 1, 2, 6, "x", false, false, true, 1},
      {3, 1, 1, 1, 3, 6, "x^2+1", false, false, true, 1},
      {3, 1, 1, 2, 3, 6, "x^2", true, false, true, 1},
      {3, 1, 2, 1, 2, 6, "x", false, true, true, 1},
      {3, 1, 2, 2, 4, 6, "x^2+1", false, false, false, 1},
      {3, 2, 1, 1, 2, 4, "x", false, false, true, 1},
      {3, 2, 1, 1, 2, 4, "x^2+1", false, false, true, 1},
      {3, 2, 2, 1, 2, 4, "x", false, true, true, 2},
      {5, 1, 1, 1, 2, 6, "x", false, false, true, 1},
      {5, 1, 1, 1, 2, 6, "x^2+2", false, false, true, 1},
      {5, 1, 1, 2, 2, 6, "x^2", true, false, true, 1},
      {5, 1, 2, 1, 2, 6, "x", false, true, true, 1},
      {5, 1, 2, 2, 3, 6, "x^2+2", false, false, false, 1},
      {5, 1, 1, 1, 4, 6, "x", false, false, false, 1},
      {5, 1, 2, 1, 2, 6, "x", false, false, false, 1},
      {5, 2, 1, 1, 2, 3, "x", false, false, true, 1},
  };
  return s;
}

inline unitl::u64 pow_small(unitl::u64 p, unitl::u32 n) {
  unitl::u64 r = 1;
  while (n--) r *= p;
  return r;
}

inline std::string mono(unitl::u64 c, unitl::u32 e1, unitl::u32 e2,
                        unitl::u32 dim, bool xcoeff) {
  std::string s = xcoeff ? std::string("[x]") : std::to_string(c);
  s += "*z1^" + std::to_string(e1);
  if (dim == 2) s += "*z2^" + std::to_string(e2);
  return s;
}

struct Gen {
  std::mt19937_64 rng;
  const Shape& sh;
  unitl::u64 pn;

  unitl::u64 coeff(bool unit) {
    std::uniform_int_distribution<unitl::u64> dist(1, pn - 1);
    unitl::u64 c = dist(rng);
    while (unit && c % sh.p == 0) c = dist(rng);
    return c;
  }

  // one random monomial exponent vector with all entries >= 1, total <= cap
  void exps(unitl::u32 cap, unitl::u32& e1, unitl::u32& e2) {
    if (sh.dim == 1) {
      e1 = 1 + static_cast<unitl::u32>(rng() % cap);
      e2 = 0;
      return;
    }
    static const unitl::u32 table[3][2] = {{1, 1}, {1, 2}, {2, 1}};
    const unitl::u32 k =
        cap <= 2 ? 0 : static_cast<unitl::u32>(rng() % 3);
    e1 = table[k][0];
    e2 = table[k][1];
  }

  // plain entry: one or two monomials, each of total degree <= 3
  std::string plain(bool unit, bool xcoeff) {
    unitl::u32 e1, e2;
    exps(3, e1, e2);
    std::string s = mono(coeff(unit), e1, e2, sh.dim, xcoeff);
    if (rng() % 2) {
      unitl::u32 f1, f2;
      exps(3, f1, f2);
      if (f1 != e1 || f2 != e2)
        s += "+" + mono(coeff(false), f1, f2, sh.dim, false);
    }
    return s;
  }

  // entry divisible by 1 + z1, expanded: c z^e + c z1 z^e
  std::string amul(bool unit) {
    unitl::u32 e1, e2;
    exps(2, e1, e2);
    unitl::u64 c = coeff(unit);
    return mono(c, e1, e2, sh.dim, false) + "+" +
           mono(c, e1 + 1, e2, sh.dim, false);
  }
};

}  // namespace corpus_detail

inline std::vector<CorpusItem> corpus() {
  using namespace corpus_detail;
  std::vector<CorpusItem> items;
  std::mt19937_64 seed_stream(20260816ULL);
  const auto& all = shapes();
  for (size_t idx = 0; idx < all.size(); ++idx) {
    const Shape& sh = all[idx];
    Gen g{std::mt19937_64(seed_stream()), sh, pow_small(sh.p, sh.precision)};

    unitl::RunConfig cfg;
    cfg.p = sh.p;
    cfg.precision = sh.precision;
    cfg.lambda_pexp = sh.pexp;
    cfg.lambda_modulus = sh.modulus;
    cfg.dim = sh.dim;
    cfg.rank = sh.rank;
    cfg.a = sh.open_locus ? "1+z1" : "1";
    cfg.degree_bound = sh.bound;
    cfg.trace_max = 4;
    cfg.workers = sh.workers;

    const bool deg2_modulus = std::string(sh.modulus).size() > 3;
    if (sh.rank == 1) {
      cfg.matrix = {{sh.open_locus ? g.amul(sh.unit_diag)
                                   : g.plain(sh.unit_diag, false)}};
    } else if (sh.triangular) {
      cfg.matrix = {{g.plain(true, false), g.plain(false, false)},
                    {"0", g.plain(true, false)}};
    } else {
      cfg.matrix = {{g.plain(sh.unit_diag, false),
                     g.plain(false, deg2_modulus)},
                    {g.plain(false, false), g.plain(sh.unit_diag, false)}};
    }

    std::string name = "c" + std::string(idx + 1 < 10 ? "0" : "") +
                       std::to_string(idx + 1) + "-p" +
                       std::to_string(sh.p) + "-d" + std::to_string(sh.dim) +
                       "-r" + std::to_string(sh.rank);
    if (sh.open_locus) name += "-open";
    if (sh.triangular) name += "-tri";

    CorpusItem item;
    item.name = name;
    item.cfg = cfg;
    item.unit_diagonal = sh.unit_diag || sh.triangular;
    items.push_back(std::move(item));
  }
  return items;
}

}  // namespace unitl_test

#endif
