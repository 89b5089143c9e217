// Acceptance gate: every committed numeric claim of the project, each at its
// stated tolerance, which is exact equality of residues mod (p^N, T^(B+1)).
// One pass/fail line per criterion; the exit status is the number of failed
// criteria. Time budgets are part of the criteria that state them.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "test_util.hpp"
#include "unitl/config.hpp"
#include "unitl/verify.hpp"

using namespace unitl;
using unitl_test::CorpusItem;
using unitl_test::thrown_code;

namespace {

int g_failed = 0;

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void criterion(const char* name, double limit_ms,
               const std::function<bool(std::string&)>& body) {
  const double t0 = now_ms();
  std::string note;
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = std::string("exception: ") + e.what();
  }
  const double dt = now_ms() - t0;
  if (ok && limit_ms > 0 && dt > limit_ms) {
    ok = false;
    note += " (over the " + std::to_string(static_cast<long>(limit_ms)) +
            " ms budget)";
  }
  std::printf("%s  %-34s %9.1f ms  %s\n", ok ? "PASS" : "FAIL", name, dt,
              note.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

std::string cfg_path(const char* name) {
  return std::string(UNITL_CONFIG_DIR) + "/" + name;
}

Series ints_to_series(const RingPtr& R, const std::vector<i64>& v, u32 B) {
  Series s = series_zero(R, B);
  for (u32 i = 0; i <= B && i < v.size(); ++i) s.c[i] = from_int(R, v[i]);
  return s;
}

struct Built {
  CorpusItem item;
  Pipeline pl;
  DworkMatrix dm;
};

EulerOptions options_for(const RunConfig& cfg) {
  EulerOptions opt;
  opt.workers = cfg.workers;
  return opt;
}

}  // namespace

int main() {
  std::printf("acceptance gate, exact equality mod (p^N, T^(B+1))\n");
  std::vector<Built> built;  // filled by criterion 4, reused afterwards

  criterion("1 coordinate example p=2", 1000, [&](std::string& note) {
    Pipeline pl = run_config(cfg_path("coordinate.toml"));
    const RingPtr& R = pl.lift.lambda_tilde;
    DworkMatrix dm = dwork_matrix(pl.pair.lifted);
    bool ok = pl.pair.lifted.u == 2;
    ok = ok && poly_eq(dm.P, poly_from_coeffs(R, {one(R), neg(one(R))}));
    Series ep = euler_product(pl.pair.lifted, point_region::gm, 3);
    ok = ok && series_eq(ep, ints_to_series(R, {1, 1, 2, 4}, 3));
    Series rhs = series_mul(poly_to_series(dm.P, 3),
                            series_inverse(ints_to_series(R, {1, -2}, 3)));
    ok = ok && series_eq(ep, rhs);  // (1 - T)/(1 - 2T)
    VerificationReport rep = check_prop_4_16(pl.pair.lifted, dm.P, 3);
    ok = ok && rep.status == check_status::pass;
    note = "P = 1 - T, product (1 - T)/(1 - 2T), identity holds";
    return ok;
  });

  criterion("2 collapsing example p=3", 1000, [&](std::string& note) {
    Pipeline pl = run_config(cfg_path("coordinate3.toml"));
    const RingPtr& R = pl.lift.lambda_tilde;
    DworkMatrix dm = dwork_matrix(pl.pair.lifted);
    bool ok = pl.pair.lifted.u == 1;
    ok = ok && dm.size == 0 && poly_is_one(dm.P);
    Series ep = euler_product(pl.pair.lifted, point_region::gm, 3);
    ok = ok && series_eq(ep, series_one(R, 3));
    VerificationReport rep = check_prop_4_16(pl.pair.lifted, dm.P, 3);
    ok = ok && rep.status == check_status::pass;
    note = "empty basis, P = 1, product = 1 mod T^4";
    return ok;
  });

  criterion("3 structure ratio over Z/4", 0, [&](std::string& note) {
    Pipeline pl = run_config(cfg_path("coordinate_z4.toml"));
    DworkMatrix dm = dwork_matrix(pl.pair.lifted);
    VerificationReport rep = check_theorem_1_5(pl.pair, dm, 3);
    bool ok = rep.status == check_status::pass;  // exact d=1 certificate
    auto [p_unit, p_nil] = unit_nil_split(dm);
    Series q = change_ring(katz_ratio(pl.pair.lifted, p_unit, 3),
                           pl.lift.lambda, pl.lift);
    const RingPtr& L = pl.lift.lambda;
    ok = ok && eq(q.c[0], one(L)) && eq(q.c[1], from_int(L, 2)) &&
         eq(q.c[2], zero(L));
    note = "ratio = 1 + 2T mod (4, T^3), " + rep.detail;
    return ok;
  });

  criterion("4 randomized product identity", 60000, [&](std::string& note) {
    std::vector<std::string> bad;
    for (const CorpusItem& item : unitl_test::corpus()) {
      Built b{item, build_pipeline(item.cfg), {}};
      b.dm = dwork_matrix(b.pl.pair.lifted);
      VerificationReport rep =
          check_prop_4_16(b.pl.pair.lifted, b.dm.P, item.cfg.degree_bound,
                          options_for(item.cfg));
      if (rep.status != check_status::pass) bad.push_back(item.name);
      built.push_back(std::move(b));
    }
    note = std::to_string(built.size()) + " crystals";
    if (!bad.empty()) note += ", first failure " + bad.front();
    return bad.empty() && built.size() >= 20;
  });

  criterion("5 power trace identity", 30000, [&](std::string& note) {
    std::vector<std::string> bad;
    for (const Built& b : built) {
      VerificationReport rep =
          check_trace_identity(b.pl.pair.lifted, b.dm, 4);
      if (rep.status != check_status::pass) bad.push_back(b.item.name);
    }
    note = "powers 1..4 on " + std::to_string(built.size()) + " crystals";
    if (!bad.empty()) note += ", first failure " + bad.front();
    return bad.empty() && !built.empty();
  });

  criterion("6 torus zeta sanity", 0, [&](std::string& note) {
    bool ok = true;
    for (u64 p : {2, 3, 5})
      for (u32 d : {1, 2})
        ok = ok && zeta_sanity(p, d, 6).status == check_status::pass;
    note = "d = 1, 2 over p = 2, 3, 5 at B = 6";
    return ok;
  });

  criterion("7 property suites", 0, [&](std::string& note) {
    std::string failed;

    // Teichmueller multiplicativity and sigma compatibility
    bool teich_ok = true;
    for (u64 p : {2, 3, 5})
      for (u32 dl = 1; dl <= 3; ++dl) {
        Fq k(fp_first_irreducible(p, dl));
        RingPtr W = make_witt_ring(p, 3, dl);
        std::vector<Elt> tv;
        tv.push_back(zero(W));
        for (u64 x = 1; x < k.q(); ++x) tv.push_back(teichmuller(W, x));
        for (u64 x = 1; x < k.q(); ++x) {
          teich_ok = teich_ok &&
                     eq(witt_frobenius(tv[x], 1), tv[k.frob(x)]);
          for (u64 y = x; y < k.q(); ++y)
            teich_ok = teich_ok && eq(mul(tv[x], tv[y]), tv[k.mul(x, y)]);
        }
      }
    if (!teich_ok) failed += " teichmueller";

    // local factors stay scalar (coercion never throws) with constant 1
    bool local_ok = true;
    try {
      for (const Built& b : built)
        for (u32 dl = 1; dl <= 2; ++dl)
          for (const ClosedPoint& pt : enumerate_closed_points(
                   b.item.cfg.p, b.item.cfg.dim, dl, b.pl.pair.lifted.a)) {
            Poly f = local_factor(b.pl.pair.lifted, pt);
            local_ok = local_ok && eq(f.c[0], one(b.pl.lift.lambda_tilde));
          }
    } catch (const error&) {
      local_ok = false;
    }
    if (!local_ok) failed += " local-factors";

    // stratification multiplicativity for three choices of b
    bool strat_ok = true;
    {
      Pipeline pl = run_config(cfg_path("open_locus.toml"));
      u32 workers = 1;
      for (const char* bs : {"1", "z+1", "z"}) {
        LaurentPoly b = parse_laurent(bs, pl.lift.lambda_tilde, 1);
        strat_ok = strat_ok &&
                   check_stratification(pl.pair.lifted, b, 4, workers).ok();
        workers = workers == 1 ? 2 : 1;
      }
    }
    if (!strat_ok) failed += " stratification";

    // Hensel split multiplies back, nil factor 1 mod the maximal ideal
    bool split_ok = true;
    for (const Built& b : built) {
      auto [p_unit, p_nil] = unit_nil_split(b.dm);
      split_ok = split_ok && poly_eq(poly_trim(poly_mul(p_unit, p_nil)),
                                     poly_trim(b.dm.P));
      split_ok =
          split_ok && eq(p_nil.c[0], one(b.pl.lift.lambda_tilde));
      for (int i = 1; i <= p_nil.deg(); ++i)
        split_ok = split_ok && is_in_maximal_ideal(p_nil.c[i]);
    }
    if (!split_ok) failed += " hensel-split";

    // specialization down the tower: ratio = 1 mod the maximal ideal
    bool spec_ok = true;
    for (const Built& b : built) {
      auto [p_unit, p_nil] = unit_nil_split(b.dm);
      Series q_tilde =
          katz_ratio(b.pl.pair.lifted, p_unit, b.item.cfg.degree_bound,
                     options_for(b.item.cfg));
      Series q = change_ring(q_tilde, b.pl.lift.lambda, b.pl.lift);
      spec_ok = spec_ok && maximal_ideal_report("specialization", q).ok();
    }
    if (!spec_ok) failed += " specialization";

    note = failed.empty()
               ? "teichmueller, local factors, stratification, hensel "
                 "split, specialization"
               : "failed:" + failed;
    return failed.empty();
  });

  criterion("8 negative controls", 0, [&](std::string& note) {
    bool ok = true;

    // tampered characteristic polynomial: the ratio is not a polynomial
    Pipeline pl = run_config(cfg_path("coordinate_z4.toml"));
    DworkMatrix bad = dwork_matrix(pl.pair.lifted);
    const RingPtr& R = pl.lift.lambda_tilde;
    bad.P = poly_from_coeffs(R, {one(R), from_int(R, -3)});
    VerificationReport rep = check_theorem_1_5(pl.pair, bad, 3);
    ok = ok && !rep.ok() && rep.code == errc::not_polynomial &&
         rep.has_witness && rep.witness_index == 1;

    // unit coefficient where the maximal ideal is required
    RingPtr L4 = make_local_algebra(2, 2, 2, {0, 1});
    Series s = series_one(L4, 2);
    s.c[1] = one(L4);
    VerificationReport mi = maximal_ideal_report("control", s);
    ok = ok && !mi.ok() &&
         mi.code == errc::coefficient_not_in_maximal_ideal &&
         mi.witness_index == 1;
    Series s0 = series_one(L4, 2);
    s0.c[0] = from_int(L4, 3);
    VerificationReport mi0 = maximal_ideal_report("control", s0);
    ok = ok && !mi0.ok() && mi0.witness_index == 0;

    // reducible residue modulus is rejected as not local
    RunConfig cfg;
    cfg.p = 2;
    cfg.precision = 3;
    cfg.lambda_pexp = 1;
    cfg.lambda_modulus = "x^2+x";
    cfg.matrix = {{"z"}};
    ok = ok && thrown_code([&] { build_pipeline(cfg); }) == errc::not_local;

    // malformed inputs surface as syntax errors
    ok = ok && thrown_code([] { parse_run_config("p = 2\n"); }) ==
                   errc::syntax_error;
    RunConfig cfg2 = cfg;
    cfg2.lambda_modulus = "x";
    cfg2.matrix = {{"2z"}};
    ok = ok &&
         thrown_code([&] { build_pipeline(cfg2); }) == errc::syntax_error;

    // failure classification: identity failures exit 1, config errors 2
    ok = ok && errc_is_verification(errc::mismatch) &&
         errc_is_verification(errc::not_polynomial) &&
         errc_is_verification(errc::coefficient_not_in_maximal_ideal) &&
         !errc_is_verification(errc::not_local) &&
         !errc_is_verification(errc::syntax_error);

    note = "tamper, ideal, not-local, syntax, classification";
    return ok;
  });

  std::printf("%d of 8 criteria failed\n", g_failed);
  return g_failed ? 1 : 0;
}
