// Command line front end: loads a config, builds the ring tower and the
// normal-form crystal, and runs one of the pipelines. Reports are JSON on
// stdout. Exit 0 means every requested check passed, 1 means a verification
// check failed, 2 means the input or environment was unusable.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "unitl/config.hpp"
#include "unitl/verify.hpp"

using nlohmann::ordered_json;
using namespace unitl;

namespace {

struct Common {
  std::string config;
  u32 bound = 0;
  u32 precision = 0;
  u32 workers = 0;
  std::string cache_dir;
};

void add_common(CLI::App* sc, Common& c) {
  sc->add_option("-c,--config", c.config, "config file")->required();
  sc->add_option("-B,--bound", c.bound, "series degree bound override");
  sc->add_option("-N,--precision", c.precision,
                 "working precision override");
  sc->add_option("-w,--workers", c.workers, "worker thread override");
  sc->add_option("--cache", c.cache_dir, "cache directory override");
}

Pipeline load_pipeline(const Common& c, RunConfig& cfg) {
  std::ifstream in(c.config);
  require(static_cast<bool>(in), errc::syntax_error,
          "cannot read config file '" + c.config + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  cfg = parse_run_config(ss.str());
  if (c.bound) cfg.degree_bound = c.bound;
  if (c.precision) cfg.precision = c.precision;
  if (c.workers) cfg.workers = c.workers;
  if (!c.cache_dir.empty()) cfg.cache_dir = c.cache_dir;
  return build_pipeline(cfg);
}

EulerOptions make_options(const RunConfig& cfg) {
  EulerOptions opt;
  opt.workers = cfg.workers;
  opt.cache_dir = cfg.cache_dir;
  return opt;
}

ordered_json json_elt(const Elt& a) {
  if (a.c.size() == 1) return a.c[0];
  return ordered_json(a.c);
}

ordered_json json_series(const Series& s) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : s.c) arr.push_back(json_elt(e));
  return arr;
}

ordered_json json_poly(const Poly& f) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : f.c) arr.push_back(json_elt(e));
  return arr;
}

ordered_json json_report(const VerificationReport& r) {
  ordered_json j;
  j["check"] = r.check;
  j["status"] = check_status_name(r.status);
  j["detail"] = r.detail;
  if (r.status == check_status::fail) j["code"] = errc_name(r.code);
  if (r.has_witness) {
    j["witness"] = {{"index", r.witness_index},
                    {"lhs", r.witness_lhs},
                    {"rhs", r.witness_rhs}};
  }
  return j;
}

ordered_json json_header(const std::string& command, const RunConfig& cfg,
                         const Pipeline& pl) {
  ordered_json j;
  j["command"] = command;
  j["p"] = cfg.p;
  j["precision"] = pl.lift.lambda_tilde->precision;
  j["lambda_pexp"] = cfg.lambda_pexp;
  j["dim"] = cfg.dim;
  j["rank"] = cfg.rank;
  j["twist"] = pl.pair.lifted.u;
  return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_euler(const Common& c, const std::string& region) {
  RunConfig cfg;
  Pipeline pl = load_pipeline(c, cfg);
  point_region reg = region == "da"  ? point_region::d_of_a
                     : region == "za" ? point_region::z_of_a
                                      : point_region::gm;
  Series s = euler_product(pl.pair.lifted, reg, cfg.degree_bound,
                           make_options(cfg));
  ordered_json j = json_header("euler", cfg, pl);
  j["region"] = region;
  j["bound"] = cfg.degree_bound;
  j["coefficients"] = json_series(s);
  emit(j);
  return 0;
}

int cmd_dwork(const Common& c, u32 traces) {
  RunConfig cfg;
  Pipeline pl = load_pipeline(c, cfg);
  DworkMatrix dm = dwork_matrix(pl.pair.lifted);
  auto [p_unit, p_nil] = unit_nil_split(dm);
  ordered_json j = json_header("dwork", cfg, pl);
  j["size"] = dm.size;
  j["basis"] = dm.betas;
  j["reciprocal_char_poly"] = json_poly(dm.P);
  j["unit_factor"] = json_poly(p_unit);
  j["nil_factor"] = json_poly(p_nil);
  const u32 n_max = traces ? traces : cfg.trace_max;
  ordered_json tr = ordered_json::array();
  for (u32 n = 1; n <= n_max; ++n)
    tr.push_back(json_elt(trace_power(dm, n)));
  j["power_traces"] = tr;
  emit(j);
  return 0;
}

int cmd_zeta(const Common& c) {
  RunConfig cfg;
  Pipeline pl = load_pipeline(c, cfg);
  VerificationReport rep = zeta_sanity(cfg.p, cfg.dim, cfg.degree_bound);
  ordered_json j = json_header("zeta", cfg, pl);
  j["report"] = json_report(rep);
  emit(j);
  return rep.ok() ? 0 : 1;
}

int cmd_lift(const Common& c) {
  RunConfig cfg;
  Pipeline pl = load_pipeline(c, cfg);
  const UnitCrystalSpec& lc = pl.pair.lambda_crystal;
  const UnitCrystalSpec& lf = pl.pair.lifted;
  ordered_json j = json_header("lift", cfg, pl);
  j["denominators_cleared"] = lf.denominators_cleared;
  j["monomial_twisted"] = lf.monomial_twisted;
  j["kernel_exponent"] = pl.lift.kernel_exponent;
  j["a"] = print_laurent(lf.a);
  ordered_json rows = ordered_json::array();
  for (u32 i = 0; i < lf.rank; ++i) {
    ordered_json row = ordered_json::array();
    for (u32 k = 0; k < lf.rank; ++k) row.push_back(print_laurent(lf.at(i, k)));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  ordered_json lrows = ordered_json::array();
  for (u32 i = 0; i < lc.rank; ++i) {
    ordered_json row = ordered_json::array();
    for (u32 k = 0; k < lc.rank; ++k) row.push_back(print_laurent(lc.at(i, k)));
    lrows.push_back(row);
  }
  j["matrix_residue_side"] = lrows;
  UnitCheckReport rep = validate_unit_on_points(lf, 2);
  ordered_json nu = ordered_json::array();
  bool broken = false;
  for (const auto& e : rep.nonunits) {
    nu.push_back({{"delta", e.delta},
                  {"coords", e.coords},
                  {"on_zero_locus", e.on_zero_locus}});
    if (!e.on_zero_locus) broken = true;
  }
  j["unit_check"] = {{"points_checked", rep.points_checked},
                     {"nonunits", nu}};
  emit(j);
  // off-locus nonunits mean the input is not actually a unit crystal
  return broken ? 2 : 0;
}

int cmd_verify(const Common& c, const std::string& what) {
  RunConfig cfg;
  Pipeline pl = load_pipeline(c, cfg);
  EulerOptions opt = make_options(cfg);
  VerificationReport rep;
  if (what == "prop416") {
    DworkMatrix dm = dwork_matrix(pl.pair.lifted);
    rep = check_prop_4_16(pl.pair.lifted, dm.P, cfg.degree_bound, opt);
  } else if (what == "katz") {
    DworkMatrix dm = dwork_matrix(pl.pair.lifted);
    rep = check_theorem_1_5(pl.pair, dm, cfg.degree_bound, opt);
  } else if (what == "trace") {
    DworkMatrix dm = dwork_matrix(pl.pair.lifted);
    rep = check_trace_identity(pl.pair.lifted, dm, cfg.trace_max);
  } else {
    rep = check_stratification(pl.pair.lifted, pl.strat_b, cfg.degree_bound,
                               cfg.workers);
  }
  ordered_json j = json_header("verify", cfg, pl);
  j["report"] = json_report(rep);
  emit(j);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two-sided L-function engine for unit crystals on the "
               "open torus"};
  app.require_subcommand(1);

  Common c_euler, c_dwork, c_zeta, c_lift, c_verify;
  std::string region = "gm";
  u32 traces = 0;
  std::string what;

  CLI::App* sc_euler =
      app.add_subcommand("euler", "point-side Euler product");
  add_common(sc_euler, c_euler);
  sc_euler->add_option("--region", region, "gm, da, or za")
      ->check(CLI::IsMember({"gm", "da", "za"}));

  CLI::App* sc_dwork = app.add_subcommand(
      "dwork", "operator matrix, characteristic polynomial, factors");
  add_common(sc_dwork, c_dwork);
  sc_dwork->add_option("--traces", traces, "power traces to report");

  CLI::App* sc_zeta =
      app.add_subcommand("zeta", "torus point-count sanity check");
  add_common(sc_zeta, c_zeta);

  CLI::App* sc_lift =
      app.add_subcommand("lift", "normal form and lift diagnostics");
  add_common(sc_lift, c_lift);

  CLI::App* sc_verify = app.add_subcommand("verify", "run one identity check");
  add_common(sc_verify, c_verify);
  sc_verify->add_option("what", what, "katz, prop416, trace, or strat")
      ->required()
      ->check(CLI::IsMember({"katz", "prop416", "trace", "strat"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // usage problems are config errors
  }

  try {
    if (sc_euler->parsed()) return cmd_euler(c_euler, region);
    if (sc_dwork->parsed()) return cmd_dwork(c_dwork, traces);
    if (sc_zeta->parsed()) return cmd_zeta(c_zeta);
    if (sc_lift->parsed()) return cmd_lift(c_lift);
    return cmd_verify(c_verify, what);
  } catch (const error& e) {
    ordered_json j;
    j["error"] = errc_name(e.code());
    j["message"] = e.what();
    std::cerr << j.dump(2) << "\n";
    return errc_is_verification(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
