#include "unitl/config.hpp"

#include <fstream>
#include <sstream>

#include "unitl/laurent.hpp"

namespace unitl {

// ------------------------------------------------------------- file format

namespace {

[[noreturn]] void bad(size_t line, const std::string& what) {
  fail(errc::syntax_error, what + " at line " + std::to_string(line));
}

std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int bracket_balance(const std::string& s) {
  int bal = 0;
  bool quoted = false;
  for (char ch : s) {
    if (ch == '"') quoted = !quoted;
    if (quoted) continue;
    if (ch == '[') ++bal;
    if (ch == ']') --bal;
  }
  return bal;
}

i64 parse_int_value(const std::string& v, size_t line) {
  if (v.empty()) bad(line, "empty value");
  size_t i = (v[0] == '-' || v[0] == '+') ? 1 : 0;
  if (i == v.size()) bad(line, "expected an integer");
  for (size_t j = i; j < v.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(v[j])))
      bad(line, "expected an integer, got '" + v + "'");
  if (v.size() > 18) bad(line, "integer too large");
  return std::stoll(v);
}

std::string parse_string_value(const std::string& v, size_t line) {
  if (v.size() < 2 || v.front() != '"' || v.back() != '"')
    bad(line, "expected a quoted string, got '" + v + "'");
  std::string inner = v.substr(1, v.size() - 2);
  if (inner.find('"') != std::string::npos)
    bad(line, "stray quote inside string");
  return inner;
}

// [["...", "..."], ["...", "..."]]
std::vector<std::vector<std::string>> parse_matrix_value(const std::string& v,
                                                         size_t line) {
  std::vector<std::vector<std::string>> rows;
  size_t i = 0;
  auto ws = [&] {
    while (i < v.size() &&
           std::isspace(static_cast<unsigned char>(v[i])))
      ++i;
  };
  auto expect = [&](char ch) {
    ws();
    if (i >= v.size() || v[i] != ch)
      bad(line, std::string("expected '") + ch + "' in matrix value");
    ++i;
  };
  expect('[');
  ws();
  while (i < v.size() && v[i] != ']') {
    expect('[');
    std::vector<std::string> row;
    ws();
    while (i < v.size() && v[i] != ']') {
      ws();
      if (i >= v.size() || v[i] != '"')
        bad(line, "matrix entries must be quoted strings");
      size_t end = v.find('"', i + 1);
      if (end == std::string::npos) bad(line, "unterminated string");
      row.push_back(v.substr(i + 1, end - i - 1));
      i = end + 1;
      ws();
      if (i < v.size() && v[i] == ',') {
        ++i;
        ws();
      }
    }
    expect(']');
    rows.push_back(std::move(row));
    ws();
    if (i < v.size() && v[i] == ',') {
      ++i;
      ws();
    }
  }
  expect(']');
  ws();
  if (i != v.size()) bad(line, "trailing text after matrix value");
  return rows;
}

u32 to_u32(i64 v, const std::string& key, size_t line) {
  if (v < 0 || v > 1000000) bad(line, "value out of range for " + key);
  return static_cast<u32>(v);
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  RunConfig cfg;
  bool have_p = false, have_matrix = false;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']' &&
        line.find('=') == std::string::npos) {
      section = trim(line.substr(1, line.size() - 2));
      if (section != "ring" && section != "crystal" && section != "run")
        bad(line_no, "unknown section '" + section + "'");
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) bad(line_no, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    size_t key_line = line_no;
    int bal = bracket_balance(val);
    while (bal > 0 && std::getline(in, raw)) {
      ++line_no;
      std::string more = trim(strip_comment(raw));
      val += " " + more;
      bal = bracket_balance(val);
    }
    if (bal != 0) bad(key_line, "unbalanced brackets in value");
    if (section.empty()) bad(key_line, "key outside any section");

    if (section == "ring") {
      if (key == "p") {
        cfg.p = static_cast<u64>(
            std::max<i64>(0, parse_int_value(val, key_line)));
        have_p = true;
      } else if (key == "precision") {
        cfg.precision = to_u32(parse_int_value(val, key_line), key, key_line);
      } else if (key == "lambda_pexp") {
        cfg.lambda_pexp =
            to_u32(parse_int_value(val, key_line), key, key_line);
      } else if (key == "lambda_modulus") {
        cfg.lambda_modulus = parse_string_value(val, key_line);
      } else {
        bad(key_line, "unknown key '" + key + "' in [ring]");
      }
    } else if (section == "crystal") {
      if (key == "dim") {
        cfg.dim = to_u32(parse_int_value(val, key_line), key, key_line);
      } else if (key == "rank") {
        cfg.rank = to_u32(parse_int_value(val, key_line), key, key_line);
      } else if (key == "a") {
        cfg.a = parse_string_value(val, key_line);
      } else if (key == "m_denom") {
        cfg.m_denom = to_u32(parse_int_value(val, key_line), key, key_line);
      } else if (key == "matrix") {
        cfg.matrix = parse_matrix_value(val, key_line);
        have_matrix = true;
      } else {
        bad(key_line, "unknown key '" + key + "' in [crystal]");
      }
    } else {
      if (key == "degree_bound") {
        cfg.degree_bound =
            to_u32(parse_int_value(val, key_line), key, key_line);
      } else if (key == "trace_max") {
        cfg.trace_max = to_u32(parse_int_value(val, key_line), key, key_line);
      } else if (key == "workers") {
        cfg.workers = to_u32(parse_int_value(val, key_line), key, key_line);
      } else if (key == "cache_dir") {
        cfg.cache_dir = parse_string_value(val, key_line);
      } else if (key == "strat_b") {
        cfg.strat_b = parse_string_value(val, key_line);
      } else {
        bad(key_line, "unknown key '" + key + "' in [run]");
      }
    }
  }
  require(have_p, errc::syntax_error, "config is missing [ring] p");
  require(have_matrix, errc::syntax_error,
          "config is missing [crystal] matrix");
  return cfg;
}

// ---------------------------------------------------------------- builder

static bool small_prime(u64 p) {
  if (p < 2) return false;
  for (u64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Pipeline build_pipeline(const RunConfig& cfg) {
  require(small_prime(cfg.p) && cfg.p <= 13, errc::syntax_error,
          "p must be a prime at most 13");
  require(cfg.lambda_pexp >= 1 && cfg.lambda_pexp <= 8, errc::syntax_error,
          "lambda_pexp must be in 1..8");
  const u32 N = cfg.precision ? cfg.precision : cfg.lambda_pexp + 2;
  require(N >= cfg.lambda_pexp && N <= 20, errc::precision_mismatch,
          "precision must be in lambda_pexp..20");
  {
    u128 m = 1;
    for (u32 i = 0; i < N; ++i) m *= cfg.p;
    require(m < (static_cast<u128>(1) << 62), errc::precision_mismatch,
            "p^precision too large for exact coordinates");
  }
  require(cfg.dim >= 1 && cfg.dim <= 3, errc::syntax_error,
          "dim must be in 1..3");
  require(cfg.rank >= 1 && cfg.rank <= 4, errc::syntax_error,
          "rank must be in 1..4");
  require(cfg.matrix.size() == cfg.rank, errc::syntax_error,
          "matrix must have rank rows");
  for (const auto& row : cfg.matrix)
    require(row.size() == cfg.rank, errc::syntax_error,
            "matrix rows must have rank entries");
  require(cfg.degree_bound >= 1 && cfg.degree_bound <= 12,
          errc::syntax_error, "degree_bound must be in 1..12");
  require(cfg.trace_max >= 1 && cfg.trace_max <= 8, errc::syntax_error,
          "trace_max must be in 1..8");
  require(cfg.workers >= 1 && cfg.workers <= 16, errc::syntax_error,
          "workers must be in 1..16");

  Pipeline pl;
  pl.cfg = cfg;
  std::vector<i64> g = parse_x_polynomial(cfg.lambda_modulus);
  RingPtr lambda = make_local_algebra(cfg.p, N, cfg.lambda_pexp, g);
  pl.lift = make_flat_lift(lambda, N);

  UnitCrystalSpec base;
  base.ring = lambda;
  base.dim = cfg.dim;
  base.rank = cfg.rank;
  base.m_denom = cfg.m_denom;
  base.a = parse_laurent(cfg.a, lambda, cfg.dim);
  base.matrix.reserve(static_cast<size_t>(cfg.rank) * cfg.rank);
  for (const auto& row : cfg.matrix)
    for (const auto& s : row)
      base.matrix.push_back(parse_laurent(s, lambda, cfg.dim));

  if (crystal_is_prenormalized(base)) {
    base.denominators_cleared = true;
    base.monomial_twisted = true;
  } else {
    base = monomial_twist(normalize_denominators(base));
  }

  pl.pair = lift_crystal(base, pl.lift);
  pl.pair.lifted = choose_sheaf_twist(pl.pair.lifted);
  pl.pair.lambda_crystal.u = pl.pair.lifted.u;
  pl.pair.lambda_crystal.u_set = true;

  pl.strat_b = parse_laurent(cfg.strat_b, pl.lift.lambda_tilde, cfg.dim);
  return pl;
}

Pipeline run_config(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), errc::syntax_error,
          "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return build_pipeline(parse_run_config(ss.str()));
}

}  // namespace unitl
