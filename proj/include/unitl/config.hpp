#ifndef UNITL_CONFIG_HPP
#define UNITL_CONFIG_HPP

// Config file format and the pipeline builder. Files are a small TOML
// subset: [ring] / [crystal] / [run] sections, integer and quoted-string
// values, and one nested string array for the matrix. The builder turns a
// parsed config into the ring tower, the crystal over the local algebra,
// its flat lift in normal form, and the chosen twist.

#include <string>
#include <vector>

#include "unitl/crystal.hpp"

namespace unitl {

struct RunConfig {
  // [ring]
  u64 p = 0;
  u32 precision = 0;  // 0 means lambda_pexp + 2
  u32 lambda_pexp = 1;
  std::string lambda_modulus = "x";
  // [crystal]
  u32 dim = 1;
  u32 rank = 1;
  std::string a = "1";
  u32 m_denom = 0;
  std::vector<std::vector<std::string>> matrix;
  // [run]
  u32 degree_bound = 4;
  u32 trace_max = 4;
  u32 workers = 1;
  std::string cache_dir;
  std::string strat_b = "1";
};

RunConfig parse_run_config(const std::string& text);

struct Pipeline {
  RunConfig cfg;
  FlatLift lift;
  CrystalPair pair;      // normal-form crystal over both rings, twist set
  LaurentPoly strat_b;   // over the lift, for the stratification check
};

Pipeline build_pipeline(const RunConfig& cfg);

// read the file, parse it, build the tower
Pipeline run_config(const std::string& path);

}  // namespace unitl

#endif
