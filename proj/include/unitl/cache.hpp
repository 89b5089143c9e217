#ifndef UNITL_CACHE_HPP
#define UNITL_CACHE_HPP

// On-disk cache for per-degree partial Euler products, one JSON file per
// (content hash, degree). Entries embed a checksum; anything unreadable,
// mismatched, or stored at a lower bound than requested is recomputed and
// overwritten.

#include <optional>
#include <string>
#include <vector>

#include "unitl/crystal.hpp"

namespace unitl {

struct CachedDelta {
  u32 bound = 0;
  std::vector<std::vector<u64>> da;  // partial product over D(a), T^0..T^bound
  std::vector<std::vector<u64>> za;  // partial product over Z(a)
};

// FNV-1a over a canonical rendering of the ring and crystal data.
std::string crystal_content_hash(const UnitCrystalSpec& c);

u64 fnv1a64(const std::string& s);

std::optional<CachedDelta> cache_load(const std::string& dir,
                                      const std::string& key, u32 delta);
void cache_store(const std::string& dir, const std::string& key, u32 delta,
                 const CachedDelta& entry);

}  // namespace unitl

#endif
