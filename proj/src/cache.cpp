#include "unitl/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "unitl/laurent.hpp"

namespace unitl {

u64 fnv1a64(const std::string& s) {
  u64 h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

static std::string hex16(u64 v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

std::string crystal_content_hash(const UnitCrystalSpec& c) {
  std::ostringstream os;
  const Ring& R = *c.ring;
  os << "kind:" << static_cast<int>(R.kind) << ";p:" << R.p
     << ";precision:" << R.precision << ";cexp:" << R.cexp << ";modulus:";
  for (u64 m : R.modulus) os << m << ",";
  os << ";dim:" << c.dim << ";rank:" << c.rank << ";mden:" << c.m_denom
     << ";cleared:" << c.denominators_cleared
     << ";twisted:" << c.monomial_twisted << ";u:" << (c.u_set ? c.u : 0)
     << ";a:" << print_laurent(c.a) << ";entries:";
  for (const auto& f : c.matrix) os << print_laurent(f) << "|";
  return hex16(fnv1a64(os.str()));
}

static std::string entry_digest(const std::string& key, u32 delta,
                                const CachedDelta& e) {
  std::ostringstream os;
  os << key << ";" << delta << ";" << e.bound << ";";
  for (const auto& v : e.da) {
    for (u64 x : v) os << x << ",";
    os << "/";
  }
  os << ";";
  for (const auto& v : e.za) {
    for (u64 x : v) os << x << ",";
    os << "/";
  }
  return os.str();
}

static std::string cache_path(const std::string& dir, const std::string& key,
                              u32 delta) {
  return dir + "/" + key + "-d" + std::to_string(delta) + ".json";
}

std::optional<CachedDelta> cache_load(const std::string& dir,
                                      const std::string& key, u32 delta) {
  std::ifstream in(cache_path(dir, key, delta));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    CachedDelta e;
    if (j.at("hash").get<std::string>() != key) return std::nullopt;
    if (j.at("delta").get<u32>() != delta) return std::nullopt;
    e.bound = j.at("bound").get<u32>();
    e.da = j.at("da").get<std::vector<std::vector<u64>>>();
    e.za = j.at("za").get<std::vector<std::vector<u64>>>();
    if (j.at("checksum").get<std::string>() !=
        hex16(fnv1a64(entry_digest(key, delta, e))))
      return std::nullopt;
    return e;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void cache_store(const std::string& dir, const std::string& key, u32 delta,
                 const CachedDelta& entry) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  nlohmann::ordered_json j;
  j["hash"] = key;
  j["delta"] = delta;
  j["bound"] = entry.bound;
  j["da"] = entry.da;
  j["za"] = entry.za;
  j["checksum"] = hex16(fnv1a64(entry_digest(key, delta, entry)));
  std::ofstream out(cache_path(dir, key, delta));
  if (out) out << j.dump(1) << "\n";
}

}  // namespace unitl
