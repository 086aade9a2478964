#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <stdexcept>
#include <sstream>
#include <string>

#include "pcat/closure.hpp"

namespace pcat {

/// Bump whenever the closure algorithm or file layout changes; old entries
/// then stop matching and are recomputed.
inline constexpr const char* kEngineVersion = "pcat-closure-1";

inline std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

struct CacheKey {
  std::string canonical;  // everything the result depends on, as text
  std::string hex;        // FNV-1a of canonical
};

inline CacheKey cache_key(const GeneratorSet& g, int max_legs, int slack) {
  std::ostringstream os;
  os << kEngineVersion << '\n'
     << "n " << g.dim << " mode " << to_string(g.mode) << " max_legs " << max_legs << " slack " << slack
     << '\n';
  write_sparse(os, g.duality);
  os << "generators " << g.generators.size() << '\n';
  for (const auto& t : g.generators) write_sparse(os, t);
  CacheKey k;
  k.canonical = os.str();
  k.hex = hex64(fnv1a(k.canonical));
  return k;
}

/// PCAT_CACHE_DIR when set, otherwise the given fallback.
inline std::filesystem::path default_cache_dir(const std::filesystem::path& fallback = ".pcat-cache") {
  if (const char* env = std::getenv("PCAT_CACHE_DIR"); env && *env) return env;
  return fallback;
}

namespace detail {

inline std::string serialize_result(const CacheKey& key, const ClosureResult& r) {
  std::ostringstream os;
  os << "pcat-cache\n" << key.canonical << "end-key\n";
  os << "saturated " << r.saturated << " iterations " << r.iterations << " spaces " << r.spaces.size() << '\n';
  for (const auto& [s, b] : r.spaces) {
    os << "space " << s.in << ' ' << s.out << ' ' << b.dimension() << '\n';
    for (const auto& e : b.elements()) write_sparse(os, e);
  }
  return os.str();
}

inline ClosureResult parse_result(const CacheKey& key, std::string_view body, const GeneratorSet& g,
                                  int max_legs, int slack) {
  const std::string head = "pcat-cache\n" + key.canonical + "end-key\n";
  if (body.substr(0, head.size()) != head) throw ParseError("cache key text differs", 0);
  std::istringstream is{std::string(body.substr(head.size()))};
  ClosureResult r;
  r.mode = g.mode;
  r.dim = g.dim;
  r.max_legs = max_legs;
  r.slack = slack;
  std::string w1, w2, w3;
  std::size_t count = 0;
  if (!(is >> w1 >> r.saturated >> w2 >> r.iterations >> w3 >> count) || w1 != "saturated" ||
      w2 != "iterations" || w3 != "spaces")
    throw ParseError("bad cache summary line", 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::string tag;
    Signature s;
    std::size_t dim = 0;
    if (!(is >> tag >> s.in >> s.out >> dim) || tag != "space") throw ParseError("bad space header", i);
    std::vector<SparseOperator> elems;
    for (std::size_t j = 0; j < dim; ++j) {
      elems.push_back(read_sparse(is));
      if (elems.back().dim() != g.dim || signature_of(elems.back()) != s)
        throw ParseError("cached element has the wrong shape", j);
    }
    r.spaces.emplace(s, HomSpaceBasis::from_reduced(g.dim, s, std::move(elems)));
  }
  return r;
}

}  // namespace detail

enum class CacheOutcome { hit, miss, corrupt };

struct CachedClosure {
  ClosureResult result;
  CacheOutcome outcome = CacheOutcome::miss;
  bool stored = false;
  std::filesystem::path file;
};

/// Loads a cached closure. A missing file is a miss; an unreadable or
/// inconsistent one is reported as corrupt and removed.
inline std::optional<ClosureResult> cache_get(const std::filesystem::path& dir, const GeneratorSet& g,
                                              int max_legs, int slack, CacheOutcome* outcome = nullptr) {
  const auto key = cache_key(g, max_legs, slack);
  const auto file = dir / (key.hex + ".pcat");
  auto set = [&](CacheOutcome o) {
    if (outcome) *outcome = o;
  };
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    set(CacheOutcome::miss);
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  const std::string text = buf.str();
  try {
    const auto tail = text.rfind("checksum ");
    if (tail == std::string::npos) throw ParseError("missing checksum", 0);
    const std::string body = text.substr(0, tail);
    std::string stored = text.substr(tail + 9);
    while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
    if (stored != hex64(fnv1a(body))) throw ParseError("checksum mismatch", tail);
    auto r = detail::parse_result(key, body, g, max_legs, slack);
    set(CacheOutcome::hit);
    return r;
  } catch (const std::exception&) {
    std::error_code ec;
    std::filesystem::remove(file, ec);
    set(CacheOutcome::corrupt);
    return std::nullopt;
  }
}

/// Writes through a temporary file and a rename. A lock file taken with
/// exclusive create keeps concurrent writers apart; if the lock is held the
/// write is skipped and false returned. IO failures throw with the path.
inline bool cache_put(const std::filesystem::path& dir, const GeneratorSet& g, int max_legs, int slack,
                      const ClosureResult& r) {
  const auto key = cache_key(g, max_legs, slack);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir.string() + ": " + ec.message());
  const auto lock = dir / (key.hex + ".lock");
  std::FILE* lf = std::fopen(lock.c_str(), "wx");
  if (!lf) return false;
  std::fclose(lf);
  const auto tmp = dir / (key.hex + ".tmp");
  const auto file = dir / (key.hex + ".pcat");
  const std::string body = detail::serialize_result(key, r);
  std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
  out << body << "checksum " << hex64(fnv1a(body)) << '\n';
  out.close();
  std::string failure;
  if (!out) {
    failure = "cannot write cache file " + tmp.string();
  } else {
    std::filesystem::rename(tmp, file, ec);
    if (ec) failure = "cannot move cache file to " + file.string() + ": " + ec.message();
  }
  std::error_code ignore;
  if (!failure.empty()) std::filesystem::remove(tmp, ignore);
  std::filesystem::remove(lock, ignore);
  if (!failure.empty()) throw std::runtime_error(failure);
  return true;
}

/// close() behind the cache. Only saturated results are stored.
inline CachedClosure close_cached(const GeneratorSet& g, int max_legs, int slack,
                                  const std::filesystem::path& dir) {
  CachedClosure out;
  out.file = dir / (cache_key(g, max_legs, slack).hex + ".pcat");
  if (auto hit = cache_get(dir, g, max_legs, slack, &out.outcome)) {
    out.result = std::move(*hit);
    return out;
  }
  out.result = close(g, max_legs, slack);
  if (out.result.saturated) out.stored = cache_put(dir, g, max_legs, slack, out.result);
  return out;
}

}  // namespace pcat
