#pragma once

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "hodgetau/field.hpp"
#include "hodgetau/laurent.hpp"
#include "hodgetau/spectral.hpp"
#include "hodgetau/tpoly.hpp"

namespace hodgetau::jsonio {

// All emitters below write canonical text: containers iterate in their
// deterministic (sorted) order and scalars use the exact textual encoding of
// the coefficient field, so identical inputs produce byte-identical JSON.

inline std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

template <class K>
std::string term_json(const TMono& m, const K& v, std::optional<int> hbar = {}) {
  std::string out = "{";
  if (hbar) out += "\"hbar\": " + std::to_string(*hbar) + ", ";
  out += "\"monomial\": [";
  bool first = true;
  for (const auto& [i, e] : m) {
    if (!first) out += ", ";
    first = false;
    out += "[" + std::to_string(i) + ", " + std::to_string(e) + "]";
  }
  out += "], \"coeff\": " + quote(field_ops<K>::str(v)) + "}";
  return out;
}

template <class K>
std::string to_json(const TPoly<K>& f) {
  std::string out = "[";
  bool first = true;
  for (const auto& [m, v] : f.terms()) {
    if (!first) out += ",\n ";
    first = false;
    out += term_json(m, v);
  }
  return out + "]";
}

template <class K>
std::string to_json(const GradedSeries<K>& f) {
  std::string out = "[";
  bool first = true;
  for (int k = 0; k <= f.depth(); ++k)
    for (const auto& [m, v] : f.level(k).terms()) {
      if (!first) out += ",\n ";
      first = false;
      out += term_json(m, v, k);
    }
  return out + "]";
}

// Ordered exponent/coefficient pairs plus the truncation bound; exact
// series print "trunc": null.
template <class K>
std::string to_json(const Laurent<K>& f) {
  std::string out = "{\"terms\": [";
  bool first = true;
  for (long long n = f.ord(); n < f.stored_hi(); ++n) {
    const K c = f.coeff(n);
    if (c.is_zero()) continue;
    if (!first) out += ", ";
    first = false;
    out += "[" + std::to_string(n) + ", " + quote(field_ops<K>::str(c)) + "]";
  }
  out += "], \"trunc\": ";
  out += f.is_exact() ? "null" : std::to_string(f.trunc());
  return out + "}";
}

template <class K>
std::string to_json(const MultiDiff<K>& w) {
  std::string out = "[";
  bool first = true;
  for (const auto& [key, c] : w.entries()) {
    if (!first) out += ",\n ";
    first = false;
    out += "{\"poles\": [";
    for (size_t i = 0; i < key.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(key[i]);
    }
    out += "], \"coeff\": " + quote(field_ops<K>::str(c)) + "}";
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// On-disk cache: one file per key, content-addressed by a hash of the key
// text. Layout is a single header line {"version": V, "key": K, "sum": H}
// followed by the payload; H is the payload hash. Any header or checksum
// mismatch reads as a miss, so corrupt, tampered or stale entries are
// silently recomputed, never trusted.

inline constexpr int kCacheVersion = 1;

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir, std::string_view key) {
  return dir / (hex64(fnv1a(key)) + ".json");
}

inline std::string cache_header(std::string_view key, std::string_view payload) {
  return "{\"version\": " + std::to_string(kCacheVersion) + ", \"key\": " + quote(key) +
         ", \"sum\": " + quote(hex64(fnv1a(payload))) + "}";
}

inline std::optional<std::string> cache_read(const std::filesystem::path& dir,
                                             std::string_view key) {
  std::ifstream in(cache_file(dir, key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::ostringstream rest;
  rest << in.rdbuf();
  std::string payload = rest.str();
  if (!payload.empty() && payload.back() == '\n') payload.pop_back();
  if (header != cache_header(key, payload)) return std::nullopt;
  return payload;
}

// Returns false on any IO failure; the caller falls back to recomputing.
inline bool cache_write(const std::filesystem::path& dir, std::string_view key,
                        std::string_view payload) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path final = cache_file(dir, key);
  const std::filesystem::path tmp =
      final.string() + ".tmp" + std::to_string(static_cast<long>(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << cache_header(key, payload) << "\n" << payload << "\n";
    if (!out.good()) return false;
  }
  std::filesystem::rename(tmp, final, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

// Cache directory resolution: explicit flag beats the environment; empty
// means caching is off.
inline std::filesystem::path default_cache_dir() {
  const char* env = std::getenv("HODGE_CACHE_DIR");
  return env ? std::filesystem::path(env) : std::filesystem::path();
}

}  // namespace hodgetau::jsonio
