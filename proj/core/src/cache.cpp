#include "superracah/cache.hpp"

#include <cstring>
#include <fstream>
#include <vector>

#include "superracah/osp.hpp"

namespace sr {

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

bool get_u32(std::istream& in, std::uint32_t& v) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) return false;
  v = b[0] | (b[1] << 8) | (b[2] << 16) | (std::uint32_t(b[3]) << 24);
  return true;
}

void put_str(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

bool get_str(std::istream& in, std::string& s) {
  std::uint32_t n;
  if (!get_u32(in, n) || n > (1u << 24)) return false;
  s.resize(n);
  return static_cast<bool>(in.read(s.data(), n));
}

}  // namespace

CacheLoad load_poly_cache(const std::string& path, std::size_t* entries) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return CacheLoad::missing;
  char magic[4];
  std::uint32_t version = 0, count = 0;
  if (!in.read(magic, 4) || std::memcmp(magic, kCacheMagic, 4) != 0) return CacheLoad::mismatched;
  if (!get_u32(in, version) || version != kCacheFormatVersion) return CacheLoad::mismatched;
  if (!get_u32(in, count)) return CacheLoad::mismatched;
  std::vector<osp::PolyCacheEntry> out;
  out.reserve(count);
  try {
    for (std::uint32_t i = 0; i < count; ++i) {
      osp::PolyCacheEntry e;
      char kind;
      if (!in.get(kind) || (kind != 'P' && kind != 'Q')) return CacheLoad::mismatched;
      e.kind = kind;
      std::uint32_t k[5];
      for (auto& x : k)
        if (!get_u32(in, x)) return CacheLoad::mismatched;
      e.key = {int(k[0]), int(k[1]), int(k[2])};
      if (k[4] > 1 || k[3] > 4096) return CacheLoad::mismatched;
      e.poly = BiHomPoly(int(k[3]), int(k[4]));
      for (int m = 0; m <= int(k[3]); ++m) {
        std::string s;
        if (!get_str(in, s)) return CacheLoad::mismatched;
        e.poly.set(m, parse_rational(s));
      }
      out.push_back(std::move(e));
    }
  } catch (const std::exception&) {
    return CacheLoad::mismatched;
  }
  osp::import_poly_cache(out);
  if (entries) *entries = out.size();
  return CacheLoad::loaded;
}

std::size_t save_poly_cache(const std::string& path) {
  auto entries = osp::export_poly_cache();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write cache '" + path + "'");
  out.write(kCacheMagic, 4);
  put_u32(out, kCacheFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(entries.size()));
  for (const auto& e : entries) {
    out.put(e.kind);
    for (int x : e.key) put_u32(out, static_cast<std::uint32_t>(x));
    put_u32(out, static_cast<std::uint32_t>(e.poly.degree()));
    put_u32(out, static_cast<std::uint32_t>(e.poly.d0_power()));
    for (int m = 0; m <= e.poly.degree(); ++m) put_str(out, to_string(e.poly[m]));
  }
  return entries.size();
}

}  // namespace sr
