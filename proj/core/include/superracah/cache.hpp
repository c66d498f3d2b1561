#pragma once

#include <cstdint>
#include <string>

namespace sr {

// Binary P/Q memo file: magic, format version, then entries.
inline constexpr char kCacheMagic[4] = {'S', 'R', 'P', 'Q'};
inline constexpr std::uint32_t kCacheFormatVersion = 1;

enum class CacheLoad { loaded, missing, mismatched };

// A missing, foreign or outdated file is ignored; the memo is rebuilt on demand.
CacheLoad load_poly_cache(const std::string& path, std::size_t* entries = nullptr);
// Returns the number of entries written.
std::size_t save_poly_cache(const std::string& path);

}  // namespace sr
