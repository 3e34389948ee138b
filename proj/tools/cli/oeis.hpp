#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "svt/sequence.hpp"

namespace svt::cli {

/// Environment variable that overrides the b-file cache directory.
inline constexpr const char* kCacheEnvVar = "SVT_CACHE_DIR";

std::filesystem::path default_cache_dir();

/// GET https://host/path; nullopt on any network or HTTP failure.
using HttpsGet = std::function<std::optional<std::string>(const std::string& host,
                                                          const std::string& path)>;

HttpsGet make_https_get(std::chrono::seconds timeout = std::chrono::seconds(20));

/// "A271905" -> "/A271905/b271905.txt".
std::string bfile_path(const std::string& sequence_id);

struct FetchResult {
  BigSequence sequence;
  /// The network request failed and the cached copy was used.
  bool network_failed = false;
  bool from_cache = false;
};

/// Downloads the b-file for sequence_id, stores it in cache_dir, and parses
/// it. On network failure falls back to the cached copy; returns nullopt
/// when neither is available.
std::optional<FetchResult> fetch_bfile(const std::string& sequence_id,
                                       const std::filesystem::path& cache_dir,
                                       const HttpsGet& get);

}  // namespace svt::cli
