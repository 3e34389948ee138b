#include "oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "svt/io.hpp"
#include "svt/numeric.hpp"

namespace svt::cli {
namespace {

constexpr const char* kHost = "oeis.org";

std::optional<BigSequence> parse_text(const std::string& text) {
  try {
    std::istringstream in(text);
    return read_bfile(in);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv(kCacheEnvVar); dir && *dir) return dir;
  return ".svt-cache";
}

HttpsGet make_https_get(std::chrono::seconds timeout) {
  return [timeout](const std::string& host,
                   const std::string& path) -> std::optional<std::string> {
    httplib::SSLClient client(host);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_follow_location(true);
    auto response = client.Get(path);
    if (!response || response->status != 200) return std::nullopt;
    return response->body;
  };
}

std::string bfile_path(const std::string& sequence_id) {
  if (sequence_id.size() < 2 || (sequence_id[0] != 'A' && sequence_id[0] != 'a')) {
    throw UsageError("not an OEIS A-number: " + sequence_id);
  }
  const std::string digits = sequence_id.substr(1);
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw UsageError("not an OEIS A-number: " + sequence_id);
    }
  }
  return "/A" + digits + "/b" + digits + ".txt";
}

std::optional<FetchResult> fetch_bfile(const std::string& sequence_id,
                                       const std::filesystem::path& cache_dir,
                                       const HttpsGet& get) {
  const std::string path = bfile_path(sequence_id);
  const auto cache_file = cache_dir / path.substr(path.rfind('/') + 1);

  if (auto body = get(kHost, path)) {
    if (auto seq = parse_text(*body)) {
      std::error_code ec;
      std::filesystem::create_directories(cache_dir, ec);
      std::ofstream(cache_file, std::ios::binary) << *body;
      return FetchResult{std::move(*seq), false, false};
    }
  }

  std::ifstream cached(cache_file, std::ios::binary);
  if (!cached) return std::nullopt;
  std::ostringstream text;
  text << cached.rdbuf();
  auto seq = parse_text(text.str());
  if (!seq) return std::nullopt;
  return FetchResult{std::move(*seq), true, true};
}

}  // namespace svt::cli
