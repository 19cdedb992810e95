#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ffhyper::cli {

inline constexpr const char* kVersion = "ffhyper 0.1.0";
inline constexpr const char* kSchema = "ffhyper/1";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::string> fields;
  std::vector<std::string> polys;
  std::size_t k = 2;
  std::optional<std::size_t> m;
  std::optional<std::size_t> s;
  unsigned d = 2;
  std::uint64_t seed = 0;
  unsigned workers = 0;
  std::uint64_t budget_tuples = std::uint64_t{1} << 36;
  std::uint64_t budget_mem = std::uint64_t{1} << 23;  // bytes of edge bitset
  std::uint64_t budget_nodes = std::uint64_t{1} << 26;
  std::string format = "json";
  std::string out;
  std::string cache_dir;
  std::string method = "direct";
  bool paley = false;
  std::vector<std::string> only;
  std::size_t samples = 50;
  std::string a = "1";

  /// Everything that affects the output, in a fixed order.
  std::string cache_key_text() const;
};

struct CommandResult {
  int exit_code = kOk;
  std::string output;
};

/// Executes a parsed configuration without touching the cache.
CommandResult execute(const RunConfig& config);

/// Full front end: argument parsing, cache, output file, error mapping.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Result cache: one file per key holding a version stamp line and the output.
std::string cache_key(const RunConfig& config);
std::optional<std::string> cache_load(const std::string& dir, const std::string& key);
void cache_store(const std::string& dir, const std::string& key, const std::string& output);

}  // namespace ffhyper::cli
