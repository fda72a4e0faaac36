#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace addspec::cli {

// Exit statuses. Every non-zero status comes with a JSON error object on the
// error stream.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMalformedInput = 3;
inline constexpr int kExitOverlappingSupport = 4;
inline constexpr int kExitCheckFailed = 5;
inline constexpr int kExitDomain = 6;

enum class Format { Json, Csv };

struct RunConfig {
  std::string command;  // analyze | gram | construct | solve-oe | demo-collinear
  std::string kind;     // construct: nonoverlap | l-onb | mirror | lev
  std::string space = "L";
  std::optional<std::string> points;
  std::optional<std::string> measure;
  int N = 16;
  int q = 2;
  int depth = 7;
  int k = 1;
  int grid = 400;
  double window = 20.0;
  int anchors = 64;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
  Format format = Format::Json;

  // gram
  std::vector<std::size_t> sizes;
  std::optional<std::string> check;  // "identity"
  std::optional<std::string> test_fn;
  // construct nonoverlap
  std::string base_step = "1/1";
  // solve-oe
  std::optional<std::string> t;
  std::optional<std::string> t_prime;
  bool scan = false;
  bool classify = false;
  std::optional<std::vector<double>> box;
  // demo-collinear
  std::string slope = "1/1";
  std::string g = "const";
  // reports
  bool with_meta = true;
};

/// Runs one command. Reports go to --out when given, else to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs.
int main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace addspec::cli
