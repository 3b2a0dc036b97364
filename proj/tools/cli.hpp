#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistlab/cochain.hpp"
#include "twistlab/io.hpp"

namespace twistlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

enum class Format { json, text };

struct JobSpec {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::string> output;
  std::optional<CochainMode> mode;       // overrides the cochain's own mode
  std::vector<std::size_t> taus;         // character subset; empty means all
  std::optional<double> tolerance;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::json;
  std::optional<int> degree;             // cohomology degree
};

struct RunResult {
  int exit_code = kExitOk;
  Json report;
};

const std::vector<std::string>& commands();

/// Never throws: failures become a report with an "error" object and exit code 1, 2 or 3.
RunResult run(const JobSpec& job);

/// JSON is pretty-printed with sorted keys; text is an indented key/value listing.
std::string render(const RunResult& result, Format format);

}  // namespace twistlab::cli
