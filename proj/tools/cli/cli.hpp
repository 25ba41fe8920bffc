#pragma once

// Request dispatch and report assembly for the padyn command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "padyn/error.hpp"

namespace padyn::cli {

using json = nlohmann::ordered_json;

struct Request {
  std::string command;
  long p = 0;
  std::optional<long> N;
  std::string a;
  std::string poly;
  /// f (f_N), g (g_N) or h (h_N) when no --poly is given.
  std::string map = "f";
  std::string x;
  std::string domain = "all";
  std::string theorem;
  std::uint64_t seed = 1;
  int precision = 40;
  int level = 1;
  std::optional<int> depth;
  std::optional<long> n_max;
  int iterations = 60;
  long samples = 100;
  std::optional<long> K;
  std::optional<int> L;
  std::optional<int> s;
  std::string output = "json";
};

inline const char* const kCommands[] = {"analyze", "orbit",    "cycles",   "decompose",
                                        "repeller", "verify", "binomial", "hensel"};

std::string_view version() noexcept;

/// PADYN_PRECISION if set to a positive integer, else 40.
int default_precision();

json request_json(const Request& req);

/// Full report: request echo, verdict, result, evidence, timing, version.
json run(const Request& req);

json error_report(ErrorCode code, std::string_view message);

/// 0 for PASS/OK verdicts, 1 for FAIL.
int exit_code(const json& report);
/// 2 for ParseError, 3 for InternalInconsistency, 1 otherwise.
int exit_code(ErrorCode code);

std::string render_text(const json& report);

/// The report with timing_ms removed, for comparisons.
json without_timing(json report);

}  // namespace padyn::cli
