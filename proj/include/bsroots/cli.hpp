#pragma once

// Command dispatch behind the bsroots tool. A JobConfig names a ring, an
// ideal and a command; run() computes and renders the report.
//
// Exit codes: 0 success, 1 precondition or unsupported input, 2 parse
// error, 3 an example verification that did not match.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bsroots {

enum class Command { Jumps, Roots, Thresholds, Fpt, Nu, TestIdeal, Fjn, VerifyExample };
enum class Format { Json, Csv, Text };

Command parse_command(const std::string& text);
Format parse_format(const std::string& text);

struct JobConfig {
  Command command = Command::Jumps;
  std::string ring;
  std::string ideal;
  /// Single level for `jumps`; otherwise the top level E. Defaults to the
  /// engine's default verification level (3 for most presentations).
  std::optional<unsigned> level;
  /// Candidate denominator bound B (default ceil(E / 2)).
  std::optional<unsigned> denominator_bound;
  /// "lo:hi"; defaults follow the roots / thresholds policies.
  std::optional<std::string> interval;
  std::optional<std::string> lambda;
  /// Ideal c for `nu`; the ideal of the variables by default.
  std::optional<std::string> target;
  /// "f" or "cartier" for `nu`.
  std::string nu_kind = "f";
  unsigned e_max = 4;
  Format format = Format::Json;
  /// `verify-example` inputs.
  std::string example;
  std::optional<std::uint32_t> p;
  std::uint64_t n = 4;
};

struct RunResult {
  int exit_code = 0;
  std::string output;       // report, newline terminated
  std::string diagnostics;  // human-readable error text, empty on success
};

RunResult run(const JobConfig& config);

struct ExampleCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct ExampleReport {
  std::string id;
  std::uint32_t p = 0;
  bool pass = true;
  std::vector<ExampleCheck> checks;
};

/// Recomputes one of the worked examples 9.2 .. 9.8 at the prime p and
/// compares with the stored expectations. Throws PreconditionError when p
/// does not satisfy the example's hypothesis.
ExampleReport verify_example(const std::string& id, std::uint32_t p, std::uint64_t n = 4);

}  // namespace bsroots
