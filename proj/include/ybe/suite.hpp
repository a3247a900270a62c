#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ybe {

struct Step {
  int criterion = 0;  // acceptance criterion number, 0 for module checks
  std::string name;
  bool passed = false;
  std::int64_t micros = 0;
  std::string witness;
};

// `STEP <name> PASS|FAIL <micros> [witness]` per step.
struct RunReport {
  std::vector<Step> steps;

  bool passed() const;
  std::string format(bool timings = true) const;
};

std::string format_step(Step const& s, bool timings = true);

// Runs `body`, which returns an empty string on success and a witness
// otherwise; library errors become failures carrying the message. Fails
// as well when `limit_micros` is set and exceeded.
Step timed_step(int criterion, std::string name, std::function<std::string()> const& body,
                std::optional<std::int64_t> limit_micros = std::nullopt);

struct SuiteOptions {
  bool full = false;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out;  // artifacts and report.txt
  std::ostream* live = nullptr;              // steps echoed as they finish
  // Swaps two entries of one action row of the named instance before it
  // is verified.
  std::optional<std::string> inject_fault;
};

RunReport run_suite(SuiteOptions const& options);

}  // namespace ybe
