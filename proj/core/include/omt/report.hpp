#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace omt {

class Oml;

enum class Verdict { Pass, Fail, Skipped, OneSided };

std::string_view to_string(Verdict v);

/// A counterexample, rendered with element and time-point names at the point
/// of discovery. `replay` re-evaluates it from scratch and lists every
/// intermediate value.
struct Witness {
  std::vector<std::pair<std::string, std::string>> fields;
  std::function<std::vector<std::string>(const Oml&)> replay;

  std::string summary() const;
};

struct CheckResult {
  std::string name;
  std::string statement;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::uint64_t cases = 0;
  bool exhaustive = true;
  std::optional<Witness> witness;
};

struct VerifyReport {
  std::string suite;
  std::string instance;
  std::vector<CheckResult> checks;

  /// Fail dominates OneSided, which dominates Pass; all-skipped is Skipped.
  Verdict verdict() const;
  bool failed() const { return verdict() == Verdict::Fail; }
  const CheckResult* first_failure() const;
  const CheckResult* find(std::string_view check_name) const;
};

std::string render_text(const VerifyReport& report);
std::string render_json_lines(const VerifyReport& report);

}  // namespace omt
