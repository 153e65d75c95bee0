#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace discfrac {

/// One identity of the discrete fractional calculus, run as a randomized check.
struct IdentityCheck {
  std::string id;
  std::string description;
  std::string generator;  ///< input distribution, human readable
  double tolerance = 1e-9;
  int trials = 200;
};

enum class Verdict { pass, fail };

struct VerificationReport {
  std::string id;
  int trials = 0;
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  nlohmann::json worst_input;  ///< serialized spec + grid function (or scalars)
  Verdict verdict = Verdict::pass;
};

/// |lhs - rhs| / max(|lhs|, |rhs|, 1); non-finite inputs give +inf.
double relative_error(double lhs, double rhs) noexcept;

const std::vector<IdentityCheck>& registry();
/// Throws Error{unknown_id}.
const IdentityCheck& find_check(const std::string& id);

/// Deterministic in (check.id, seed).
VerificationReport run_check(const IdentityCheck& check, std::uint64_t seed);
VerificationReport run_check(const std::string& id, std::uint64_t seed);

/// Runs `ids` in order, or the whole registry when `ids` is empty.
std::vector<VerificationReport> run_suite(const std::vector<std::string>& ids, std::uint64_t seed);
bool all_passed(const std::vector<VerificationReport>& reports) noexcept;

nlohmann::json to_json(const VerificationReport& report);
/// One compact JSON object, no trailing newline.
std::string to_jsonl(const VerificationReport& report);

}  // namespace discfrac
