#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylow/groups.hpp"

namespace sylow {

inline constexpr const char* kReportVersion = "1.0";
inline constexpr const char* kActionConvention = "f o M: x_i -> sum_j M[i][j] x_j (substitution by the rows of M)";

enum class Status { Pass, Fail, Skipped };
const char* status_name(Status s);

struct CheckResult {
  std::string check_id;
  nlohmann::json params;  // the spec or the suite parameters
  Status status = Status::Pass;
  nlohmann::json witness;  // always set on failure
  double wall_time = 0;    // seconds
};

// A check body returns nullopt on success and a witness on failure.
using CheckFn = std::function<std::optional<nlohmann::json>()>;

class Report {
 public:
  void add(CheckResult r);
  void merge(const Report& other);
  // Runs `fn`, timing it. Exceptions become failures carrying the error text.
  void run(const std::string& id, const nlohmann::json& params, const CheckFn& fn);
  void skip(const std::string& id, const nlohmann::json& params, const std::string& reason);

  const std::vector<CheckResult>& results() const { return results_; }
  std::size_t count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
  // Results whose id starts with `prefix`.
  std::vector<const CheckResult*> with_prefix(const std::string& prefix) const;

  nlohmann::json summary() const;
  // {version, config, results, summary}; wall times only with `timing`.
  nlohmann::json to_json(const nlohmann::json& config, bool timing) const;

 private:
  std::vector<CheckResult> results_;
};

nlohmann::json spec_json(const GroupSpec& spec);
nlohmann::json poly_witness(const MultiPoly& expected, const MultiPoly& got);

}  // namespace sylow
