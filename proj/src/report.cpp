#include "sylow/report.hpp"

#include <chrono>

namespace sylow {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

void Report::add(CheckResult r) {
  if (r.status == Status::Fail && r.witness.is_null()) r.witness = "no witness recorded";
  results_.push_back(std::move(r));
}

void Report::merge(const Report& other) {
  results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

void Report::run(const std::string& id, const nlohmann::json& params, const CheckFn& fn) {
  CheckResult r;
  r.check_id = id;
  r.params = params;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    auto w = fn();
    if (w) {
      r.status = Status::Fail;
      r.witness = *w;
    }
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.witness = {{"error", errc_name(e.code())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.witness = {{"error", "exception"}, {"message", e.what()}};
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  add(std::move(r));
}

void Report::skip(const std::string& id, const nlohmann::json& params, const std::string& reason) {
  CheckResult r;
  r.check_id = id;
  r.params = params;
  r.status = Status::Skipped;
  r.witness = {{"reason", reason}};
  add(std::move(r));
}

std::size_t Report::count(Status s) const {
  std::size_t c = 0;
  for (const auto& r : results_) c += r.status == s;
  return c;
}

std::vector<const CheckResult*> Report::with_prefix(const std::string& prefix) const {
  std::vector<const CheckResult*> out;
  for (const auto& r : results_)
    if (r.check_id.rfind(prefix, 0) == 0) out.push_back(&r);
  return out;
}

nlohmann::json Report::summary() const {
  return {{"total", results_.size()},
          {"pass", count(Status::Pass)},
          {"fail", count(Status::Fail)},
          {"skipped", count(Status::Skipped)},
          {"ok", ok()}};
}

nlohmann::json Report::to_json(const nlohmann::json& config, bool timing) const {
  nlohmann::json cfg = config;
  cfg["action_convention"] = kActionConvention;
  nlohmann::json res = nlohmann::json::array();
  for (const auto& r : results_) {
    nlohmann::json j = {{"check_id", r.check_id}, {"spec", r.params}, {"status", status_name(r.status)}};
    if (!r.witness.is_null()) j["witness"] = r.witness;
    if (timing) j["wall_time"] = r.wall_time;
    res.push_back(std::move(j));
  }
  return {{"version", kReportVersion}, {"config", cfg}, {"results", res}, {"summary", summary()}};
}

nlohmann::json spec_json(const GroupSpec& spec) {
  return {{"family", family_name(spec.family)}, {"m", spec.m}, {"q", spec.q}, {"n", spec.n}};
}

nlohmann::json poly_witness(const MultiPoly& expected, const MultiPoly& got) {
  const MultiPoly diff = got - expected;
  nlohmann::json w = {{"expected_terms", expected.size()}, {"got_terms", got.size()}, {"difference_terms", diff.size()}};
  if (diff.size() <= 12) w["difference"] = diff.to_string();
  else w["difference_leading"] = MultiPoly::from_terms(diff.ctx(), diff.nvars(), {diff.terms()[0]}).to_string();
  return w;
}

}  // namespace sylow
