#include <map>
#include <sstream>

#include "sylow/verify.hpp"

namespace sylow {

using nlohmann::json;

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"group",      "structure",    "steenrod", "psi",
                                                 "degrees",    "invariance",   "certificates", "oracle",
                                                 "norms",      "cpm",          "examples"};
  return names;
}

namespace {

const char* h_mutation_name(HMutationKind k) {
  switch (k) {
    case HMutationKind::None: return "none";
    case HMutationKind::SignFlip: return "sign-flip";
    case HMutationKind::IndexShift: return "index-shift";
  }
  return "?";
}

FormulaMutation parse_formula_mutation(const std::string& s) {
  if (s == "none") return FormulaMutation::None;
  for (auto m : all_mutations())
    if (s == mutation_name(m)) return m;
  throw Error(Errc::ConfigInvalid, "unknown mutation '" + s + "'");
}

HMutationKind parse_h_mutation(const std::string& s) {
  for (auto k : {HMutationKind::None, HMutationKind::SignFlip, HMutationKind::IndexShift})
    if (s == h_mutation_name(k)) return k;
  throw Error(Errc::ConfigInvalid, "unknown h mutation '" + s + "'");
}

}  // namespace

json RunConfig::to_json() const {
  json sp = json::array();
  for (const auto& s : specs) sp.push_back(spec_json(s));
  json j = {{"specs", sp}, {"suites", suites}, {"seed", seed}};
  if (mutation != FormulaMutation::None) j["mutation"] = mutation_name(mutation);
  if (h_mutation.kind != HMutationKind::None)
    j["h_mutation"] = {{"kind", h_mutation_name(h_mutation.kind)}, {"k", h_mutation.k}, {"term", h_mutation.term}};
  return j;
}

RunConfig default_config() {
  RunConfig cfg;
  for (Family f : all_families())
    for (int m : {1, 2})
      for (int q : {2, 3}) cfg.specs.push_back(make_spec(f, m, q));
  cfg.suites = {suite_names().begin(), suite_names().end()};
  return cfg;
}

std::set<std::string> parse_suite_list(const std::string& csv) {
  std::set<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(suite_names().begin(), suite_names().end(), item) == suite_names().end())
      throw Error(Errc::ConfigInvalid, "unknown suite '" + item + "'");
    out.insert(item);
  }
  if (out.empty()) throw Error(Errc::ConfigInvalid, "empty suite list");
  return out;
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw Error(Errc::ConfigInvalid, "config must be an object");
  RunConfig cfg;
  try {
    if (j.contains("specs")) {
      for (const auto& s : j.at("specs"))
        cfg.specs.push_back(make_spec(parse_family(s.at("family").get<std::string>()), s.at("m").get<int>(),
                                      s.at("q").get<int>()));
    } else {
      cfg.specs = default_config().specs;
    }
    if (j.contains("suites")) {
      for (const auto& s : j.at("suites")) {
        const auto one = parse_suite_list(s.get<std::string>());
        cfg.suites.insert(one.begin(), one.end());
      }
    } else {
      cfg.suites = {suite_names().begin(), suite_names().end()};
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("mutation")) cfg.mutation = parse_formula_mutation(j.at("mutation").get<std::string>());
    if (j.contains("h_mutation")) {
      const auto& h = j.at("h_mutation");
      cfg.h_mutation.kind = parse_h_mutation(h.at("kind").get<std::string>());
      cfg.h_mutation.k = h.value("k", 1);
      cfg.h_mutation.term = h.value("term", 0);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::ConfigInvalid) throw;
    throw Error(Errc::ConfigInvalid, e.what());
  } catch (const json::exception& e) {
    throw Error(Errc::ConfigInvalid, e.what());
  }
  return cfg;
}

Report suite_runner(const RunConfig& cfg) {
  Report rep;
  auto want = [&](const char* s) { return cfg.suites.count(s) > 0; };
  for (const auto& spec : cfg.specs) {
    if (want("group")) rep.merge(group_suite(spec, cfg.seed, cfg.mutation));
    if (want("invariance")) rep.merge(invariance_suite(spec, cfg.h_mutation));
    if (want("certificates")) rep.merge(certificate_suite(spec));
    if (want("oracle")) rep.merge(oracle_suite(spec));
  }
  // Field-level suites once per acting field, in order of first appearance.
  std::vector<FieldPtr> fields;
  for (const auto& spec : cfg.specs) {
    bool seen = false;
    for (const auto& f : fields) seen = seen || same_field(*f, *spec.field);
    if (!seen) fields.push_back(spec.field);
  }
  for (const auto& F : fields) {
    if (want("steenrod")) rep.merge(steenrod_suite(F, cfg.seed));
    if (want("psi")) rep.merge(psi_suite(F, cfg.seed));
    if (want("degrees")) rep.merge(degree_table_suite(F));
  }
  if (want("structure")) rep.merge(structure_suite(cfg.seed));
  if (want("norms")) rep.merge(norm_suite());
  if (want("cpm")) rep.merge(cpm_scan_suite());
  if (want("examples")) rep.merge(examples_suite());
  return rep;
}

}  // namespace sylow
