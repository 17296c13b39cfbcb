#include <gtest/gtest.h>

#include "sylow/caps.hpp"
#include "sylow/verify.hpp"

using namespace sylow;
using nlohmann::json;

TEST(Report, FailureCarriesWitness) {
  Report rep;
  rep.run("a", json::object(), [] { return std::optional<json>(); });
  rep.run("b", json::object(), []() -> std::optional<json> { throw Error(Errc::OutOfRange, "x"); });
  rep.add({"c", json::object(), Status::Fail, json(), 0});
  rep.skip("d", json::object(), "why");
  EXPECT_EQ(rep.count(Status::Pass), 1u);
  EXPECT_EQ(rep.count(Status::Fail), 2u);
  EXPECT_EQ(rep.count(Status::Skipped), 1u);
  for (const auto& r : rep.results())
    if (r.status == Status::Fail) {
      EXPECT_FALSE(r.witness.is_null());
    }
  const json j = rep.to_json(json::object(), false);
  for (const char* k : {"version", "config", "results", "summary"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["config"]["action_convention"], kActionConvention);
  EXPECT_FALSE(rep.ok());
}

TEST(Runner, SuiteSelection) {
  RunConfig cfg;
  cfg.specs = {make_spec(Family::Sp, 2, 3)};
  cfg.suites = {"steenrod"};
  const Report rep = suite_runner(cfg);
  EXPECT_GT(rep.results().size(), 0u);
  for (const auto& r : rep.results()) EXPECT_EQ(r.check_id.rfind("steenrod.", 0), 0u) << r.check_id;
  EXPECT_TRUE(rep.ok());
}

TEST(Runner, Deterministic) {
  RunConfig cfg;
  cfg.specs = {make_spec(Family::GuEven, 2, 2), make_spec(Family::OMinus, 2, 2)};
  cfg.suites = {"group", "invariance", "certificates", "psi"};
  const std::string a = suite_runner(cfg).to_json(cfg.to_json(), false).dump();
  const std::string b = suite_runner(cfg).to_json(cfg.to_json(), false).dump();
  EXPECT_EQ(a, b);
}

TEST(Runner, ParseConfig) {
  const RunConfig cfg = parse_config(json::parse(R"({"specs":[{"family":"sp","m":2,"q":3}],"suites":["group"],"seed":5})"));
  EXPECT_EQ(cfg.specs.size(), 1u);
  EXPECT_EQ(cfg.seed, 5u);
  EXPECT_EQ(cfg.suites, std::set<std::string>{"group"});
  for (const char* bad : {R"([1])", R"({"suites":["nope"]})", R"({"specs":[{"family":"sp","m":2,"q":6}]})",
                          R"({"specs":[{"family":"xx","m":2,"q":3}]})", R"({"specs":[{"m":2}]})",
                          R"({"mutation":"bogus"})"}) {
    try {
      parse_config(json::parse(bad));
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::ConfigInvalid) << bad;
    }
  }
  EXPECT_THROW(parse_suite_list("group,,bogus"), Error);
}

TEST(Caps, Parse) {
  const Caps c = parse_caps("enumeration=16384,dimension=5");
  EXPECT_EQ(c.enumeration, 16384u);
  EXPECT_EQ(c.dimension, 5u);
  EXPECT_THROW(parse_caps("enumeration"), Error);
  EXPECT_THROW(parse_caps("bogus=1"), Error);
  EXPECT_THROW(parse_caps("orbit=1x"), Error);
}

TEST(Certificate, SmallGrid) {
  for (auto [f, m, q] : {std::tuple{Family::GuEven, 2, 2}, {Family::OPlus, 2, 2}, {Family::OMinus, 2, 2},
                         {Family::Sp, 1, 3}, {Family::GuOdd, 1, 2}}) {
    const Certificate c = certificate_field_generation(make_spec(f, m, q));
    EXPECT_TRUE(c.verdict) << c.to_json().dump();
  }
  const Certificate op = certificate_field_generation(make_spec(Family::OPlus, 2, 2));
  ASSERT_EQ(op.descent.size(), 4u);
  EXPECT_EQ(op.descent[1].expected, "swap");
  EXPECT_EQ(op.descent[2].expected, "swap");
  const Certificate om = certificate_field_generation(make_spec(Family::OMinus, 2, 2));
  EXPECT_FALSE(om.literal_invariant);
}

TEST(Certificate, Sigma2Identities) {
  for (int s : {1, 2, 3}) {
    const FieldPtr F = Field::make(2, s);
    EXPECT_TRUE(sigma2_swap_identity(F, 8));
    EXPECT_TRUE(sigma2_shear_identity(F, 8));
  }
}

TEST(Mutation, HMutantsFail) {
  const GroupSpec spec = make_spec(Family::Sp, 3, 3);
  for (auto kind : {HMutationKind::SignFlip, HMutationKind::IndexShift}) {
    const Report rep = invariance_suite(spec, {kind, 1, 0});
    EXPECT_FALSE(rep.ok());
    for (const auto& r : rep.results())
      if (r.status == Status::Fail) {
        EXPECT_FALSE(r.witness.is_null());
      }
  }
}
