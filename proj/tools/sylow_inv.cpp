#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sylow/caps.hpp"
#include "sylow/verify.hpp"

using namespace sylow;
using nlohmann::json;

namespace {

json matrix_json(const Matrix& M) { return json::parse(M.to_json_string()); }

json group_dump(const GroupSpec& spec) {
  json j = spec_json(spec);
  j["action_convention"] = kActionConvention;
  const FormData form = form_of(spec);
  j["form"] = {{"X", matrix_json(form.X)}};
  if (form.Q) j["form"]["Q"] = form.Q->to_string();
  if (form.a) j["form"]["a"] = spec.field->to_string(*form.a);
  j["order"] = group_order(spec).str();
  j["classical_order_p_part"] = p_part(classical_order(spec), spec.p).str();
  json fs = json::array();
  for (const auto& F : fblk_form_solutions(spec)) fs.push_back(matrix_json(F));
  j["fblk_form_solutions"] = fs;
  json used = json::array();
  for (const auto& F : fblk_solutions(spec)) used.push_back(matrix_json(F));
  j["fblk_used"] = used;
  json gens = json::array();
  for (const auto& g : generators(spec, true)) gens.push_back(matrix_json(g));
  j["generators"] = gens;
  if (spec.has_descent()) j["descent_generator"] = matrix_json(descent_generator(spec));
  const GeneratorList gl = field_generators(spec);
  j["theorem_list"] = gl.labels;
  j["h_definitions"] = gl.h_defs;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant fields of Sylow p-subgroups of classical groups"};
  app.require_subcommand(1);

  std::string family;
  int m = 1, q = 2;
  std::string suites, out, config_path, mutate, h_mutate;
  std::uint64_t seed = 1;
  bool timing = false;
  int h_k_index = 1, h_term = 0;
  auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  verify->add_option("--family", family, "gu-even|gu-odd|sp|o-plus|o-minus|o-odd; the default grid when absent");
  verify->add_option("--m", m, "rank parameter");
  verify->add_option("--q", q, "prime power");
  verify->add_option("--suites", suites, "comma-separated subset of the suites");
  verify->add_option("--out", out, "report path (stdout when absent)");
  verify->add_option("--config", config_path, "JSON config file; replaces --family/--m/--q");
  verify->add_option("--seed", seed, "seed for the random checks");
  verify->add_flag("--timing", timing, "include wall times in the report");
  verify->add_option("--mutate", mutate, "corrupt one block of the group formulas");
  verify->add_option("--mutate-h", h_mutate, "corrupt h_k: sign-flip or index-shift");
  verify->add_option("--mutate-k", h_k_index, "which h_k to corrupt");
  verify->add_option("--mutate-term", h_term, "which term of h_k to corrupt");

  auto* group = app.add_subcommand("group", "group commands");
  auto* dump = group->add_subcommand("dump", "print the form, F-block set and generators");
  group->require_subcommand(1);
  dump->add_option("--family", family)->required();
  dump->add_option("--m", m)->required();
  dump->add_option("--q", q)->required();

  std::string kind = "omega";
  int s = 0, j = 1, n = 4;
  std::string lambda = "0";
  auto* poly = app.add_subcommand("poly", "polynomial commands");
  auto* show = poly->add_subcommand("show", "print Omega, Gamma or Lambda");
  poly->require_subcommand(1);
  show->add_option("--kind", kind, "omega|gamma|lambda")->required();
  show->add_option("--s", s)->required();
  show->add_option("--j", j, "Omega sign, +1 or -1");
  show->add_option("--lambda", lambda, "element code of lambda");
  show->add_option("--n", n)->required();
  show->add_option("--q", q, "field size; Lambda is built over GF(q^2)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    load_caps_from_env();
    if (verify->parsed()) {
      RunConfig cfg;
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw Error(Errc::ConfigInvalid, "cannot read " + config_path);
        json j;
        try {
          j = json::parse(in);
        } catch (const json::exception& e) {
          throw Error(Errc::ConfigInvalid, e.what());
        }
        cfg = parse_config(j);
      } else {
        cfg = default_config();
        if (!family.empty()) cfg.specs = {make_spec(parse_family(family), m, q)};
        cfg.seed = seed;
      }
      if (!suites.empty()) cfg.suites = parse_suite_list(suites);
      if (!mutate.empty() || !h_mutate.empty()) {
        json c = cfg.to_json();
        if (!mutate.empty()) c["mutation"] = mutate;
        if (!h_mutate.empty()) c["h_mutation"] = {{"kind", h_mutate}, {"k", h_k_index}, {"term", h_term}};
        cfg = parse_config(c);
      }
      cfg.timing = timing;
      const Report rep = suite_runner(cfg);
      const std::string text = rep.to_json(cfg.to_json(), cfg.timing).dump(2) + "\n";
      if (out.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(out);
        f << text;
      }
      const json sum = rep.summary();
      std::cerr << "pass " << sum["pass"] << " fail " << sum["fail"] << " skipped " << sum["skipped"] << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (dump->parsed()) {
      std::cout << group_dump(make_spec(parse_family(family), m, q)).dump(2) << "\n";
      return 0;
    }
    if (show->parsed()) {
      const auto [p, e] = prime_power(q);
      FamilyParams fp;
      FieldPtr K;
      if (kind == "omega") {
        fp.kind = FamilyKind::Omega;
        K = Field::make(p, e);
      } else if (kind == "gamma") {
        fp.kind = FamilyKind::Gamma;
        K = Field::make(p, e);
      } else if (kind == "lambda") {
        fp.kind = FamilyKind::Lambda;
        K = Field::make(p, 2 * e);
      } else {
        throw Error(Errc::ConfigInvalid, "unknown kind '" + kind + "'");
      }
      fp.s = s;
      fp.j = j;
      fp.lambda = static_cast<Elem>(std::stoul(lambda));
      if (fp.lambda >= K->size()) throw Error(Errc::OutOfRange, "lambda code outside the field");
      const MultiPoly f = family_poly(K, n, fp);
      std::cout << json{{"poly", family_label(fp, *K)}, {"field", "GF(" + std::to_string(K->size()) + ")"},
                        {"n", n}, {"value", f.to_string()}, {"terms", f.size()}}
                       .dump(2)
                << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
