#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sylow/families.hpp"
#include "sylow/report.hpp"

namespace sylow {

// ---- minimal-degree oracle ----

struct OracleResult {
  std::optional<std::uint64_t> min_degree;  // smallest positive x_j-degree of an invariant, if any
  std::uint64_t D = 0;                       // total-degree bound searched
  std::size_t largest_piece = 0;             // largest graded piece dimension met
};

// Invariants of total degree <= D in x_1..x_j under `gens` (lower unitriangular),
// by elimination on the columns (g(m) - m)_g of the monomials m.
OracleResult oracle_min_degree(const FieldPtr& ctx, const std::vector<Matrix>& gens, int j, std::uint64_t D);
OracleResult oracle_min_degree_serial(const FieldPtr& ctx, const std::vector<Matrix>& gens, int j, std::uint64_t D);

// ---- field-generation certificate ----

struct PhiRecord {
  std::string label;
  int j = 0;
  bool in_Rj = false;
  bool invariant = false;
  std::uint64_t degree = 0;  // deg_{x_j}
  std::uint64_t bound = 0;   // the claimed value
  bool bound_met = false;
  bool ok() const { return in_Rj && invariant && bound_met; }
};

struct DescentRecord {
  std::string label;
  std::string expected;  // "fix", "swap", "shear"
  bool ok = false;
};

struct Certificate {
  GroupSpec spec;
  std::vector<PhiRecord> records;     // Campbell-Chuai list (for G1 in the descent case)
  std::vector<std::string> theorem_labels;
  bool theorem_invariant = false;     // every theorem-list entry invariant under the full group
  bool degree_product_ok = false;     // prod deg_{x_j} = |G| (|G1| in the descent case)
  BigInt degree_product = 0;
  BigInt order = 0;
  std::vector<DescentRecord> descent;  // L / L1 action on the G1 list
  bool sigma2_ok = true;               // invariant rings of the swap and the shear
  // O+/O- in characteristic 2: the alternative list and whether it is invariant.
  std::vector<std::string> literal_labels;
  bool literal_invariant = false;
  bool verdict = false;

  nlohmann::json to_json() const;
};

Certificate certificate_field_generation(const GroupSpec& spec);

// k[X,Y]^<swap> = k[X+Y, XY] and k[X,Y]^<Y -> Y+X> = k[X, Y^2+XY] over GF(2^e), compared
// degree by degree up to `max_degree` against the dimension of the invariant space.
bool sigma2_swap_identity(const FieldPtr& ctx, int max_degree);
bool sigma2_shear_identity(const FieldPtr& ctx, int max_degree);

// ---- mutations ----

enum class HMutationKind { None, SignFlip, IndexShift };
struct HMutation {
  HMutationKind kind = HMutationKind::None;
  int k = 1;     // which h_k
  int term = 0;  // which term (in grevlex order)
};
MultiPoly apply_h_mutation(const MultiPoly& h, const HMutation& mut);

// ---- suites ----

Report group_suite(const GroupSpec& spec, std::uint64_t seed, FormulaMutation mut = FormulaMutation::None);
// Exhaustive S = S' + C over GF(2), GF(4) for sizes <= 3 and the companion quadratic identity.
Report structure_suite(std::uint64_t seed);
Report steenrod_suite(const FieldPtr& F, std::uint64_t seed);
Report psi_suite(const FieldPtr& F, std::uint64_t seed);
Report degree_table_suite(const FieldPtr& F);
Report invariance_suite(const GroupSpec& spec, const HMutation& hmut = {});
Report certificate_suite(const GroupSpec& spec);
Report oracle_suite(const GroupSpec& spec);
Report norm_suite();
Report cpm_scan_suite();
Report examples_suite();

// ---- runner ----

struct RunConfig {
  std::vector<GroupSpec> specs;
  std::set<std::string> suites;
  std::uint64_t seed = 1;
  bool timing = false;
  FormulaMutation mutation = FormulaMutation::None;
  HMutation h_mutation;

  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();
// Every family, m in {1, 2}, q in {2, 3}; all suites.
RunConfig default_config();
// Parses {"specs":[{"family","m","q"}], "suites":[...], "seed":n}. Throws ConfigInvalid.
RunConfig parse_config(const nlohmann::json& j);
std::set<std::string> parse_suite_list(const std::string& csv);
Report suite_runner(const RunConfig& cfg);

}  // namespace sylow
