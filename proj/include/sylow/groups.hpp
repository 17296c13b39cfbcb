#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sylow/field.hpp"
#include "sylow/matrix.hpp"
#include "sylow/poly.hpp"

namespace sylow {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { GuEven, GuOdd, Sp, OPlus, OMinus, OOdd };

const char* family_name(Family f);
// Accepts the CLI spellings gu-even, gu-odd, sp, o-plus, o-minus, o-odd.
Family parse_family(const std::string& s);
std::vector<Family> all_families();

struct GroupSpec {
  Family family = Family::GuEven;
  int m = 1;
  int q = 2;
  int p = 2;
  int e = 1;
  int n = 0;     // matrix size
  int nblk = 0;  // size of the X1 block
  int l = 0;     // size of the X2 block
  int eps = 1;
  bool hermitian = false;
  FieldPtr field;  // F_{q^2} for the unitary families, F_q otherwise

  bool odd_char() const { return p != 2; }
  bool orthogonal() const;
  // O-plus / O-minus in characteristic 2: the Sylow group is <G1, L>.
  bool has_descent() const;
  std::uint32_t r() const { return field->size(); }
  std::string label() const;
};

GroupSpec make_spec(Family family, int m, int q);

struct FormData {
  Matrix X;
  Matrix X1;
  Matrix X2;
  std::optional<MultiPoly> Q;
  std::optional<Elem> a;
};

FormData form_of(const GroupSpec& spec);

// Smallest element a (by code) such that X^2 + X + a has no root in the field,
// or, with `subfield`, no root in the subfield fixed by conjugation and a in it.
Elem irreducible_quadratic_a(const Field& F, bool subfield = false);

struct ElementParams {
  Matrix A;        // nblk x nblk lower unitriangular
  Matrix B;        // l x nblk
  Matrix F;        // l x l, from fblk_solutions(spec)
  Matrix S_lower;  // nblk x nblk; only the strictly lower part is read
  std::vector<Elem> diag_free;  // one entry per diagonal slot when the family leaves it free

  static ElementParams trivial(const GroupSpec& spec);
};

enum class DiagKind {
  Forced,       // odd characteristic with eps = +, or the quadratic-form constraint in char 2
  TraceKernel,  // c*Y_ii plus a free element of the trace kernel
  Free,         // any field element
};
DiagKind diag_kind(const GroupSpec& spec);
// Values a free diagonal slot may take (empty when forced).
std::vector<Elem> diag_values(const GroupSpec& spec);

// Deliberate corruptions of system (3.2), used to show the checks are sensitive.
enum class FormulaMutation {
  None,
  DSign,
  DDropBar,
  EDropInverse,
  EDropTranspose,
  CDropBar,
  CDropTranspose,
  SFlipEps,
};
const char* mutation_name(FormulaMutation m);
std::vector<FormulaMutation> all_mutations();

// S completing the strictly-lower entries so that S + eps*conj(S)^T = -B^T X2 conj(B)
// with the family's diagonal rule.
Matrix complete_S(const GroupSpec& spec, const FormData& form, const Matrix& B, const Matrix& S_lower,
                  const std::vector<Elem>& diag_free, FormulaMutation mut = FormulaMutation::None);

Matrix element(const GroupSpec& spec, const ElementParams& params,
               FormulaMutation mut = FormulaMutation::None);

// Assembly without re-validating A and F; `form` must be form_of(spec).
Matrix assemble(const GroupSpec& spec, const FormData& form, const ElementParams& params,
                FormulaMutation mut = FormulaMutation::None);

bool is_member(const GroupSpec& spec, const Matrix& M);
// Unitriangular F with F^T X2 conj(F) = X2 (and the middle quadratic form preserved in char 2).
std::vector<Matrix> fblk_form_solutions(const GroupSpec& spec);
// The F blocks used by the Sylow group. In even-characteristic O+/O- only the identity.
std::vector<Matrix> fblk_solutions(const GroupSpec& spec);
// L for O-plus (char 2), L1 for O-minus (char 2). Throws InvalidSpec otherwise.
Matrix descent_generator(const GroupSpec& spec);

// One-parameter generators: each free coordinate set to each F_p-basis element.
std::vector<Matrix> generators(const GroupSpec& spec, bool include_descent = true,
                               FormulaMutation mut = FormulaMutation::None);
// Generators of U(n, F): I + b*E_ij for i > j and b in an F_p-basis of F.
std::vector<Matrix> unitriangular_generators(const FieldPtr& F, int n);

std::vector<Matrix> enumerate_group(const GroupSpec& spec, std::uint64_t cap);
std::vector<Matrix> enumerate_group_serial(const GroupSpec& spec, std::uint64_t cap);
// Subgroup generated by `gens`, by breadth-first closure. Throws CapExceeded.
std::vector<Matrix> closure(const FieldPtr& K, int n, const std::vector<Matrix>& gens, std::uint64_t cap);

BigInt group_order(const GroupSpec& spec);
// |A| * |B| * |F-set| * |S-free| (* 2 with the descent generator).
BigInt parameter_count(const GroupSpec& spec);
BigInt classical_order(const GroupSpec& spec);
BigInt p_part(BigInt v, int p);

// The closed-form count of S with S + eps*conj(S)^T = -B^T X2 conj(B).
BigInt count_S_solutions(const GroupSpec& spec, const Matrix& B);
// Exhaustive count of the same set; feasible only for tiny nblk.
BigInt count_S_exhaustive(const GroupSpec& spec, const Matrix& B);

// Characteristic 2: S = S' + C with S' symmetric and C strictly upper.
std::pair<Matrix, Matrix> decompose_symmetric_upper(const Matrix& S);

// An F_p-basis of an additive subgroup of the field, chosen greedily by code.
std::vector<Elem> fp_basis(const Field& F, const std::vector<Elem>& subgroup);

}  // namespace sylow
