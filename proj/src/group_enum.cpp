#include <omp.h>

#include <unordered_set>

#include "sylow/caps.hpp"
#include "sylow/groups.hpp"

namespace sylow {

namespace {

// Mixed-radix description of the parameter space.
struct ParamSpace {
  GroupSpec spec;
  FormData form;
  std::vector<Matrix> fset;
  std::vector<Elem> dvals;
  std::vector<std::uint64_t> radix;
  std::uint64_t total = 1;

  explicit ParamSpace(const GroupSpec& s) : spec(s), form(form_of(s)), fset(fblk_solutions(s)), dvals(diag_values(s)) {
    const int nb = s.nblk;
    const std::uint64_t r = s.r();
    for (int k = 0; k < nb * (nb - 1) / 2; ++k) radix.push_back(r);  // A
    for (int k = 0; k < s.l * nb; ++k) radix.push_back(r);           // B
    radix.push_back(fset.size());                                    // F
    for (int k = 0; k < nb * (nb - 1) / 2; ++k) radix.push_back(r);  // S strictly lower
    if (!dvals.empty())
      for (int k = 0; k < nb; ++k) radix.push_back(dvals.size());
    for (auto x : radix) total *= x;
  }

  Matrix at(std::uint64_t idx) const {
    const int nb = spec.nblk;
    ElementParams p = ElementParams::trivial(spec);
    std::size_t d = 0;
    auto next = [&]() {
      std::uint64_t v = idx % radix[d];
      idx /= radix[d++];
      return v;
    };
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < i; ++j) p.A.at(i, j) = static_cast<Elem>(next());
    for (int i = 0; i < spec.l; ++i)
      for (int j = 0; j < nb; ++j) p.B.at(i, j) = static_cast<Elem>(next());
    p.F = fset[next()];
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < i; ++j) p.S_lower.at(i, j) = static_cast<Elem>(next());
    if (!dvals.empty())
      for (int i = 0; i < nb; ++i) p.diag_free[i] = dvals[next()];
    return assemble(spec, form, p);
  }
};

void check_cap(const GroupSpec& spec, std::uint64_t cap) {
  if (group_order(spec) > cap)
    throw Error(Errc::CapExceeded, spec.label() + " has order " + group_order(spec).str() + " above the cap");
}

}  // namespace

std::vector<Matrix> enumerate_group_serial(const GroupSpec& spec, std::uint64_t cap) {
  check_cap(spec, cap);
  ParamSpace ps(spec);
  std::vector<Matrix> out;
  out.reserve(ps.total * (spec.has_descent() ? 2 : 1));
  for (std::uint64_t i = 0; i < ps.total; ++i) out.push_back(ps.at(i));
  if (spec.has_descent()) {
    Matrix L = descent_generator(spec);
    for (std::uint64_t i = 0; i < ps.total; ++i) out.push_back(L * out[i]);
  }
  return out;
}

// Parameter blocks are assembled concurrently into preallocated slots, so the
// output order matches the serial enumeration exactly.
std::vector<Matrix> enumerate_group(const GroupSpec& spec, std::uint64_t cap) {
  check_cap(spec, cap);
  ParamSpace ps(spec);
  const std::uint64_t total = ps.total;
  const bool descent = spec.has_descent();
  std::vector<Matrix> out(total * (descent ? 2 : 1));
  Matrix L = descent ? descent_generator(spec) : Matrix();
  const long long nt = static_cast<long long>(total);
#pragma omp parallel for schedule(static) if (!omp_in_parallel() && total > 256)
  for (long long i = 0; i < nt; ++i) {
    out[i] = ps.at(static_cast<std::uint64_t>(i));
    if (descent) out[total + i] = L * out[i];
  }
  return out;
}

std::vector<Matrix> closure(const FieldPtr& K, int n, const std::vector<Matrix>& gens, std::uint64_t cap) {
  std::unordered_set<Matrix, MatrixHash> seen;
  std::vector<Matrix> order;
  Matrix id = Matrix::identity(K, n);
  seen.insert(id);
  order.push_back(id);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : gens) {
      Matrix h = order[head] * g;
      if (seen.insert(h).second) {
        if (order.size() >= cap) throw Error(Errc::CapExceeded, "closure exceeds the enumeration cap");
        order.push_back(h);
      }
    }
  }
  return order;
}

}  // namespace sylow
