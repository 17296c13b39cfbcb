#pragma once

#include <cstdint>
#include <vector>

#include "sylow/poly.hpp"

namespace sylow {

struct SteenrodExpansion {
  MultiPoly source;
  std::uint64_t r = 0;
  // components[i] = P^i(source); trailing zero components are dropped.
  std::vector<MultiPoly> components;

  MultiPoly op(std::uint64_t i) const;
};

// Substitutes x_i -> x_i + x_i^r * z with z an extra variable and collects powers of z.
SteenrodExpansion steenrod_expand(const MultiPoly& f, std::uint64_t r);
MultiPoly steenrod_op(const MultiPoly& f, std::uint64_t i, std::uint64_t r);
// The algebra map x_i -> x_i - x_i^r.
MultiPoly p_bullet(const MultiPoly& f, std::uint64_t r);

}  // namespace sylow
