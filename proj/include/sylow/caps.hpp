#pragma once

#include <cstdint>
#include <string>

namespace sylow {

// Resource limits. Defaults can be overridden through SYLOW_INV_CAPS, e.g.
//   SYLOW_INV_CAPS="enumeration=16384,dimension=50000"
struct Caps {
  std::uint64_t field = 1u << 16;          // largest field cardinality
  std::uint64_t exponent = 1u << 20;       // largest exponent of one variable
  std::uint64_t enumeration = 1u << 13;    // largest group enumerated element by element
  std::uint64_t orbit = 1u << 12;          // largest orbit of a linear form
  std::uint64_t dimension = 20000;         // largest graded piece in the oracle
  std::uint64_t expansion = 1u << 22;      // largest term count of a Steenrod expansion
  std::uint64_t substitution = 40000000;   // term budget for invariance by substitution
};

Caps& caps();

// Parses "key=value,..." on top of `base`. Throws Error(ConfigInvalid) on bad input.
Caps parse_caps(const std::string& text, Caps base = Caps{});

// Re-reads SYLOW_INV_CAPS into caps().
void load_caps_from_env();

}  // namespace sylow
