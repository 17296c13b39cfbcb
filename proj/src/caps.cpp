#include "sylow/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "sylow/errors.hpp"

namespace sylow {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::CardinalityCapExceeded: return "CardinalityCapExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotAQuadraticExtension: return "NotAQuadraticExtension";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ExponentOverflow: return "ExponentOverflow";
    case Errc::InconsistentParams: return "InconsistentParams";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::HypothesisHViolated: return "HypothesisHViolated";
    case Errc::ExpansionTooLarge: return "ExpansionTooLarge";
    case Errc::LambdaRequiresQuadraticExtension: return "LambdaRequiresQuadraticExtension";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::OrbitCapExceeded: return "OrbitCapExceeded";
    case Errc::DimensionCapExceeded: return "DimensionCapExceeded";
    case Errc::ConfigInvalid: return "ConfigInvalid";
    case Errc::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

namespace {

Caps initial_caps() {
  const char* env = std::getenv("SYLOW_INV_CAPS");
  if (env == nullptr || *env == '\0') return Caps{};
  return parse_caps(env);
}

}  // namespace

Caps& caps() {
  static Caps c = initial_caps();
  return c;
}

void load_caps_from_env() { caps() = initial_caps(); }

Caps parse_caps(const std::string& text, Caps base) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(Errc::ConfigInvalid, "cap entry without '=': " + item);
    std::string key = item.substr(0, eq);
    std::uint64_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(Errc::ConfigInvalid, "bad cap value: " + item);
    }
    if (key == "field") base.field = value;
    else if (key == "exponent") base.exponent = value;
    else if (key == "enumeration") base.enumeration = value;
    else if (key == "orbit") base.orbit = value;
    else if (key == "dimension") base.dimension = value;
    else if (key == "expansion") base.expansion = value;
    else if (key == "substitution") base.substitution = value;
    else throw Error(Errc::ConfigInvalid, "unknown cap: " + key);
  }
  return base;
}

}  // namespace sylow
