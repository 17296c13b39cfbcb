#pragma once

#include <stdexcept>
#include <string>

namespace sylow {

enum class Errc {
  NotPrime,
  CardinalityCapExceeded,
  DivisionByZero,
  FieldMismatch,
  NotAQuadraticExtension,
  ContextMismatch,
  DimensionMismatch,
  ZeroPolynomial,
  ExponentOverflow,
  InconsistentParams,
  CapExceeded,
  HypothesisHViolated,
  ExpansionTooLarge,
  LambdaRequiresQuadraticExtension,
  OutOfRange,
  OrbitCapExceeded,
  DimensionCapExceeded,
  ConfigInvalid,
  InvalidSpec,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace sylow
