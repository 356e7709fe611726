#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slcinv {

// Every failure the library reports. The CLI maps these onto exit codes.
enum class Errc {
  // input / validation
  ParseError,
  SchemaError,
  NonInvolutive,
  FixedMarkedPoint,
  ComponentMismatch,
  DanglingPoint,
  DuplicateId,
  UnknownComponent,
  FixedComponent,
  MissingField,
  UnknownGroup,
  NotInD4,
  // unsupported configurations
  GenusNotZero,
  DbarDisconnected,
  NotSimplyConnected,
  UnsupportedNormalHomology,
  NormalizationIrregular,
  XDisconnected,
  GeometricGenusNonzero,
  // resource limits
  BudgetExceeded,
  // internal inconsistencies
  NegativeResult,
  LabelAmbiguous,
  UnpairedPoint,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace slcinv
