#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace btg {

enum class Errc {
  // kernel
  UnknownSort,
  UnknownSymbol,
  ArityMismatch,
  SortMismatch,
  LiteralNotAdmitted,
  NotAQuotation,
  OpenBody,
  UnboundVariable,
  NameClash,
  // semantics
  UninterpretedSymbol,
  InfiniteCarrier,
  DegreeTooHigh,
  InvalidModel,
  // transformers
  UnknownTransformer,
  ClassViolation,
  FuelExhausted,
  StuckRewrite,
  InvalidRule,
  HostError,
  ZeroInput,
  BadModulus,
  NegativeExponent,
  NotPolynomial,
  // meaning
  GeneratorEmpty,
  // graph
  UnmappedSymbol,
  IncompatibleModels,
  NonTransportable,
  MorphismUnchecked,
  UncheckedInclusion,
  // generate
  ShapeMismatch,
  MissingBinding,
  MultiSortedUnsupported,
  // text
  SyntaxError,
  UnknownReference,
  SortError,
};

std::string_view to_string(Errc code) noexcept;

struct SourceLoc {
  int line = 0;
  int column = 0;
};

/// Every failure raised by the library. The code is the stable, testable part;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Error(Errc code, const std::string& message, SourceLoc loc);

  Errc code() const noexcept { return code_; }
  /// The message without code and location.
  const std::string& message() const noexcept { return message_; }
  const std::optional<SourceLoc>& location() const noexcept { return loc_; }

 private:
  Errc code_;
  std::string message_;
  std::optional<SourceLoc> loc_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace btg
