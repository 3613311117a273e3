#include "btg/error.hpp"

#include "btg/integer.hpp"

namespace btg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::UnknownSort: return "UnknownSort";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::SortMismatch: return "SortMismatch";
    case Errc::LiteralNotAdmitted: return "LiteralNotAdmitted";
    case Errc::NotAQuotation: return "NotAQuotation";
    case Errc::OpenBody: return "OpenBody";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::NameClash: return "NameClash";
    case Errc::UninterpretedSymbol: return "UninterpretedSymbol";
    case Errc::InfiniteCarrier: return "InfiniteCarrier";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::InvalidModel: return "InvalidModel";
    case Errc::UnknownTransformer: return "UnknownTransformer";
    case Errc::ClassViolation: return "ClassViolation";
    case Errc::FuelExhausted: return "FuelExhausted";
    case Errc::StuckRewrite: return "StuckRewrite";
    case Errc::InvalidRule: return "InvalidRule";
    case Errc::HostError: return "HostError";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::BadModulus: return "BadModulus";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::NotPolynomial: return "NotPolynomial";
    case Errc::GeneratorEmpty: return "GeneratorEmpty";
    case Errc::UnmappedSymbol: return "UnmappedSymbol";
    case Errc::IncompatibleModels: return "IncompatibleModels";
    case Errc::NonTransportable: return "NonTransportable";
    case Errc::MorphismUnchecked: return "MorphismUnchecked";
    case Errc::UncheckedInclusion: return "UncheckedInclusion";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::MissingBinding: return "MissingBinding";
    case Errc::MultiSortedUnsupported: return "MultiSortedUnsupported";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownReference: return "UnknownReference";
    case Errc::SortError: return "SortError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

Error::Error(Errc code, const std::string& message, SourceLoc loc)
    : std::runtime_error(std::string(to_string(code)) + " at " + std::to_string(loc.line) + ":" +
                         std::to_string(loc.column) + ": " + message),
      code_(code),
      message_(message),
      loc_(loc) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

std::string to_string(const Integer& value) { return value.str(); }

bool is_numeral(std::string_view text) noexcept {
  std::size_t i = 0;
  if (!text.empty() && text[0] == '-') i = 1;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_numeral(text)) raise(Errc::SyntaxError, "not a numeral: '" + std::string(text) + "'");
  return Integer(std::string(text));
}

Integer mod_floor(const Integer& value, const Integer& modulus) {
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

}  // namespace btg
