#pragma once

#include <map>
#include <string>
#include <variant>

#include "btg/integer.hpp"
#include "btg/kernel/term.hpp"

namespace btg::semantics {

/// Variable -> positive exponent.
using Monomial = std::map<std::string, unsigned>;

/// Multivariate polynomial over the integers as a sparse coefficient map.
/// Zero coefficients are never stored; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  static Poly constant(const Integer& c);
  static Poly variable(const std::string& name);

  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly operator-() const;

  /// Formal partial derivative.
  Poly derivative(const std::string& var) const;
  unsigned degree_in(const std::string& var) const;
  Integer evaluate(const std::map<std::string, Integer>& point) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& m, const Integer& c);
  std::map<Monomial, Integer> terms_;
};

std::string to_string(const Poly& p);

struct Residue {
  Integer value;
  Integer modulus;
  friend bool operator==(const Residue&, const Residue&) = default;
};

struct SynValue {
  kernel::Term term;
  friend bool operator==(const SynValue&, const SynValue&) = default;
};

using Value = std::variant<Integer, Residue, Poly, SynValue>;

std::string to_string(const Value& v);

}  // namespace btg::semantics
