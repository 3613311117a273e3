#pragma once

#include <optional>
#include <string>
#include <vector>

#include "btg/integer.hpp"
#include "btg/kernel/operations.hpp"
#include "btg/kernel/signature.hpp"
#include "btg/kernel/term.hpp"
#include "btg/semantics/value.hpp"

namespace btg::semantics {

/// Names of the commutative-ring operations in a theory's language.
struct RingSymbols {
  std::string plus = "plus";
  std::string times = "times";
  std::string neg = "neg";
  std::string zero = "zero";
  std::string one = "one";

  RingSymbols renamed(const kernel::Renaming& r) const;
  friend bool operator==(const RingSymbols&, const RingSymbols&) = default;
};

/// Built only from the ring operations, literals and variables. When `vars`
/// is given, variables must be named in it; when `sort` is given, every
/// variable and literal must have that sort.
bool is_polynomial_shaped(const kernel::Term& t, const RingSymbols& ring, const std::optional<kernel::Sort>& sort,
                          const std::vector<std::string>* vars);

/// Coefficient-map denotation of a polynomial-shaped term. Throws NotPolynomial.
Poly poly_denotation(const kernel::Term& t, const RingSymbols& ring);

/// True iff t1 and t2 denote the same function on (Z_p)^|vars|. Requires every
/// per-variable degree below p, which makes the answer coincide with polynomial
/// identity. Throws NotPolynomial, DegreeTooHigh, BadModulus.
bool poly_equal_on_zp(const kernel::Signature& sig, const kernel::Term& t1, const kernel::Term& t2,
                      const std::vector<std::string>& vars, const Integer& p, const RingSymbols& ring = {});

}  // namespace btg::semantics
