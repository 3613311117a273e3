#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "btg/integer.hpp"
#include "btg/kernel/signature.hpp"
#include "btg/kernel/term.hpp"
#include "btg/semantics/model.hpp"
#include "btg/semantics/ring.hpp"

namespace btg::transformers {

using kernel::Signature;
using kernel::Sort;
using kernel::Term;

// ---- integer factorization -------------------------------------------------

struct Factorization {
  Integer unit;
  std::vector<std::pair<Integer, unsigned>> factors;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division. Unit is -1 for negative input. Throws ZeroInput.
Factorization factor_integer(const Integer& n);

/// Names of the factorization-output extension.
namespace factor_sig {
inline const Sort kPair{"FactorPair"};
inline const Sort kList{"FactorList"};
inline const Sort kResult{"Factorization"};
inline constexpr const char* kFactor = "factor";
inline constexpr const char* kNil = "nil";
inline constexpr const char* kCons = "cons";
inline constexpr const char* kMake = "pair";
}  // namespace factor_sig

/// Adds the factorization sorts and symbols over `numeral`; no-op when present.
void import_factor_sig(Signature& sig, const Sort& numeral);

bool has_factor_sig(const Signature& sig);

/// Fills carriers and interpretations of the factorization symbols so that
/// an integer model reads `pair(u, ((p m) ...))` as u * prod p^m.
void complete_factor_model(const Signature& sig, std::map<Sort, semantics::Domain>& carriers,
                           std::map<std::string, std::string>& interps);

/// `pair(unit, cons(factor(p, m), ... nil))` with literals at `numeral`.
Term factorization_term(const Factorization& f, const Sort& numeral);

/// Inverse of factorization_term; nullopt when `t` is not of that shape.
std::optional<Factorization> read_factorization(const Term& t);

// ---- modular exponentiation ------------------------------------------------

/// Repeated squaring. Throws BadModulus (modulus < 2), NegativeExponent.
Integer modpow(const Integer& base, const Integer& exp, const Integer& modulus);

// ---- polynomials -----------------------------------------------------------

/// Canonical form: right-nested sum of monomials in graded-lexicographic
/// order over `var_order`, each `times(c, x1 * ... )` with the product
/// right-nested and variables repeated; a constant monomial is a bare literal
/// and the empty sum is 0. Without `var_order`, the occurring variables in
/// alphabetical order are used. Throws NotPolynomial.
Term normalize_poly(const Term& t, const Sort& sort, const semantics::RingSymbols& ring = {},
                    const std::optional<std::vector<std::string>>& var_order = std::nullopt);

/// Structural derivative (sum, Leibniz, constants) followed by normalize_poly.
/// Throws NotPolynomial.
Term deriv(const Term& t, const std::string& var, const Sort& sort, const semantics::RingSymbols& ring = {});

/// Result sort of the ring's addition in `sig`. Throws UnknownSymbol.
Sort ring_sort(const Signature& sig, const semantics::RingSymbols& ring = {});

struct HostDescriptor;

/// Descriptors of the built-in host functions, in a fixed order.
std::vector<HostDescriptor> builtin_hosts();

}  // namespace btg::transformers
