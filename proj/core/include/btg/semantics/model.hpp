#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "btg/integer.hpp"
#include "btg/kernel/operations.hpp"
#include "btg/kernel/signature.hpp"
#include "btg/semantics/value.hpp"

namespace btg::semantics {

using kernel::Signature;
using kernel::Sort;

struct IntDomain {
  friend bool operator==(const IntDomain&, const IntDomain&) = default;
};
struct ZpDomain {
  Integer p;
  friend bool operator==(const ZpDomain&, const ZpDomain&) = default;
};
struct PolyDomain {
  std::vector<std::string> vars;
  friend bool operator==(const PolyDomain&, const PolyDomain&) = default;
};
struct SynDomain {
  friend bool operator==(const SynDomain&, const SynDomain&) = default;
};

using Domain = std::variant<IntDomain, ZpDomain, PolyDomain, SynDomain>;

std::string to_string(const Domain& d);
bool is_finite(const Domain& d);

using Operation = std::function<Value(std::span<const Value>)>;

struct Interpretation {
  std::string primitive;
  std::size_t arity = 0;
  Operation fn;
};

/// Names of the semantic primitives a model may bind symbols to.
const std::vector<std::string>& primitive_names();

bool is_prime(const Integer& n);

/// A designated model of a theory: carriers per sort and an interpretation of
/// every non-Syn symbol by a named primitive. Immutable once built.
class Model {
 public:
  /// Validates against `sig`. Throws InvalidModel.
  Model(std::string name, std::string theory, Signature sig, std::map<Sort, Domain> carriers,
        std::map<std::string, std::string> interps);

  const std::string& name() const noexcept { return name_; }
  const std::string& theory() const noexcept { return theory_; }
  const Signature& signature() const noexcept { return sig_; }
  const std::map<Sort, Domain>& carriers() const noexcept { return carriers_; }
  /// Symbol -> primitive name, in symbol order of the map.
  const std::map<std::string, std::string>& interp_names() const noexcept { return interp_names_; }

  const Domain* carrier(const Sort& sort) const noexcept;
  const Interpretation* interpretation(const std::string& symbol) const noexcept;

  /// Injection of an admitted literal into the carrier of `sort`.
  Value literal(const Integer& value, const Sort& sort) const;

  /// Same carriers and primitives under renamed sorts/symbols.
  Model renamed(const kernel::Renaming& r, std::string theory, Signature sig) const;

  /// Copy rebound to another theory whose signature contains this one's.
  Model rebased(std::string theory, Signature sig) const;

 private:
  std::string name_;
  std::string theory_;
  Signature sig_;
  std::map<Sort, Domain> carriers_;
  std::map<std::string, std::string> interp_names_;
  std::map<std::string, Interpretation> interps_;
};

}  // namespace btg::semantics
