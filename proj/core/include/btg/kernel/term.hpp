#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "btg/integer.hpp"
#include "btg/kernel/signature.hpp"

namespace btg::kernel {

/// Immutable first-order term with a quotation node. Copies share structure.
class Term {
 public:
  enum class Kind { Var, Lit, App, Quote };

  static Term var(std::string name, Sort sort);
  static Term lit(Integer value, Sort sort);
  static Term app(std::string symbol, std::vector<Term> args = {});
  static Term quote(Term body);

  Kind kind() const noexcept;
  bool is_var() const noexcept { return kind() == Kind::Var; }
  bool is_lit() const noexcept { return kind() == Kind::Lit; }
  bool is_app() const noexcept { return kind() == Kind::App; }
  bool is_quote() const noexcept { return kind() == Kind::Quote; }

  /// Variable name or applied symbol.
  const std::string& name() const noexcept;
  /// Sort carried by Var and Lit nodes; Syn for Quote. Apps have no intrinsic sort.
  const Sort& sort() const noexcept;
  const Integer& value() const noexcept;
  std::span<const Term> args() const noexcept;
  const Term& body() const noexcept;

  /// Leaves have depth 0.
  std::size_t depth() const noexcept;
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Term& a, const Term& b) noexcept;
  friend bool operator!=(const Term& a, const Term& b) noexcept { return !(a == b); }
  /// Total structural order, used for ordered containers.
  friend bool operator<(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

using VarSet = std::set<std::pair<std::string, Sort>>;

VarSet free_vars(const Term& t);
bool is_closed(const Term& t);

/// Plain s-expression rendering: variables bare, literals decimal, nullary
/// applications bare, `(quote t)` for quotation.
std::string to_string(const Term& t);

}  // namespace btg::kernel
