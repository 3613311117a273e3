#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "btg/kernel/operations.hpp"
#include "btg/kernel/signature.hpp"
#include "btg/kernel/term.hpp"

namespace btg::transformers {

using kernel::Signature;
using kernel::Sort;
using kernel::SymbolDecl;
using kernel::Term;

enum class Guard { Even, Odd, Positive };

std::string_view to_string(Guard g) noexcept;

/// A rule variable. `Any` matches any subterm, `Literal` only literals (which
/// may then be placed at any literal-admitting sort on the right), `Variable`
/// only object variables. Variables of the left side that are not declared
/// here match the identical object variable.
struct PatternVar {
  enum class Kind { Any, Literal, Variable };
  std::string name;
  Sort sort;
  Kind kind = Kind::Any;
  std::vector<Guard> guards;
  friend bool operator==(const PatternVar&, const PatternVar&) = default;
};

std::string_view to_string(PatternVar::Kind k) noexcept;

struct Rule {
  std::vector<PatternVar> vars;
  Term lhs;
  Term rhs;
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Rewrite-rule transformer body. `head` is the entry symbol and `aux` are
/// helper symbols; both live only in the rewriting signature and must be gone
/// from a result.
struct RuleSet {
  SymbolDecl head;
  std::vector<SymbolDecl> aux;
  std::vector<Rule> rules;
  std::size_t fuel = 10000;
  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// Right-hand-side builtin: floor of a literal divided by two.
inline constexpr std::string_view kHalf = "#half";

/// `base` without symbols named like the head or aux symbols, plus those.
Signature rewriting_signature(const Signature& base, const RuleSet& rs);

/// Throws InvalidRule.
void validate_rules(const Signature& base, const RuleSet& rs);

/// Rewrites `head(args...)` innermost-leftmost, first matching rule in
/// declaration order, until no rule applies. Throws FuelExhausted when more
/// than `fuel` steps are needed and StuckRewrite when a head or aux symbol
/// survives.
Term run_rules(const Signature& base, const RuleSet& rs, std::span<const Term> args);

/// Translates sorts and theory symbols; head and aux names are kept.
RuleSet translate_rules(const kernel::Renaming& r, const RuleSet& rs);

}  // namespace btg::transformers
