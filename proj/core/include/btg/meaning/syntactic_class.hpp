#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "btg/integer.hpp"
#include "btg/kernel/signature.hpp"
#include "btg/kernel/term.hpp"
#include "btg/rng.hpp"
#include "btg/semantics/ring.hpp"

namespace btg::meaning {

using kernel::Signature;
using kernel::Sort;
using kernel::Term;

/// Closed well-sorted terms of a sort.
struct ClosedTermClass {
  Sort sort;
  friend bool operator==(const ClosedTermClass&, const ClosedTermClass&) = default;
};

/// Integer literals, optionally of one sort and optionally excluding zero.
struct NumeralClass {
  std::optional<Sort> sort;
  bool nonzero = false;
  friend bool operator==(const NumeralClass&, const NumeralClass&) = default;
};

/// Polynomial-shaped terms over the ring operations. Without `vars`, any
/// variable of the sort is allowed.
struct PolyTermClass {
  Sort sort;
  std::optional<std::vector<std::string>> vars;
  semantics::RingSymbols ring;
  friend bool operator==(const PolyTermClass&, const PolyTermClass&) = default;
};

/// Terms (open or closed) of another theory's language at a sort; generators
/// produce closed ones.
struct LanguageClass {
  std::string theory;
  Sort sort;
  std::shared_ptr<const Signature> signature;
  friend bool operator==(const LanguageClass& a, const LanguageClass& b) {
    return a.theory == b.theory && a.sort == b.sort;
  }
};

struct VariableClass {
  Sort sort;
  friend bool operator==(const VariableClass&, const VariableClass&) = default;
};

/// Structural grammar: a term is a member when it matches a production whose
/// holes are filled by members (`self`), literals (`lit`) or variables (`var`).
struct Production {
  enum class Hole { Self, Literal, Variable };
  Term pattern;
  std::vector<std::pair<std::string, Hole>> holes;
  friend bool operator==(const Production&, const Production&) = default;
};

struct GrammarClass {
  Sort sort;
  std::vector<Production> productions;
  friend bool operator==(const GrammarClass&, const GrammarClass&) = default;
};

using SyntacticClass =
    std::variant<ClosedTermClass, NumeralClass, PolyTermClass, LanguageClass, VariableClass, GrammarClass>;

std::string to_string(const SyntacticClass& c);

/// Structural decision; never throws.
bool class_member(const Term& t, const SyntacticClass& c, const Signature& sig);

/// Variable names the generators use when a class does not fix them.
const std::vector<std::string>& default_variable_names();

/// Deterministic enumeration of members up to `max_depth`.
std::vector<Term> enumerate_class(const SyntacticClass& c, const Signature& sig, std::size_t max_depth,
                                  const std::vector<Integer>& pool);

/// Seeded random member; nullopt when the class has no member within depth.
std::optional<Term> random_member(const SyntacticClass& c, const Signature& sig, Rng& rng, std::size_t max_depth);

/// Smaller members derived from `t` (subterms and leaf replacements), in a
/// fixed order. Used to shrink counterexamples.
std::vector<Term> shrink_candidates(const Term& t, const SyntacticClass& c, const Signature& sig);

/// Applies a renaming to the sorts and symbols a class mentions.
SyntacticClass translate_class(const kernel::Renaming& r, const SyntacticClass& c);

}  // namespace btg::meaning
