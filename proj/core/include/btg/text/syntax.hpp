#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "btg/kernel/formula.hpp"
#include "btg/kernel/operations.hpp"
#include "btg/meaning/meaning_formula.hpp"
#include "btg/semantics/model.hpp"
#include "btg/text/sexpr.hpp"
#include "btg/transformers/rules.hpp"

namespace btg::text {

/// How identifiers in a term resolve: bound names first, then nullary
/// symbols, then (when allowed) fresh variables at the expected sort or at
/// `default_sort`.
struct TermScope {
  const kernel::Signature* sig = nullptr;
  std::map<std::string, kernel::Sort> bound;
  bool free_vars = false;
  std::optional<kernel::Sort> default_sort;
};

/// Throws SyntaxError, UnknownReference, SortError.
kernel::Term parse_term(const Sexpr& s, const TermScope& scope, const std::optional<kernel::Sort>& expected = {});
Sexpr term_sexpr(const kernel::Term& t);

/// Term text with free variables at the numeral sort (or the first sort).
kernel::Term parse_term_text(std::string_view text, const kernel::Signature& sig);

/// `(forall ((x S)...) body)` or a bare body; bodies are `(= l r)` or
/// `(=> ((= a b)...) (= l r))`. The result is checked against `sig`.
kernel::Formula parse_formula(const Sexpr& s, const kernel::Signature& sig);
Sexpr formula_sexpr(const kernel::Formula& f);

/// `(f A B -> C)`.
kernel::SymbolDecl parse_decl(const Sexpr& s);
Sexpr decl_sexpr(const kernel::SymbolDecl& d);

/// `(sorts (A B)...)` and `(ops (f g)...)` clauses into a renaming.
void parse_renaming_clause(const Sexpr& clause, kernel::Renaming& r);
std::vector<Sexpr> renaming_clauses(const kernel::Renaming& r);

/// Signature for a named theory, or nullptr when unknown.
using SignatureLookup = std::function<std::shared_ptr<const kernel::Signature>(const std::string& theory)>;

/// `sig` is the signature grammar productions are read against.
meaning::SyntacticClass parse_class(const Sexpr& s, const kernel::Signature& sig, const SignatureLookup& lookup);
Sexpr class_sexpr(const meaning::SyntacticClass& c);

semantics::Domain parse_domain(const Sexpr& s);
Sexpr domain_sexpr(const semantics::Domain& d);

/// `(name transformer ((var class)...) claim)`.
meaning::MeaningFormula parse_meaning(const Sexpr& s, const kernel::Signature& sig, const SignatureLookup& lookup);
Sexpr meaning_sexpr(const meaning::MeaningFormula& mf);

/// Rule-set clauses `(head ...)`, `(aux ...)...`, `(fuel N)`, `(rule ...)...`
/// read against `base`; other clauses are ignored.
transformers::RuleSet parse_ruleset(const std::vector<Sexpr>& clauses, const kernel::Signature& base);
std::vector<Sexpr> ruleset_clauses(const transformers::RuleSet& rs);

/// Parses an integer atom. Throws SyntaxError.
Integer parse_integer(const Sexpr& s);
bool is_integer(std::string_view atom) noexcept;

/// Runs `fn`, attaching the location of `at` to located-less errors and
/// reporting kernel sort errors as SortError.
template <typename Fn>
decltype(auto) located(const Sexpr& at, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.location()) throw;
    Errc code = e.code();
    switch (code) {
      case Errc::SortMismatch:
      case Errc::LiteralNotAdmitted:
      case Errc::ArityMismatch:
      case Errc::UnknownSort:
      case Errc::UnboundVariable: code = Errc::SortError; break;
      case Errc::UnknownSymbol: code = Errc::UnknownReference; break;
      default: break;
    }
    throw Error(code, e.message(), at.loc);
  }
}

}  // namespace btg::text
