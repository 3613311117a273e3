#pragma once

#include <map>
#include <string>
#include <vector>

#include "btg/graph/theory.hpp"
#include "btg/kernel/operations.hpp"
#include "btg/meaning/meaning_formula.hpp"
#include "btg/transformers/generic.hpp"
#include "btg/transformers/transformer.hpp"

namespace btg::generate {

using graph::BiformTheory;

/// "<theory>#term".
std::string term_language_name(const std::string& theory);
/// "ctor_<symbol>".
std::string constructor_name(const std::string& symbol);
/// "eval_<theory>".
std::string evaluator_name(const std::string& target);

/// Free term algebra over the chosen sorts: a fresh sort `S#term` per sort, a
/// constructor `ctor_f` per operation whose sorts are all chosen, and literal
/// admission wherever the original sort admits literals. No axioms, no models.
BiformTheory gen_term_language(const BiformTheory& t, const std::vector<kernel::Sort>& sorts);

/// Renaming that reifies `t`'s terms in its term language.
kernel::Renaming reify_renaming(const BiformTheory& t, const BiformTheory& lang);

/// Constructors of a term language, counting each literal-admitting sort as
/// one literal constructor.
std::size_t constructor_count(const BiformTheory& lang);

struct GeneratedEvaluator {
  transformers::Transformer transformer;
  meaning::MeaningFormula meaning;
  /// Constructors to their target symbols, term-language sorts to target sorts.
  kernel::Renaming image;
};

/// The fold of `lang` into `target` sending each constructor to its image
/// under `ctor_map`. Throws ShapeMismatch.
GeneratedEvaluator gen_evaluator(const BiformTheory& lang, const BiformTheory& target,
                                 const std::map<std::string, std::string>& ctor_map);

/// Registers the transformer and its meaning formula in `lang`.
void install(BiformTheory& lang, const GeneratedEvaluator& ev);

/// "<theory>#hom": two tagged copies of a single-sorted theory, `hom` between
/// them and one homomorphism axiom per operation. Throws
/// MultiSortedUnsupported.
BiformTheory gen_homomorphism_theory(const BiformTheory& t);

/// Argument classes of a rule set over `theory`: numerals where every rule
/// matches a literal, terms of the theory's language elsewhere.
std::vector<meaning::SyntacticClass> rule_arg_classes(const transformers::RuleSet& rs, const std::string& theory,
                                                      std::shared_ptr<const kernel::Signature> sig);

/// Instantiates a generic transformer in `target` under the name `name`.
/// Positions matched by literals in every rule become numeral arguments.
/// Throws MissingBinding, ShapeMismatch.
transformers::Transformer specialize_generic(std::shared_ptr<const transformers::GenericTransformer> g,
                                             const transformers::GenBinding& b, const BiformTheory& target,
                                             std::string name);

}  // namespace btg::generate
