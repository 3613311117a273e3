#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "btg/kernel/formula.hpp"
#include "btg/kernel/signature.hpp"
#include "btg/meaning/meaning_formula.hpp"
#include "btg/semantics/model.hpp"
#include "btg/transformers/transformer.hpp"

namespace btg::graph {

struct NamedFormula {
  std::string name;
  kernel::Formula formula;
  friend bool operator==(const NamedFormula&, const NamedFormula&) = default;
};

/// A language, transformers over it, axioms plus meaning formulas, and the
/// models the axioms are checked in.
struct BiformTheory {
  std::string name;
  kernel::Signature signature;
  transformers::Registry transformers;
  std::vector<NamedFormula> axioms;
  std::vector<meaning::MeaningFormula> meanings;
  std::vector<semantics::Model> models;

  bool is_axiomatic() const noexcept { return transformers.empty(); }
  bool is_algorithmic() const noexcept { return axioms.empty() && meanings.empty(); }

  const semantics::Model* model(std::string_view name) const noexcept;
  const NamedFormula* axiom(std::string_view name) const noexcept;
  const meaning::MeaningFormula* meaning(std::string_view name) const noexcept;
};

/// Throws NameClash and the errors of kernel::check_formula.
void add_axiom(BiformTheory& t, NamedFormula f);

/// Throws NameClash, UnknownTransformer, UnknownReference.
void add_meaning(BiformTheory& t, meaning::MeaningFormula mf);

/// Builds and adds a model, completing the interpretation of the
/// factorization symbols when the theory has them. Throws InvalidModel,
/// NameClash.
void add_model(BiformTheory& t, const std::string& name, std::map<kernel::Sort, semantics::Domain> carriers,
               std::map<std::string, std::string> interps);

/// Transformer-name symbols of the theory.
std::vector<std::string> transformer_symbols(const BiformTheory& t);

/// Points language classes of the theory's transformers that name one of
/// `old_names` at the theory itself and its current signature.
void reanchor_language_classes(BiformTheory& t, const std::vector<std::string>& old_names);

/// Same name and body.
bool same_transformer(const transformers::Transformer& a, const transformers::Transformer& b);

/// Non-Syn symbols, in declaration order.
std::vector<kernel::SymbolDecl> operations(const BiformTheory& t);

}  // namespace btg::graph
