#pragma once

#include <string>
#include <vector>

#include "btg/graph/obligations.hpp"
#include "btg/graph/theory.hpp"

namespace btg::graph {

/// What `extend` adds to a theory.
struct Extension {
  std::vector<kernel::Sort> sorts;
  std::vector<kernel::Sort> literal_sorts;
  std::vector<kernel::SymbolDecl> symbols;
  std::vector<NamedFormula> axioms;
};

/// Base plus fresh sorts, symbols and axioms. Transformers and meaning
/// formulas are kept; models are dropped since they do not interpret the new
/// symbols. Throws NameClash.
BiformTheory extend(const BiformTheory& base, std::string name, const Extension& ext);

/// Conventional name of the inclusion edge from `base` into `derived`.
std::string inclusion_name(const std::string& base, const std::string& derived);

/// Copy under a renaming of every sort and operation. Opaque transformers and
/// the meaning formulas that use them are dropped. Throws UnmappedSymbol.
BiformTheory rename(const BiformTheory& t, std::string name, const kernel::Renaming& r);

struct Combination {
  BiformTheory theory;
  Morphism from_left;
  Morphism from_right;
};

/// Pushout of `left` and `right` over `base` along the two inclusions, which
/// must have been checked. Images of base symbols are identified and take the
/// base names; other colliding names are an error. Models present in both
/// sides under one name are merged when they agree. Throws
/// UncheckedInclusion, NameClash.
Combination combine(std::string name, const BiformTheory& left, const BiformTheory& right, const BiformTheory& base,
                    const Morphism& left_inclusion, const MorphismCheck& left_check, const Morphism& right_inclusion,
                    const MorphismCheck& right_check);

/// Equal signatures up to declaration order and alpha-equivalent axiom sets.
bool same_presentation(const BiformTheory& a, const BiformTheory& b);

}  // namespace btg::graph
