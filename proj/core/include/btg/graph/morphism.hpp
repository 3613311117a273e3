#pragma once

#include <map>
#include <string>

#include "btg/graph/theory.hpp"
#include "btg/kernel/formula.hpp"
#include "btg/kernel/operations.hpp"

namespace btg::graph {

/// Symbol-to-symbol theory translation. Transformer names of the source that
/// are absent from `transformer_map` map to the same name.
struct Morphism {
  std::string name;
  std::string source;
  std::string target;
  kernel::Renaming renaming;
  std::map<std::string, std::string> transformer_map;
  /// Requests denotation-preservation obligations.
  bool model_preserving = false;
  /// Declared as an inclusion; the renaming is then an identity.
  bool inclusion = false;
};

/// Identity maps over every sort and operation of `source`.
Morphism inclusion(std::string name, const BiformTheory& source, const BiformTheory& target);

/// Checks that sorts and operations map to target sorts and operations of
/// matching shape and that literal sorts map to literal sorts. Throws
/// UnmappedSymbol, UnknownSort, UnknownSymbol, ShapeMismatch.
void check_signature(const Morphism& m, const BiformTheory& source, const BiformTheory& target);

kernel::Term translate(const Morphism& m, const kernel::Term& t);
kernel::Formula translate(const Morphism& m, const kernel::Formula& f);

/// Transformer name in the target.
std::string translate_transformer_name(const Morphism& m, const std::string& name);

/// `second` after `first`.
Morphism compose(const Morphism& first, const Morphism& second);

}  // namespace btg::graph
