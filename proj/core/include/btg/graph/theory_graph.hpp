#pragma once

#include <deque>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "btg/graph/morphism.hpp"
#include "btg/graph/theory.hpp"
#include "btg/meaning/verify.hpp"
#include "btg/transformers/generic.hpp"

namespace btg::graph {

/// Theories as nodes, morphisms as edges, plus the generic transformer
/// templates theories instantiate. Parallel edges are allowed.
class TheoryGraph {
 public:
  /// Throws NameClash.
  const BiformTheory& add_theory(BiformTheory t);
  /// Checks endpoints and the signature map. Throws UnknownReference,
  /// NameClash and the errors of check_signature.
  const Morphism& add_morphism(Morphism m);
  /// Throws NameClash, InvalidRule.
  void add_generic(transformers::GenericTransformer g);

  const BiformTheory* find_theory(std::string_view name) const noexcept;
  /// Throws UnknownReference.
  const BiformTheory& theory(std::string_view name) const;
  /// Mutable access for installing generated transformers. Callers must not
  /// remove sorts or operations that morphisms rely on. Throws
  /// UnknownReference.
  BiformTheory& edit_theory(std::string_view name);
  const Morphism* find_morphism(std::string_view name) const noexcept;
  const Morphism& morphism(std::string_view name) const;
  std::shared_ptr<const transformers::GenericTransformer> find_generic(std::string_view name) const noexcept;

  const std::deque<BiformTheory>& theories() const noexcept { return theories_; }
  const std::deque<Morphism>& morphisms() const noexcept { return morphisms_; }
  const std::vector<std::shared_ptr<const transformers::GenericTransformer>>& generics() const noexcept {
    return generics_;
  }

  /// Verification context for a theory of this graph; qualified model
  /// references resolve across the graph.
  meaning::VerifyContext context(const BiformTheory& t) const;

 private:
  std::deque<BiformTheory> theories_;
  std::deque<Morphism> morphisms_;
  std::vector<std::shared_ptr<const transformers::GenericTransformer>> generics_;
};

}  // namespace btg::graph
