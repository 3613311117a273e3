#include "btg/graph/theory_graph.hpp"

#include "btg/error.hpp"

namespace btg::graph {

const BiformTheory& TheoryGraph::add_theory(BiformTheory t) {
  if (find_theory(t.name) != nullptr) raise(Errc::NameClash, "theory " + t.name + " already defined");
  theories_.push_back(std::move(t));
  return theories_.back();
}

const Morphism& TheoryGraph::add_morphism(Morphism m) {
  if (find_morphism(m.name) != nullptr) raise(Errc::NameClash, "morphism " + m.name + " already defined");
  const BiformTheory* src = find_theory(m.source);
  if (src == nullptr) raise(Errc::UnknownReference, "morphism " + m.name + ": unknown source theory " + m.source);
  const BiformTheory* tgt = find_theory(m.target);
  if (tgt == nullptr) raise(Errc::UnknownReference, "morphism " + m.name + ": unknown target theory " + m.target);
  check_signature(m, *src, *tgt);
  morphisms_.push_back(std::move(m));
  return morphisms_.back();
}

void TheoryGraph::add_generic(transformers::GenericTransformer g) {
  if (find_generic(g.name)) raise(Errc::NameClash, "generic " + g.name + " already defined");
  transformers::validate_generic(g);
  generics_.push_back(std::make_shared<const transformers::GenericTransformer>(std::move(g)));
}

const BiformTheory* TheoryGraph::find_theory(std::string_view name) const noexcept {
  for (const auto& t : theories_) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const BiformTheory& TheoryGraph::theory(std::string_view name) const {
  const BiformTheory* t = find_theory(name);
  if (t == nullptr) raise(Errc::UnknownReference, "unknown theory " + std::string(name));
  return *t;
}

BiformTheory& TheoryGraph::edit_theory(std::string_view name) {
  for (auto& t : theories_) {
    if (t.name == name) return t;
  }
  raise(Errc::UnknownReference, "unknown theory " + std::string(name));
}

const Morphism* TheoryGraph::find_morphism(std::string_view name) const noexcept {
  for (const auto& m : morphisms_) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const Morphism& TheoryGraph::morphism(std::string_view name) const {
  const Morphism* m = find_morphism(name);
  if (m == nullptr) raise(Errc::UnknownReference, "unknown morphism " + std::string(name));
  return *m;
}

std::shared_ptr<const transformers::GenericTransformer> TheoryGraph::find_generic(
    std::string_view name) const noexcept {
  for (const auto& g : generics_) {
    if (g->name == name) return g;
  }
  return nullptr;
}

meaning::VerifyContext TheoryGraph::context(const BiformTheory& t) const {
  meaning::VerifyContext ctx;
  ctx.theory = t.name;
  ctx.signature = &t.signature;
  ctx.transformers = &t.transformers;
  ctx.resolve = [this, &t](const meaning::ModelRef& ref) -> const semantics::Model* {
    if (ref.theory.empty() || ref.theory == t.name) return t.model(ref.model);
    const BiformTheory* other = find_theory(ref.theory);
    return other == nullptr ? nullptr : other->model(ref.model);
  };
  return ctx;
}

}  // namespace btg::graph
