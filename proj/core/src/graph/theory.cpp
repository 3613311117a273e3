#include "btg/graph/theory.hpp"

#include <algorithm>

#include "btg/error.hpp"
#include "btg/transformers/builtins.hpp"

namespace btg::graph {

const semantics::Model* BiformTheory::model(std::string_view n) const noexcept {
  for (const auto& m : models) {
    if (m.name() == n) return &m;
  }
  return nullptr;
}

const NamedFormula* BiformTheory::axiom(std::string_view n) const noexcept {
  for (const auto& a : axioms) {
    if (a.name == n) return &a;
  }
  return nullptr;
}

const meaning::MeaningFormula* BiformTheory::meaning(std::string_view n) const noexcept {
  for (const auto& m : meanings) {
    if (m.name == n) return &m;
  }
  return nullptr;
}

void add_axiom(BiformTheory& t, NamedFormula f) {
  if (t.axiom(f.name) != nullptr) raise(Errc::NameClash, "axiom " + f.name + " already in " + t.name);
  kernel::check_formula(t.signature, f.formula);
  t.axioms.push_back(std::move(f));
}

void add_meaning(BiformTheory& t, meaning::MeaningFormula mf) {
  if (t.meaning(mf.name) != nullptr) raise(Errc::NameClash, "meaning formula " + mf.name + " already in " + t.name);
  meaning::check_shape(mf);
  for (const auto& name : meaning::called_transformers(mf)) (void)t.transformers.at(name);
  t.meanings.push_back(std::move(mf));
}

void add_model(BiformTheory& t, const std::string& name, std::map<kernel::Sort, semantics::Domain> carriers,
               std::map<std::string, std::string> interps) {
  if (t.model(name) != nullptr) raise(Errc::NameClash, "model " + name + " already in " + t.name);
  transformers::complete_factor_model(t.signature, carriers, interps);
  t.models.emplace_back(name, t.name, t.signature, std::move(carriers), std::move(interps));
}

void reanchor_language_classes(BiformTheory& t, const std::vector<std::string>& old_names) {
  auto sig = std::make_shared<const kernel::Signature>(t.signature);
  transformers::Registry fresh;
  for (auto tr : t.transformers.all()) {
    for (auto& c : tr.arg_classes) {
      auto* lc = std::get_if<meaning::LanguageClass>(&c);
      if (lc == nullptr) continue;
      if (std::find(old_names.begin(), old_names.end(), lc->theory) == old_names.end() && lc->signature) continue;
      lc->theory = t.name;
      lc->signature = sig;
    }
    fresh.add(std::move(tr));
  }
  t.transformers = std::move(fresh);
}

bool same_transformer(const transformers::Transformer& a, const transformers::Transformer& b) {
  return a.name == b.name && a.body == b.body;
}

std::vector<std::string> transformer_symbols(const BiformTheory& t) {
  std::vector<std::string> out;
  for (const auto& tr : t.transformers.all()) out.push_back(tr.name);
  return out;
}

std::vector<kernel::SymbolDecl> operations(const BiformTheory& t) {
  std::vector<kernel::SymbolDecl> out;
  for (const auto& d : t.signature.symbols()) {
    if (t.transformers.find(d.name) == nullptr) out.push_back(d);
  }
  return out;
}

}  // namespace btg::graph
