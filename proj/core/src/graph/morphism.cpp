#include "btg/graph/morphism.hpp"

#include "btg/error.hpp"

namespace btg::graph {

Morphism inclusion(std::string name, const BiformTheory& source, const BiformTheory& target) {
  Morphism m;
  m.name = std::move(name);
  m.source = source.name;
  m.target = target.name;
  m.inclusion = true;
  for (const auto& s : source.signature.sorts()) m.renaming.sorts.emplace(s.name, s.name);
  for (const auto& d : operations(source)) m.renaming.symbols.emplace(d.name, d.name);
  return m;
}

void check_signature(const Morphism& m, const BiformTheory& source, const BiformTheory& target) {
  auto where = [&] { return "morphism " + m.name + ": "; };
  for (const auto& s : source.signature.sorts()) {
    kernel::Sort image = m.renaming.sort(s);
    if (!target.signature.has_sort(image)) {
      raise(Errc::UnknownSort, where() + "sort " + s.name + " maps to undeclared " + image.name);
    }
    if (source.signature.admits_literals(s) && !target.signature.admits_literals(image)) {
      raise(Errc::ShapeMismatch, where() + "literal sort " + s.name + " maps to " + image.name +
                                     ", which admits no literals");
    }
  }
  for (const auto& d : operations(source)) {
    const std::string& image = m.renaming.symbol(d.name);
    const kernel::SymbolDecl* td = target.signature.find_symbol(image);
    if (td == nullptr || target.transformers.find(image) != nullptr) {
      raise(Errc::UnknownSymbol, where() + d.name + " maps to " + image + ", which is not an operation of " +
                                     target.name);
    }
    kernel::SymbolDecl want{image, {}, m.renaming.sort(d.result)};
    for (const auto& a : d.args) want.args.push_back(m.renaming.sort(a));
    if (!(want == *td)) {
      raise(Errc::ShapeMismatch, where() + kernel::to_string(d) + " maps to " + kernel::to_string(*td) +
                                     ", expected " + kernel::to_string(want));
    }
  }
  for (const auto& [from, to] : m.transformer_map) {
    if (source.transformers.find(from) == nullptr) {
      raise(Errc::UnknownReference, where() + "no transformer " + from + " in " + source.name);
    }
    if (target.transformers.find(to) == nullptr) {
      raise(Errc::UnknownReference, where() + "no transformer " + to + " in " + target.name);
    }
  }
}

kernel::Term translate(const Morphism& m, const kernel::Term& t) { return kernel::translate(m.renaming, t); }

kernel::Formula translate(const Morphism& m, const kernel::Formula& f) {
  kernel::Formula out = kernel::map_terms(f, [&](const kernel::Term& t) { return translate(m, t); });
  for (auto& b : out.binders) b.sort = m.renaming.sort(b.sort);
  return out;
}

std::string translate_transformer_name(const Morphism& m, const std::string& name) {
  auto it = m.transformer_map.find(name);
  return it == m.transformer_map.end() ? name : it->second;
}

Morphism compose(const Morphism& first, const Morphism& second) {
  if (first.target != second.source) {
    raise(Errc::UnknownReference, "cannot compose " + first.name + " and " + second.name + ": endpoints differ");
  }
  Morphism out;
  out.name = second.name + "." + first.name;
  out.source = first.source;
  out.target = second.target;
  out.model_preserving = first.model_preserving && second.model_preserving;
  out.inclusion = first.inclusion && second.inclusion;
  for (const auto& [a, b] : first.renaming.sorts) out.renaming.sorts.emplace(a, second.renaming.sort({b}).name);
  for (const auto& [a, b] : first.renaming.symbols) out.renaming.symbols.emplace(a, second.renaming.symbol(b));
  for (const auto& [a, b] : first.transformer_map) out.transformer_map.emplace(a, translate_transformer_name(second, b));
  return out;
}

}  // namespace btg::graph
