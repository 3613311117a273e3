#include "btg/graph/transport.hpp"

#include "btg/error.hpp"

namespace btg::graph {

namespace {

void require_checked(const MorphismCheck& check, const Morphism& m) {
  if (check.morphism != m.name) {
    raise(Errc::MorphismUnchecked, "morphism " + m.name + " has not been checked");
  }
  if (!check.ok()) raise(Errc::MorphismUnchecked, "morphism " + m.name + " has failed obligations");
}

}  // namespace

kernel::Formula transport(const MorphismCheck& check, const Morphism& m, const kernel::Formula& f) {
  require_checked(check, m);
  return translate(m, f);
}

transformers::Transformer translate_transformer(const kernel::Renaming& r, const transformers::Transformer& t,
                                                const kernel::Signature& target, std::string name) {
  using namespace transformers;
  Transformer out;
  out.name = std::move(name);
  out.output = t.output;
  for (const auto& c : t.arg_classes) {
    if (const auto* lc = std::get_if<meaning::LanguageClass>(&c)) {
      // Language classes over the source language follow the translation.
      out.arg_classes.push_back(meaning::LanguageClass{lc->theory, r.sort(lc->sort), nullptr});
    } else {
      out.arg_classes.push_back(meaning::translate_class(r, c));
    }
  }
  if (const auto* rb = std::get_if<RulesBody>(&t.body)) {
    out.body = RulesBody{translate_rules(r, rb->rules)};
  } else if (const auto* gb = std::get_if<GenericBody>(&t.body)) {
    GenBinding b = translate_binding(r, gb->binding);
    out.body = GenericBody{gb->generic, b, specialize(*gb->generic, b, target)};
  } else {
    raise(Errc::NonTransportable, "opaque transformer " + t.name + " cannot be translated");
  }
  return out;
}

transformers::Transformer transport(const MorphismCheck& check, const Morphism& m, const transformers::Transformer& t,
                                    const BiformTheory& target) {
  require_checked(check, m);
  if (std::holds_alternative<transformers::OpaqueBody>(t.body)) {
    auto it = m.transformer_map.find(t.name);
    if (it == m.transformer_map.end()) {
      raise(Errc::NonTransportable, "opaque transformer " + t.name + " has no replacement along " + m.name);
    }
    return target.transformers.at(it->second);
  }
  transformers::Transformer out = translate_transformer(m.renaming, t, target.signature,
                                                        translate_transformer_name(m, t.name));
  for (auto& c : out.arg_classes) {
    if (auto* lc = std::get_if<meaning::LanguageClass>(&c); lc && lc->signature == nullptr) {
      lc->theory = target.name;
      lc->signature = std::make_shared<const kernel::Signature>(target.signature);
    }
  }
  return out;
}

}  // namespace btg::graph
