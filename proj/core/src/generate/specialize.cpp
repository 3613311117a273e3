#include "btg/error.hpp"
#include "btg/generate/generate.hpp"

namespace btg::generate {

namespace {

bool literal_position(const transformers::Rule& rule, std::size_t i) {
  const auto args = rule.lhs.args();
  if (i >= args.size()) return false;
  const kernel::Term& a = args[i];
  if (a.is_lit()) return true;
  if (!a.is_var()) return false;
  for (const auto& v : rule.vars) {
    if (v.name == a.name()) return v.kind == transformers::PatternVar::Kind::Literal;
  }
  return false;
}

}  // namespace

std::vector<meaning::SyntacticClass> rule_arg_classes(const transformers::RuleSet& rs, const std::string& theory,
                                                      std::shared_ptr<const kernel::Signature> sig) {
  std::vector<meaning::SyntacticClass> out;
  for (std::size_t i = 0; i < rs.head.arity(); ++i) {
    bool numeral = !rs.rules.empty();
    for (const auto& rule : rs.rules) numeral = numeral && literal_position(rule, i);
    if (numeral) {
      out.push_back(meaning::NumeralClass{rs.head.args[i], false});
    } else {
      out.push_back(meaning::LanguageClass{theory, rs.head.args[i], sig});
    }
  }
  return out;
}

transformers::Transformer specialize_generic(std::shared_ptr<const transformers::GenericTransformer> g,
                                             const transformers::GenBinding& b, const BiformTheory& target,
                                             std::string name) {
  transformers::RuleSet rs = transformers::specialize(*g, b, target.signature);
  transformers::Transformer tr;
  tr.name = std::move(name);
  tr.arg_classes = rule_arg_classes(rs, target.name, std::make_shared<const kernel::Signature>(target.signature));
  tr.body = transformers::GenericBody{std::move(g), b, std::move(rs)};
  return tr;
}

}  // namespace btg::generate
