#include <memory>

#include "btg/error.hpp"
#include "btg/generate/generate.hpp"

namespace btg::generate {

namespace {

using kernel::Sort;
using kernel::Term;
using transformers::PatternVar;
using transformers::Rule;

// Extends the sort map with `from -> to`; false on conflict.
bool unify(std::map<std::string, std::string>& sorts, const Sort& from, const Sort& to) {
  auto [it, fresh] = sorts.emplace(from.name, to.name);
  return fresh || it->second == to.name;
}

}  // namespace

GeneratedEvaluator gen_evaluator(const BiformTheory& lang, const BiformTheory& target,
                                 const std::map<std::string, std::string>& ctor_map) {
  const auto ctors = graph::operations(lang);
  if (lang.signature.sorts().empty()) raise(Errc::ShapeMismatch, "term language " + lang.name + " has no sorts");

  kernel::Renaming image;
  for (const auto& c : ctors) {
    auto it = ctor_map.find(c.name);
    if (it == ctor_map.end()) raise(Errc::ShapeMismatch, "constructor " + c.name + " has no image");
    const auto* f = target.signature.find_symbol(it->second);
    if (f == nullptr || f->result == kernel::kSyn) {
      raise(Errc::ShapeMismatch, "theory " + target.name + " has no operation " + it->second);
    }
    if (f->arity() != c.arity()) {
      raise(Errc::ShapeMismatch, "constructor " + c.name + " and " + f->name + " differ in arity");
    }
    bool ok = unify(image.sorts, c.result, f->result);
    for (std::size_t i = 0; i < c.arity(); ++i) ok = ok && unify(image.sorts, c.args[i], f->args[i]);
    if (!ok) raise(Errc::ShapeMismatch, "constructor " + c.name + " cannot map to " + f->name + " consistently");
    image.symbols.emplace(c.name, f->name);
  }
  for (const auto& [c, f] : ctor_map) {
    if (!image.symbols.count(c)) raise(Errc::ShapeMismatch, lang.name + " has no constructor " + c);
  }
  // Sorts reached by no constructor fall back to the sort they were made from.
  for (const auto& s : lang.signature.sorts()) {
    if (image.sorts.count(s.name)) continue;
    const std::string suffix = "#term";
    std::string base = s.name.ends_with(suffix) ? s.name.substr(0, s.name.size() - suffix.size()) : s.name;
    if (!target.signature.has_sort(Sort{base})) raise(Errc::ShapeMismatch, "sort " + s.name + " has no image");
    image.sorts.emplace(s.name, base);
  }
  for (const auto& s : lang.signature.literal_sorts()) {
    if (!target.signature.admits_literals(image.sort(s))) {
      raise(Errc::ShapeMismatch, "literals of " + s.name + " have no image in " + target.name);
    }
  }

  const std::string name = evaluator_name(target.name);
  const Sort head_sort = lang.signature.sorts().front();
  auto fold_symbol = [&](const Sort& s) { return s == head_sort ? name : name + "@" + s.name; };

  transformers::RuleSet rs;
  rs.head = {name, {head_sort}, image.sort(head_sort)};
  for (const auto& s : lang.signature.sorts()) {
    if (s != head_sort) rs.aux.push_back({fold_symbol(s), {s}, image.sort(s)});
  }
  rs.fuel = 100000;
  for (const auto& c : ctors) {
    std::vector<PatternVar> vars;
    std::vector<Term> pattern_args;
    std::vector<Term> folded;
    for (std::size_t i = 0; i < c.arity(); ++i) {
      std::string v = "x" + std::to_string(i + 1);
      vars.push_back(PatternVar{v, c.args[i], PatternVar::Kind::Any, {}});
      pattern_args.push_back(Term::var(v, c.args[i]));
      folded.push_back(Term::app(fold_symbol(c.args[i]), {Term::var(v, c.args[i])}));
    }
    rs.rules.push_back(Rule{std::move(vars), Term::app(fold_symbol(c.result), {Term::app(c.name, std::move(pattern_args))}),
                            Term::app(image.symbol(c.name), std::move(folded))});
  }
  for (const auto& s : lang.signature.literal_sorts()) {
    rs.rules.push_back(Rule{{PatternVar{"n", s, PatternVar::Kind::Literal, {}}},
                            Term::app(fold_symbol(s), {Term::var("n", s)}), Term::var("n", s)});
  }

  transformers::Transformer tr;
  tr.name = name;
  tr.arg_classes.push_back(
      meaning::LanguageClass{lang.name, head_sort, std::make_shared<const kernel::Signature>(lang.signature)});
  tr.body = transformers::RulesBody{std::move(rs)};
  tr.output = transformers::OutputLanguage{target.name, std::make_shared<const kernel::Signature>(target.signature)};

  using meaning::Claim;
  using meaning::Expr;
  using meaning::SemExpr;
  meaning::MeaningFormula mf;
  mf.name = "mf_" + name;
  mf.transformer = name;
  mf.vars.emplace_back("e", tr.arg_classes.front());
  std::vector<Claim> parts;
  for (const auto& m : target.models) {
    meaning::ModelRef ref{target.name, m.name()};
    parts.push_back(Claim::equal(SemExpr::den(ref, Expr::call(name, {Expr::meta("e")})),
                                 SemExpr::den(ref, Expr::translate(image, Expr::meta("e")))));
  }
  if (parts.empty()) {
    mf.claim = Claim::holds("closed", Expr::call(name, {Expr::meta("e")}));
  } else if (parts.size() == 1) {
    mf.claim = std::move(parts.front());
  } else {
    mf.claim = Claim::all(std::move(parts));
  }
  return {std::move(tr), std::move(mf), std::move(image)};
}

void install(BiformTheory& lang, const GeneratedEvaluator& ev) {
  transformers::register_transformer(lang.signature, lang.transformers, ev.transformer);
  graph::add_meaning(lang, ev.meaning);
  graph::reanchor_language_classes(lang, {lang.name});
}

}  // namespace btg::generate
