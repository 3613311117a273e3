#include <algorithm>

#include "btg/error.hpp"
#include "btg/generate/generate.hpp"

namespace btg::generate {

namespace {

kernel::Sort term_sort(const kernel::Sort& s) { return {s.name + "#term"}; }

}  // namespace

std::string term_language_name(const std::string& theory) { return theory + "#term"; }
std::string constructor_name(const std::string& symbol) { return "ctor_" + symbol; }
std::string evaluator_name(const std::string& target) { return "eval_" + target; }

BiformTheory gen_term_language(const BiformTheory& t, const std::vector<kernel::Sort>& sorts) {
  if (sorts.empty()) raise(Errc::ShapeMismatch, "a term language needs at least one sort");
  std::vector<kernel::Sort> chosen;
  for (const auto& s : t.signature.sorts()) {
    if (std::find(sorts.begin(), sorts.end(), s) != sorts.end()) chosen.push_back(s);
  }
  for (const auto& s : sorts) {
    if (!t.signature.has_sort(s)) raise(Errc::UnknownSort, "theory " + t.name + " has no sort " + s.name);
  }
  auto is_chosen = [&](const kernel::Sort& s) { return std::find(chosen.begin(), chosen.end(), s) != chosen.end(); };

  BiformTheory lang;
  lang.name = term_language_name(t.name);
  for (const auto& s : chosen) lang.signature.add_sort(term_sort(s));
  for (const auto& s : chosen) {
    if (t.signature.admits_literals(s)) lang.signature.admit_literals(term_sort(s));
  }
  for (const auto& d : graph::operations(t)) {
    if (!is_chosen(d.result) || !std::all_of(d.args.begin(), d.args.end(), is_chosen)) continue;
    kernel::SymbolDecl ctor{constructor_name(d.name), {}, term_sort(d.result)};
    for (const auto& a : d.args) ctor.args.push_back(term_sort(a));
    lang.signature.add_symbol(ctor);
  }
  return lang;
}

kernel::Renaming reify_renaming(const BiformTheory& t, const BiformTheory& lang) {
  kernel::Renaming r;
  for (const auto& s : t.signature.sorts()) {
    if (lang.signature.has_sort(term_sort(s))) r.sorts.emplace(s.name, term_sort(s).name);
  }
  for (const auto& d : graph::operations(t)) {
    if (lang.signature.has_symbol(constructor_name(d.name))) r.symbols.emplace(d.name, constructor_name(d.name));
  }
  return r;
}

std::size_t constructor_count(const BiformTheory& lang) {
  return graph::operations(lang).size() + lang.signature.literal_sorts().size();
}

}  // namespace btg::generate
