#include "btg/error.hpp"
#include "btg/generate/generate.hpp"

namespace btg::generate {

namespace {

kernel::Renaming tagged(const BiformTheory& t, const std::string& tag) {
  kernel::Renaming r;
  for (const auto& s : t.signature.sorts()) r.sorts.emplace(s.name, s.name + tag);
  for (const auto& d : graph::operations(t)) r.symbols.emplace(d.name, d.name + tag);
  return r;
}

void add_copy(BiformTheory& out, const BiformTheory& t, const kernel::Renaming& r) {
  for (const auto& s : t.signature.sorts()) out.signature.add_sort(r.sort(s));
  for (const auto& s : t.signature.literal_sorts()) out.signature.admit_literals(r.sort(s));
  for (const auto& d : graph::operations(t)) {
    kernel::SymbolDecl nd{r.symbol(d.name), {}, r.sort(d.result)};
    for (const auto& a : d.args) nd.args.push_back(r.sort(a));
    out.signature.add_symbol(nd);
  }
}

}  // namespace

BiformTheory gen_homomorphism_theory(const BiformTheory& t) {
  if (t.signature.sorts().size() != 1) {
    raise(Errc::MultiSortedUnsupported, "theory " + t.name + " is not single-sorted");
  }
  const kernel::Renaming r1 = tagged(t, "#1");
  const kernel::Renaming r2 = tagged(t, "#2");
  const kernel::Sort s = t.signature.sorts().front();
  const kernel::Sort s1 = r1.sort(s);

  BiformTheory out;
  out.name = t.name + "#hom";
  add_copy(out, t, r1);
  add_copy(out, t, r2);
  out.signature.add_symbol({"hom", {s1}, r2.sort(s)});

  for (const auto& [r, tag] : {std::pair{&r1, "#1"}, std::pair{&r2, "#2"}}) {
    for (const auto& ax : t.axioms) {
      kernel::Formula f = kernel::map_terms(ax.formula, [&](const kernel::Term& x) { return kernel::translate(*r, x); });
      for (auto& b : f.binders) b.sort = r->sort(b.sort);
      graph::add_axiom(out, {ax.name + tag, std::move(f)});
    }
  }
  for (const auto& d : graph::operations(t)) {
    std::vector<kernel::Binder> binders;
    std::vector<kernel::Term> xs;
    std::vector<kernel::Term> images;
    for (std::size_t i = 0; i < d.arity(); ++i) {
      std::string v = "x" + std::to_string(i + 1);
      binders.push_back({v, s1});
      xs.push_back(kernel::Term::var(v, s1));
      images.push_back(kernel::Term::app("hom", {kernel::Term::var(v, s1)}));
    }
    kernel::Term lhs = kernel::Term::app("hom", {kernel::Term::app(r1.symbol(d.name), std::move(xs))});
    kernel::Term rhs = kernel::Term::app(r2.symbol(d.name), std::move(images));
    graph::add_axiom(out, {"hom_" + d.name, kernel::Formula{std::move(binders), kernel::Equation{std::move(lhs), std::move(rhs)}}});
  }
  return out;
}

}  // namespace btg::generate
