#include "btg/graph/combinators.hpp"

#include <set>

#include "btg/error.hpp"
#include "btg/graph/transport.hpp"

namespace btg::graph {

namespace {

void add_unique_axiom(BiformTheory& t, const NamedFormula& ax) {
  for (const auto& mine : t.axioms) {
    if (kernel::alpha_equivalent(mine.formula, ax.formula)) return;
  }
  add_axiom(t, ax);
}

void add_unique_meaning(BiformTheory& t, const meaning::MeaningFormula& mf) {
  for (const auto& mine : t.meanings) {
    if (mine == mf) return;
  }
  add_meaning(t, mf);
}

void add_unique_transformer(BiformTheory& t, const transformers::Transformer& tr) {
  if (const auto* mine = t.transformers.find(tr.name)) {
    if (same_transformer(*mine, tr)) return;
    raise(Errc::NameClash, "transformer " + tr.name + " is defined differently on both sides");
  }
  transformers::register_transformer(t.signature, t.transformers, tr);
}

// Renaming of a side into the pushout: images of base names go back to the
// base names, everything else keeps its name.
kernel::Renaming back_map(const BiformTheory& side, const BiformTheory& base, const Morphism& incl) {
  kernel::Renaming r;
  std::map<std::string, std::string> sort_back;
  std::map<std::string, std::string> sym_back;
  for (const auto& s : base.signature.sorts()) sort_back[incl.renaming.sort(s).name] = s.name;
  for (const auto& d : operations(base)) sym_back[incl.renaming.symbol(d.name)] = d.name;
  for (const auto& s : side.signature.sorts()) {
    auto it = sort_back.find(s.name);
    r.sorts.emplace(s.name, it == sort_back.end() ? s.name : it->second);
  }
  for (const auto& d : side.signature.symbols()) {
    auto it = sym_back.find(d.name);
    r.symbols.emplace(d.name, it == sym_back.end() ? d.name : it->second);
  }
  return r;
}

bool is_identity(const kernel::Renaming& r) {
  for (const auto& [a, b] : r.sorts) {
    if (a != b) return false;
  }
  for (const auto& [a, b] : r.symbols) {
    if (a != b) return false;
  }
  return true;
}

Morphism edge(std::string name, const BiformTheory& from, const BiformTheory& to, const kernel::Renaming& r) {
  Morphism m;
  m.name = std::move(name);
  m.source = from.name;
  m.target = to.name;
  for (const auto& s : from.signature.sorts()) m.renaming.sorts.emplace(s.name, r.sort(s).name);
  for (const auto& d : operations(from)) m.renaming.symbols.emplace(d.name, r.symbol(d.name));
  m.inclusion = is_identity(m.renaming);
  return m;
}

void require_inclusion(const Morphism& incl, const MorphismCheck& check, const BiformTheory& base,
                       const BiformTheory& side) {
  if (incl.source != base.name || incl.target != side.name) {
    raise(Errc::UncheckedInclusion, "morphism " + incl.name + " does not go from " + base.name + " to " + side.name);
  }
  if (check.morphism != incl.name || !check.ok()) {
    raise(Errc::UncheckedInclusion, "inclusion " + incl.name + " has not been checked successfully");
  }
}

}  // namespace

std::string inclusion_name(const std::string& base, const std::string& derived) {
  return "incl_" + base + "_" + derived;
}

BiformTheory extend(const BiformTheory& base, std::string name, const Extension& ext) {
  BiformTheory t = base;
  t.name = std::move(name);
  t.models.clear();
  for (const auto& s : ext.sorts) t.signature.add_sort(s);
  for (const auto& s : ext.literal_sorts) t.signature.admit_literals(s);
  for (const auto& d : ext.symbols) t.signature.add_symbol(d);
  for (const auto& ax : ext.axioms) add_axiom(t, ax);
  reanchor_language_classes(t, {base.name});
  return t;
}

BiformTheory rename(const BiformTheory& t, std::string name, const kernel::Renaming& r) {
  kernel::Renaming full = r;
  for (const auto& s : t.signature.sorts()) full.sorts.emplace(s.name, s.name);
  for (const auto& d : t.signature.symbols()) full.symbols.emplace(d.name, d.name);
  BiformTheory out;
  out.name = std::move(name);
  for (const auto& s : t.signature.sorts()) out.signature.add_sort(full.sort(s));
  for (const auto& s : t.signature.literal_sorts()) out.signature.admit_literals(full.sort(s));
  for (const auto& d : operations(t)) {
    kernel::SymbolDecl nd{full.symbol(d.name), {}, full.sort(d.result)};
    for (const auto& a : d.args) nd.args.push_back(full.sort(a));
    out.signature.add_symbol(nd);
  }
  std::set<std::string> dropped;
  for (const auto& tr : t.transformers.all()) {
    if (std::holds_alternative<transformers::OpaqueBody>(tr.body)) {
      dropped.insert(tr.name);
      continue;
    }
    transformers::register_transformer(out.signature, out.transformers,
                                       translate_transformer(full, tr, out.signature, tr.name));
  }
  for (const auto& ax : t.axioms) {
    kernel::Formula f = kernel::map_terms(ax.formula, [&](const kernel::Term& x) { return kernel::translate(full, x); });
    for (auto& b : f.binders) b.sort = full.sort(b.sort);
    add_axiom(out, {ax.name, std::move(f)});
  }
  for (const auto& mf : t.meanings) {
    bool uses_dropped = false;
    for (const auto& n : meaning::called_transformers(mf)) uses_dropped = uses_dropped || dropped.count(n);
    if (uses_dropped) continue;
    try {
      add_meaning(out, meaning::translate_meaning(full, {}, mf));
    } catch (const Error& e) {
      if (e.code() != Errc::NonTransportable) throw;
    }
  }
  for (const auto& m : t.models) out.models.push_back(m.renamed(full, out.name, out.signature));
  reanchor_language_classes(out, {t.name});
  return out;
}

Combination combine(std::string name, const BiformTheory& left, const BiformTheory& right, const BiformTheory& base,
                    const Morphism& left_inclusion, const MorphismCheck& left_check, const Morphism& right_inclusion,
                    const MorphismCheck& right_check) {
  require_inclusion(left_inclusion, left_check, base, left);
  require_inclusion(right_inclusion, right_check, base, right);
  kernel::Renaming rl = back_map(left, base, left_inclusion);
  kernel::Renaming rr = back_map(right, base, right_inclusion);

  BiformTheory out;
  out.name = std::move(name);
  out.signature = kernel::Signature{};
  std::set<std::string> shared_sorts;
  std::set<std::string> shared_syms;
  for (const auto& s : base.signature.sorts()) {
    out.signature.add_sort(s);
    shared_sorts.insert(s.name);
  }
  for (const auto& d : operations(base)) {
    out.signature.add_symbol(d);
    shared_syms.insert(d.name);
  }
  for (const auto& s : base.signature.literal_sorts()) out.signature.admit_literals(s);

  auto merge_side = [&](const BiformTheory& side, const kernel::Renaming& r) {
    for (const auto& s : side.signature.sorts()) {
      kernel::Sort image = r.sort(s);
      if (shared_sorts.count(image.name)) continue;
      if (out.signature.has_sort(image)) raise(Errc::NameClash, "sort " + image.name + " is declared on both sides");
      out.signature.add_sort(image);
    }
    for (const auto& d : operations(side)) {
      const std::string& image = r.symbol(d.name);
      if (shared_syms.count(image)) continue;
      if (out.signature.has_symbol(image)) raise(Errc::NameClash, "symbol " + image + " is declared on both sides");
      kernel::SymbolDecl nd{image, {}, r.sort(d.result)};
      for (const auto& a : d.args) nd.args.push_back(r.sort(a));
      out.signature.add_symbol(nd);
    }
    for (const auto& s : side.signature.literal_sorts()) out.signature.admit_literals(r.sort(s));
  };
  merge_side(left, rl);
  merge_side(right, rr);

  auto side_transformers = [&](const BiformTheory& side, const kernel::Renaming& r) {
    for (const auto& tr : side.transformers.all()) {
      if (std::holds_alternative<transformers::OpaqueBody>(tr.body) || is_identity(r)) {
        add_unique_transformer(out, tr);
      } else {
        add_unique_transformer(out, translate_transformer(r, tr, out.signature, tr.name));
      }
    }
  };
  side_transformers(base, back_map(base, base, inclusion(base.name, base, base)));
  side_transformers(left, rl);
  side_transformers(right, rr);

  for (const auto& ax : base.axioms) add_unique_axiom(out, ax);
  auto side_axioms = [&](const BiformTheory& side, const kernel::Renaming& r) {
    for (const auto& ax : side.axioms) {
      kernel::Formula f = kernel::map_terms(ax.formula, [&](const kernel::Term& x) { return kernel::translate(r, x); });
      for (auto& b : f.binders) b.sort = r.sort(b.sort);
      add_unique_axiom(out, {ax.name, std::move(f)});
    }
    for (const auto& mf : side.meanings) add_unique_meaning(out, meaning::translate_meaning(r, {}, mf));
  };
  for (const auto& mf : base.meanings) add_unique_meaning(out, mf);
  side_axioms(left, rl);
  side_axioms(right, rr);

  for (const auto& ml : left.models) {
    for (const auto& mr : right.models) {
      if (ml.name() != mr.name()) continue;
      std::map<kernel::Sort, semantics::Domain> carriers;
      std::map<std::string, std::string> interps;
      bool agree = true;
      auto absorb = [&](const semantics::Model& m, const kernel::Renaming& r) {
        for (const auto& [s, d] : m.carriers()) {
          if (s == kernel::kSyn) continue;
          auto [it, fresh] = carriers.emplace(r.sort(s), d);
          agree = agree && (fresh || it->second == d);
        }
        for (const auto& [sym, prim] : m.interp_names()) {
          auto [it, fresh] = interps.emplace(r.symbol(sym), prim);
          agree = agree && (fresh || it->second == prim);
        }
      };
      absorb(ml, rl);
      absorb(mr, rr);
      if (!agree) continue;
      try {
        add_model(out, ml.name(), std::move(carriers), std::move(interps));
      } catch (const Error&) {
        // Models that do not cover the pushout are not designated for it.
      }
    }
  }
  reanchor_language_classes(out, {base.name, left.name, right.name});
  Morphism from_left = edge(inclusion_name(left.name, out.name), left, out, rl);
  Morphism from_right = edge(inclusion_name(right.name, out.name), right, out, rr);
  return {std::move(out), std::move(from_left), std::move(from_right)};
}

bool same_presentation(const BiformTheory& a, const BiformTheory& b) {
  if (!kernel::equivalent(a.signature, b.signature) || a.axioms.size() != b.axioms.size()) return false;
  auto covered = [](const BiformTheory& x, const BiformTheory& y) {
    for (const auto& ax : x.axioms) {
      bool found = false;
      for (const auto& other : y.axioms) found = found || kernel::alpha_equivalent(ax.formula, other.formula);
      if (!found) return false;
    }
    return true;
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace btg::graph
