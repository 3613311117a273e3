#include "btg/text/theory_file.hpp"

#include <algorithm>
#include <set>

#include "btg/error.hpp"
#include "btg/generate/generate.hpp"
#include "btg/graph/combinators.hpp"
#include "btg/graph/obligations.hpp"
#include "btg/text/syntax.hpp"

namespace btg::text {

using graph::BiformTheory;
using kernel::Sort;

namespace {

Sexpr atom_of(std::string a) { return Sexpr::make_atom(std::move(a)); }

Sexpr tagged(std::string tag, std::vector<Sexpr> rest) {
  rest.insert(rest.begin(), atom_of(std::move(tag)));
  return Sexpr::list(std::move(rest));
}

const std::string& name_at(const Sexpr& s, std::size_t i, const char* what) {
  if (!s.is_list || i >= s.items.size() || !s.items[i].is_atom()) {
    fail_at(Errc::SyntaxError, s, std::string("expected ") + what);
  }
  return s.items[i].atom;
}

const BiformTheory& theory_at(const graph::TheoryGraph& g, const Sexpr& at) {
  const auto* t = at.is_atom() ? g.find_theory(at.atom) : nullptr;
  if (t == nullptr) fail_at(Errc::UnknownReference, at, "unknown theory " + (at.is_atom() ? at.atom : "?"));
  return *t;
}

std::vector<Sexpr> rest(const Sexpr& s, std::size_t from) {
  return {s.items.begin() + static_cast<std::ptrdiff_t>(std::min(from, s.items.size())), s.items.end()};
}

class TheoryReader {
 public:
  TheoryReader(const graph::TheoryGraph& g, BiformTheory& t) : g_(g), t_(t) {}

  void clause(const Sexpr& c) {
    const std::string_view k = c.head();
    if (k == "sorts") {
      for (const auto& s : rest(c, 1)) {
        if (!s.is_atom()) fail_at(Errc::SyntaxError, s, "expected a sort name");
        located(s, [&] { t_.signature.add_sort(Sort{s.atom}); });
      }
    } else if (k == "literals") {
      for (const auto& s : rest(c, 1)) {
        if (!s.is_atom() || !t_.signature.has_sort(Sort{s.atom})) fail_at(Errc::SortError, s, "unknown sort");
        t_.signature.admit_literals(Sort{s.atom});
      }
    } else if (k == "ops") {
      for (const auto& d : rest(c, 1)) {
        kernel::SymbolDecl decl = parse_decl(d);
        for (const auto& s : decl.args) require_sort(d, s);
        require_sort(d, decl.result);
        located(d, [&] { t_.signature.add_symbol(decl); });
      }
    } else if (k == "axioms") {
      for (const auto& a : rest(c, 1)) {
        if (!a.is_list || a.items.size() != 2) fail_at(Errc::SyntaxError, a, "expected (name formula)");
        graph::NamedFormula nf{name_at(a, 0, "an axiom name"), parse_formula(a.items[1], t_.signature)};
        located(a, [&] { graph::add_axiom(t_, std::move(nf)); });
      }
    } else if (k == "transformers") {
      for (const auto& tr : rest(c, 1)) transformer(tr);
    } else if (k == "meanings") {
      for (const auto& m : rest(c, 1)) {
        auto mf = parse_meaning(m, t_.signature, lookup());
        located(m, [&] { graph::add_meaning(t_, std::move(mf)); });
      }
    } else if (k == "models") {
      for (const auto& m : rest(c, 1)) model(m);
    } else {
      fail_at(Errc::SyntaxError, c, "unknown theory clause");
    }
  }

  SignatureLookup lookup() const {
    return [this](const std::string& name) -> std::shared_ptr<const kernel::Signature> {
      if (name == t_.name) return std::make_shared<const kernel::Signature>(t_.signature);
      if (const auto* other = g_.find_theory(name)) return std::make_shared<const kernel::Signature>(other->signature);
      return nullptr;
    };
  }

 private:
  void require_sort(const Sexpr& at, const Sort& s) const {
    if (!t_.signature.has_sort(s) && s != kernel::kSyn) fail_at(Errc::SortError, at, "unknown sort " + s.name);
  }

  void transformer(const Sexpr& d) {
    if (!d.is_list || d.items.size() != 2 || !d.items[1].is_list) {
      fail_at(Errc::SyntaxError, d, "expected (name (host id)), (name (generic g bindings...)) or (name (rules ...))");
    }
    const std::string& name = name_at(d, 0, "a transformer name");
    const Sexpr& body = d.items[1];
    transformers::Transformer tr;
    if (body.head() == "host") {
      const std::string& id = name_at(body, 1, "a host id");
      tr = located(body, [&] { return transformers::make_opaque(t_.signature, name, id); });
    } else if (body.head() == "generic") {
      const std::string& gname = name_at(body, 1, "a generic name");
      auto gen = g_.find_generic(gname);
      if (!gen) fail_at(Errc::UnknownReference, body.items[1], "unknown generic " + gname);
      transformers::GenBinding b;
      for (const auto& r : rest(body, 2)) {
        if (!r.is_list || r.items.size() != 2) fail_at(Errc::SyntaxError, r, "expected (role symbol)");
        b.roles.emplace(name_at(r, 0, "a role"), name_at(r, 1, "a symbol"));
      }
      tr = located(body, [&] { return generate::specialize_generic(gen, b, t_, name); });
    } else if (body.head() == "rules") {
      tr = rules(name, body);
    } else {
      fail_at(Errc::SyntaxError, body, "expected host, generic or rules");
    }
    located(d, [&] { transformers::register_transformer(t_.signature, t_.transformers, std::move(tr)); });
  }

  transformers::Transformer rules(const std::string& name, const Sexpr& body) {
    transformers::Transformer tr;
    tr.name = name;
    kernel::Signature base = t_.signature;
    std::optional<Sexpr> args;
    for (const auto& c : rest(body, 1)) {
      if (c.head() == "output") {
        const BiformTheory& out = theory_at(g_, c.items.size() == 2 ? c.items[1] : c);
        tr.output = transformers::OutputLanguage{out.name, std::make_shared<const kernel::Signature>(out.signature)};
        base = located(c, [&] { return kernel::merge_signatures(base, out.signature); });
      } else if (c.head() == "args") {
        args = c;
      }
    }
    transformers::RuleSet rs = parse_ruleset(rest(body, 1), base);
    if (args) {
      for (const auto& a : rest(*args, 1)) tr.arg_classes.push_back(parse_class(a, t_.signature, lookup()));
    } else {
      tr.arg_classes =
          generate::rule_arg_classes(rs, t_.name, std::make_shared<const kernel::Signature>(t_.signature));
    }
    tr.body = transformers::RulesBody{std::move(rs)};
    return tr;
  }

  void model(const Sexpr& m) {
    const std::string& name = name_at(m, 0, "a model name");
    std::map<Sort, semantics::Domain> carriers;
    std::map<std::string, std::string> interps;
    for (const auto& c : rest(m, 1)) {
      if (c.head() == "carriers") {
        for (const auto& p : rest(c, 1)) {
          if (!p.is_list || p.items.size() != 2) fail_at(Errc::SyntaxError, p, "expected (sort domain)");
          Sort s{name_at(p, 0, "a sort")};
          require_sort(p, s);
          carriers[s] = parse_domain(p.items[1]);
        }
      } else if (c.head() == "interps") {
        for (const auto& p : rest(c, 1)) {
          if (!p.is_list || p.items.size() != 2) fail_at(Errc::SyntaxError, p, "expected (symbol primitive)");
          interps[name_at(p, 0, "a symbol")] = name_at(p, 1, "a primitive");
        }
      } else {
        fail_at(Errc::SyntaxError, c, "expected carriers or interps");
      }
    }
    located(m, [&] { graph::add_model(t_, name, std::move(carriers), std::move(interps)); });
  }

  const graph::TheoryGraph& g_;
  BiformTheory& t_;
};

// Inclusion edge from `base` to `side` declared in the graph.
const graph::Morphism& inclusion_between(const graph::TheoryGraph& g, const Sexpr& at, const std::string& base,
                                         const std::string& side) {
  const graph::Morphism* found = nullptr;
  for (const auto& m : g.morphisms()) {
    if (m.source == base && m.target == side && (found == nullptr || (m.inclusion && !found->inclusion))) found = &m;
  }
  if (found == nullptr) fail_at(Errc::UnknownReference, at, "no morphism from " + base + " to " + side);
  return *found;
}

kernel::Renaming completed(kernel::Renaming r, const BiformTheory& src, const BiformTheory* tgt) {
  for (const auto& s : src.signature.sorts()) {
    if (!r.sorts.count(s.name) && (tgt == nullptr || tgt->signature.has_sort(s))) r.sorts.emplace(s.name, s.name);
  }
  for (const auto& d : graph::operations(src)) {
    if (!r.symbols.count(d.name) && (tgt == nullptr || tgt->signature.has_symbol(d.name))) {
      r.symbols.emplace(d.name, d.name);
    }
  }
  return r;
}

}  // namespace

TheoryDecl elaborate_theory(const Sexpr& decl, const graph::TheoryGraph& g) {
  const std::string& name = name_at(decl, 1, "a theory name");
  TheoryDecl out;
  out.theory.name = name;
  std::size_t i = 2;
  if (i < decl.items.size()) {
    const Sexpr& h = decl.items[i];
    if (h.head() == "extends") {
      const BiformTheory& base = theory_at(g, h.items.size() == 2 ? h.items[1] : h);
      out.theory = graph::extend(base, name, {});
      out.edges.push_back(graph::inclusion(graph::inclusion_name(base.name, name), base, base));
      out.edges.back().target = name;
      ++i;
    } else if (h.head() == "combine") {
      if (h.items.size() != 4 || h.items[3].head() != "over" || h.items[3].items.size() != 2) {
        fail_at(Errc::SyntaxError, h, "expected (combine left right (over base))");
      }
      const BiformTheory& left = theory_at(g, h.items[1]);
      const BiformTheory& right = theory_at(g, h.items[2]);
      const BiformTheory& base = theory_at(g, h.items[3].items[1]);
      const auto& li = inclusion_between(g, h, base.name, left.name);
      const auto& ri = inclusion_between(g, h, base.name, right.name);
      auto combination = located(h, [&] {
        auto lc = graph::check_morphism(g, li, graph::CheckOptions{});
        auto rc = graph::check_morphism(g, ri, graph::CheckOptions{});
        return graph::combine(name, left, right, base, li, lc, ri, rc);
      });
      out.theory = std::move(combination.theory);
      out.edges.push_back(std::move(combination.from_left));
      out.edges.push_back(std::move(combination.from_right));
      ++i;
    } else if (h.head() == "rename") {
      const BiformTheory& old = theory_at(g, h.items.size() >= 2 ? h.items[1] : h);
      kernel::Renaming r;
      for (const auto& c : rest(h, 2)) parse_renaming_clause(c, r);
      out.theory = located(h, [&] { return graph::rename(old, name, r); });
      graph::Morphism m;
      m.name = "ren_" + old.name + "_" + name;
      m.source = old.name;
      m.target = name;
      m.renaming = completed(r, old, nullptr);
      out.edges.push_back(std::move(m));
      ++i;
    }
  }
  TheoryReader reader(g, out.theory);
  for (; i < decl.items.size(); ++i) reader.clause(decl.items[i]);
  graph::reanchor_language_classes(out.theory, {name});
  return out;
}

graph::Morphism elaborate_morphism(const Sexpr& decl, const graph::TheoryGraph& g) {
  if (!decl.is_list || decl.items.size() < 4) fail_at(Errc::SyntaxError, decl, "expected (morphism name source target ...)");
  const std::string& name = name_at(decl, 1, "a morphism name");
  const BiformTheory& src = theory_at(g, decl.items[2]);
  const BiformTheory& tgt = theory_at(g, decl.items[3]);
  graph::Morphism m;
  bool is_inclusion = false;
  bool preserving = false;
  kernel::Renaming r;
  for (const auto& c : rest(decl, 4)) {
    if (c.is_atom("inclusion")) {
      is_inclusion = true;
    } else if (c.is_atom("preserving")) {
      preserving = true;
    } else if (c.head() == "transformers") {
      for (const auto& p : rest(c, 1)) {
        if (!p.is_list || p.items.size() != 2) fail_at(Errc::SyntaxError, p, "expected (from to)");
        m.transformer_map.emplace(name_at(p, 0, "a transformer"), name_at(p, 1, "a transformer"));
      }
    } else {
      parse_renaming_clause(c, r);
    }
  }
  if (is_inclusion) {
    auto incl = graph::inclusion(name, src, tgt);
    incl.transformer_map = std::move(m.transformer_map);
    m = std::move(incl);
  } else {
    m.name = name;
    m.source = src.name;
    m.target = tgt.name;
    m.renaming = completed(std::move(r), src, &tgt);
  }
  m.model_preserving = preserving;
  return m;
}

transformers::GenericTransformer elaborate_generic(const Sexpr& decl) {
  transformers::GenericTransformer g;
  g.name = name_at(decl, 1, "a generic name");
  std::vector<Sexpr> rule_clauses;
  for (const auto& c : rest(decl, 2)) {
    if (c.head() == "sorts") {
      for (std::size_t i = 1; i < c.items.size(); ++i) g.sort_params.push_back(name_at(c, i, "a sort"));
    } else if (c.head() == "roles") {
      for (const auto& r : rest(c, 1)) {
        auto d = parse_decl(r);
        transformers::Role role{d.name, {}, d.result.name};
        for (const auto& a : d.args) role.args.push_back(a.name);
        g.roles.push_back(std::move(role));
      }
    } else {
      rule_clauses.push_back(c);
    }
  }
  g.templ = parse_ruleset(rule_clauses, transformers::placeholder_signature(g));
  located(decl, [&] { transformers::validate_generic(g); });
  return g;
}

void elaborate(graph::TheoryGraph& g, const std::vector<Sexpr>& decls) {
  for (const auto& d : decls) {
    const std::string_view k = d.head();
    if (k == "theory") {
      TheoryDecl td = elaborate_theory(d, g);
      located(d, [&] {
        g.add_theory(std::move(td.theory));
        for (auto& e : td.edges) g.add_morphism(std::move(e));
      });
    } else if (k == "morphism") {
      graph::Morphism m = elaborate_morphism(d, g);
      located(d, [&] { g.add_morphism(std::move(m)); });
    } else if (k == "generic") {
      auto gen = elaborate_generic(d);
      located(d, [&] { g.add_generic(std::move(gen)); });
    } else if (k == "generate") {
      const std::string& kind = name_at(d, 1, "a generator");
      if (kind == "term-language") {
        const BiformTheory& t = theory_at(g, d.items.size() > 2 ? d.items[2] : d);
        std::vector<Sort> sorts;
        for (std::size_t i = 3; i < d.items.size(); ++i) sorts.push_back(Sort{name_at(d, i, "a sort")});
        if (sorts.empty()) sorts = t.signature.sorts();
        located(d, [&] { g.add_theory(generate::gen_term_language(t, sorts)); });
      } else if (kind == "evaluator") {
        if (d.items.size() != 5 || d.items[4].head() != "ctors") {
          fail_at(Errc::SyntaxError, d, "expected (generate evaluator lang target (ctors (c f)...))");
        }
        const BiformTheory& lang = theory_at(g, d.items[2]);
        const BiformTheory& target = theory_at(g, d.items[3]);
        std::map<std::string, std::string> ctors;
        for (const auto& p : rest(d.items[4], 1)) {
          if (!p.is_list || p.items.size() != 2) fail_at(Errc::SyntaxError, p, "expected (constructor symbol)");
          ctors.emplace(name_at(p, 0, "a constructor"), name_at(p, 1, "a symbol"));
        }
        located(d, [&] {
          auto ev = generate::gen_evaluator(lang, target, ctors);
          generate::install(g.edit_theory(lang.name), ev);
        });
      } else if (kind == "homomorphism") {
        const BiformTheory& t = theory_at(g, d.items.size() > 2 ? d.items[2] : d);
        located(d, [&] { g.add_theory(generate::gen_homomorphism_theory(t)); });
      } else {
        fail_at(Errc::SyntaxError, d.items[1], "unknown generator " + kind);
      }
    } else {
      fail_at(Errc::SyntaxError, d, "expected theory, morphism, generic or generate");
    }
  }
}

graph::TheoryGraph parse(std::string_view text) {
  graph::TheoryGraph g;
  elaborate(g, read_sexprs(text));
  return g;
}

Sexpr theory_sexpr(const BiformTheory& t) {
  std::vector<Sexpr> items{atom_of("theory"), atom_of(t.name)};
  auto clause = [&](std::string tag, std::vector<Sexpr> body) {
    if (!body.empty()) items.push_back(tagged(std::move(tag), std::move(body)));
  };
  std::vector<Sexpr> sorts;
  for (const auto& s : t.signature.sorts()) sorts.push_back(atom_of(s.name));
  clause("sorts", std::move(sorts));
  std::vector<Sexpr> lits;
  for (const auto& s : t.signature.literal_sorts()) lits.push_back(atom_of(s.name));
  clause("literals", std::move(lits));
  std::vector<Sexpr> ops;
  for (const auto& d : graph::operations(t)) ops.push_back(decl_sexpr(d));
  clause("ops", std::move(ops));
  std::vector<Sexpr> axioms;
  for (const auto& a : t.axioms) axioms.push_back(Sexpr::list({atom_of(a.name), formula_sexpr(a.formula)}));
  clause("axioms", std::move(axioms));

  std::vector<Sexpr> trs;
  for (const auto& tr : t.transformers.all()) {
    Sexpr body;
    if (const auto* o = std::get_if<transformers::OpaqueBody>(&tr.body)) {
      body = tagged("host", {atom_of(o->host_id)});
    } else if (const auto* gb = std::get_if<transformers::GenericBody>(&tr.body)) {
      std::vector<Sexpr> bs{atom_of(gb->generic->name)};
      for (const auto& [role, sym] : gb->binding.roles) bs.push_back(Sexpr::list({atom_of(role), atom_of(sym)}));
      body = tagged("generic", std::move(bs));
    } else {
      const auto& rs = std::get<transformers::RulesBody>(tr.body).rules;
      std::vector<Sexpr> cs;
      std::vector<Sexpr> args;
      for (const auto& c : tr.arg_classes) args.push_back(class_sexpr(c));
      cs.push_back(tagged("args", std::move(args)));
      if (tr.output) cs.push_back(tagged("output", {atom_of(tr.output->theory)}));
      for (auto& c : ruleset_clauses(rs)) cs.push_back(std::move(c));
      body = tagged("rules", std::move(cs));
    }
    trs.push_back(Sexpr::list({atom_of(tr.name), std::move(body)}));
  }
  clause("transformers", std::move(trs));

  std::vector<Sexpr> mfs;
  for (const auto& mf : t.meanings) mfs.push_back(meaning_sexpr(mf));
  clause("meanings", std::move(mfs));

  std::vector<Sexpr> models;
  for (const auto& m : t.models) {
    std::vector<Sexpr> carriers{atom_of("carriers")};
    for (const auto& s : t.signature.sorts()) {
      if (const auto* d = m.carrier(s)) carriers.push_back(Sexpr::list({atom_of(s.name), domain_sexpr(*d)}));
    }
    std::vector<Sexpr> interps{atom_of("interps")};
    for (const auto& d : t.signature.symbols()) {
      auto it = m.interp_names().find(d.name);
      if (it != m.interp_names().end()) interps.push_back(Sexpr::list({atom_of(d.name), atom_of(it->second)}));
    }
    std::vector<Sexpr> body{atom_of(m.name()), Sexpr::list(std::move(carriers))};
    if (interps.size() > 1) body.push_back(Sexpr::list(std::move(interps)));
    models.push_back(Sexpr::list(std::move(body)));
  }
  clause("models", std::move(models));
  return Sexpr::list(std::move(items));
}

Sexpr morphism_sexpr(const graph::Morphism& m) {
  std::vector<Sexpr> items{atom_of("morphism"), atom_of(m.name), atom_of(m.source), atom_of(m.target)};
  if (m.inclusion) {
    items.push_back(atom_of("inclusion"));
  } else {
    for (auto& c : renaming_clauses(m.renaming)) {
      if (c.items.size() > 1) items.push_back(std::move(c));
    }
  }
  if (!m.transformer_map.empty()) {
    std::vector<Sexpr> ts;
    for (const auto& [a, b] : m.transformer_map) ts.push_back(Sexpr::list({atom_of(a), atom_of(b)}));
    items.push_back(tagged("transformers", std::move(ts)));
  }
  if (m.model_preserving) items.push_back(atom_of("preserving"));
  return Sexpr::list(std::move(items));
}

Sexpr generic_sexpr(const transformers::GenericTransformer& g) {
  std::vector<Sexpr> items{atom_of("generic"), atom_of(g.name)};
  std::vector<Sexpr> sorts;
  for (const auto& s : g.sort_params) sorts.push_back(atom_of(s));
  items.push_back(tagged("sorts", std::move(sorts)));
  std::vector<Sexpr> roles;
  for (const auto& r : g.roles) {
    kernel::SymbolDecl d{r.name, {}, Sort{r.result}};
    for (const auto& a : r.args) d.args.push_back(Sort{a});
    roles.push_back(decl_sexpr(d));
  }
  items.push_back(tagged("roles", std::move(roles)));
  for (auto& c : ruleset_clauses(g.templ)) items.push_back(std::move(c));
  return Sexpr::list(std::move(items));
}

std::string print_theory(const BiformTheory& t) { return write_sexpr(theory_sexpr(t)) + "\n"; }

std::string print_graph(const graph::TheoryGraph& g) {
  std::vector<Sexpr> decls;
  for (const auto& gen : g.generics()) decls.push_back(generic_sexpr(*gen));
  for (const auto& t : g.theories()) decls.push_back(theory_sexpr(t));
  for (const auto& m : g.morphisms()) decls.push_back(morphism_sexpr(m));
  return write_document(decls);
}

}  // namespace btg::text
