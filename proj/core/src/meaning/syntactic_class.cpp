#include "btg/meaning/syntactic_class.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "btg/error.hpp"
#include "btg/kernel/operations.hpp"
#include "btg/kernel/random.hpp"
#include "btg/semantics/check.hpp"

namespace btg::meaning {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool sorts_to(const Signature& sig, const Term& t, const Sort& sort) {
  try {
    return kernel::well_sorted(sig, t) == sort;
  } catch (const Error&) {
    return false;
  }
}

std::string hole_name(Production::Hole h) {
  switch (h) {
    case Production::Hole::Self: return "self";
    case Production::Hole::Literal: return "lit";
    case Production::Hole::Variable: return "var";
  }
  return "self";
}

const Production::Hole* find_hole(const Production& p, const std::string& name) {
  for (const auto& [n, h] : p.holes) {
    if (n == name) return &h;
  }
  return nullptr;
}

bool grammar_member(const Term& t, const GrammarClass& g);

bool match_production(const Production& p, const Term& pattern, const Term& t, const GrammarClass& g,
                      std::map<std::string, Term>& bound) {
  if (pattern.is_var()) {
    if (const auto* hole = find_hole(p, pattern.name())) {
      if (auto it = bound.find(pattern.name()); it != bound.end()) return it->second == t;
      bool ok = false;
      switch (*hole) {
        case Production::Hole::Self: ok = grammar_member(t, g); break;
        case Production::Hole::Literal: ok = t.is_lit() && t.sort() == pattern.sort(); break;
        case Production::Hole::Variable: ok = t.is_var() && t.sort() == pattern.sort(); break;
      }
      if (ok) bound.emplace(pattern.name(), t);
      return ok;
    }
    return pattern == t;
  }
  if (pattern.kind() != t.kind()) return false;
  switch (pattern.kind()) {
    case Term::Kind::Lit: return pattern == t;
    case Term::Kind::Quote: return match_production(p, pattern.body(), t.body(), g, bound);
    case Term::Kind::App:
      if (pattern.name() != t.name() || pattern.args().size() != t.args().size()) return false;
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (!match_production(p, pattern.args()[i], t.args()[i], g, bound)) return false;
      }
      return true;
    case Term::Kind::Var: break;
  }
  return false;
}

bool grammar_member(const Term& t, const GrammarClass& g) {
  for (const auto& p : g.productions) {
    std::map<std::string, Term> bound;
    if (match_production(p, p.pattern, t, g, bound)) return true;
  }
  return false;
}

struct SingleSorted {
  std::vector<Term> leaves;
  std::vector<std::pair<std::string, std::size_t>> ops;
};

SingleSorted poly_grammar(const PolyTermClass& c, const Signature& sig, const std::vector<Integer>& pool) {
  SingleSorted g;
  if (sig.admits_literals(c.sort)) {
    for (const auto& v : pool) g.leaves.push_back(Term::lit(v, c.sort));
  }
  const auto& names = c.vars ? *c.vars : std::vector<std::string>{"x"};
  for (const auto& v : names) g.leaves.push_back(Term::var(v, c.sort));
  for (const auto* n : {&c.ring.zero, &c.ring.one}) {
    if (sig.has_symbol(*n)) g.leaves.push_back(Term::app(*n));
  }
  if (sig.has_symbol(c.ring.plus)) g.ops.emplace_back(c.ring.plus, 2);
  if (sig.has_symbol(c.ring.times)) g.ops.emplace_back(c.ring.times, 2);
  if (sig.has_symbol(c.ring.neg)) g.ops.emplace_back(c.ring.neg, 1);
  return g;
}

std::vector<Term> enumerate_single_sorted(const SingleSorted& g, std::size_t max_depth) {
  std::vector<Term> upto = g.leaves;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::vector<Term> fresh;
    for (const auto& [name, arity] : g.ops) {
      std::vector<std::size_t> idx(arity, 0);
      if (upto.empty()) break;
      while (true) {
        bool reaches = false;
        for (auto i : idx) reaches = reaches || upto[i].depth() == d - 1;
        if (reaches) {
          std::vector<Term> args;
          for (auto i : idx) args.push_back(upto[i]);
          fresh.push_back(Term::app(name, std::move(args)));
        }
        std::size_t pos = idx.size();
        while (pos > 0 && ++idx[pos - 1] == upto.size()) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }
    upto.insert(upto.end(), fresh.begin(), fresh.end());
  }
  return upto;
}

Term instantiate(const Term& pattern, const std::map<std::string, Term>& fill) {
  switch (pattern.kind()) {
    case Term::Kind::Var: {
      auto it = fill.find(pattern.name());
      return it == fill.end() ? pattern : it->second;
    }
    case Term::Kind::Lit: return pattern;
    case Term::Kind::Quote: return Term::quote(instantiate(pattern.body(), fill));
    case Term::Kind::App: {
      std::vector<Term> args;
      for (const auto& a : pattern.args()) args.push_back(instantiate(a, fill));
      return Term::app(pattern.name(), std::move(args));
    }
  }
  return pattern;
}

std::vector<std::string> holes_in_order(const Production& p) {
  std::vector<std::string> out;
  for (const auto& [name, sort] : kernel::free_vars(p.pattern)) {
    if (find_hole(p, name)) out.push_back(name);
  }
  return out;
}

std::vector<Term> hole_fillers(Production::Hole h, const Sort& sort, const std::vector<Integer>& pool,
                               const std::vector<Term>& members) {
  std::vector<Term> out;
  switch (h) {
    case Production::Hole::Self: return members;
    case Production::Hole::Literal:
      for (const auto& v : pool) out.push_back(Term::lit(v, sort));
      break;
    case Production::Hole::Variable:
      for (const auto& n : default_variable_names()) out.push_back(Term::var(n, sort));
      break;
  }
  return out;
}

std::vector<Term> enumerate_grammar(const GrammarClass& g, std::size_t max_depth, const std::vector<Integer>& pool) {
  std::vector<Term> members;
  std::set<Term> seen;
  for (std::size_t level = 0; level <= max_depth; ++level) {
    std::vector<Term> fresh;
    for (const auto& p : g.productions) {
      auto holes = holes_in_order(p);
      bool recursive = false;
      std::vector<std::vector<Term>> choices;
      std::map<std::string, Sort> sorts;
      for (const auto& [name, sort] : kernel::free_vars(p.pattern)) sorts.emplace(name, sort);
      for (const auto& h : holes) {
        auto kind = *find_hole(p, h);
        recursive = recursive || kind == Production::Hole::Self;
        choices.push_back(hole_fillers(kind, sorts.at(h), pool, members));
      }
      if ((level == 0) == recursive) continue;
      if (std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); })) continue;
      std::vector<std::size_t> idx(holes.size(), 0);
      while (true) {
        std::map<std::string, Term> fill;
        for (std::size_t i = 0; i < holes.size(); ++i) fill.emplace(holes[i], choices[i][idx[i]]);
        Term t = instantiate(p.pattern, fill);
        if (t.depth() <= max_depth && !seen.count(t)) fresh.push_back(t);
        std::size_t pos = idx.size();
        while (pos > 0 && ++idx[pos - 1] == choices[pos - 1].size()) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }
    for (auto& t : fresh) {
      if (seen.insert(t).second) members.push_back(t);
    }
  }
  return members;
}

Term random_poly(const PolyTermClass& c, const Signature& sig, Rng& rng, std::size_t budget) {
  const auto& names = c.vars ? *c.vars : default_variable_names();
  std::vector<std::pair<std::string, std::size_t>> ops;
  if (sig.has_symbol(c.ring.plus)) ops.emplace_back(c.ring.plus, 2);
  if (sig.has_symbol(c.ring.times)) ops.emplace_back(c.ring.times, 2);
  const bool has_neg = sig.has_symbol(c.ring.neg);
  if (budget == 0 || ops.empty() || rng.chance(1, 2)) {
    const bool lits = sig.admits_literals(c.sort);
    std::uint64_t roll = rng.below(10);
    if ((roll < 5 || !lits) && !names.empty()) return Term::var(names[rng.below(names.size())], c.sort);
    if (roll < 9 && lits) return Term::lit(rng.range(-5, 5), c.sort);
    const std::string& k = rng.chance(1, 2) ? c.ring.zero : c.ring.one;
    if (sig.has_symbol(k)) return Term::app(k);
    if (lits) return Term::lit(rng.range(-5, 5), c.sort);
    return Term::var(names.front(), c.sort);
  }
  if (has_neg && rng.chance(1, 10)) return Term::app(c.ring.neg, {random_poly(c, sig, rng, budget - 1)});
  const auto& [name, arity] = ops[rng.below(ops.size())];
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) args.push_back(random_poly(c, sig, rng, budget - 1));
  return Term::app(name, std::move(args));
}

/// Depth exactly `depth`: one argument position carries the depth, the others
/// grow freely below it.
Term random_poly_exact(const PolyTermClass& c, const Signature& sig, Rng& rng, std::size_t depth) {
  std::vector<std::pair<std::string, std::size_t>> ops;
  if (sig.has_symbol(c.ring.plus)) ops.emplace_back(c.ring.plus, 2);
  if (sig.has_symbol(c.ring.times)) ops.emplace_back(c.ring.times, 2);
  if (depth == 0 || ops.empty()) return random_poly(c, sig, rng, 0);
  if (sig.has_symbol(c.ring.neg) && rng.chance(1, 10)) {
    return Term::app(c.ring.neg, {random_poly_exact(c, sig, rng, depth - 1)});
  }
  const auto& [name, arity] = ops[rng.below(ops.size())];
  const std::size_t deep = rng.below(arity);
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) {
    args.push_back(i == deep ? random_poly_exact(c, sig, rng, depth - 1) : random_poly(c, sig, rng, depth - 1));
  }
  return Term::app(name, std::move(args));
}

std::optional<Term> random_grammar(const GrammarClass& g, Rng& rng, std::size_t budget) {
  std::vector<const Production*> fit;
  for (const auto& p : g.productions) {
    bool recursive = false;
    for (const auto& [n, h] : p.holes) recursive = recursive || h == Production::Hole::Self;
    if (!recursive || budget > 0) fit.push_back(&p);
  }
  if (fit.empty()) return std::nullopt;
  // Prefer leaves half of the time so sizes stay moderate.
  std::vector<const Production*> leaves;
  for (const auto* p : fit) {
    if (std::none_of(p->holes.begin(), p->holes.end(),
                     [](const auto& h) { return h.second == Production::Hole::Self; })) {
      leaves.push_back(p);
    }
  }
  const Production* p =
      !leaves.empty() && rng.chance(1, 2) ? leaves[rng.below(leaves.size())] : fit[rng.below(fit.size())];
  std::map<std::string, Sort> sorts;
  for (const auto& [name, sort] : kernel::free_vars(p->pattern)) sorts.emplace(name, sort);
  std::map<std::string, Term> fill;
  for (const auto& h : holes_in_order(*p)) {
    const Sort& sort = sorts.at(h);
    switch (*find_hole(*p, h)) {
      case Production::Hole::Self: {
        auto sub = random_grammar(g, rng, budget - 1);
        if (!sub) return std::nullopt;
        fill.emplace(h, *sub);
        break;
      }
      case Production::Hole::Literal: fill.emplace(h, Term::lit(rng.range(-9, 9), sort)); break;
      case Production::Hole::Variable: {
        const auto& names = default_variable_names();
        fill.emplace(h, Term::var(names[rng.below(names.size())], sort));
        break;
      }
    }
  }
  return instantiate(p->pattern, fill);
}

}  // namespace

const std::vector<std::string>& default_variable_names() {
  static const std::vector<std::string> names{"x", "y", "z"};
  return names;
}

std::string to_string(const SyntacticClass& c) {
  return std::visit(
      overloaded{
          [](const ClosedTermClass& k) { return "(closed " + k.sort.name + ")"; },
          [](const NumeralClass& k) {
            std::string out = "(numeral";
            if (k.sort) out += " " + k.sort->name;
            if (k.nonzero) out += " nonzero";
            return out + ")";
          },
          [](const PolyTermClass& k) {
            std::string out = "(poly " + k.sort.name;
            if (k.vars) {
              for (const auto& v : *k.vars) out += " " + v;
            }
            return out + ")";
          },
          [](const LanguageClass& k) { return "(language " + k.theory + " " + k.sort.name + ")"; },
          [](const VariableClass& k) { return "(variable " + k.sort.name + ")"; },
          [](const GrammarClass& k) {
            std::string out = "(grammar " + k.sort.name;
            for (const auto& p : k.productions) {
              out += " (prod " + kernel::to_string(p.pattern);
              for (const auto& [n, h] : p.holes) out += " (" + n + " " + hole_name(h) + ")";
              out += ")";
            }
            return out + ")";
          },
      },
      c);
}

bool class_member(const Term& t, const SyntacticClass& c, const Signature& sig) {
  return std::visit(
      overloaded{
          [&](const ClosedTermClass& k) { return kernel::is_closed(t) && sorts_to(sig, t, k.sort); },
          [&](const NumeralClass& k) {
            return t.is_lit() && (!k.sort || t.sort() == *k.sort) && (!k.nonzero || t.value() != 0);
          },
          [&](const PolyTermClass& k) {
            return sorts_to(sig, t, k.sort) &&
                   semantics::is_polynomial_shaped(t, k.ring, k.sort, k.vars ? &*k.vars : nullptr);
          },
          [&](const LanguageClass& k) { return k.signature && sorts_to(*k.signature, t, k.sort); },
          [&](const VariableClass& k) { return t.is_var() && t.sort() == k.sort; },
          [&](const GrammarClass& k) { return grammar_member(t, k); },
      },
      c);
}

std::vector<Term> enumerate_class(const SyntacticClass& c, const Signature& sig, std::size_t max_depth,
                                  const std::vector<Integer>& pool) {
  return std::visit(
      overloaded{
          [&](const ClosedTermClass& k) { return kernel::enumerate_terms(sig, k.sort, max_depth, pool); },
          [&](const NumeralClass& k) {
            std::vector<Term> out;
            const Sort* s = k.sort ? &*k.sort : sig.numeral_sort();
            if (s == nullptr) return out;
            for (const auto& v : pool) {
              if (!k.nonzero || v != 0) out.push_back(Term::lit(v, *s));
            }
            return out;
          },
          [&](const PolyTermClass& k) { return enumerate_single_sorted(poly_grammar(k, sig, pool), max_depth); },
          [&](const LanguageClass& k) {
            if (!k.signature) return std::vector<Term>{};
            return kernel::enumerate_terms(*k.signature, k.sort, max_depth, pool);
          },
          [&](const VariableClass& k) {
            std::vector<Term> out;
            for (const auto& n : default_variable_names()) out.push_back(Term::var(n, k.sort));
            return out;
          },
          [&](const GrammarClass& k) { return enumerate_grammar(k, max_depth, pool); },
      },
      c);
}

std::optional<Term> random_member(const SyntacticClass& c, const Signature& sig, Rng& rng, std::size_t max_depth) {
  return std::visit(
      overloaded{
          [&](const ClosedTermClass& k) {
            return kernel::random_closed_term(sig, k.sort, rng, {max_depth, -9, 9, 35});
          },
          [&](const NumeralClass& k) -> std::optional<Term> {
            const Sort* s = k.sort ? &*k.sort : sig.numeral_sort();
            if (s == nullptr) return std::nullopt;
            std::int64_t v = 0;
            do {
              v = rng.range(-semantics::kRandomIntBound, semantics::kRandomIntBound);
            } while (k.nonzero && v == 0);
            return Term::lit(v, *s);
          },
          [&](const PolyTermClass& k) -> std::optional<Term> { return random_poly_exact(k, sig, rng, rng.below(max_depth + 1)); },
          [&](const LanguageClass& k) -> std::optional<Term> {
            if (!k.signature) return std::nullopt;
            return kernel::random_closed_term(*k.signature, k.sort, rng, {max_depth, -9, 9, 35});
          },
          [&](const VariableClass& k) -> std::optional<Term> {
            const auto& names = default_variable_names();
            return Term::var(names[rng.below(names.size())], k.sort);
          },
          [&](const GrammarClass& k) { return random_grammar(k, rng, max_depth); },
      },
      c);
}

std::vector<Term> shrink_candidates(const Term& t, const SyntacticClass& c, const Signature& sig) {
  std::vector<Term> out;
  std::set<Term> seen{t};
  auto push = [&](const Term& cand) {
    if (cand.size() <= t.size() && seen.insert(cand).second && class_member(cand, c, sig)) out.push_back(cand);
  };
  if (t.is_lit()) {
    for (Integer v : {Integer(0), Integer(1), Integer(t.value() / 2)}) push(Term::lit(v, t.sort()));
    return out;
  }
  if (!t.is_app()) return out;
  for (const auto& a : t.args()) push(a);
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    for (const auto& smaller : shrink_candidates(t.args()[i], c, sig)) {
      std::vector<Term> args(t.args().begin(), t.args().end());
      args[i] = smaller;
      push(Term::app(t.name(), std::move(args)));
    }
  }
  return out;
}

SyntacticClass translate_class(const kernel::Renaming& r, const SyntacticClass& c) {
  return std::visit(
      overloaded{
          [&](const ClosedTermClass& k) -> SyntacticClass { return ClosedTermClass{r.sort(k.sort)}; },
          [&](const NumeralClass& k) -> SyntacticClass {
            return NumeralClass{k.sort ? std::optional<Sort>(r.sort(*k.sort)) : std::nullopt, k.nonzero};
          },
          [&](const PolyTermClass& k) -> SyntacticClass {
            return PolyTermClass{r.sort(k.sort), k.vars, k.ring.renamed(r)};
          },
          [&](const LanguageClass& k) -> SyntacticClass { return k; },
          [&](const VariableClass& k) -> SyntacticClass { return VariableClass{r.sort(k.sort)}; },
          [&](const GrammarClass& k) -> SyntacticClass {
            GrammarClass out{r.sort(k.sort), {}};
            for (const auto& p : k.productions) out.productions.push_back({kernel::translate(r, p.pattern), p.holes});
            return out;
          },
      },
      c);
}

}  // namespace btg::meaning
