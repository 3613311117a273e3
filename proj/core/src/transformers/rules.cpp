#include "btg/transformers/rules.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "btg/error.hpp"

namespace btg::transformers {

namespace {

using Binding = std::map<std::string, Term>;

const PatternVar* find_var(const Rule& rule, const std::string& name) {
  for (const auto& v : rule.vars) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

bool guards_hold(const PatternVar& v, const Integer& value) {
  for (auto g : v.guards) {
    switch (g) {
      case Guard::Even:
        if (mod_floor(value, 2) != 0) return false;
        break;
      case Guard::Odd:
        if (mod_floor(value, 2) != 1) return false;
        break;
      case Guard::Positive:
        if (value <= 0) return false;
        break;
    }
  }
  return true;
}

bool match(const Rule& rule, const Term& pattern, const Term& t, Binding& b) {
  if (pattern.is_var()) {
    const PatternVar* v = find_var(rule, pattern.name());
    if (v == nullptr) return t == pattern;
    if (auto it = b.find(v->name); it != b.end()) return it->second == t;
    switch (v->kind) {
      case PatternVar::Kind::Any: break;
      case PatternVar::Kind::Literal:
        if (!t.is_lit() || !guards_hold(*v, t.value())) return false;
        break;
      case PatternVar::Kind::Variable:
        if (!t.is_var()) return false;
        break;
    }
    b.emplace(v->name, t);
    return true;
  }
  if (pattern.kind() != t.kind()) return false;
  switch (pattern.kind()) {
    case Term::Kind::Lit: return pattern.value() == t.value();
    case Term::Kind::Quote: return match(rule, pattern.body(), t.body(), b);
    case Term::Kind::App: {
      if (pattern.name() != t.name() || pattern.args().size() != t.args().size()) return false;
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (!match(rule, pattern.args()[i], t.args()[i], b)) return false;
      }
      return true;
    }
    case Term::Kind::Var: break;
  }
  return false;
}

Term instantiate(const Signature& sig, const Rule& rule, const Term& rhs, const Binding& b,
                 const std::optional<Sort>& expected) {
  switch (rhs.kind()) {
    case Term::Kind::Var: {
      auto it = b.find(rhs.name());
      if (it == b.end()) return rhs;
      const Term& bound = it->second;
      if (bound.is_lit() && expected && bound.sort() != *expected) return Term::lit(bound.value(), *expected);
      return bound;
    }
    case Term::Kind::Lit:
      if (expected && rhs.sort() != *expected) return Term::lit(rhs.value(), *expected);
      return rhs;
    case Term::Kind::Quote: return Term::quote(instantiate(sig, rule, rhs.body(), b, std::nullopt));
    case Term::Kind::App: {
      if (rhs.name() == kHalf) {
        Term arg = instantiate(sig, rule, rhs.args()[0], b, std::nullopt);
        if (!arg.is_lit()) raise(Errc::StuckRewrite, std::string(kHalf) + " applied to non-literal " + to_string(arg));
        Integer v = arg.value();
        Integer half = v >= 0 ? Integer(v / 2) : Integer(-((-v + 1) / 2));
        return Term::lit(half, expected ? *expected : arg.sort());
      }
      const SymbolDecl* decl = sig.find_symbol(rhs.name());
      std::vector<Term> args;
      args.reserve(rhs.args().size());
      for (std::size_t i = 0; i < rhs.args().size(); ++i) {
        std::optional<Sort> want;
        if (decl != nullptr && i < decl->args.size()) want = decl->args[i];
        args.push_back(instantiate(sig, rule, rhs.args()[i], b, want));
      }
      return Term::app(rhs.name(), std::move(args));
    }
  }
  return rhs;
}

class Rewriter {
 public:
  Rewriter(const Signature& sig, const RuleSet& rs) : sig_(sig), rs_(rs), fuel_(rs.fuel) {}

  Term normalize(const Term& t) {
    Term current = t;
    if (t.is_app()) {
      std::vector<Term> args;
      args.reserve(t.args().size());
      bool changed = false;
      for (const auto& a : t.args()) {
        args.push_back(normalize(a));
        changed = changed || args.back() != a;
      }
      if (changed) current = Term::app(t.name(), std::move(args));
    }
    for (const auto& rule : rs_.rules) {
      Binding b;
      if (!match(rule, rule.lhs, current, b)) continue;
      if (fuel_ == 0) {
        raise(Errc::FuelExhausted, "rule set for " + rs_.head.name + " exceeded " + std::to_string(rs_.fuel) +
                                       " rewrite steps");
      }
      --fuel_;
      std::optional<Sort> expected;
      if (current.is_var() || current.is_lit()) {
        expected = current.sort();
      } else if (const SymbolDecl* d = current.is_app() ? sig_.find_symbol(current.name()) : nullptr) {
        expected = d->result;
      }
      return normalize(instantiate(sig_, rule, rule.rhs, b, expected));
    }
    return current;
  }

 private:
  const Signature& sig_;
  const RuleSet& rs_;
  std::size_t fuel_;
};

bool mentions(const Term& t, const std::set<std::string>& names) {
  switch (t.kind()) {
    case Term::Kind::App:
      if (names.count(t.name())) return true;
      return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return mentions(a, names); });
    case Term::Kind::Quote: return mentions(t.body(), names);
    default: return false;
  }
}

[[noreturn]] void invalid(const RuleSet& rs, std::size_t index, const std::string& msg) {
  raise(Errc::InvalidRule, "rule " + std::to_string(index + 1) + " of " + rs.head.name + ": " + msg);
}

// Sort of a right-hand side; literal-kind variables and literals adopt the
// sort their position expects.
Sort rhs_sort(const Signature& sig, const Rule& rule, const Term& t, const std::optional<Sort>& expected) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      const PatternVar* v = find_var(rule, t.name());
      if (v != nullptr && v->kind == PatternVar::Kind::Literal && expected) {
        if (!sig.admits_literals(*expected)) {
          raise(Errc::LiteralNotAdmitted, "literal variable " + t.name() + " placed at " + expected->name);
        }
        return *expected;
      }
      return t.sort();
    }
    case Term::Kind::Lit: {
      Sort s = expected ? *expected : t.sort();
      if (!sig.admits_literals(s)) raise(Errc::LiteralNotAdmitted, "literal at " + s.name);
      return s;
    }
    case Term::Kind::Quote: return kernel::kSyn;
    case Term::Kind::App: {
      if (t.name() == kHalf) {
        if (t.args().size() != 1) raise(Errc::ArityMismatch, std::string(kHalf) + " takes one argument");
        const Term& a = t.args()[0];
        const PatternVar* v = a.is_var() ? find_var(rule, a.name()) : nullptr;
        if (!a.is_lit() && (v == nullptr || v->kind != PatternVar::Kind::Literal)) {
          raise(Errc::SortMismatch, std::string(kHalf) + " needs a literal or literal variable");
        }
        Sort s = expected ? *expected : (a.is_lit() ? a.sort() : v->sort);
        if (!sig.admits_literals(s)) raise(Errc::LiteralNotAdmitted, "literal at " + s.name);
        return s;
      }
      const SymbolDecl& decl = sig.symbol(t.name());
      if (decl.args.size() != t.args().size()) raise(Errc::ArityMismatch, "arity of " + t.name());
      for (std::size_t i = 0; i < decl.args.size(); ++i) {
        Sort got = rhs_sort(sig, rule, t.args()[i], decl.args[i]);
        if (got != decl.args[i]) {
          raise(Errc::SortMismatch, "argument " + std::to_string(i + 1) + " of " + t.name() + " has sort " +
                                        got.name + ", expected " + decl.args[i].name);
        }
      }
      return decl.result;
    }
  }
  return t.sort();
}

}  // namespace

std::string_view to_string(Guard g) noexcept {
  switch (g) {
    case Guard::Even: return "even";
    case Guard::Odd: return "odd";
    case Guard::Positive: return "positive";
  }
  return "even";
}

std::string_view to_string(PatternVar::Kind k) noexcept {
  switch (k) {
    case PatternVar::Kind::Any: return "any";
    case PatternVar::Kind::Literal: return "lit";
    case PatternVar::Kind::Variable: return "var";
  }
  return "any";
}

Signature rewriting_signature(const Signature& base, const RuleSet& rs) {
  Signature sig = base;
  sig.remove_symbol(rs.head.name);
  for (const auto& a : rs.aux) sig.remove_symbol(a.name);
  sig.add_symbol(rs.head);
  for (const auto& a : rs.aux) sig.add_symbol(a);
  return sig;
}

void validate_rules(const Signature& base, const RuleSet& rs) {
  Signature sig;
  try {
    sig = rewriting_signature(base, rs);
  } catch (const Error& e) {
    raise(Errc::InvalidRule, std::string("rule set for ") + rs.head.name + ": " + e.what());
  }
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    const Rule& rule = rs.rules[i];
    std::set<std::string> names;
    for (const auto& v : rule.vars) {
      if (!names.insert(v.name).second) invalid(rs, i, "duplicate variable " + v.name);
      if (!v.guards.empty() && v.kind != PatternVar::Kind::Literal) {
        invalid(rs, i, "guards are only allowed on literal variables");
      }
    }
    if (rule.lhs.is_var()) invalid(rs, i, "left side is a bare variable");
    if (mentions(rule.lhs, {std::string(kHalf)})) invalid(rs, i, std::string(kHalf) + " on the left side");
    Sort lhs_sort;
    try {
      lhs_sort = kernel::well_sorted(sig, rule.lhs);
      Sort r = rhs_sort(sig, rule, rule.rhs, lhs_sort);
      if (r != lhs_sort) invalid(rs, i, "sides have sorts " + lhs_sort.name + " and " + r.name);
    } catch (const Error& e) {
      if (e.code() == Errc::InvalidRule) throw;
      invalid(rs, i, e.what());
    }
    auto lhs_vars = kernel::free_vars(rule.lhs);
    std::set<std::string> lhs_names;
    for (const auto& [n, s] : lhs_vars) lhs_names.insert(n);
    for (const auto& [n, s] : kernel::free_vars(rule.rhs)) {
      if (!lhs_names.count(n)) invalid(rs, i, "right side variable " + n + " does not occur on the left");
    }
  }
}

Term run_rules(const Signature& base, const RuleSet& rs, std::span<const Term> args) {
  Signature sig = rewriting_signature(base, rs);
  Term input = Term::app(rs.head.name, std::vector<Term>(args.begin(), args.end()));
  Rewriter rw(sig, rs);
  Term out = rw.normalize(input);
  std::set<std::string> defined{rs.head.name};
  for (const auto& a : rs.aux) defined.insert(a.name);
  if (mentions(out, defined)) raise(Errc::StuckRewrite, "no rule applies in " + to_string(out));
  return out;
}

RuleSet translate_rules(const kernel::Renaming& r, const RuleSet& rs) {
  kernel::Renaming local = r;
  auto keep = [&](const SymbolDecl& d) {
    local.symbols[d.name] = d.name;
    SymbolDecl out{d.name, {}, r.sort(d.result)};
    for (const auto& a : d.args) out.args.push_back(r.sort(a));
    return out;
  };
  RuleSet out;
  out.head = keep(rs.head);
  for (const auto& a : rs.aux) out.aux.push_back(keep(a));
  local.symbols[std::string(kHalf)] = std::string(kHalf);
  out.fuel = rs.fuel;
  for (const auto& rule : rs.rules) {
    Rule t{{}, kernel::translate(local, rule.lhs), kernel::translate(local, rule.rhs)};
    for (const auto& v : rule.vars) t.vars.push_back({v.name, r.sort(v.sort), v.kind, v.guards});
    out.rules.push_back(std::move(t));
  }
  return out;
}

}  // namespace btg::transformers
