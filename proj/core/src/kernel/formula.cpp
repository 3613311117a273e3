#include "btg/kernel/formula.hpp"

#include <map>

#include "btg/error.hpp"
#include "btg/kernel/operations.hpp"

namespace btg::kernel {

std::vector<Equation> equations(const Formula& f) {
  if (const auto* eq = std::get_if<Equation>(&f.body)) return {*eq};
  const auto& imp = std::get<Implication>(f.body);
  std::vector<Equation> out = imp.hypotheses;
  out.push_back(imp.conclusion);
  return out;
}

void check_formula(const Signature& sig, const Formula& f) {
  std::map<std::string, Sort> bound;
  for (const auto& b : f.binders) {
    if (!sig.has_sort(b.sort)) raise(Errc::UnknownSort, "binder " + b.name + " has undeclared sort " + b.sort.name);
    if (!bound.emplace(b.name, b.sort).second) raise(Errc::NameClash, "binder " + b.name + " bound twice");
  }
  for (const auto& eq : equations(f)) {
    Sort l = well_sorted(sig, eq.lhs);
    Sort r = well_sorted(sig, eq.rhs);
    if (l != r) {
      raise(Errc::SortMismatch, "equation sides have sorts " + l.name + " and " + r.name + ": " +
                                    to_string(eq.lhs) + " = " + to_string(eq.rhs));
    }
    for (const Term* side : {&eq.lhs, &eq.rhs}) {
      for (const auto& [name, sort] : free_vars(*side)) {
        auto it = bound.find(name);
        if (it == bound.end()) raise(Errc::UnboundVariable, "free variable " + name + " in formula");
        if (it->second != sort) raise(Errc::SortMismatch, "variable " + name + " used at sort " + sort.name);
      }
    }
  }
}

namespace {

struct Canonicalizer {
  std::map<std::string, std::string> names;

  Term rename(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::Var: {
        auto [it, fresh] = names.emplace(t.name(), "");
        if (fresh) it->second = "_" + std::to_string(names.size() - 1);
        return Term::var(it->second, t.sort());
      }
      case Term::Kind::Lit: return t;
      case Term::Kind::App: {
        std::vector<Term> args;
        for (const auto& a : t.args()) args.push_back(rename(a));
        return Term::app(t.name(), std::move(args));
      }
      case Term::Kind::Quote: return Term::quote(rename(t.body()));
    }
    return t;
  }
};

std::vector<Term> canonical_terms(const Formula& f) {
  Canonicalizer c;
  std::vector<Term> out;
  for (const auto& eq : equations(f)) {
    out.push_back(c.rename(eq.lhs));
    out.push_back(c.rename(eq.rhs));
  }
  return out;
}

}  // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) {
  if (a.body.index() != b.body.index()) return false;
  if (equations(a).size() != equations(b).size()) return false;
  return canonical_terms(a) == canonical_terms(b);
}

std::string to_string(const Formula& f) {
  auto eq_str = [](const Equation& e) { return "(= " + to_string(e.lhs) + " " + to_string(e.rhs) + ")"; };
  std::string body;
  if (const auto* eq = std::get_if<Equation>(&f.body)) {
    body = eq_str(*eq);
  } else {
    const auto& imp = std::get<Implication>(f.body);
    body = "(=> (";
    for (std::size_t i = 0; i < imp.hypotheses.size(); ++i) {
      if (i) body += ' ';
      body += eq_str(imp.hypotheses[i]);
    }
    body += ") " + eq_str(imp.conclusion) + ")";
  }
  if (f.binders.empty()) return body;
  std::string out = "(forall (";
  for (std::size_t i = 0; i < f.binders.size(); ++i) {
    if (i) out += ' ';
    out += "(" + f.binders[i].name + " " + f.binders[i].sort.name + ")";
  }
  return out + ") " + body + ")";
}

}  // namespace btg::kernel
