#include "btg/kernel/operations.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "btg/error.hpp"

namespace btg::kernel {

Sort well_sorted(const Signature& sig, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (!sig.has_sort(t.sort())) raise(Errc::UnknownSort, "variable " + t.name() + " has undeclared sort " + t.sort().name);
      return t.sort();
    case Term::Kind::Lit:
      if (!sig.admits_literals(t.sort())) {
        raise(Errc::LiteralNotAdmitted, "sort " + t.sort().name + " does not admit literal " + t.value().str());
      }
      return t.sort();
    case Term::Kind::App: {
      const auto& decl = sig.symbol(t.name());
      if (decl.arity() != t.args().size()) {
        raise(Errc::ArityMismatch, t.name() + " expects " + std::to_string(decl.arity()) + " arguments, got " +
                                       std::to_string(t.args().size()));
      }
      for (std::size_t i = 0; i < decl.arity(); ++i) {
        Sort s = well_sorted(sig, t.args()[i]);
        if (s != decl.args[i]) {
          raise(Errc::SortMismatch, "argument " + std::to_string(i + 1) + " of " + t.name() + " has sort " + s.name +
                                        ", expected " + decl.args[i].name);
        }
      }
      return decl.result;
    }
    case Term::Kind::Quote:
      well_sorted(sig, t.body());
      return kSyn;
  }
  return kSyn;
}

namespace {

Term substitute_unchecked(const Term& t, const Valuation& v) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = v.find(t.name());
      return it == v.end() ? t : it->second;
    }
    case Term::Kind::Lit: return t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(substitute_unchecked(a, v));
      return Term::app(t.name(), std::move(args));
    }
    case Term::Kind::Quote: return Term::quote(substitute_unchecked(t.body(), v));
  }
  return t;
}

}  // namespace

Term substitute(const Signature& sig, const Term& t, const Valuation& v) {
  if (v.empty()) return t;
  for (const auto& [name, sort] : free_vars(t)) {
    auto it = v.find(name);
    if (it == v.end()) continue;
    Sort replacement = well_sorted(sig, it->second);
    if (replacement != sort) {
      raise(Errc::SortMismatch, "cannot replace " + name + ":" + sort.name + " by a term of sort " + replacement.name);
    }
  }
  return substitute_unchecked(t, v);
}

Term unquote(const Term& t) {
  if (!t.is_quote()) raise(Errc::NotAQuotation, to_string(t) + " is not a quotation");
  if (!is_closed(t.body())) raise(Errc::OpenBody, "cannot evaluate open syntax " + to_string(t));
  return t.body();
}

namespace {

void reachable_sorts(const Signature& sig, const Sort& s, std::set<Sort>& seen) {
  if (s == kSyn || !seen.insert(s).second) return;
  for (const auto* decl : sig.constructors_of(s)) {
    for (const auto& a : decl->args) reachable_sorts(sig, a, seen);
  }
}

// Odometer over index tuples, last position varying fastest.
bool advance(std::vector<std::size_t>& idx, const std::vector<const std::vector<Term>*>& pools) {
  for (std::size_t pos = idx.size(); pos-- > 0;) {
    if (++idx[pos] < pools[pos]->size()) return true;
    idx[pos] = 0;
  }
  return false;
}

}  // namespace

std::vector<Term> enumerate_terms(const Signature& sig, const Sort& sort, std::size_t max_depth,
                                  const std::vector<Integer>& literal_pool) {
  if (sort == kSyn) return {};
  if (!sig.has_sort(sort)) raise(Errc::UnknownSort, "undeclared sort " + sort.name);
  std::set<Sort> sorts;
  reachable_sorts(sig, sort, sorts);

  // upto[s] holds every term of depth <= current level, in enumeration order.
  std::map<Sort, std::vector<Term>> upto;
  for (const auto& s : sorts) {
    auto& level = upto[s];
    if (sig.admits_literals(s)) {
      for (const auto& v : literal_pool) level.push_back(Term::lit(v, s));
    }
    for (const auto* decl : sig.constructors_of(s)) {
      if (decl->arity() == 0) level.push_back(Term::app(decl->name));
    }
  }

  for (std::size_t d = 1; d <= max_depth; ++d) {
    std::map<Sort, std::vector<Term>> fresh;
    for (const auto& decl : sig.symbols()) {
      if (decl.arity() == 0 || !sorts.count(decl.result)) continue;
      std::vector<const std::vector<Term>*> pools;
      bool empty = false;
      for (const auto& a : decl.args) {
        pools.push_back(&upto[a]);
        empty = empty || pools.back()->empty();
      }
      if (empty) continue;
      auto& out = fresh[decl.result];
      std::vector<std::size_t> idx(decl.arity(), 0);
      while (true) {
        bool reaches = false;
        for (std::size_t i = 0; i < idx.size(); ++i) reaches = reaches || (*pools[i])[idx[i]].depth() == d - 1;
        if (reaches) {
          std::vector<Term> args;
          args.reserve(idx.size());
          for (std::size_t i = 0; i < idx.size(); ++i) args.push_back((*pools[i])[idx[i]]);
          out.push_back(Term::app(decl.name, std::move(args)));
        }
        if (!advance(idx, pools)) break;
      }
    }
    for (auto& [s, terms] : fresh) {
      auto& level = upto[s];
      level.insert(level.end(), terms.begin(), terms.end());
    }
  }
  return upto[sort];
}

Sort Renaming::sort(const Sort& s) const {
  if (s == kSyn) return kSyn;
  auto it = sorts.find(s.name);
  if (it == sorts.end()) raise(Errc::UnmappedSymbol, "sort " + s.name + " is not mapped");
  return Sort{it->second};
}

const std::string& Renaming::symbol(const std::string& name) const {
  auto it = symbols.find(name);
  if (it == symbols.end()) raise(Errc::UnmappedSymbol, "symbol " + name + " is not mapped");
  return it->second;
}

Term translate(const Renaming& r, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return Term::var(t.name(), r.sort(t.sort()));
    case Term::Kind::Lit: return Term::lit(t.value(), r.sort(t.sort()));
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(translate(r, a));
      return Term::app(r.symbol(t.name()), std::move(args));
    }
    case Term::Kind::Quote: return Term::quote(translate(r, t.body()));
  }
  return t;
}

}  // namespace btg::kernel
