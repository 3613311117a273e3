#include "btg/transformers/generic.hpp"

#include <set>

#include "btg/error.hpp"

namespace btg::transformers {

void validate_generic(const GenericTransformer& g) {
  std::set<std::string> params(g.sort_params.begin(), g.sort_params.end());
  std::set<std::string> roles;
  auto check_sort = [&](const std::string& s) {
    if (!params.count(s)) raise(Errc::InvalidRule, "generic " + g.name + ": unknown sort parameter " + s);
  };
  for (const auto& r : g.roles) {
    if (!roles.insert(r.name).second) raise(Errc::InvalidRule, "generic " + g.name + ": duplicate role " + r.name);
    for (const auto& a : r.args) check_sort(a);
    check_sort(r.result);
  }
  validate_rules(placeholder_signature(g), g.templ);
}

Signature placeholder_signature(const GenericTransformer& g) {
  Signature sig;
  for (const auto& p : g.sort_params) sig.add_sort(Sort{p});
  for (const auto& p : g.sort_params) sig.admit_literals(Sort{p});
  for (const auto& r : g.roles) {
    SymbolDecl d{r.name, {}, Sort{r.result}};
    for (const auto& a : r.args) d.args.push_back(Sort{a});
    sig.add_symbol(d);
  }
  return sig;
}

kernel::Renaming instantiation(const GenericTransformer& g, const GenBinding& b, const Signature& target) {
  kernel::Renaming r;
  auto bind_sort = [&](const std::string& param, const Sort& s, const std::string& role) {
    auto [it, fresh] = r.sorts.emplace(param, s.name);
    if (!fresh && it->second != s.name) {
      raise(Errc::ShapeMismatch, "role " + role + " binds sort " + param + " to " + s.name + " but it is already " +
                                     it->second);
    }
  };
  for (const auto& role : g.roles) {
    auto it = b.roles.find(role.name);
    if (it == b.roles.end()) raise(Errc::MissingBinding, "generic " + g.name + ": role " + role.name + " is unbound");
    const SymbolDecl* d = target.find_symbol(it->second);
    if (d == nullptr) raise(Errc::ShapeMismatch, "role " + role.name + " bound to unknown symbol " + it->second);
    if (d->args.size() != role.args.size()) {
      raise(Errc::ShapeMismatch, "role " + role.name + " expects shape " + to_string(role) + ", got " +
                                     kernel::to_string(*d));
    }
    for (std::size_t i = 0; i < d->args.size(); ++i) bind_sort(role.args[i], d->args[i], role.name);
    bind_sort(role.result, d->result, role.name);
    r.symbols[role.name] = d->name;
  }
  for (const auto& [role, sym] : b.roles) {
    bool known = false;
    for (const auto& x : g.roles) known = known || x.name == role;
    if (!known) raise(Errc::ShapeMismatch, "generic " + g.name + " has no role " + role);
  }
  for (const auto& p : g.sort_params) {
    if (!r.sorts.count(p)) raise(Errc::MissingBinding, "generic " + g.name + ": sort " + p + " is not determined");
  }
  return r;
}

RuleSet specialize(const GenericTransformer& g, const GenBinding& b, const Signature& target) {
  kernel::Renaming r = instantiation(g, b, target);
  RuleSet rs = translate_rules(r, g.templ);
  try {
    validate_rules(target, rs);
  } catch (const Error& e) {
    raise(Errc::ShapeMismatch, "specializing " + g.name + ": " + e.what());
  }
  return rs;
}

GenBinding translate_binding(const kernel::Renaming& r, const GenBinding& b) {
  GenBinding out;
  for (const auto& [role, sym] : b.roles) out.roles.emplace(role, r.symbol(sym));
  return out;
}

std::string to_string(const Role& role) {
  std::string out = "(" + role.name;
  for (const auto& a : role.args) out += " " + a;
  return out + " -> " + role.result + ")";
}

}  // namespace btg::transformers
