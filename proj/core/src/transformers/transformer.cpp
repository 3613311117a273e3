#include "btg/transformers/transformer.hpp"

#include <algorithm>

#include "btg/error.hpp"
#include "btg/kernel/operations.hpp"
#include "btg/transformers/host.hpp"

namespace btg::transformers {

std::string_view provenance(const Transformer& t) noexcept {
  switch (t.body.index()) {
    case 0: return "opaque";
    case 1: return "rules";
    default: return "generic";
  }
}

Transformer make_opaque(const Signature& sig, std::string name, const std::string& host_id) {
  const HostDescriptor* host = find_host(host_id);
  if (host == nullptr) raise(Errc::UnknownTransformer, "no host function named " + host_id);
  Signature prepared = sig;
  if (host->prepare) host->prepare(prepared);
  return Transformer{std::move(name), host->classes(prepared), OpaqueBody{host_id}, std::nullopt};
}

const Transformer* Registry::find(std::string_view name) const noexcept {
  for (const auto& t : items_) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const Transformer& Registry::at(std::string_view name) const {
  const Transformer* t = find(name);
  if (t == nullptr) raise(Errc::UnknownTransformer, "no transformer named " + std::string(name));
  return *t;
}

void Registry::add(Transformer t) {
  if (find(t.name) != nullptr) raise(Errc::NameClash, "transformer " + t.name + " already registered");
  items_.push_back(std::move(t));
}

void Registry::remove(std::string_view name) {
  items_.erase(std::remove_if(items_.begin(), items_.end(), [&](const Transformer& t) { return t.name == name; }),
               items_.end());
}

void register_transformer(Signature& sig, Registry& reg, Transformer t) {
  if (reg.find(t.name) != nullptr) raise(Errc::NameClash, "transformer " + t.name + " already registered");
  if (const auto* op = std::get_if<OpaqueBody>(&t.body)) {
    const HostDescriptor* host = find_host(op->host_id);
    if (host == nullptr) raise(Errc::UnknownTransformer, "no host function named " + op->host_id);
    if (host->arity != t.arity()) {
      raise(Errc::ArityMismatch, "transformer " + t.name + " declares " + std::to_string(t.arity()) +
                                     " arguments, host " + op->host_id + " takes " + std::to_string(host->arity));
    }
    if (host->prepare) host->prepare(sig);
  } else if (const auto* rb = std::get_if<RulesBody>(&t.body)) {
    validate_rules(t.output ? kernel::merge_signatures(sig, *t.output->signature) : sig, rb->rules);
    if (rb->rules.head.arity() != t.arity()) raise(Errc::InvalidRule, "head arity differs from transformer arity");
  } else {
    const auto& gb = std::get<GenericBody>(t.body);
    validate_rules(sig, gb.rules);
    if (gb.rules.head.arity() != t.arity()) raise(Errc::InvalidRule, "head arity differs from transformer arity");
  }
  sig.add_symbol({t.name, std::vector<kernel::Sort>(t.arity(), kernel::kSyn), kernel::kSyn});
  reg.add(std::move(t));
}

kernel::Term apply_transformer(const Signature& sig, const Transformer& t, std::span<const kernel::Term> args) {
  if (args.size() != t.arity()) {
    raise(Errc::ArityMismatch, t.name + " takes " + std::to_string(t.arity()) + " arguments, got " +
                                   std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (!meaning::class_member(args[i], t.arg_classes[i], sig)) {
      raise(Errc::ClassViolation, "argument " + std::to_string(i + 1) + " of " + t.name + ", " +
                                      kernel::to_string(args[i]) + ", is not in " +
                                      meaning::to_string(t.arg_classes[i]));
    }
  }
  kernel::Term out = [&] {
    if (const auto* op = std::get_if<OpaqueBody>(&t.body)) {
      const HostDescriptor* host = find_host(op->host_id);
      if (host == nullptr) raise(Errc::UnknownTransformer, "no host function named " + op->host_id);
      try {
        return host->fn(sig, args);
      } catch (const Error&) {
        throw;
      } catch (const std::exception& e) {
        raise(Errc::HostError, op->host_id + ": " + e.what());
      }
    }
    const RuleSet& rules = std::holds_alternative<RulesBody>(t.body) ? std::get<RulesBody>(t.body).rules
                                                                      : std::get<GenericBody>(t.body).rules;
    if (t.output) return run_rules(kernel::merge_signatures(sig, *t.output->signature), rules, args);
    return run_rules(sig, rules, args);
  }();
  const Signature& out_sig = t.output ? *t.output->signature : sig;
  try {
    (void)kernel::well_sorted(out_sig, out);
  } catch (const Error& e) {
    raise(Errc::HostError, t.name + " produced ill-sorted output " + kernel::to_string(out) + ": " + e.what());
  }
  return out;
}

kernel::Term apply_transformer(const Signature& sig, const Registry& reg, std::string_view name,
                               std::span<const kernel::Term> args) {
  return apply_transformer(sig, reg.at(name), args);
}

kernel::Term quote_apply(const Signature& sig, const Registry& reg, std::string_view name,
                         std::span<const kernel::Term> quoted) {
  std::vector<kernel::Term> args;
  args.reserve(quoted.size());
  for (const auto& q : quoted) args.push_back(kernel::unquote(q));
  return kernel::Term::quote(apply_transformer(sig, reg, name, args));
}

}  // namespace btg::transformers
