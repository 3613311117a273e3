#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "btg/kernel/signature.hpp"
#include "btg/kernel/term.hpp"
#include "btg/meaning/syntactic_class.hpp"
#include "btg/transformers/generic.hpp"
#include "btg/transformers/rules.hpp"

namespace btg::transformers {

struct OpaqueBody {
  std::string host_id;
  friend bool operator==(const OpaqueBody&, const OpaqueBody&) = default;
};

struct RulesBody {
  RuleSet rules;
  friend bool operator==(const RulesBody&, const RulesBody&) = default;
};

/// A specialization of a generic template; `rules` is the instantiated set.
struct GenericBody {
  std::shared_ptr<const GenericTransformer> generic;
  GenBinding binding;
  RuleSet rules;
  friend bool operator==(const GenericBody& a, const GenericBody& b) {
    return *a.generic == *b.generic && a.binding == b.binding && a.rules == b.rules;
  }
};

using Body = std::variant<OpaqueBody, RulesBody, GenericBody>;

/// Language of a transformer's output when it is not the owning theory's.
struct OutputLanguage {
  std::string theory;
  std::shared_ptr<const Signature> signature;
};

struct Transformer {
  std::string name;
  std::vector<meaning::SyntacticClass> arg_classes;
  Body body;
  std::optional<OutputLanguage> output;

  std::size_t arity() const noexcept { return arg_classes.size(); }
};

/// "opaque", "rules" or "generic".
std::string_view provenance(const Transformer& t) noexcept;

/// Opaque transformer over a registered host function, with the host's
/// argument classes. Throws UnknownTransformer.
Transformer make_opaque(const Signature& sig, std::string name, const std::string& host_id);

/// Transformers of one theory, in registration order.
class Registry {
 public:
  const Transformer* find(std::string_view name) const noexcept;
  /// Throws UnknownTransformer.
  const Transformer& at(std::string_view name) const;
  const std::vector<Transformer>& all() const noexcept { return items_; }
  bool empty() const noexcept { return items_.empty(); }

  /// Throws NameClash.
  void add(Transformer t);
  void remove(std::string_view name);

 private:
  std::vector<Transformer> items_;
};

/// Adds `t` to the registry and its name `name : Syn^n -> Syn` to `sig`,
/// importing whatever signature extension a host body needs and validating
/// rule bodies. Throws NameClash, InvalidRule, UnknownTransformer.
void register_transformer(Signature& sig, Registry& reg, Transformer t);

/// Runs a transformer. Throws ArityMismatch, ClassViolation, FuelExhausted,
/// StuckRewrite, HostError and host-specific errors.
kernel::Term apply_transformer(const Signature& sig, const Transformer& t, std::span<const kernel::Term> args);

kernel::Term apply_transformer(const Signature& sig, const Registry& reg, std::string_view name,
                               std::span<const kernel::Term> args);

/// Quote(apply(name, unquote(args)...)). Throws NotAQuotation, OpenBody and
/// the errors of apply_transformer.
kernel::Term quote_apply(const Signature& sig, const Registry& reg, std::string_view name,
                         std::span<const kernel::Term> quoted);

}  // namespace btg::transformers
