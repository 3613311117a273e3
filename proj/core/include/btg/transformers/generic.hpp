#pragma once

#include <map>
#include <string>
#include <vector>

#include "btg/kernel/signature.hpp"
#include "btg/transformers/rules.hpp"

namespace btg::transformers {

/// A parameter of a generic transformer: a symbol of a given shape over sort
/// placeholders, e.g. `op : S S -> S`.
struct Role {
  std::string name;
  std::vector<std::string> args;
  std::string result;
  friend bool operator==(const Role&, const Role&) = default;
};

/// A rule-set template over role symbols and sort placeholders.
struct GenericTransformer {
  std::string name;
  std::vector<std::string> sort_params;
  std::vector<Role> roles;
  RuleSet templ;
  friend bool operator==(const GenericTransformer&, const GenericTransformer&) = default;
};

/// Role name -> concrete symbol of the target theory.
struct GenBinding {
  std::map<std::string, std::string> roles;
  friend bool operator==(const GenBinding&, const GenBinding&) = default;
};

/// Checks a generic definition for internal consistency. Throws InvalidRule.
void validate_generic(const GenericTransformer& g);

/// Sort parameters (all admitting literals) and role symbols.
Signature placeholder_signature(const GenericTransformer& g);

/// The renaming from template placeholders to target sorts and symbols.
/// Throws MissingBinding, ShapeMismatch.
kernel::Renaming instantiation(const GenericTransformer& g, const GenBinding& b, const Signature& target);

/// Rule set with placeholders replaced, validated against `target`.
/// Throws MissingBinding, ShapeMismatch.
RuleSet specialize(const GenericTransformer& g, const GenBinding& b, const Signature& target);

/// Binding with every bound symbol renamed.
GenBinding translate_binding(const kernel::Renaming& r, const GenBinding& b);

std::string to_string(const Role& role);

}  // namespace btg::transformers
