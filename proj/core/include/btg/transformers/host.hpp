#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "btg/kernel/signature.hpp"
#include "btg/kernel/term.hpp"
#include "btg/meaning/syntactic_class.hpp"

namespace btg::transformers {

/// A host-implemented transformer body, looked up by id.
struct HostDescriptor {
  std::string id;
  std::size_t arity = 0;
  /// Argument classes in the context of a theory signature.
  std::function<std::vector<meaning::SyntacticClass>(const kernel::Signature&)> classes;
  std::function<kernel::Term(const kernel::Signature&, std::span<const kernel::Term>)> fn;
  /// Signature extension the output needs, applied on registration. May be empty.
  std::function<void(kernel::Signature&)> prepare;
};

/// Throws NameClash when the id is taken.
void register_host(HostDescriptor d);

const HostDescriptor* find_host(std::string_view id);

/// Registered ids in registration order.
std::vector<std::string> host_ids();

}  // namespace btg::transformers
