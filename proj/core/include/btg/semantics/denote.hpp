#pragma once

#include <map>
#include <string>

#include "btg/kernel/formula.hpp"
#include "btg/kernel/term.hpp"
#include "btg/semantics/model.hpp"
#include "btg/semantics/value.hpp"

namespace btg::semantics {

using Env = std::map<std::string, Value>;

/// Compositional evaluation. Variables missing from `env` denote their own
/// indeterminate when their sort is carried by a PolyDomain listing them.
/// Throws UnboundVariable, UninterpretedSymbol.
Value denote(const Model& m, const kernel::Term& t, const Env& env = {});

/// Truth of the formula body under `env`, which must assign every binder.
bool holds(const Model& m, const kernel::Formula& f, const Env& env);

}  // namespace btg::semantics
