#include "btg/semantics/denote.hpp"

#include <algorithm>

#include "btg/error.hpp"

namespace btg::semantics {

using kernel::Term;

Value denote(const Model& m, const Term& t, const Env& env) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = env.find(t.name());
      if (it != env.end()) return it->second;
      if (const auto* d = m.carrier(t.sort())) {
        if (const auto* pd = std::get_if<PolyDomain>(d)) {
          if (std::find(pd->vars.begin(), pd->vars.end(), t.name()) != pd->vars.end()) return Poly::variable(t.name());
        }
      }
      raise(Errc::UnboundVariable, "no value for variable " + t.name());
    }
    case Term::Kind::Lit: return m.literal(t.value(), t.sort());
    case Term::Kind::App: {
      const auto* interp = m.interpretation(t.name());
      if (interp == nullptr) raise(Errc::UninterpretedSymbol, "model " + m.name() + " does not interpret " + t.name());
      if (interp->arity != t.args().size()) raise(Errc::ArityMismatch, "arity mismatch applying " + t.name());
      std::vector<Value> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(denote(m, a, env));
      return interp->fn(args);
    }
    case Term::Kind::Quote: return SynValue{t.body()};
  }
  raise(Errc::HostError, "unreachable term kind");
}

bool holds(const Model& m, const kernel::Formula& f, const Env& env) {
  auto sat = [&](const kernel::Equation& e) { return denote(m, e.lhs, env) == denote(m, e.rhs, env); };
  if (const auto* eq = std::get_if<kernel::Equation>(&f.body)) return sat(*eq);
  const auto& imp = std::get<kernel::Implication>(f.body);
  for (const auto& h : imp.hypotheses) {
    if (!sat(h)) return true;
  }
  return sat(imp.conclusion);
}

}  // namespace btg::semantics
