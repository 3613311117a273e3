#pragma once

#include <string>
#include <variant>
#include <vector>

#include "btg/kernel/signature.hpp"
#include "btg/kernel/term.hpp"

namespace btg::kernel {

struct Equation {
  Term lhs;
  Term rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

struct Implication {
  std::vector<Equation> hypotheses;
  Equation conclusion;
  friend bool operator==(const Implication&, const Implication&) = default;
};

struct Binder {
  std::string name;
  Sort sort;
  friend bool operator==(const Binder&, const Binder&) = default;
};

/// Closed universally quantified equation or conditional equation.
struct Formula {
  std::vector<Binder> binders;
  std::variant<Equation, Implication> body;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Every equation of the body, hypotheses first.
std::vector<Equation> equations(const Formula& f);

/// Applies `fn` to every term of the body.
template <typename Fn>
Formula map_terms(const Formula& f, Fn&& fn) {
  Formula out{f.binders, f.body};
  auto map_eq = [&](const Equation& e) { return Equation{fn(e.lhs), fn(e.rhs)}; };
  if (const auto* eq = std::get_if<Equation>(&f.body)) {
    out.body = map_eq(*eq);
  } else {
    const auto& imp = std::get<Implication>(f.body);
    Implication mapped{{}, map_eq(imp.conclusion)};
    for (const auto& h : imp.hypotheses) mapped.hypotheses.push_back(map_eq(h));
    out.body = std::move(mapped);
  }
  return out;
}

/// Sorts every equation and checks closedness. Throws SortMismatch,
/// UnboundVariable and the errors of well_sorted.
void check_formula(const Signature& sig, const Formula& f);

/// Equality up to consistent renaming of bound variables. Binders are matched
/// by first occurrence in the body, so binder order and unused binders do not
/// matter.
bool alpha_equivalent(const Formula& a, const Formula& b);

std::string to_string(const Formula& f);

}  // namespace btg::kernel
