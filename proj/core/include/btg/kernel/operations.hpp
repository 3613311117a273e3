#pragma once

#include <map>
#include <string>
#include <vector>

#include "btg/integer.hpp"
#include "btg/kernel/signature.hpp"
#include "btg/kernel/term.hpp"

namespace btg::kernel {

using Valuation = std::map<std::string, Term>;

/// The unique sort of `t`. Throws UnknownSymbol, ArityMismatch, SortMismatch,
/// LiteralNotAdmitted, UnknownSort.
Sort well_sorted(const Signature& sig, const Term& t);

/// Simultaneous replacement of free variables, including under Quote.
/// Throws SortMismatch when a replacement's sort differs from the variable's.
Term substitute(const Signature& sig, const Term& t, const Valuation& v);

/// Disquotation. Throws NotAQuotation, OpenBody.
Term unquote(const Term& t);

/// All closed well-sorted terms of `sort` with depth <= max_depth, literals
/// drawn from `literal_pool`. Ordered depth-major, then by symbol declaration
/// order, then lexicographically by the children's positions in the
/// shallower sequences. Syn has no enumerable terms.
std::vector<Term> enumerate_terms(const Signature& sig, const Sort& sort, std::size_t max_depth,
                                  const std::vector<Integer>& literal_pool);

/// Symbol-for-symbol, sort-for-sort translation of syntax.
struct Renaming {
  std::map<std::string, std::string> sorts;
  std::map<std::string, std::string> symbols;

  Sort sort(const Sort& s) const;
  const std::string& symbol(const std::string& name) const;

  friend bool operator==(const Renaming&, const Renaming&) = default;
};

/// Homomorphic replacement; literals keep their value, Quote bodies are
/// translated. Throws UnmappedSymbol.
Term translate(const Renaming& r, const Term& t);

}  // namespace btg::kernel
