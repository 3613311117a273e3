#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "btg/graph/morphism.hpp"
#include "btg/graph/theory_graph.hpp"
#include "btg/text/sexpr.hpp"

namespace btg::text {

/// A theory declaration together with the edges it implies (inclusions of
/// extended and combined theories, the renaming of a renamed one).
struct TheoryDecl {
  graph::BiformTheory theory;
  std::vector<graph::Morphism> edges;
};

TheoryDecl elaborate_theory(const Sexpr& decl, const graph::TheoryGraph& g);
graph::Morphism elaborate_morphism(const Sexpr& decl, const graph::TheoryGraph& g);
transformers::GenericTransformer elaborate_generic(const Sexpr& decl);

/// Adds the declarations to `g` in order; names must be declared before use.
/// Every error carries the location of the declaration part it concerns.
void elaborate(graph::TheoryGraph& g, const std::vector<Sexpr>& decls);

/// Reads and elaborates a whole file. Throws SyntaxError, UnknownReference,
/// SortError and the errors of the graph operations, located.
graph::TheoryGraph parse(std::string_view text);

/// Self-contained declaration: extensions and combinations are flattened.
Sexpr theory_sexpr(const graph::BiformTheory& t);
Sexpr morphism_sexpr(const graph::Morphism& m);
Sexpr generic_sexpr(const transformers::GenericTransformer& g);

std::string print_theory(const graph::BiformTheory& t);
/// Generics, then theories, then morphisms.
std::string print_graph(const graph::TheoryGraph& g);

}  // namespace btg::text
