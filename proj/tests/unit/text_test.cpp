#include "fixtures.hpp"

#include <btg/graph/combinators.hpp>
#include <btg/kernel/operations.hpp>
#include <btg/text/report.hpp>
#include <btg/text/sexpr.hpp>
#include <btg/text/syntax.hpp>
#include <btg/text/theory_file.hpp>

#include <gtest/gtest.h>

using namespace btg;
using namespace btg::text;

namespace {

/// Location of the error `text` raises, with its code.
std::pair<Errc, SourceLoc> failure(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return {e.code(), e.location().value_or(SourceLoc{-1, -1})};
  }
  throw std::runtime_error("parse unexpectedly succeeded");
}

const char* kMagma = "(theory Magma (sorts M) (ops (op M M -> M)))";

}  // namespace

TEST(Sexpr, CorpusFilesAreInCanonicalLayout) {
  for (const char* file : {"nat_ring.btg", "swapped.btg"}) {
    const std::string text = fixtures::corpus_text(file);
    EXPECT_EQ(write_document(read_sexprs(text)), text) << file;
  }
}

TEST(Sexpr, WriterOutputReadsBack) {
  const auto decls = read_sexprs(fixtures::corpus_text("nat_ring.btg"));
  const auto again = read_sexprs(write_document(decls));
  ASSERT_EQ(again.size(), decls.size());
  for (std::size_t i = 0; i < decls.size(); ++i) EXPECT_EQ(flat_sexpr(again[i]), flat_sexpr(decls[i]));
}

TEST(Sexpr, SyntaxErrorsCarryPositions) {
  try {
    read_sexprs("(a b\n  (c d)");
    FAIL() << "unbalanced input accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SyntaxError);
    ASSERT_TRUE(e.location());
    EXPECT_EQ(e.location()->line, 1);
    EXPECT_EQ(e.location()->column, 1);
  }
  auto [code, loc] = failure("(theory A (sorts S))\n  )");
  EXPECT_EQ(code, Errc::SyntaxError);
  EXPECT_EQ(loc.line, 2);
  EXPECT_EQ(loc.column, 3);
}

TEST(Parse, SingleTheory) {
  auto g = parse(kMagma);
  ASSERT_EQ(g.theories().size(), 1u);
  EXPECT_TRUE(g.theory("Magma").signature.has_symbol("op"));
  EXPECT_TRUE(g.morphisms().empty());
}

TEST(Parse, UnknownTheoryInMorphismIsLocated) {
  auto [code, loc] = failure(std::string(kMagma) + "\n(morphism m Magma Nowhere (sorts (M M)) (ops (op op)))");
  EXPECT_EQ(code, Errc::UnknownReference);
  EXPECT_EQ(loc.line, 2);
  EXPECT_GT(loc.column, 1);
}

TEST(Parse, IllSortedAxiomIsASortError) {
  auto [code, loc] = failure(
      "(theory T\n  (sorts A B)\n  (ops (f A -> B))\n  (axioms (bad (forall ((x A)) (= (f x) x)))))");
  EXPECT_EQ(code, Errc::SortError);
  EXPECT_EQ(loc.line, 4);
}

TEST(Parse, UnknownSymbolIsAnUnknownReference) {
  auto [code, loc] = failure("(theory T (sorts A) (ops (f A -> A)) (axioms (a (forall ((x A)) (= (g x) x)))))");
  EXPECT_EQ(code, Errc::UnknownReference);
  EXPECT_EQ(loc.line, 1);
}

TEST(Parse, DuplicateTheoryIsRejected) {
  auto [code, loc] = failure(std::string(kMagma) + "\n" + kMagma);
  EXPECT_EQ(code, Errc::NameClash);
  EXPECT_EQ(loc.line, 2);
}

TEST(Print, GraphReparsesToTheSamePresentations) {
  const auto& g = fixtures::bundled();
  const std::string printed = print_graph(g);
  const auto again = parse(printed);
  ASSERT_EQ(again.theories().size(), g.theories().size());
  for (const auto& t : g.theories()) {
    const auto* u = again.find_theory(t.name);
    ASSERT_NE(u, nullptr) << t.name;
    EXPECT_TRUE(graph::same_presentation(t, *u)) << t.name;
    EXPECT_EQ(u->meanings, t.meanings) << t.name;
    EXPECT_EQ(u->models.size(), t.models.size()) << t.name;
    EXPECT_EQ(u->transformers.all().size(), t.transformers.all().size()) << t.name;
  }
  ASSERT_EQ(again.morphisms().size(), g.morphisms().size());
  for (const auto& m : g.morphisms()) {
    const auto* n = again.find_morphism(m.name);
    ASSERT_NE(n, nullptr) << m.name;
    EXPECT_EQ(n->renaming, m.renaming) << m.name;
  }
  EXPECT_EQ(print_graph(again), printed);
}

TEST(Syntax, TermsRoundTrip) {
  const auto& sig = fixtures::bundled().theory("Ring").signature;
  for (const char* text : {"(times x (plus y 1))", "(neg (plus zero one))", "-7", "(plus (times 2 x) (neg y))"}) {
    const auto t = parse_term_text(text, sig);
    EXPECT_EQ(kernel::to_string(t), text);
  }
}

TEST(Report, DotHasOneEdgePerMorphism) {
  const auto& g = fixtures::bundled();
  VerifyOptions o;
  o.samples = 20;
  const auto checks = run_checks(g, o);
  const std::string dot = export_dot(g, checks);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++edges;
  EXPECT_EQ(edges, g.morphisms().size());
  EXPECT_NE(dot.find("status=\"evidence\""), std::string::npos);
  EXPECT_EQ(dot.find("status=\"failed\""), std::string::npos);
}
