#include "fixtures.hpp"

#include <btg/graph/combinators.hpp>
#include <btg/graph/obligations.hpp>
#include <btg/graph/transport.hpp>
#include <btg/kernel/operations.hpp>
#include <btg/semantics/denote.hpp>
#include <btg/transformers/transformer.hpp>

#include <gtest/gtest.h>

using namespace btg;
using namespace btg::graph;
using namespace btg::kernel;

namespace {

const Sort M{"M"};
const Sort N{"N"};

const TheoryGraph& g() { return fixtures::bundled(); }

CheckOptions quick() { return CheckOptions{semantics::RandomSamples{100, 42, 2}, semantics::ExhaustiveTerms{2, {0, 1, 2}}, {}}; }

bool any_failed(const MorphismCheck& c) {
  for (const auto& o : c.obligations) {
    if (o.status == ObligationStatus::Failed) return true;
  }
  return false;
}

Morphism morphism(const char* name, const char* src, const char* tgt, Renaming r) {
  Morphism m;
  m.name = name;
  m.source = src;
  m.target = tgt;
  m.renaming = std::move(r);
  return m;
}

}  // namespace

TEST(Graph, BundledGraphShape) {
  EXPECT_GE(g().theories().size(), 8u);
  for (const char* name : {"Magma", "Semigroup", "CommutativeSemigroup", "Monoid", "CommutativeMonoid", "Group", "Ring",
                           "CommutativeRing", "NatArith", "Arith", "AA", "Arith#term", "AA#term", "Monoid#hom"}) {
    EXPECT_NE(g().find_theory(name), nullptr) << name;
  }
  EXPECT_EQ(fixtures::code_of([] { g().theory("Nope"); }), Errc::UnknownReference);
}

TEST(Graph, EveryBundledMorphismChecksWithoutFailure) {
  for (const auto& m : g().morphisms()) {
    EXPECT_FALSE(any_failed(check_morphism(g(), m, quick()))) << m.name;
  }
}

TEST(Combine, CommutativeSemigroupHasBothAxioms) {
  const auto& cs = g().theory("CommutativeSemigroup");
  EXPECT_EQ(operations(cs).size(), 1u);
  EXPECT_EQ(cs.axioms.size(), 2u);
  const auto& cm = g().theory("CommutativeMonoid");
  EXPECT_EQ(operations(cm).size(), 2u);
  EXPECT_EQ(cm.axioms.size(), g().theory("Monoid").axioms.size() + 1);
  EXPECT_EQ(cm.transformers.all().size(), 1u);
}

TEST(Combine, AgreesWithTheDirectExtension) {
  const auto direct = text::parse(fixtures::corpus_text("nat_ring.btg") +
                                  "\n(theory CS2 (extends Semigroup)"
                                  " (axioms (c (forall ((a M) (b M)) (= (op a b) (op b a))))))\n");
  EXPECT_TRUE(same_presentation(direct.theory("CS2"), g().theory("CommutativeSemigroup")));
  EXPECT_FALSE(same_presentation(g().theory("Semigroup"), g().theory("CommutativeSemigroup")));
}

TEST(Combine, RequiresCheckedInclusions) {
  const auto& base = g().theory("Magma");
  const auto& left = g().theory("Semigroup");
  const auto& right = g().theory("CommutativeMagma");
  const auto li = inclusion("l", base, left);
  const auto ri = inclusion("r", base, right);
  const auto lc = check_morphism(g(), li, quick());
  MorphismCheck unchecked{"other", {}};
  EXPECT_EQ(fixtures::code_of([&] { combine("X", left, right, base, li, lc, ri, unchecked); }),
            Errc::UncheckedInclusion);
  const auto rc = check_morphism(g(), ri, quick());
  auto c = combine("X", left, right, base, li, lc, ri, rc);
  EXPECT_TRUE(same_presentation(c.theory, g().theory("CommutativeSemigroup")));
  EXPECT_EQ(c.from_left.target, "X");
}

TEST(Combine, ClashingFreshSymbolsAreRejected) {
  const auto& base = g().theory("Magma");
  auto left = extend(base, "L", Extension{{}, {}, {{"f", {M}, M}}, {}});
  auto right = extend(base, "R", Extension{{}, {}, {{"f", {M, M}, M}}, {}});
  const auto li = inclusion("l", base, left);
  const auto ri = inclusion("r", base, right);
  MorphismCheck lc{"l", {}}, rc{"r", {}};
  EXPECT_EQ(fixtures::code_of([&] { combine("X", left, right, base, li, lc, ri, rc); }), Errc::NameClash);
}

TEST(Extend, RejectsRedeclaration) {
  EXPECT_EQ(fixtures::code_of([] { extend(g().theory("Magma"), "X", Extension{{}, {}, {{"op", {M}, M}}, {}}); }),
            Errc::NameClash);
}

TEST(Rename, TranslatesAxiomsAndKeepsRuleTransformers) {
  const auto& mon = g().theory("Monoid");
  Renaming r{{{"M", "G"}}, {{"op", "mul"}}};
  auto out = rename(mon, "Mul", r);
  EXPECT_TRUE(out.signature.has_symbol("mul"));
  EXPECT_TRUE(out.signature.has_symbol("e"));
  EXPECT_FALSE(out.signature.has_symbol("op"));
  EXPECT_EQ(out.axioms.size(), mon.axioms.size());
  EXPECT_NE(out.transformers.find("power"), nullptr);
  EXPECT_EQ(out.models.size(), mon.models.size());
  EXPECT_EQ(to_string(out.axioms.front().formula), to_string(translate(Morphism{"", "", "", r, {}, false, false},
                                                                       mon.axioms.front().formula)));
}

TEST(Morphisms, WrongUnitFailsWithEvidence) {
  auto m = morphism("bad", "Monoid", "NatArith", Renaming{{{"M", "N"}}, {{"op", "add"}, {"e", "one"}}});
  auto c = check_morphism(g(), m, quick());
  EXPECT_TRUE(any_failed(c));
  EXPECT_FALSE(c.ok());
  const auto& power = g().theory("Monoid").transformers.at("power");
  EXPECT_EQ(fixtures::code_of([&] { transport(c, m, power, g().theory("NatArith")); }), Errc::MorphismUnchecked);
}

TEST(Morphisms, SignatureShapesAreChecked) {
  auto m = morphism("bad", "Monoid", "NatArith", Renaming{{{"M", "N"}}, {{"op", "zero"}, {"e", "one"}}});
  EXPECT_EQ(fixtures::code_of([&] { check_signature(m, g().theory("Monoid"), g().theory("NatArith")); }),
            Errc::ShapeMismatch);
  auto partial = morphism("bad", "Monoid", "NatArith", Renaming{{{"M", "N"}}, {{"op", "add"}}});
  EXPECT_EQ(fixtures::code_of([&] { check_signature(partial, g().theory("Monoid"), g().theory("NatArith")); }),
            Errc::UnmappedSymbol);
}

TEST(Morphisms, CompositionTranslatesLikeSequentialApplication) {
  const auto& incl = g().morphism("incl_Semigroup_Monoid");
  const auto& add = g().morphism("additive");
  const auto both = compose(incl, add);
  EXPECT_EQ(both.source, "Semigroup");
  EXPECT_EQ(both.target, "NatArith");
  for (const auto& ax : g().theory("Semigroup").axioms) {
    EXPECT_EQ(translate(both, ax.formula), translate(add, translate(incl, ax.formula)));
  }
}

TEST(Transport, GenericPowerBecomesMultiplicationInAdditiveNaturals) {
  const auto& m = g().morphism("additive");
  const auto c = check_morphism(g(), m, quick());
  ASSERT_FALSE(any_failed(c));
  const auto& target = g().theory("NatArith");
  const auto power = transport(c, m, g().theory("Monoid").transformers.at("power"), target);
  const Term out = transformers::apply_transformer(target.signature, power,
                                                   std::vector<Term>{Term::var("x", N), Term::lit(3, N)});
  const auto& model = *target.model("Int");
  for (int x = -20; x <= 20; ++x) {
    EXPECT_EQ(semantics::denote(model, out, {{"x", Integer(x)}}), semantics::Value(Integer(3 * x)));
  }
}

TEST(Transport, GenericPowerBecomesExponentiationInMultiplicativeNaturals) {
  const auto& m = g().morphism("multiplicative");
  const auto c = check_morphism(g(), m, quick());
  const auto& target = g().theory("NatArith");
  const auto power = transport(c, m, g().theory("Monoid").transformers.at("power"), target);
  const auto& model = *target.model("Int");
  for (int k = 0; k <= 12; ++k) {
    const Term out = transformers::apply_transformer(target.signature, power,
                                                     std::vector<Term>{Term::var("x", N), Term::lit(k, N)});
    for (int x = -3; x <= 3; ++x) {
      Integer expected = 1;
      for (int i = 0; i < k; ++i) expected *= x;
      EXPECT_EQ(semantics::denote(model, out, {{"x", Integer(x)}}), semantics::Value(expected));
    }
  }
}

TEST(Transport, AxiomsLandAsTargetFormulas) {
  const auto& m = g().morphism("additive_group");
  const auto c = check_morphism(g(), m, quick());
  for (const auto& ax : g().theory("Group").axioms) {
    const Formula f = transport(c, m, ax.formula);
    check_formula(g().theory("Ring").signature, f);
  }
}

TEST(Verify, FiniteModelsAreCheckedExhaustively) {
  const auto reports = verify_all(g(), g().theory("Semigroup"), quick());
  bool saw_z5 = false;
  for (const auto& r : reports) {
    EXPECT_EQ(r.report.status, semantics::Status::Pass) << r.formula << " in " << r.model;
    if (r.model == "Z5") {
      saw_z5 = true;
      EXPECT_EQ(r.report.cases, 125u);
    }
  }
  EXPECT_TRUE(saw_z5);
}

TEST(Verify, MagmaSubtractionModelIsNotASemigroup) {
  const auto& magma = g().theory("Magma");
  const auto& assoc = g().theory("Semigroup").axioms.front();
  const auto rep = check_in_model(*magma.model("Sub"), assoc.formula, semantics::RandomSamples{50, 1, 2});
  EXPECT_EQ(rep.status, semantics::Status::Fail);
}
