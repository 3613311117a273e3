#include "fixtures.hpp"

#include <btg/meaning/meaning_formula.hpp>
#include <btg/meaning/syntactic_class.hpp>
#include <btg/meaning/verify.hpp>
#include <btg/rng.hpp>

#include <gtest/gtest.h>

using namespace btg;
using namespace btg::kernel;
using namespace btg::meaning;
using semantics::ExhaustiveDomain;
using semantics::ExhaustiveTerms;
using semantics::RandomSamples;
using semantics::Status;

namespace {

const Sort R{"R"};

const graph::BiformTheory& ring() { return fixtures::bundled().theory("Ring"); }

VerificationReport verify(const graph::TheoryGraph& g, const char* theory, const char* formula,
                          const semantics::CheckStrategy& s) {
  const auto& t = g.theory(theory);
  const auto* mf = t.meaning(formula);
  if (mf == nullptr) throw std::runtime_error(std::string("no meaning formula ") + formula);
  return verify_meaning(g.context(t), *mf, s);
}

std::vector<SyntacticClass> sample_classes() {
  GrammarClass lists{R, {}};
  lists.productions.push_back({Term::app("zero"), {}});
  lists.productions.push_back({Term::app("plus", {Term::var("h", R), Term::var("t", R)}),
                               {{"h", Production::Hole::Literal}, {"t", Production::Hole::Self}}});
  return {ClosedTermClass{R},
          NumeralClass{R, true},
          PolyTermClass{R, std::vector<std::string>{"x", "y"}, {}},
          VariableClass{R},
          lists};
}

}  // namespace

TEST(Classes, EnumeratedMembersBelong) {
  const auto& sig = ring().signature;
  for (const auto& c : sample_classes()) {
    auto members = enumerate_class(c, sig, 2, {0, 1, 2});
    EXPECT_FALSE(members.empty()) << to_string(c);
    for (const auto& t : members) EXPECT_TRUE(class_member(t, c, sig)) << to_string(c) << " " << to_string(t);
  }
}

TEST(Classes, RandomMembersBelongAndShrinkStaysInside) {
  const auto& sig = ring().signature;
  Rng rng(31);
  for (const auto& c : sample_classes()) {
    for (int i = 0; i < 100; ++i) {
      auto t = random_member(c, sig, rng, 4);
      ASSERT_TRUE(t) << to_string(c);
      EXPECT_TRUE(class_member(*t, c, sig));
      for (const auto& s : shrink_candidates(*t, c, sig)) {
        EXPECT_TRUE(class_member(s, c, sig)) << to_string(s);
        EXPECT_LE(s.size(), t->size());
      }
    }
  }
}

TEST(Classes, MembershipRejectsOutsiders) {
  const auto& sig = ring().signature;
  EXPECT_FALSE(class_member(Term::var("x", R), ClosedTermClass{R}, sig));
  EXPECT_FALSE(class_member(Term::lit(0, R), NumeralClass{R, true}, sig));
  EXPECT_FALSE(class_member(Term::var("z", R), PolyTermClass{R, std::vector<std::string>{"x", "y"}, {}}, sig));
  EXPECT_FALSE(class_member(Term::lit(1, R), VariableClass{R}, sig));
  EXPECT_FALSE(class_member(Term::quote(Term::lit(1, R)), ClosedTermClass{R}, sig));
}

TEST(Verify, BundledMeaningFormulasHold) {
  const auto& g = fixtures::bundled();
  EXPECT_EQ(verify(g, "Ring", "mf_normalize", RandomSamples{200, 1, 5}).report.status, Status::Pass);
  EXPECT_EQ(verify(g, "Ring", "mf_deriv", RandomSamples{200, 2, 5}).report.status, Status::Pass);
  EXPECT_EQ(verify(g, "Ring", "mf_dx", RandomSamples{200, 3, 4}).report.status, Status::Pass);
  EXPECT_EQ(verify(g, "NatArith", "mf_ifactors", RandomSamples{200, 4, 2}).report.status, Status::Pass);
  auto ev = verify(g, "Arith", "mf_eval", ExhaustiveTerms{2, {0, 1, 2}});
  EXPECT_EQ(ev.report.status, Status::Pass);
  EXPECT_EQ(ev.report.cases, 885u);
}

TEST(Verify, WrongProductRuleIsCaughtWithSmallReplayableWitness) {
  const auto& g = fixtures::wrong_leibniz();
  const auto rep = verify(g, "Ring", "mf_dx", RandomSamples{500, 42, 6});
  ASSERT_EQ(rep.report.status, Status::Fail);
  ASSERT_TRUE(rep.report.counterexample);
  const auto& cex = *rep.report.counterexample;
  ASSERT_EQ(cex.terms.size(), 1u);
  EXPECT_LE(cex.terms[0].second.depth(), 3u) << to_string(cex.terms[0].second);
  const auto& t = g.theory("Ring");
  EXPECT_TRUE(replays(g.context(t), *t.meaning("mf_dx"), cex));
  // The shrunk witness is not a false alarm: the correct rules accept it.
  const auto& good = fixtures::bundled().theory("Ring");
  EXPECT_FALSE(replays(fixtures::bundled().context(good), *good.meaning("mf_dx"), cex));
}

TEST(Verify, SameSeedSameOutcome) {
  const auto& g = fixtures::wrong_leibniz();
  const auto a = verify(g, "Ring", "mf_dx", RandomSamples{500, 9, 6});
  const auto b = verify(g, "Ring", "mf_dx", RandomSamples{500, 9, 6});
  ASSERT_TRUE(a.report.counterexample && b.report.counterexample);
  EXPECT_EQ(a.report.counterexample->case_index, b.report.counterexample->case_index);
  EXPECT_EQ(a.report.counterexample->terms, b.report.counterexample->terms);
}

TEST(Verify, DomainExhaustionIsNotAGenerator) {
  EXPECT_EQ(fixtures::code_of([] { verify(fixtures::bundled(), "Ring", "mf_dx", ExhaustiveDomain{}); }),
            Errc::GeneratorEmpty);
}

TEST(Verify, UnresolvedModelIsIndeterminate) {
  const auto& t = ring();
  MeaningFormula mf = *t.meaning("mf_normalize");
  mf.claim.lhs.model.model = "Missing";
  mf.claim.rhs.model.model = "Missing";
  auto rep = verify_meaning(fixtures::bundled().context(t), mf, RandomSamples{10, 1, 3});
  EXPECT_EQ(rep.report.status, Status::Indeterminate);
}

TEST(Shape, UnknownOperatorsAndUnboundVariablesAreRejected) {
  MeaningFormula mf = *ring().meaning("mf_deriv");
  check_shape(mf);
  MeaningFormula bad_op = mf;
  bad_op.claim.rhs.op = "integrate";
  EXPECT_EQ(fixtures::code_of([&] { check_shape(bad_op); }), Errc::UnknownReference);
  MeaningFormula unbound = mf;
  unbound.vars.clear();
  EXPECT_EQ(fixtures::code_of([&] { check_shape(unbound); }), Errc::UnknownReference);
}

TEST(Translation, RenamesClassesAndTransformers) {
  const MeaningFormula mf = *ring().meaning("mf_dx");
  Renaming r{{{"R", "Q"}}, {{"plus", "p"}, {"times", "t"}, {"neg", "n"}, {"zero", "z"}, {"one", "o"}}};
  auto out = translate_meaning(r, {{"dx", "dq"}}, mf);
  EXPECT_EQ(out.transformer, "dq");
  EXPECT_EQ(called_transformers(out), std::vector<std::string>{"dq"});
  const auto* cls = std::get_if<PolyTermClass>(&out.vars.at(0).second);
  ASSERT_TRUE(cls);
  EXPECT_EQ(cls->sort, Sort{"Q"});
  EXPECT_EQ(cls->ring.plus, "p");
}

TEST(Translation, ExplicitTranslationsAreNotTransportable) {
  const auto& lang = fixtures::bundled().theory("Arith#term");
  ASSERT_FALSE(lang.meanings.empty());
  EXPECT_EQ(fixtures::code_of([&] { translate_meaning(Renaming{}, {}, lang.meanings.front()); }),
            Errc::NonTransportable);
}
