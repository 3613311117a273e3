#include "fixtures.hpp"

#include <btg/kernel/formula.hpp>
#include <btg/kernel/operations.hpp>
#include <btg/meaning/syntactic_class.hpp>
#include <btg/rng.hpp>
#include <btg/semantics/check.hpp>
#include <btg/semantics/denote.hpp>
#include <btg/semantics/model.hpp>
#include <btg/semantics/ring.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace btg;
using namespace btg::kernel;
using namespace btg::semantics;

namespace {

const Sort M{"M"};
const Sort R{"R"};

Signature magma() {
  Signature s;
  s.add_sort(M);
  s.add_symbol({"op", {M, M}, M});
  return s;
}

Formula associativity() {
  auto x = Term::var("x", M), y = Term::var("y", M), z = Term::var("z", M);
  auto op = [](Term a, Term b) { return Term::app("op", {std::move(a), std::move(b)}); };
  return Formula{{{"x", M}, {"y", M}, {"z", M}}, Equation{op(op(x, y), z), op(x, op(y, z))}};
}

Signature ring() {
  Signature s;
  s.add_sort(R);
  s.admit_literals(R);
  s.add_symbol({"plus", {R, R}, R});
  s.add_symbol({"times", {R, R}, R});
  s.add_symbol({"neg", {R}, R});
  s.add_symbol({"zero", {}, R});
  s.add_symbol({"one", {}, R});
  return s;
}

Term rv(const char* n) { return Term::var(n, R); }
Term rl(int v) { return Term::lit(v, R); }
Term rplus(Term a, Term b) { return Term::app("plus", {std::move(a), std::move(b)}); }
Term rtimes(Term a, Term b) { return Term::app("times", {std::move(a), std::move(b)}); }

std::vector<Term> random_polys(std::size_t n, std::uint64_t seed, std::size_t depth) {
  const meaning::PolyTermClass cls{R, std::vector<std::string>{"x", "y"}, {}};
  const auto sig = ring();
  Rng rng(seed);
  std::vector<Term> out;
  while (out.size() < n) {
    auto t = meaning::random_member(cls, sig, rng, depth);
    if (t) out.push_back(*t);
  }
  return out;
}

oracle::Poly as_oracle(const Poly& p, const std::vector<std::string>& vars) {
  oracle::Poly o{vars, {}};
  for (const auto& [m, c] : p.terms()) {
    std::vector<unsigned> e(vars.size(), 0);
    for (const auto& [v, k] : m) {
      auto it = std::find(vars.begin(), vars.end(), v);
      if (it == vars.end()) throw std::runtime_error("unexpected variable " + v);
      e[static_cast<std::size_t>(it - vars.begin())] = k;
    }
    o.add(e, c);
  }
  return o;
}

}  // namespace

TEST(Model, ZpMultiplicationIsAssociativeExhaustively) {
  Model z5("Z5", "Semigroup", magma(), {{M, ZpDomain{5}}}, {{"op", "mul"}});
  auto rep = check_formula(z5, associativity(), ExhaustiveDomain{});
  EXPECT_EQ(rep.status, Status::Pass);
  EXPECT_EQ(rep.cases, 125u);
}

TEST(Model, SubtractionFailsAssociativityWithReplayableWitness) {
  Model sub("Sub", "Magma", magma(), {{M, IntDomain{}}}, {{"op", "sub"}});
  const auto f = associativity();
  auto rep = check_formula(sub, f, RandomSamples{100, 3, 2});
  ASSERT_EQ(rep.status, Status::Fail);
  ASSERT_TRUE(rep.counterexample);
  EXPECT_TRUE(refails(sub, f, *rep.counterexample));
  // Same seed, same witness.
  auto again = check_formula(sub, f, RandomSamples{100, 3, 2});
  EXPECT_EQ(again.counterexample->case_index, rep.counterexample->case_index);
  EXPECT_EQ(again.counterexample->assignment, rep.counterexample->assignment);
}

TEST(Model, ExhaustiveOverInfiniteCarrierIsRejected) {
  Model add("Int", "Magma", magma(), {{M, IntDomain{}}}, {{"op", "add"}});
  EXPECT_EQ(fixtures::code_of([&] { check_formula(add, associativity(), ExhaustiveDomain{}); }),
            Errc::InfiniteCarrier);
}

TEST(Model, ValidatesCarriersAndInterpretations) {
  EXPECT_EQ(fixtures::code_of([] { Model("m", "T", magma(), {}, {{"op", "add"}}); }), Errc::InvalidModel);
  EXPECT_EQ(fixtures::code_of([] { Model("m", "T", magma(), {{M, IntDomain{}}}, {}); }), Errc::InvalidModel);
  EXPECT_EQ(fixtures::code_of([] { Model("m", "T", magma(), {{M, ZpDomain{6}}}, {{"op", "add"}}); }),
            Errc::InvalidModel);
  EXPECT_EQ(fixtures::code_of([] { Model("m", "T", magma(), {{M, IntDomain{}}}, {{"op", "frobnicate"}}); }),
            Errc::InvalidModel);
}

TEST(Denote, IntegerArithmetic) {
  Model m("Int", "Ring", ring(), {{R, IntDomain{}}},
          {{"plus", "add"}, {"times", "mul"}, {"neg", "neg"}, {"zero", "zero"}, {"one", "one"}});
  auto t = rplus(rtimes(rl(6), rv("x")), Term::app("neg", {Term::app("one")}));
  EXPECT_EQ(denote(m, t, {{"x", Integer(7)}}), Value(Integer(41)));
  EXPECT_EQ(fixtures::code_of([&] { denote(m, t); }), Errc::UnboundVariable);
}

TEST(Denote, ResiduesReduce) {
  Model m("Z7", "Ring", ring(), {{R, ZpDomain{7}}},
          {{"plus", "add"}, {"times", "mul"}, {"neg", "neg"}, {"zero", "zero"}, {"one", "one"}});
  auto v = denote(m, rtimes(rl(5), rl(4)));
  EXPECT_EQ(v, Value(Residue{6, 7}));
  EXPECT_EQ(denote(m, Term::app("neg", {rl(3)})), Value(Residue{4, 7}));
}

TEST(PolyDenotation, AgreesWithCoefficientOracle) {
  const std::vector<std::string> vars{"x", "y"};
  for (const auto& t : random_polys(300, 11, 5)) {
    EXPECT_EQ(as_oracle(poly_denotation(t, {}), vars), oracle::poly_of(t, vars)) << to_string(t);
  }
}

TEST(PolyDenotation, DerivativeAgreesWithOracle) {
  const std::vector<std::string> vars{"x", "y"};
  for (const auto& t : random_polys(200, 12, 5)) {
    const auto expected = oracle::derivative(oracle::poly_of(t, vars), 0);
    EXPECT_EQ(as_oracle(poly_denotation(t, {}).derivative("x"), vars), expected) << to_string(t);
  }
}

TEST(ZpIdentity, MatchesPointwiseOracle) {
  const auto sig = ring();
  const std::vector<std::string> vars{"x", "y"};
  const std::int64_t p = 7;
  auto terms = random_polys(60, 13, 3);
  for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
    const auto& a = terms[i];
    const auto& b = terms[i + 1];
    const auto oa = oracle::poly_of(a, vars), ob = oracle::poly_of(b, vars);
    bool degree_ok = true;
    for (const auto* o : {&oa, &ob}) {
      for (const auto& [e, c] : o->coeffs) degree_ok = degree_ok && e[0] < p && e[1] < p;
    }
    if (!degree_ok) continue;
    bool agree = true;
    for (std::int64_t x = 0; x < p; ++x) {
      for (std::int64_t y = 0; y < p; ++y) agree = agree && oracle::eval_mod(oa, {x, y}, p) == oracle::eval_mod(ob, {x, y}, p);
    }
    EXPECT_EQ(poly_equal_on_zp(sig, a, b, vars, p), agree) << to_string(a) << " vs " << to_string(b);
    EXPECT_TRUE(poly_equal_on_zp(sig, a, a, vars, p));
  }
}

TEST(ZpIdentity, DistinguishesFermatPairOnlyWhenDegreeAllows) {
  const auto sig = ring();
  // x^2 and x agree on Z_2 as functions but not as polynomials.
  const Term x2 = rtimes(rv("x"), rv("x"));
  EXPECT_EQ(fixtures::code_of([&] { poly_equal_on_zp(sig, x2, rv("x"), {"x"}, 2); }), Errc::DegreeTooHigh);
  EXPECT_FALSE(poly_equal_on_zp(sig, x2, rv("x"), {"x"}, 3));
  EXPECT_EQ(fixtures::code_of([&] { poly_equal_on_zp(sig, x2, rv("x"), {"x"}, 4); }), Errc::BadModulus);
}

TEST(ZpIdentity, RejectsNonPolynomials) {
  Signature s = ring();
  s.add_symbol({"f", {R}, R});
  EXPECT_EQ(fixtures::code_of([&] { poly_equal_on_zp(s, Term::app("f", {rv("x")}), rv("x"), {"x"}, 5); }),
            Errc::NotPolynomial);
}

TEST(RandomValues, DeterministicPerSeed) {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    auto va = random_value(IntDomain{}, a);
    EXPECT_EQ(va, random_value(IntDomain{}, b));
    const auto& n = std::get<Integer>(va);
    EXPECT_LE(abs(n), Integer(kRandomIntBound));
  }
  Rng c(6);
  for (int i = 0; i < 100; ++i) {
    auto r = std::get<Residue>(random_value(ZpDomain{11}, c));
    EXPECT_GE(r.value, 0);
    EXPECT_LT(r.value, 11);
  }
}
