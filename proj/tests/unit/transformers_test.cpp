#include "fixtures.hpp"

#include <btg/kernel/operations.hpp>
#include <btg/meaning/syntactic_class.hpp>
#include <btg/rng.hpp>
#include <btg/semantics/ring.hpp>
#include <btg/text/report.hpp>
#include <btg/transformers/builtins.hpp>
#include <btg/transformers/generic.hpp>
#include <btg/transformers/rules.hpp>
#include <btg/transformers/transformer.hpp>

#include <gtest/gtest.h>

using namespace btg;
using namespace btg::kernel;
using namespace btg::transformers;

namespace {

const Sort R{"R"};
const Sort N{"N"};

Term rv(const char* n) { return Term::var(n, R); }
Term rl(int v) { return Term::lit(v, R); }
Term rplus(Term a, Term b) { return Term::app("plus", {std::move(a), std::move(b)}); }
Term rtimes(Term a, Term b) { return Term::app("times", {std::move(a), std::move(b)}); }

const graph::BiformTheory& theory(const char* name) { return fixtures::bundled().theory(name); }

Term run(const char* th, const char* tr, std::vector<Term> args) {
  const auto& t = theory(th);
  return apply_transformer(t.signature, t.transformers, tr, args);
}

std::vector<Term> random_polys(std::size_t n, std::uint64_t seed, std::size_t depth,
                               const std::vector<std::string>& vars) {
  const meaning::PolyTermClass cls{R, vars, {}};
  const auto& sig = theory("Ring").signature;
  Rng rng(seed);
  std::vector<Term> out;
  while (out.size() < n) {
    if (auto t = meaning::random_member(cls, sig, rng, depth)) out.push_back(*t);
  }
  return out;
}

}  // namespace

TEST(Factor, SixHasTheDocumentedShape) {
  auto f = factor_integer(6);
  EXPECT_EQ(f.unit, 1);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0], (std::pair<Integer, unsigned>{2, 1}));
  EXPECT_EQ(f.factors[1], (std::pair<Integer, unsigned>{3, 1}));
  EXPECT_EQ(text::display_term(run("NatArith", "ifactors", {Term::lit(6, N)})), "(pair 1 ((2 1) (3 1)))");
}

TEST(Factor, NegativeInputsCarryUnitMinusOne) {
  auto f = factor_integer(-360);
  EXPECT_EQ(f.unit, -1);
  EXPECT_EQ(f.factors, (std::vector<std::pair<Integer, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factor_integer(1).factors.size(), 0u);
  EXPECT_EQ(factor_integer(-1).unit, -1);
  EXPECT_EQ(fixtures::code_of([] { factor_integer(0); }), Errc::ZeroInput);
}

TEST(Factor, SoundOnSmallRange) {
  for (int n = -3000; n <= 3000; ++n) {
    if (n == 0) continue;
    auto f = factor_integer(n);
    Integer product = f.unit;
    Integer last = 1;
    for (const auto& [p, m] : f.factors) {
      EXPECT_TRUE(oracle::trial_prime(p)) << n;
      EXPECT_GT(p, last) << n;
      EXPECT_GE(m, 1u);
      last = p;
      for (unsigned i = 0; i < m; ++i) product *= p;
    }
    EXPECT_EQ(product, n);
  }
}

TEST(Factor, TermRoundTrip) {
  for (int n : {-97, -12, 1, 2, 1024, 9973, 10000}) {
    auto f = factor_integer(n);
    auto back = read_factorization(factorization_term(f, N));
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, f);
  }
  EXPECT_FALSE(read_factorization(Term::lit(3, N)));
}

TEST(ModPow, DocumentedValue) {
  EXPECT_EQ(modpow(5, 256, 379), 246);
  EXPECT_EQ(oracle::naive_modpow(5, 256, 379), 246);
  EXPECT_EQ(run("NatArith", "modpow", {Term::lit(5, N), Term::lit(256, N), Term::lit(379, N)}), Term::lit(246, N));
}

TEST(ModPow, SmallGridAgainstIteratedMultiplication) {
  for (int m = 2; m <= 30; ++m) {
    for (int b = 0; b <= 20; ++b) {
      for (int e = 0; e <= 40; ++e) ASSERT_EQ(modpow(b, e, m), oracle::naive_modpow(b, e, m)) << b << "^" << e << " mod " << m;
    }
  }
  EXPECT_EQ(modpow(-2, 3, 5), 2);
}

TEST(ModPow, Errors) {
  EXPECT_EQ(fixtures::code_of([] { modpow(2, 3, 1); }), Errc::BadModulus);
  EXPECT_EQ(fixtures::code_of([] { modpow(2, -1, 7); }), Errc::NegativeExponent);
}

TEST(Normalize, DocumentedExampleDenotesXYPlusX) {
  const Term t = rtimes(rv("x"), rplus(rv("y"), rl(1)));
  const Term n = normalize_poly(t, R);
  EXPECT_EQ(to_string(n), "(plus (times 1 (times x y)) (times 1 x))");
  EXPECT_EQ(oracle::poly_of(n, {"x", "y"}), oracle::poly_of(t, {"x", "y"}));
  EXPECT_EQ(run("Ring", "normalize_poly", {t}), n);
}

TEST(Normalize, CancellationGivesZero) {
  EXPECT_EQ(normalize_poly(rplus(rv("x"), Term::app("neg", {rv("x")})), R), rl(0));
  EXPECT_EQ(normalize_poly(rplus(Term::app("one"), rl(4)), R), rl(5));
}

TEST(Normalize, IdempotentAndDenotationPreserving) {
  const std::vector<std::string> vars{"x", "y", "z"};
  for (const auto& t : random_polys(300, 21, 5, vars)) {
    const Term n = normalize_poly(t, R);
    EXPECT_EQ(normalize_poly(n, R), n) << to_string(t);
    EXPECT_EQ(oracle::poly_of(n, vars), oracle::poly_of(t, vars)) << to_string(t);
  }
}

TEST(Normalize, EqualPolynomialsGetEqualForms) {
  const Term a = rtimes(rplus(rv("x"), rv("y")), rplus(rv("x"), rv("y")));
  const Term b = rplus(rtimes(rv("y"), rv("y")), rplus(rtimes(rl(2), rtimes(rv("y"), rv("x"))), rtimes(rv("x"), rv("x"))));
  EXPECT_EQ(normalize_poly(a, R), normalize_poly(b, R));
}

TEST(Normalize, RejectsForeignSymbols) {
  EXPECT_EQ(fixtures::code_of([] { normalize_poly(Term::app("f", {rv("x")}), R); }), Errc::NotPolynomial);
}

TEST(Deriv, MatchesCoefficientDerivative) {
  const std::vector<std::string> vars{"x", "y"};
  for (const auto& t : random_polys(300, 22, 5, vars)) {
    const Term d = deriv(t, "x", R);
    EXPECT_EQ(oracle::poly_of(d, vars), oracle::derivative(oracle::poly_of(t, vars), 0)) << to_string(t);
    EXPECT_EQ(normalize_poly(d, R), d);
  }
}

TEST(Deriv, DocumentedExample) {
  const Term t = rtimes(rv("x"), rtimes(rv("x"), rv("y")));
  EXPECT_EQ(to_string(run("Ring", "deriv", {t, rv("x")})), "(times 2 (times x y))");
}

TEST(Rules, DxAgreesWithDerivDenotationally) {
  const std::vector<std::string> vars{"x", "y"};
  for (const auto& t : random_polys(200, 23, 4, vars)) {
    const Term d = run("Ring", "dx", {t});
    EXPECT_EQ(oracle::poly_of(d, vars), oracle::derivative(oracle::poly_of(t, vars), 0)) << to_string(t);
  }
}

TEST(Rules, GenericPowerBySquaring) {
  const Term p3 = run("CommutativeRing", "power", {rv("x"), rl(3)});
  EXPECT_EQ(to_string(p3), "(times x (times (times x x) one))");
  for (int k = 0; k <= 20; ++k) {
    const Term p = run("CommutativeRing", "power", {rv("x"), rl(k)});
    oracle::Poly expected = oracle::constant({"x"}, 1);
    for (int i = 0; i < k; ++i) expected = oracle::product(expected, oracle::poly_of(rv("x"), {"x"}));
    EXPECT_EQ(oracle::poly_of(p, {"x"}), expected) << k;
  }
}

TEST(Rules, FuelAndStuckErrors) {
  Signature sig;
  sig.add_sort(R);
  sig.admit_literals(R);
  RuleSet loop{{"f", {R}, R}, {}, {Rule{{{"x", R, PatternVar::Kind::Any, {}}}, Term::app("f", {rv("x")}), Term::app("f", {rv("x")})}}, 50};
  const std::vector<Term> arg{rl(1)};
  EXPECT_EQ(fixtures::code_of([&] { run_rules(sig, loop, arg); }), Errc::FuelExhausted);

  RuleSet partial{{"g", {R}, R}, {}, {Rule{{}, Term::app("g", {rl(0)}), rl(1)}}, 50};
  EXPECT_EQ(run_rules(sig, partial, std::vector<Term>{rl(0)}), rl(1));
  EXPECT_EQ(fixtures::code_of([&] { run_rules(sig, partial, std::vector<Term>{rl(2)}); }), Errc::StuckRewrite);
}

TEST(Rules, ValidationRejectsUnboundRightHandSides) {
  Signature sig;
  sig.add_sort(R);
  RuleSet bad{{"h", {R}, R}, {}, {Rule{{{"x", R, PatternVar::Kind::Any, {}}}, Term::app("h", {rv("x")}), rv("y")}}, 50};
  EXPECT_EQ(fixtures::code_of([&] { validate_rules(sig, bad); }), Errc::InvalidRule);
}

TEST(Generic, SpecializationNeedsEveryRole) {
  auto g = fixtures::bundled().find_generic("power");
  ASSERT_TRUE(g);
  const auto& target = theory("NatArith").signature;
  EXPECT_EQ(fixtures::code_of([&] { specialize(*g, GenBinding{{{"op", "add"}}}, target); }), Errc::MissingBinding);
  EXPECT_EQ(fixtures::code_of([&] { specialize(*g, GenBinding{{{"op", "zero"}, {"unit", "zero"}}}, target); }),
            Errc::ShapeMismatch);
  auto rs = specialize(*g, GenBinding{{{"op", "add"}, {"unit", "zero"}}}, target);
  EXPECT_EQ(rs.rules.size(), g->templ.rules.size());
}

TEST(Registry, ArgumentClassesAreEnforced) {
  const auto& na = theory("NatArith");
  const Term open = Term::var("x", N);
  EXPECT_EQ(fixtures::code_of([&] { apply_transformer(na.signature, na.transformers, "ifactors", std::vector<Term>{open}); }),
            Errc::ClassViolation);
  EXPECT_EQ(fixtures::code_of([&] { apply_transformer(na.signature, na.transformers, "ifactors", std::vector<Term>{}); }),
            Errc::ArityMismatch);
  EXPECT_EQ(fixtures::code_of([&] { na.transformers.at("nope"); }), Errc::UnknownTransformer);
}

TEST(Registry, QuotedApplication) {
  const auto& ar = theory("Arith");
  const Sort E{"E"};
  const Term t = Term::app("Plus", {Term::lit(2, E), Term::app("Times", {Term::lit(3, E), Term::lit(4, E)})});
  const Term q = quote_apply(ar.signature, ar.transformers, "eval", std::vector<Term>{Term::quote(t)});
  EXPECT_EQ(q, Term::quote(Term::lit(14, E)));
}
