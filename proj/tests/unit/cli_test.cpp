#include "fixtures.hpp"

#include <btg/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = btg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> swapped(std::vector<std::string> tail) {
  std::vector<std::string> args{"-f", fixtures::corpus_path("nat_ring.btg"), "-f", fixtures::corpus_path("swapped.btg")};
  args.insert(args.end(), tail.begin(), tail.end());
  return args;
}

}  // namespace

TEST(Cli, CheckSucceedsOnBundledCorpus) {
  auto r = run({"check"});
  EXPECT_EQ(r.code, btg::cli::kOk) << r.err;
  EXPECT_NE(r.out.find("\"schema\": \"btg-report/1\""), std::string::npos);
}

TEST(Cli, VerifyIsDeterministic) {
  auto a = run({"verify", "--seed", "7", "--samples", "50"});
  auto b = run({"verify", "--seed", "7", "--samples", "50"});
  EXPECT_EQ(a.code, btg::cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto c = run({"verify", "--seed", "8", "--samples", "50"});
  EXPECT_EQ(c.code, btg::cli::kOk);
}

TEST(Cli, SwappedMorphismFailsWithSerializedCounterexample) {
  auto r = run(swapped({"verify"}));
  EXPECT_EQ(r.code, btg::cli::kCheckFailed);
  EXPECT_NE(r.out.find("arith_to_aa_swapped"), std::string::npos);
  EXPECT_NE(r.out.find("\"counterexample\""), std::string::npos);
  EXPECT_NE(r.out.find("(Plus 0 1)"), std::string::npos);
  EXPECT_EQ(run(swapped({"check"})).code, btg::cli::kCheckFailed);
}

TEST(Cli, RunPrintsTransformerResults) {
  EXPECT_EQ(run({"run", "NatArith", "ifactors", "6"}).out, "(pair 1 ((2 1) (3 1)))\n");
  EXPECT_EQ(run({"run", "NatArith", "modpow", "5", "256", "379"}).out, "246\n");
  EXPECT_EQ(run({"run", "Ring", "normalize_poly", "(times x (plus y 1))"}).out,
            "(plus (times 1 (times x y)) (times 1 x))\n");
  EXPECT_EQ(run({"run", "Arith", "eval", "(Plus 2 (Times 3 4))"}).out, "14\n");
}

TEST(Cli, RunReportsMisuse) {
  EXPECT_EQ(run({"run", "Nowhere", "eval", "1"}).code, btg::cli::kUsageError);
  EXPECT_EQ(run({"run", "Arith", "nope", "1"}).code, btg::cli::kUsageError);
  EXPECT_EQ(run({"run", "Arith", "eval", "(Plus 1"}).code, btg::cli::kUsageError);
  auto zero = run({"run", "NatArith", "ifactors", "0"});
  EXPECT_EQ(zero.code, btg::cli::kCheckFailed);
  EXPECT_NE(zero.err.find("ZeroInput"), std::string::npos);
}

TEST(Cli, ParseErrorsAreLocatedAndExitTwo) {
  const auto path = std::filesystem::temp_directory_path() / "btg_cli_bad.btg";
  {
    std::ofstream f(path);
    f << "(theory A (sorts S))\n(morphism m A Missing)\n";
  }
  auto r = run({"-f", path.string(), "check"});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, btg::cli::kUsageError);
  EXPECT_NE(r.err.find("UnknownReference at 2:"), std::string::npos) << r.err;
}

TEST(Cli, UnknownCommandIsAUsageError) {
  EXPECT_EQ(run({"frobnicate"}).code, btg::cli::kUsageError);
  EXPECT_EQ(run({"verify", "--zp", "seven"}).code, btg::cli::kUsageError);
  EXPECT_EQ(run({"verify", "--theory", "Nowhere"}).code, btg::cli::kUsageError);
}

TEST(Cli, OutWritesTheReportToAFile) {
  const auto path = std::filesystem::temp_directory_path() / "btg_cli_report.json";
  auto r = run({"verify", "--samples", "20", "--theory", "Arith", "--out", path.string()});
  EXPECT_EQ(r.code, btg::cli::kOk);
  EXPECT_TRUE(r.out.empty());
  const std::string written = oracle::read_file(path.string());
  std::filesystem::remove(path);
  EXPECT_NE(written.find("\"command\": \"verify\""), std::string::npos);
}

TEST(Cli, GenerateAndExport) {
  auto lang = run({"generate", "term-language", "Arith", "E"});
  EXPECT_EQ(lang.code, btg::cli::kOk);
  EXPECT_NE(lang.out.find("(ctor_Plus E#term E#term -> E#term)"), std::string::npos);
  auto hom = run({"generate", "homomorphism", "Monoid"});
  EXPECT_NE(hom.out.find("(hom M#1 -> M#2)"), std::string::npos);
  auto ev = run({"generate", "evaluator", "AA#term", "Arith", "ctor_XXX=Times", "ctor_YYY=Plus"});
  EXPECT_EQ(ev.code, btg::cli::kCheckFailed) << "evaluator already installed by the corpus";
  auto dot = run({"export-dot", "--samples", "20"});
  EXPECT_EQ(dot.code, btg::cli::kOk);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  auto graph = run({"generate", "graph"});
  EXPECT_EQ(graph.code, btg::cli::kOk);
  EXPECT_EQ(btg::text::print_graph(btg::text::parse(graph.out)), graph.out);
}
