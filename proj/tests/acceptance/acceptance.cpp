// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "fixtures.hpp"

#include <btg/cli.hpp>
#include <btg/generate/generate.hpp>
#include <btg/graph/obligations.hpp>
#include <btg/graph/transport.hpp>
#include <btg/kernel/operations.hpp>
#include <btg/meaning/syntactic_class.hpp>
#include <btg/meaning/verify.hpp>
#include <btg/rng.hpp>
#include <btg/semantics/denote.hpp>
#include <btg/semantics/ring.hpp>
#include <btg/text/report.hpp>
#include <btg/transformers/builtins.hpp>
#include <btg/transformers/transformer.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace btg;
using kernel::Sort;
using kernel::Term;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

const graph::TheoryGraph& g() { return fixtures::bundled(); }

const Sort kE{"E"};
const Sort kN{"N"};
const Sort kR{"R"};

Term apply(const char* theory, const char* transformer, std::vector<Term> args) {
  const auto& t = g().theory(theory);
  return transformers::apply_transformer(t.signature, t.transformers, transformer, args);
}

std::vector<Term> random_polys(std::size_t n, std::uint64_t seed, std::size_t depth,
                               const std::vector<std::string>& vars) {
  const meaning::PolyTermClass cls{kR, vars, {}};
  const auto& sig = g().theory("Ring").signature;
  Rng rng(seed);
  std::vector<Term> out;
  while (out.size() < n) {
    if (auto t = meaning::random_member(cls, sig, rng, depth)) out.push_back(*t);
  }
  return out;
}

std::string cli(std::vector<std::string> args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

Verdict disquotation() {
  Verdict v;
  const auto terms = kernel::enumerate_terms(g().theory("Arith").signature, kE, 2, {0, 1, 2});
  v.require(terms.size() == oracle::closed_term_count(3, 2, 2) && terms.size() == 885,
            "expected 885 terms, enumerated " + std::to_string(terms.size()));
  std::size_t ok = 0;
  for (const auto& t : terms) ok += kernel::unquote(Term::quote(t)) == t;
  v.require(ok == terms.size(), std::to_string(terms.size() - ok) + " terms not recovered");
  if (v.pass) v.detail = std::to_string(ok) + "/885 recovered";
  return v;
}

Verdict factoring() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const Term six = apply("NatArith", "ifactors", {Term::lit(6, kN)});
  const auto f6 = transformers::read_factorization(six);
  v.require(f6 && f6->unit == 1 &&
                f6->factors == std::vector<std::pair<Integer, unsigned>>{{2, 1}, {3, 1}},
            "ifactors 6 gave " + kernel::to_string(six));
  v.require(text::display_term(six) == "(pair 1 ((2 1) (3 1)))", "display " + text::display_term(six));
  std::size_t checked = 0;
  for (int m = 2; m <= 10000 && v.pass; ++m) {
    for (int n : {m, -m}) {
      const auto f = transformers::read_factorization(apply("NatArith", "ifactors", {Term::lit(n, kN)}));
      if (!f) {
        v.require(false, "unreadable output for " + std::to_string(n));
        break;
      }
      Integer product = f->unit;
      Integer last = 1;
      bool ok = f->unit == (n < 0 ? -1 : 1);
      for (const auto& [p, e] : f->factors) {
        ok = ok && e >= 1 && p > last && oracle::trial_prime(p);
        last = p;
        for (unsigned i = 0; i < e; ++i) product *= p;
      }
      v.require(ok && product == n, "unsound factorization of " + std::to_string(n));
      ++checked;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  if (v.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu inputs sound in %.2f s", checked, secs);
    v.detail = buf;
  }
  return v;
}

Verdict modular_power() {
  Verdict v;
  const Term r = apply("NatArith", "modpow", {Term::lit(5, kN), Term::lit(256, kN), Term::lit(379, kN)});
  v.require(r == Term::lit(246, kN), "modpow 5 256 379 gave " + kernel::to_string(r));
  v.require(oracle::naive_modpow(5, 256, 379) == 246, "naive oracle disagrees with 246");
  std::size_t cells = 0;
  for (std::int64_t m = 2; m <= 97 && v.pass; ++m) {
    for (std::int64_t b = 0; b <= 50 && v.pass; ++b) {
      std::int64_t acc = 1 % m;
      for (std::int64_t e = 0; e <= 200; ++e) {
        if (transformers::modpow(b, e, m) != acc) {
          v.require(false, "mismatch at " + std::to_string(b) + "^" + std::to_string(e) + " mod " + std::to_string(m));
          break;
        }
        acc = acc * b % m;
        ++cells;
      }
    }
  }
  if (v.pass) v.detail = "246 and " + std::to_string(cells) + " grid cells exact";
  return v;
}

Verdict normalization() {
  Verdict v;
  const std::vector<std::string> vars{"x", "y", "z"};
  const auto& sig = g().theory("Ring").signature;
  std::size_t idem = 0, denot = 0, zp = 0;
  const auto terms = random_polys(1000, 42, 6, vars);
  for (const auto& t : terms) {
    const Term n = apply("Ring", "normalize_poly", {t});
    idem += transformers::normalize_poly(n, kR) == n;
    denot += oracle::poly_of(n, vars) == oracle::poly_of(t, vars);
    zp += semantics::poly_equal_on_zp(sig, t, n, vars, 101);
  }
  v.require(idem == 1000, "idempotent on " + std::to_string(idem) + "/1000");
  v.require(denot == 1000, "denotation kept on " + std::to_string(denot) + "/1000");
  v.require(zp == 1000, "Z_101 agreement on " + std::to_string(zp) + "/1000");
  if (v.pass) v.detail = "1000/1000 idempotent, denotation-preserving, Z_101-equal";
  return v;
}

Verdict differentiation() {
  Verdict v;
  const std::vector<std::string> vars{"x", "y"};
  std::size_t exact = 0;
  for (const auto& t : random_polys(500, 42, 6, vars)) {
    const Term d = apply("Ring", "deriv", {t, Term::var("x", kR)});
    exact += oracle::poly_of(d, vars) == oracle::derivative(oracle::poly_of(t, vars), 0);
  }
  v.require(exact == 500, "oracle agreement on " + std::to_string(exact) + "/500");

  const auto& ring = g().theory("Ring");
  const auto own = meaning::verify_meaning(g().context(ring), *ring.meaning("mf_deriv"),
                                           semantics::RandomSamples{500, 42, 6});
  v.require(own.report.status == semantics::Status::Pass && own.report.cases == 500,
            "mf_deriv: " + std::string(semantics::to_string(own.report.status)) + " after " +
                std::to_string(own.report.cases) + " cases");

  const auto& mg = fixtures::wrong_leibniz();
  const auto& mring = mg.theory("Ring");
  const auto* mf = mring.meaning("mf_dx");
  const auto bad = meaning::verify_meaning(mg.context(mring), *mf, semantics::RandomSamples{500, 42, 6});
  std::string witness;
  if (bad.report.status != semantics::Status::Fail || !bad.report.counterexample ||
      bad.report.counterexample->terms.empty()) {
    v.require(false, "wrong product rule not rejected");
  } else {
    const Term& w = bad.report.counterexample->terms.front().second;
    witness = kernel::to_string(w);
    v.require(w.depth() <= 3, "witness " + witness + " deeper than 3");
    v.require(meaning::replays(mg.context(mring), *mf, *bad.report.counterexample), "witness does not replay");
  }
  if (v.pass) v.detail = "500/500 exact; mutant rejected by " + witness;
  return v;
}

Verdict discrimination() {
  Verdict v;
  const auto opts = text::check_options(text::VerifyOptions{});
  const auto good = graph::check_morphism(g(), g().morphism("arith_to_aa"), opts);
  std::size_t preserved = 0;
  for (const auto& o : good.obligations) {
    v.require(o.status != graph::ObligationStatus::Failed, "arith_to_aa failed " + o.kind + " " + o.origin);
    if (o.kind == "preservation") {
      v.require(o.report && o.report->status == semantics::Status::Pass &&
                    std::holds_alternative<semantics::ExhaustiveTerms>(o.report->strategy),
                "preservation not established exhaustively");
      ++preserved;
    }
  }
  v.require(preserved > 0, "no preservation obligation for arith_to_aa");

  const auto& sg = fixtures::with_swapped();
  const auto& swapped = sg.morphism("arith_to_aa_swapped");
  try {
    graph::check_signature(swapped, sg.theory("Arith"), sg.theory("AA"));
  } catch (const Error& e) {
    v.require(false, std::string("swapped signature check: ") + e.what());
  }
  const auto bad = graph::check_morphism(sg, swapped, opts);
  std::string witness;
  for (const auto& o : bad.obligations) {
    if (o.kind == "preservation" && o.status == graph::ObligationStatus::Failed && o.report &&
        o.report->counterexample) {
      witness = kernel::to_string(o.report->counterexample->terms.front().second);
    }
  }
  v.require(!witness.empty(), "swapped morphism passed preservation");
  text::VerifyRun run;
  run.morphisms.push_back({swapped, bad, 0});
  const std::string json = text::report_json(run, {}, "check");
  v.require(json.find("\"counterexample\"") != std::string::npos && json.find(witness) != std::string::npos,
            "counterexample missing from report");
  if (v.pass) v.detail = "correct map preserves; swapped fails at " + witness;
  return v;
}

Verdict generated_evaluators() {
  Verdict v;
  auto compare = [&](const char* source, const char* lang_name, const char* hand) {
    const auto& src = g().theory(source);
    const auto& lang = g().theory(lang_name);
    kernel::Renaming back;
    for (const auto& [a, b] : generate::reify_renaming(src, lang).sorts) back.sorts[b] = a;
    for (const auto& [a, b] : generate::reify_renaming(src, lang).symbols) back.symbols[b] = a;
    const auto& arith_int = *g().theory("Arith").model("Int");
    const auto& src_int = *src.model("Int");
    std::size_t agree = 0, total = 0;
    for (const auto& t : kernel::enumerate_terms(lang.signature, Sort{"E#term"}, 2, {0, 1, 2})) {
      ++total;
      const Term out = transformers::apply_transformer(lang.signature, lang.transformers, "eval_Arith", {&t, 1});
      const Term ref = transformers::apply_transformer(src.signature, src.transformers, hand,
                                                       std::vector<Term>{kernel::translate(back, t)});
      agree += semantics::denote(arith_int, out) == semantics::denote(src_int, ref);
    }
    v.require(total == 885 && agree == total,
              std::string(lang_name) + ": " + std::to_string(agree) + "/" + std::to_string(total));
  };
  compare("Arith", "Arith#term", "eval");
  compare("AA", "AA#term", "eval_prime");
  if (v.pass) v.detail = "885/885 for Arith#term and AA#term";
  return v;
}

Verdict bundled_graph() {
  Verdict v;
  const auto& graph = g();
  v.require(graph.theories().size() >= 8, "only " + std::to_string(graph.theories().size()) + " theories");
  for (const char* name : {"Magma", "Semigroup", "Monoid", "Group", "Ring", "CommutativeRing", "NatArith", "Arith#term"}) {
    v.require(graph.find_theory(name) != nullptr, std::string("missing ") + name);
  }
  const auto run = text::run_verify(graph, text::VerifyOptions{});
  v.require(!text::has_failure(run), "bundled graph has a Failed status");

  const auto& m = graph.morphism("additive");
  const auto check = graph::check_morphism(graph, m, text::check_options(text::VerifyOptions{}));
  const auto& nat = graph.theory("NatArith");
  try {
    const auto power = graph::transport(check, m, graph.theory("Monoid").transformers.at("power"), nat);
    const Term p3 = transformers::apply_transformer(nat.signature, power,
                                                    std::vector<Term>{Term::var("x", kN), Term::lit(3, kN)});
    for (int x = -50; x <= 50; ++x) {
      v.require(semantics::denote(*nat.model("Int"), p3, {{"x", Integer(x)}}) == semantics::Value(Integer(3 * x)),
                kernel::to_string(p3) + " is not 3x at x=" + std::to_string(x));
    }
    if (v.pass) {
      v.detail = std::to_string(graph.theories().size()) + " theories, 0 failed; power(x,3) = " +
                 kernel::to_string(p3);
    }
  } catch (const Error& e) {
    v.require(false, std::string("transport: ") + e.what());
  }
  return v;
}

Verdict determinism() {
  Verdict v;
  int c1 = 0, c2 = 0;
  const std::string a = cli({"verify", "--seed", "42"}, c1);
  const std::string b = cli({"verify", "--seed", "42"}, c2);
  v.require(c1 == cli::kOk && c2 == cli::kOk, "bundled verify did not exit 0");
  v.require(!a.empty() && a == b, "bundled reports differ");

  const std::vector<std::string> swapped{"-f", fixtures::corpus_path("nat_ring.btg"), "-f",
                                         fixtures::corpus_path("swapped.btg"), "verify", "--seed", "42"};
  const std::string s1 = cli(swapped, c1);
  const std::string s2 = cli(swapped, c2);
  v.require(c1 == cli::kCheckFailed && s1 == s2, "failing reports differ or did not exit 1");

  // Replay every recorded failure of the failing graphs.
  std::size_t fails = 0;
  const text::VerifyOptions o;
  for (const auto* graph : {&fixtures::with_swapped(), &fixtures::wrong_leibniz()}) {
    const auto run = text::run_verify(*graph, o);
    for (const auto& mr : run.morphisms) {
      for (const auto& ob : mr.check.obligations) {
        if (ob.status != graph::ObligationStatus::Failed) continue;
        ++fails;
        const auto& cex = ob.report->counterexample;
        bool replayed = false;
        if (ob.kind == "preservation" && cex) {
          const auto arrow = ob.origin.find(" -> ");
          const auto* ms = graph->theory(mr.morphism.source).model(ob.origin.substr(0, arrow));
          const auto* mt = graph->theory(mr.morphism.target).model(ob.origin.substr(arrow + 4));
          const Term& t = cex->terms.front().second;
          replayed = ms && mt && semantics::denote(*ms, t) != semantics::denote(*mt, graph::translate(mr.morphism, t));
        } else if (cex) {
          const auto again = graph::check_morphism(*graph, mr.morphism, text::check_options(o));
          for (const auto& ob2 : again.obligations) {
            if (ob2.origin == ob.origin && ob2.kind == ob.kind && ob2.report && ob2.report->counterexample) {
              replayed = ob2.report->counterexample->note == cex->note;
            }
          }
        }
        v.require(replayed, "morphism failure " + ob.origin + " does not replay");
      }
    }
    for (const auto& tr : run.theories) {
      const auto& th = graph->theory(tr.theory);
      for (const auto& e : tr.entries) {
        if (e.report.status != semantics::Status::Fail) continue;
        ++fails;
        bool replayed = false;
        if (e.report.counterexample) {
          if (e.kind == "meaning") {
            replayed = meaning::replays(graph->context(th), *th.meaning(e.formula), *e.report.counterexample);
          } else if (const auto* m = th.model(e.model)) {
            replayed = semantics::refails(*m, th.axiom(e.formula)->formula, *e.report.counterexample);
          }
        }
        v.require(replayed, e.formula + " failure does not replay");
      }
    }
  }
  v.require(fails > 0, "no failures to replay");
  if (v.pass) v.detail = "reports byte-identical; " + std::to_string(fails) + " failures replay";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"disquotation on all closed Arith terms of depth <= 2", disquotation},
      {"ifactors shape and exhaustive soundness", factoring},
      {"modpow value and full grid", modular_power},
      {"normalize_poly on 1000 random polynomials", normalization},
      {"deriv meaning and wrong product rule", differentiation},
      {"isomorphism discrimination Arith -> AA", discrimination},
      {"generated evaluators vs hand-written eval", generated_evaluators},
      {"bundled graph checks and power transport", bundled_graph},
      {"determinism and failure replay", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0) v.require(false, "exceeded 60 s");
    failed += !v.pass;
    std::printf("%s %d %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str(), secs);
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
