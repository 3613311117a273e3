#include "btg/text/report.hpp"

#include <chrono>

#include <nlohmann/json.hpp>

#include "btg/semantics/check.hpp"
#include "btg/transformers/builtins.hpp"
#include "btg/text/sexpr.hpp"
#include "btg/text/syntax.hpp"

namespace btg::text {

using nlohmann::ordered_json;

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

bool selected(const VerifyOptions& o, const std::string& theory) {
  return o.theories.empty() || std::find(o.theories.begin(), o.theories.end(), theory) != o.theories.end();
}

std::string status_text(semantics::Status s) {
  switch (s) {
    case semantics::Status::Pass: return "pass";
    case semantics::Status::Fail: return "fail";
    case semantics::Status::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

ordered_json strategy_json(const semantics::CheckStrategy& s) {
  ordered_json j;
  if (std::holds_alternative<semantics::ExhaustiveDomain>(s)) {
    j["kind"] = "exhaustive-domain";
  } else if (const auto* t = std::get_if<semantics::ExhaustiveTerms>(&s)) {
    j["kind"] = "exhaustive-terms";
    j["depth"] = t->max_depth;
    ordered_json pool = ordered_json::array();
    for (const auto& v : t->pool) pool.push_back(v.str());
    j["pool"] = pool;
  } else {
    const auto& r = std::get<semantics::RandomSamples>(s);
    j["kind"] = "random";
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["depth"] = r.max_depth;
  }
  return j;
}

ordered_json counterexample_json(const semantics::Counterexample& c) {
  ordered_json j;
  j["case"] = c.case_index;
  ordered_json assignment = ordered_json::array();
  for (const auto& [n, v] : c.assignment) assignment.push_back({{"name", n}, {"value", semantics::to_string(v)}});
  j["assignment"] = assignment;
  ordered_json terms = ordered_json::array();
  for (const auto& [n, t] : c.terms) terms.push_back({{"name", n}, {"term", flat_sexpr(term_sexpr(t))}});
  j["terms"] = terms;
  j["note"] = c.note;
  return j;
}

ordered_json check_json(const semantics::CheckReport& r) {
  ordered_json j;
  j["status"] = status_text(r.status);
  j["cases"] = r.cases;
  j["strategy"] = strategy_json(r.strategy);
  if (!r.note.empty()) j["note"] = r.note;
  if (r.counterexample) j["counterexample"] = counterexample_json(*r.counterexample);
  return j;
}

}  // namespace

graph::CheckOptions check_options(const VerifyOptions& o) {
  graph::CheckOptions c;
  c.evidence = semantics::RandomSamples{o.samples, o.seed, o.depth};
  c.preservation = semantics::ExhaustiveTerms{o.depth, {0, 1, 2}};
  c.zp = o.zp;
  return c;
}

std::vector<MorphismResult> run_checks(const graph::TheoryGraph& g, const VerifyOptions& o) {
  std::vector<MorphismResult> out;
  const auto opts = check_options(o);
  for (const auto& m : g.morphisms()) {
    auto start = std::chrono::steady_clock::now();
    auto check = graph::check_morphism(g, m, opts);
    out.push_back({m, std::move(check), elapsed_ms(start)});
  }
  return out;
}

VerifyRun run_verify(const graph::TheoryGraph& g, const VerifyOptions& o) {
  VerifyRun run;
  run.morphisms = run_checks(g, o);
  const auto opts = check_options(o);
  for (const auto& t : g.theories()) {
    if (!selected(o, t.name)) continue;
    auto start = std::chrono::steady_clock::now();
    auto entries = graph::verify_all(g, t, opts);
    run.theories.push_back({t.name, std::move(entries), elapsed_ms(start)});
  }
  return run;
}

bool has_failure(const VerifyRun& run) {
  for (const auto& m : run.morphisms) {
    if (!m.check.ok()) return true;
  }
  for (const auto& t : run.theories) {
    for (const auto& e : t.entries) {
      if (e.report.status == semantics::Status::Fail) return true;
    }
  }
  return false;
}

std::string_view morphism_status(const graph::MorphismCheck& c) {
  bool all_matched = true;
  for (const auto& ob : c.obligations) {
    if (ob.status == graph::ObligationStatus::Failed) return "failed";
    all_matched = all_matched && ob.status == graph::ObligationStatus::MatchedAxiom;
  }
  return all_matched ? "ok" : "evidence";
}

std::string report_json(const VerifyRun& run, const VerifyOptions& o, std::string_view command) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  ordered_json flags;
  flags["samples"] = o.samples;
  flags["seed"] = o.seed;
  flags["depth"] = o.depth;
  flags["zp"] = o.zp ? ordered_json(o.zp->str()) : ordered_json(nullptr);
  j["flags"] = flags;

  std::size_t passed = 0, failed = 0, indeterminate = 0;
  ordered_json morphisms = ordered_json::array();
  for (const auto& m : run.morphisms) {
    ordered_json mj;
    mj["name"] = m.morphism.name;
    mj["source"] = m.morphism.source;
    mj["target"] = m.morphism.target;
    mj["status"] = morphism_status(m.check);
    ordered_json obs = ordered_json::array();
    for (const auto& ob : m.check.obligations) {
      ordered_json oj;
      oj["kind"] = ob.kind;
      oj["origin"] = ob.origin;
      oj["translated"] = ob.translated;
      oj["status"] = graph::to_string(ob.status);
      oj["discharged_by"] = ob.discharged_by;
      if (ob.report) oj["check"] = check_json(*ob.report);
      obs.push_back(oj);
      if (ob.status == graph::ObligationStatus::Failed) {
        ++failed;
      } else if (ob.status == graph::ObligationStatus::Open) {
        ++indeterminate;
      } else {
        ++passed;
      }
    }
    mj["obligations"] = obs;
    if (o.timings) mj["millis"] = m.millis;
    morphisms.push_back(mj);
  }
  j["morphisms"] = morphisms;

  ordered_json theories = ordered_json::array();
  for (const auto& t : run.theories) {
    ordered_json tj;
    tj["name"] = t.theory;
    ordered_json entries = ordered_json::array();
    for (const auto& e : t.entries) {
      ordered_json ej;
      ej["kind"] = e.kind;
      ej["formula"] = e.formula;
      if (!e.model.empty()) ej["model"] = e.model;
      if (!e.transformer.empty()) {
        ej["transformer"] = e.transformer;
        ej["provenance"] = e.provenance;
      }
      if (!e.classes.empty()) {
        ordered_json cls = ordered_json::array();
        for (const auto& [v, c] : e.classes) cls.push_back({{"var", v}, {"class", c}});
        ej["classes"] = cls;
      }
      ej["check"] = check_json(e.report);
      entries.push_back(ej);
      switch (e.report.status) {
        case semantics::Status::Pass: ++passed; break;
        case semantics::Status::Fail: ++failed; break;
        case semantics::Status::Indeterminate: ++indeterminate; break;
      }
    }
    tj["entries"] = entries;
    if (o.timings) tj["millis"] = t.millis;
    theories.push_back(tj);
  }
  j["theories"] = theories;
  j["summary"] = {{"passed", passed}, {"failed", failed}, {"indeterminate", indeterminate}};
  return j.dump(2) + "\n";
}

std::string export_dot(const graph::TheoryGraph& g, const std::vector<MorphismResult>& checks) {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph theories {\n";
  for (const auto& t : g.theories()) out += "  " + quoted(t.name) + " [label=" + quoted(t.name) + "];\n";
  for (const auto& m : checks) {
    out += "  " + quoted(m.morphism.source) + " -> " + quoted(m.morphism.target) +
           " [label=" + quoted(m.morphism.name) + ", status=" + quoted(std::string(morphism_status(m.check))) + "];\n";
  }
  return out + "}\n";
}

std::string display_term(const kernel::Term& t) {
  if (auto f = transformers::read_factorization(t)) {
    std::string out = "(pair " + f->unit.str() + " (";
    for (std::size_t i = 0; i < f->factors.size(); ++i) {
      if (i > 0) out += " ";
      out += "(" + f->factors[i].first.str() + " " + std::to_string(f->factors[i].second) + ")";
    }
    return out + "))";
  }
  return flat_sexpr(term_sexpr(t));
}

}  // namespace btg::text
