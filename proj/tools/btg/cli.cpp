#include "btg/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "btg/bundled_corpus.hpp"
#include "btg/error.hpp"
#include "btg/generate/generate.hpp"
#include "btg/text/report.hpp"
#include "btg/text/syntax.hpp"
#include "btg/text/theory_file.hpp"
#include "btg/transformers/transformer.hpp"

namespace btg::cli {

namespace {


// Parse and elaboration failures, reported with the file they come from.
struct LoadError {
  std::string text;
};

graph::TheoryGraph load(const std::vector<std::string>& files) {
  graph::TheoryGraph g;
  if (files.empty()) {
    try {
      text::elaborate(g, text::read_sexprs(kBundledCorpus));
    } catch (const Error& e) {
      throw LoadError{"<bundled>: " + std::string(e.what())};
    }
    return g;
  }
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError{path + ": cannot open file"};
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      text::elaborate(g, text::read_sexprs(buf.str()));
    } catch (const Error& e) {
      throw LoadError{path + ": " + std::string(e.what())};
    }
  }
  return g;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw LoadError{out_path + ": cannot write file"};
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biform theory graphs: check, run, verify and generate.", "btg"};
  app.require_subcommand(1);
  app.fallthrough();
  std::vector<std::string> files;
  app.add_option("-f,--file", files, "Theory file (repeatable; default: the bundled corpus)");

  text::VerifyOptions vo;
  std::string zp_text;
  std::string out_path;
  auto verify_flags = [&](CLI::App* sub) {
    sub->add_option("--samples", vo.samples, "Random samples per formula")->capture_default_str();
    sub->add_option("--seed", vo.seed, "Seed of the random strategy")->capture_default_str();
    sub->add_option("--depth", vo.depth, "Term depth for generation and preservation")->capture_default_str();
    sub->add_option("--zp", zp_text, "Also check integer models as Z_p copies");
    sub->add_option("--theory", vo.theories, "Restrict verification to these theories");
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
    sub->add_flag("--timings", vo.timings, "Include wall-clock milliseconds");
  };

  auto* check = app.add_subcommand("check", "Elaborate and discharge morphism obligations");
  verify_flags(check);
  auto* verify = app.add_subcommand("verify", "Check morphisms, axioms and meaning formulas");
  verify_flags(verify);

  auto* run_cmd = app.add_subcommand("run", "Apply a transformer to terms");
  std::string run_theory;
  std::string run_transformer;
  std::vector<std::string> run_args;
  run_cmd->add_option("theory", run_theory, "Theory")->required();
  run_cmd->add_option("transformer", run_transformer, "Transformer")->required();
  run_cmd->add_option("args", run_args, "Argument terms");

  auto* gen = app.add_subcommand("generate", "Print a generated theory");
  std::string gen_kind;
  std::vector<std::string> gen_args;
  gen->add_option("kind", gen_kind, "term-language, evaluator, homomorphism or graph")
      ->required()
      ->check(CLI::IsMember({"term-language", "evaluator", "homomorphism", "graph"}));
  gen->add_option("args", gen_args, "Theory names, sorts or constructor=symbol pairs");
  gen->add_option("--out", out_path, "Write here instead of stdout");

  auto* dot = app.add_subcommand("export-dot", "Print the graph in DOT with check statuses");
  dot->add_option("--out", out_path, "Write here instead of stdout");
  dot->add_option("--samples", vo.samples, "Random samples per formula");
  dot->add_option("--seed", vo.seed, "Seed of the random strategy");
  dot->add_option("--depth", vo.depth, "Term depth");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (!zp_text.empty()) {
      if (!text::is_integer(zp_text)) {
        err << "error: --zp expects an integer\n";
        return kUsageError;
      }
      vo.zp = Integer(zp_text);
    }
    const graph::TheoryGraph g = load(files);

    if (check->parsed()) {
      text::VerifyRun r;
      r.morphisms = text::run_checks(g, vo);
      emit(text::report_json(r, vo, "check"), out_path, out);
      return text::has_failure(r) ? kCheckFailed : kOk;
    }
    if (verify->parsed()) {
      for (const auto& t : vo.theories) {
        if (g.find_theory(t) == nullptr) {
          err << "error: unknown theory " << t << "\n";
          return kUsageError;
        }
      }
      auto r = text::run_verify(g, vo);
      emit(text::report_json(r, vo, "verify"), out_path, out);
      return text::has_failure(r) ? kCheckFailed : kOk;
    }
    if (run_cmd->parsed()) {
      const auto* t = g.find_theory(run_theory);
      if (t == nullptr) {
        err << "error: unknown theory " << run_theory << "\n";
        return kUsageError;
      }
      std::vector<kernel::Term> terms;
      for (const auto& a : run_args) {
        try {
          terms.push_back(text::parse_term_text(a, t->signature));
        } catch (const Error& e) {
          err << "error: argument \"" << a << "\": " << e.what() << "\n";
          return kUsageError;
        }
      }
      try {
        kernel::Term result = transformers::apply_transformer(t->signature, t->transformers, run_transformer, terms);
        out << text::display_term(result) << "\n";
        return kOk;
      } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::UnknownTransformer ? kUsageError : kCheckFailed;
      }
    }
    if (gen->parsed()) {
      auto need = [&](std::size_t n) {
        if (gen_args.size() < n) throw CLI::ValidationError("generate " + gen_kind, "missing arguments");
      };
      if (gen_kind == "graph") {
        emit(text::print_graph(g), out_path, out);
        return kOk;
      }
      need(1);
      const auto& t = g.theory(gen_args[0]);
      if (gen_kind == "term-language") {
        std::vector<kernel::Sort> sorts;
        for (std::size_t i = 1; i < gen_args.size(); ++i) sorts.push_back({gen_args[i]});
        if (sorts.empty()) sorts = t.signature.sorts();
        emit(text::print_theory(generate::gen_term_language(t, sorts)), out_path, out);
      } else if (gen_kind == "homomorphism") {
        emit(text::print_theory(generate::gen_homomorphism_theory(t)), out_path, out);
      } else {
        need(2);
        std::map<std::string, std::string> ctors;
        for (std::size_t i = 2; i < gen_args.size(); ++i) {
          auto eq = gen_args[i].find('=');
          if (eq == std::string::npos) throw CLI::ValidationError("generate evaluator", "expected ctor=symbol");
          ctors.emplace(gen_args[i].substr(0, eq), gen_args[i].substr(eq + 1));
        }
        graph::BiformTheory lang = t;
        generate::install(lang, generate::gen_evaluator(t, g.theory(gen_args[1]), ctors));
        emit(text::print_theory(lang), out_path, out);
      }
      return kOk;
    }
    if (dot->parsed()) {
      emit(text::export_dot(g, text::run_checks(g, vo)), out_path, out);
      return kOk;
    }
  } catch (const LoadError& e) {
    err << "error: " << e.text << "\n";
    return kUsageError;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::UnknownReference || e.code() == Errc::SyntaxError ? kUsageError : kCheckFailed;
  }
  return kUsageError;
}

}  // namespace btg::cli
