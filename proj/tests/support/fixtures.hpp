#pragma once

#include "oracles.hpp"

#include <btg/error.hpp>
#include <btg/graph/theory_graph.hpp>
#include <btg/text/theory_file.hpp>

#include <functional>
#include <optional>
#include <string>

namespace fixtures {

inline std::string corpus_text(const std::string& file) {
  return oracle::read_file(std::string(BTG_CORPUS_DIR) + "/" + file);
}

inline std::string corpus_path(const std::string& file) { return std::string(BTG_CORPUS_DIR) + "/" + file; }

/// The bundled graph, elaborated once per process.
inline const btg::graph::TheoryGraph& bundled() {
  static const btg::graph::TheoryGraph g = btg::text::parse(corpus_text("nat_ring.btg"));
  return g;
}

/// Bundled corpus followed by the swapped Arith -> AA morphism.
inline const btg::graph::TheoryGraph& with_swapped() {
  static const btg::graph::TheoryGraph g =
      btg::text::parse(corpus_text("nat_ring.btg") + "\n" + corpus_text("swapped.btg"));
  return g;
}

/// Error code raised by `fn`, or nullopt when it returns normally.
inline std::optional<btg::Errc> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const btg::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace fixtures

namespace fixtures {

/// The bundled corpus with the product rule of `dx` replaced by d(uv) = du dv.
inline const btg::graph::TheoryGraph& wrong_leibniz() {
  static const btg::graph::TheoryGraph g = [] {
    std::string text = corpus_text("nat_ring.btg");
    const std::string good = "(plus (times (dx u) v) (times u (dx v)))";
    const auto at = text.find(good);
    if (at == std::string::npos) throw std::runtime_error("product rule not found in corpus");
    text.replace(at, good.size(), "(times (dx u) (dx v))");
    return btg::text::parse(text);
  }();
  return g;
}

}  // namespace fixtures
