#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "btg/error.hpp"

namespace btg::text {

struct Sexpr {
  bool is_list = false;
  std::string atom;
  std::vector<Sexpr> items;
  SourceLoc loc;
  /// `;` comment lines directly preceding this expression, without the `;`.
  std::vector<std::string> comments;

  static Sexpr make_atom(std::string a);
  static Sexpr list(std::vector<Sexpr> items);

  bool is_atom() const noexcept { return !is_list; }
  bool is_atom(std::string_view a) const noexcept { return !is_list && atom == a; }
  /// Atom at position 0 of a list, or empty.
  std::string_view head() const noexcept;
};

/// Throws SyntaxError with the location of the offending character.
std::vector<Sexpr> read_sexprs(std::string_view text);

/// Flat when it fits in 80 columns and carries no comments; otherwise the
/// leading atoms stay on the first line and every later item gets its own
/// line, indented by two.
std::string write_sexpr(const Sexpr& s, std::size_t indent = 0);

/// Single-line rendering; comments are dropped.
std::string flat_sexpr(const Sexpr& s);

/// Top-level expressions separated by blank lines, newline-terminated.
std::string write_document(const std::vector<Sexpr>& decls);

[[noreturn]] void fail_at(Errc code, const Sexpr& at, const std::string& message);

}  // namespace btg::text
