#include "btg/text/sexpr.hpp"

#include <cctype>

namespace btg::text {

Sexpr Sexpr::make_atom(std::string a) {
  Sexpr s;
  s.atom = std::move(a);
  return s;
}

Sexpr Sexpr::list(std::vector<Sexpr> items) {
  Sexpr s;
  s.is_list = true;
  s.items = std::move(items);
  return s;
}

std::string_view Sexpr::head() const noexcept {
  if (!is_list || items.empty() || items.front().is_list) return {};
  return items.front().atom;
}

void fail_at(Errc code, const Sexpr& at, const std::string& message) { throw Error(code, message, at.loc); }

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<Sexpr> document() {
    std::vector<Sexpr> out;
    for (;;) {
      auto comments = skip();
      if (pos_ >= text_.size()) break;
      if (peek() == ')') error("unbalanced ')'");
      out.push_back(read());
      out.back().comments = std::move(comments);
    }
    return out;
  }

 private:
  char peek() const { return text_[pos_]; }

  SourceLoc here() const { return {line_, col_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void error(const std::string& message) const { throw Error(Errc::SyntaxError, message, here()); }

  // Whitespace and comments; returns the comment lines seen.
  std::vector<std::string> skip() {
    std::vector<std::string> comments;
    while (pos_ < text_.size()) {
      char c = peek();
      if (c == ';') {
        while (pos_ < text_.size() && peek() == ';') advance();
        if (pos_ < text_.size() && peek() == ' ') advance();
        std::size_t start = pos_;
        while (pos_ < text_.size() && peek() != '\n') advance();
        comments.emplace_back(text_.substr(start, pos_ - start));
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
    return comments;
  }

  Sexpr read() {
    SourceLoc loc = here();
    char c = peek();
    if (c == '(') {
      advance();
      Sexpr s = Sexpr::list({});
      s.loc = loc;
      for (;;) {
        auto comments = skip();
        if (pos_ >= text_.size()) throw Error(Errc::SyntaxError, "unterminated list", loc);
        if (peek() == ')') {
          advance();
          return s;
        }
        s.items.push_back(read());
        s.items.back().comments = std::move(comments);
      }
    }
    if (c == '"') error("strings are not part of the syntax");
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = peek();
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';' || d == '"') break;
      if (static_cast<unsigned char>(d) < 0x20) error("control character in atom");
      advance();
    }
    Sexpr s = Sexpr::make_atom(std::string(text_.substr(start, pos_ - start)));
    s.loc = loc;
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool has_comments(const Sexpr& s) {
  if (!s.comments.empty()) return true;
  for (const auto& i : s.items) {
    if (has_comments(i)) return true;
  }
  return false;
}

std::string flat(const Sexpr& s) {
  if (s.is_atom()) return s.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i > 0) out += ' ';
    out += flat(s.items[i]);
  }
  return out + ")";
}

void comment_lines(std::string& out, const Sexpr& s, std::size_t indent) {
  for (const auto& c : s.comments) {
    out += "; " + c;
    out += '\n';
    out.append(indent, ' ');
  }
}

}  // namespace

std::vector<Sexpr> read_sexprs(std::string_view text) { return Reader(text).document(); }

std::string flat_sexpr(const Sexpr& s) { return flat(s); }

std::string write_sexpr(const Sexpr& s, std::size_t indent) {
  if (s.is_atom()) return s.atom;
  std::string one = flat(s);
  bool inner_comments = false;
  for (const auto& i : s.items) inner_comments = inner_comments || has_comments(i);
  if (!inner_comments && indent + one.size() <= 80) return one;
  std::string out = "(";
  std::size_t i = 0;
  for (; i < s.items.size() && s.items[i].is_atom() && s.items[i].comments.empty(); ++i) {
    if (i > 0) out += ' ';
    out += s.items[i].atom;
  }
  for (; i < s.items.size(); ++i) {
    if (i > 0) {
      out += '\n';
      out.append(indent + 2, ' ');
    }
    comment_lines(out, s.items[i], indent + 2);
    out += write_sexpr(s.items[i], indent + 2);
  }
  return out + ")";
}

std::string write_document(const std::vector<Sexpr>& decls) {
  std::string out;
  for (std::size_t i = 0; i < decls.size(); ++i) {
    if (i > 0) out += '\n';
    comment_lines(out, decls[i], 0);
    out += write_sexpr(decls[i]);
    out += '\n';
  }
  return out;
}

}  // namespace btg::text
