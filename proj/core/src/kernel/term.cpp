#include "btg/kernel/term.hpp"

#include <algorithm>
#include <functional>

namespace btg::kernel {

struct Term::Node {
  Kind kind;
  std::string name;
  Sort sort;
  Integer value;
  std::vector<Term> args;
  std::size_t depth = 0;
  std::size_t size = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::var(std::string name, Sort sort) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->hash = mix(mix(1, std::hash<std::string>{}(name)), std::hash<std::string>{}(sort.name));
  n->name = std::move(name);
  n->sort = std::move(sort);
  return Term(std::move(n));
}

Term Term::lit(Integer value, Sort sort) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lit;
  n->hash = mix(mix(2, std::hash<std::string>{}(value.str())), std::hash<std::string>{}(sort.name));
  n->value = std::move(value);
  n->sort = std::move(sort);
  return Term(std::move(n));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  std::size_t h = mix(3, std::hash<std::string>{}(symbol));
  for (const auto& a : args) {
    n->depth = std::max(n->depth, a.depth() + 1);
    n->size += a.size();
    h = mix(h, a.hash());
  }
  n->hash = h;
  n->name = std::move(symbol);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::quote(Term body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Quote;
  n->sort = kSyn;
  n->depth = body.depth() + 1;
  n->size = body.size() + 1;
  n->hash = mix(4, body.hash());
  n->args.push_back(std::move(body));
  return Term(std::move(n));
}

Term::Kind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }
const Sort& Term::sort() const noexcept { return node_->sort; }
const Integer& Term::value() const noexcept { return node_->value; }
std::span<const Term> Term::args() const noexcept { return node_->args; }
const Term& Term::body() const noexcept { return node_->args.front(); }
std::size_t Term::depth() const noexcept { return node_->depth; }
std::size_t Term::size() const noexcept { return node_->size; }
std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
  switch (x.kind) {
    case Term::Kind::Var: return x.name == y.name && x.sort == y.sort;
    case Term::Kind::Lit: return x.value == y.value && x.sort == y.sort;
    case Term::Kind::App: return x.name == y.name && x.args == y.args;
    case Term::Kind::Quote: return x.args == y.args;
  }
  return false;
}

bool operator<(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return x.kind < y.kind;
  switch (x.kind) {
    case Term::Kind::Var:
      return std::tie(x.name, x.sort) < std::tie(y.name, y.sort);
    case Term::Kind::Lit:
      if (x.value != y.value) return x.value < y.value;
      return x.sort < y.sort;
    case Term::Kind::App:
      if (x.name != y.name) return x.name < y.name;
      return std::lexicographical_compare(x.args.begin(), x.args.end(), y.args.begin(), y.args.end());
    case Term::Kind::Quote:
      return x.args.front() < y.args.front();
  }
  return false;
}

namespace {

void collect_free(const Term& t, VarSet& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out.emplace(t.name(), t.sort()); break;
    case Term::Kind::Lit: break;
    case Term::Kind::App:
      for (const auto& a : t.args()) collect_free(a, out);
      break;
    case Term::Kind::Quote: collect_free(t.body(), out); break;
  }
}

void render(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: out += t.name(); break;
    case Term::Kind::Lit: out += t.value().str(); break;
    case Term::Kind::App:
      if (t.args().empty()) {
        out += t.name();
        break;
      }
      out += '(';
      out += t.name();
      for (const auto& a : t.args()) {
        out += ' ';
        render(a, out);
      }
      out += ')';
      break;
    case Term::Kind::Quote:
      out += "(quote ";
      render(t.body(), out);
      out += ')';
      break;
  }
}

}  // namespace

VarSet free_vars(const Term& t) {
  VarSet out;
  collect_free(t, out);
  return out;
}

bool is_closed(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return false;
    case Term::Kind::Lit: return true;
    case Term::Kind::App:
      return std::all_of(t.args().begin(), t.args().end(), [](const Term& a) { return is_closed(a); });
    case Term::Kind::Quote: return is_closed(t.body());
  }
  return true;
}

std::string to_string(const Term& t) {
  std::string out;
  render(t, out);
  return out;
}

}  // namespace btg::kernel
