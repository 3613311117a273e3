#include "btg/semantics/value.hpp"

namespace btg::semantics {

Poly Poly::constant(const Integer& c) {
  Poly p;
  p.add_term({}, c);
  return p;
}

Poly Poly::variable(const std::string& name) {
  Poly p;
  p.add_term({{name, 1}}, 1);
  return p;
}

void Poly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& other) const {
  Poly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  Poly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : other.terms_) {
      Monomial m = m1;
      for (const auto& [v, e] : m2) m[v] += e;
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

Poly Poly::derivative(const std::string& var) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    if (it == m.end()) continue;
    Monomial dm = m;
    unsigned e = it->second;
    if (e == 1) {
      dm.erase(var);
    } else {
      dm[var] = e - 1;
    }
    out.add_term(dm, c * e);
  }
  return out;
}

unsigned Poly::degree_in(const std::string& var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    if (it != m.end() && it->second > d) d = it->second;
  }
  return d;
}

Integer Poly::evaluate(const std::map<std::string, Integer>& point) const {
  Integer total = 0;
  for (const auto& [m, c] : terms_) {
    Integer term = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      Integer x = it == point.end() ? Integer(0) : it->second;
      term *= boost::multiprecision::pow(x, e);
    }
    total += term;
  }
  return total;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Integer a = c < 0 ? Integer(-c) : c;
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += a.str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const Value& v) {
  struct Visitor {
    std::string operator()(const Integer& i) const { return i.str(); }
    std::string operator()(const Residue& r) const { return r.value.str() + " mod " + r.modulus.str(); }
    std::string operator()(const Poly& p) const { return to_string(p); }
    std::string operator()(const SynValue& s) const { return "(quote " + kernel::to_string(s.term) + ")"; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace btg::semantics
