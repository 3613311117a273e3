#pragma once

// Independent reference implementations the tests compare the library with.
// They deliberately share no code with btg::core beyond Term and Integer.

#include <btg/integer.hpp>
#include <btg/kernel/term.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using btg::Integer;

/// base^exp mod m by exp-fold multiplication.
inline std::int64_t naive_modpow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t acc = 1 % m;
  for (std::int64_t i = 0; i < exp; ++i) acc = (acc * (base % m)) % m;
  return acc;
}

inline bool trial_prime(const Integer& n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Number of closed terms of depth <= d over `binary` binary symbols and
/// `leaves` leaf terms: a(0) = leaves, a(d) = leaves + binary * a(d-1)^2.
inline std::uint64_t closed_term_count(std::uint64_t leaves, std::uint64_t binary, unsigned depth) {
  std::uint64_t a = leaves;
  for (unsigned d = 0; d < depth; ++d) a = leaves + binary * a * a;
  return a;
}

/// Dense-exponent polynomial over a fixed variable list.
struct Poly {
  std::vector<std::string> vars;
  std::map<std::vector<unsigned>, Integer> coeffs;

  void add(const std::vector<unsigned>& e, const Integer& c) {
    Integer& slot = coeffs[e];
    slot += c;
    if (slot == 0) coeffs.erase(e);
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.vars == b.vars && a.coeffs == b.coeffs; }
};

inline Poly constant(const std::vector<std::string>& vars, const Integer& c) {
  Poly p{vars, {}};
  p.add(std::vector<unsigned>(vars.size(), 0), c);
  return p;
}

inline Poly sum(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b.coeffs) r.add(e, c);
  return r;
}

inline Poly product(const Poly& a, const Poly& b) {
  Poly r{a.vars, {}};
  for (const auto& [ea, ca] : a.coeffs) {
    for (const auto& [eb, cb] : b.coeffs) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add(e, ca * cb);
    }
  }
  return r;
}

inline Poly scale(const Poly& a, const Integer& k) {
  Poly r{a.vars, {}};
  for (const auto& [e, c] : a.coeffs) r.add(e, c * k);
  return r;
}

/// Reads a term over plus/times/neg/zero/one, literals and the variables.
inline Poly poly_of(const btg::kernel::Term& t, const std::vector<std::string>& vars) {
  using K = btg::kernel::Term::Kind;
  switch (t.kind()) {
    case K::Lit:
      return constant(vars, t.value());
    case K::Var: {
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == t.name()) {
          Poly p{vars, {}};
          std::vector<unsigned> e(vars.size(), 0);
          e[i] = 1;
          p.add(e, 1);
          return p;
        }
      }
      throw std::runtime_error("oracle: unknown variable " + t.name());
    }
    case K::App: {
      const auto& f = t.name();
      auto args = t.args();
      if (f == "zero" && args.empty()) return constant(vars, 0);
      if (f == "one" && args.empty()) return constant(vars, 1);
      if (f == "neg" && args.size() == 1) return scale(poly_of(args[0], vars), -1);
      if (f == "plus" && args.size() == 2) return sum(poly_of(args[0], vars), poly_of(args[1], vars));
      if (f == "times" && args.size() == 2) return product(poly_of(args[0], vars), poly_of(args[1], vars));
      throw std::runtime_error("oracle: not a ring term " + f);
    }
    case K::Quote:
      break;
  }
  throw std::runtime_error("oracle: quotation in ring term");
}

inline Poly derivative(const Poly& p, std::size_t var) {
  Poly r{p.vars, {}};
  for (const auto& [e, c] : p.coeffs) {
    if (e[var] == 0) continue;
    auto d = e;
    --d[var];
    r.add(d, c * e[var]);
  }
  return r;
}

/// Value at a point modulo m, by Horner-free direct evaluation.
inline std::int64_t eval_mod(const Poly& p, const std::vector<std::int64_t>& point, std::int64_t m) {
  std::int64_t acc = 0;
  for (const auto& [e, c] : p.coeffs) {
    Integer cm = c % m;
    if (cm < 0) cm += m;
    std::int64_t term = cm.convert_to<std::int64_t>();
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term = term * point[i] % m;
    }
    acc = (acc + term) % m;
  }
  return acc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace oracle
