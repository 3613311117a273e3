#include "btg/transformers/builtins.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "btg/error.hpp"
#include "btg/transformers/host.hpp"

namespace btg::transformers {

namespace fs = factor_sig;

Factorization factor_integer(const Integer& n) {
  if (n == 0) raise(Errc::ZeroInput, "ifactors is undefined at 0");
  Factorization out{n < 0 ? Integer(-1) : Integer(1), {}};
  Integer m = n < 0 ? Integer(-n) : n;
  for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k > 0) out.factors.emplace_back(p, k);
  }
  if (m > 1) out.factors.emplace_back(m, 1);
  return out;
}

bool has_factor_sig(const Signature& sig) {
  return sig.has_sort(fs::kList) && sig.has_sort(fs::kPair) && sig.has_sort(fs::kResult) &&
         sig.has_symbol(fs::kMake) && sig.has_symbol(fs::kFactor) && sig.has_symbol(fs::kCons) &&
         sig.has_symbol(fs::kNil);
}

void import_factor_sig(Signature& sig, const Sort& numeral) {
  if (has_factor_sig(sig)) return;
  sig.add_sort(fs::kPair);
  sig.add_sort(fs::kList);
  sig.add_sort(fs::kResult);
  sig.add_symbol({fs::kFactor, {numeral, numeral}, fs::kPair});
  sig.add_symbol({fs::kNil, {}, fs::kList});
  sig.add_symbol({fs::kCons, {fs::kPair, fs::kList}, fs::kList});
  sig.add_symbol({fs::kMake, {numeral, fs::kList}, fs::kResult});
}

void complete_factor_model(const Signature& sig, std::map<Sort, semantics::Domain>& carriers,
                           std::map<std::string, std::string>& interps) {
  if (!has_factor_sig(sig)) return;
  const Sort& numeral = sig.symbol(fs::kMake).args.at(0);
  auto it = carriers.find(numeral);
  if (it == carriers.end() || !std::holds_alternative<semantics::IntDomain>(it->second)) return;
  for (const auto& s : {fs::kPair, fs::kList, fs::kResult}) carriers.emplace(s, semantics::IntDomain{});
  interps.emplace(fs::kFactor, "pow");
  interps.emplace(fs::kNil, "one");
  interps.emplace(fs::kCons, "mul");
  interps.emplace(fs::kMake, "mul");
}

Term factorization_term(const Factorization& f, const Sort& numeral) {
  Term list = Term::app(fs::kNil);
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
    Term pair = Term::app(fs::kFactor, {Term::lit(it->first, numeral), Term::lit(it->second, numeral)});
    list = Term::app(fs::kCons, {pair, list});
  }
  return Term::app(fs::kMake, {Term::lit(f.unit, numeral), list});
}

std::optional<Factorization> read_factorization(const Term& t) {
  if (!t.is_app() || t.name() != fs::kMake || t.args().size() != 2 || !t.args()[0].is_lit()) return std::nullopt;
  Factorization out{t.args()[0].value(), {}};
  Term list = t.args()[1];
  while (list.is_app() && list.name() == fs::kCons && list.args().size() == 2) {
    const Term& pair = list.args()[0];
    if (!pair.is_app() || pair.name() != fs::kFactor || pair.args().size() != 2 || !pair.args()[0].is_lit() ||
        !pair.args()[1].is_lit() || pair.args()[1].value() < 0 ||
        pair.args()[1].value() > std::numeric_limits<unsigned>::max()) {
      return std::nullopt;
    }
    out.factors.emplace_back(pair.args()[0].value(), static_cast<unsigned>(pair.args()[1].value()));
    list = list.args()[1];
  }
  if (!list.is_app() || list.name() != fs::kNil || !list.args().empty()) return std::nullopt;
  return out;
}

Integer modpow(const Integer& base, const Integer& exp, const Integer& modulus) {
  if (modulus < 2) raise(Errc::BadModulus, "modulus must be at least 2, got " + to_string(modulus));
  if (exp < 0) raise(Errc::NegativeExponent, "exponent must be non-negative, got " + to_string(exp));
  Integer result = 1;
  Integer b = mod_floor(base, modulus);
  Integer e = exp;
  while (e > 0) {
    if ((e & 1) != 0) result = (result * b) % modulus;
    b = (b * b) % modulus;
    e >>= 1;
  }
  return result % modulus;
}

// ---- polynomial normalization ------------------------------------------------

namespace {

// Exponent vector over a fixed variable order -> nonzero coefficient.
using Sparse = std::map<std::vector<unsigned>, Integer>;

void add_into(Sparse& acc, const std::vector<unsigned>& e, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = acc.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

Sparse multiply(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<unsigned> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_into(out, e, ca * cb);
    }
  }
  return out;
}

struct Expander {
  const semantics::RingSymbols& ring;
  const std::vector<std::string>& order;

  Sparse constant(const Integer& c) const {
    Sparse s;
    add_into(s, std::vector<unsigned>(order.size(), 0), c);
    return s;
  }

  Sparse operator()(const Term& t) const {
    switch (t.kind()) {
      case Term::Kind::Lit: return constant(t.value());
      case Term::Kind::Var: {
        auto it = std::find(order.begin(), order.end(), t.name());
        if (it == order.end()) raise(Errc::NotPolynomial, "variable " + t.name() + " is not in the variable order");
        std::vector<unsigned> e(order.size(), 0);
        e[static_cast<std::size_t>(it - order.begin())] = 1;
        Sparse s;
        s.emplace(std::move(e), 1);
        return s;
      }
      case Term::Kind::App: {
        const std::string& f = t.name();
        if (f == ring.zero && t.args().empty()) return {};
        if (f == ring.one && t.args().empty()) return constant(1);
        if (f == ring.neg && t.args().size() == 1) {
          Sparse s = (*this)(t.args()[0]);
          for (auto& [e, c] : s) c = -c;
          return s;
        }
        if (f == ring.plus && t.args().size() == 2) {
          Sparse s = (*this)(t.args()[0]);
          for (const auto& [e, c] : (*this)(t.args()[1])) add_into(s, e, c);
          return s;
        }
        if (f == ring.times && t.args().size() == 2) return multiply((*this)(t.args()[0]), (*this)(t.args()[1]));
        raise(Errc::NotPolynomial, "symbol " + f + " is not a ring operation");
      }
      case Term::Kind::Quote: raise(Errc::NotPolynomial, "quotation in polynomial position");
    }
    raise(Errc::NotPolynomial, "unexpected term");
  }
};

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
  } else if (t.is_app()) {
    for (const auto& a : t.args()) collect_vars(a, out);
  }
}

unsigned total_degree(const std::vector<unsigned>& e) { return std::accumulate(e.begin(), e.end(), 0U); }

// Graded lexicographic, larger monomials first.
bool grlex_before(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  unsigned da = total_degree(a);
  unsigned db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Term right_nested(const std::string& op, const std::vector<Term>& items) {
  Term acc = items.back();
  for (std::size_t i = items.size() - 1; i-- > 0;) acc = Term::app(op, {items[i], acc});
  return acc;
}

Term structural_deriv(const Term& t, const std::string& x, const Sort& sort, const semantics::RingSymbols& ring) {
  auto zero = [&] { return Term::lit(0, sort); };
  switch (t.kind()) {
    case Term::Kind::Lit: return zero();
    case Term::Kind::Var: return Term::lit(t.name() == x ? 1 : 0, sort);
    case Term::Kind::App: {
      const std::string& f = t.name();
      if ((f == ring.zero || f == ring.one) && t.args().empty()) return zero();
      if (f == ring.neg && t.args().size() == 1) {
        return Term::app(ring.neg, {structural_deriv(t.args()[0], x, sort, ring)});
      }
      if (f == ring.plus && t.args().size() == 2) {
        return Term::app(ring.plus, {structural_deriv(t.args()[0], x, sort, ring),
                                     structural_deriv(t.args()[1], x, sort, ring)});
      }
      if (f == ring.times && t.args().size() == 2) {
        const Term& u = t.args()[0];
        const Term& v = t.args()[1];
        return Term::app(ring.plus, {Term::app(ring.times, {structural_deriv(u, x, sort, ring), v}),
                                     Term::app(ring.times, {u, structural_deriv(v, x, sort, ring)})});
      }
      raise(Errc::NotPolynomial, "symbol " + f + " is not a ring operation");
    }
    case Term::Kind::Quote: raise(Errc::NotPolynomial, "quotation in polynomial position");
  }
  raise(Errc::NotPolynomial, "unexpected term");
}

}  // namespace

Term normalize_poly(const Term& t, const Sort& sort, const semantics::RingSymbols& ring,
                    const std::optional<std::vector<std::string>>& var_order) {
  if (!semantics::is_polynomial_shaped(t, ring, sort, var_order ? &*var_order : nullptr)) {
    raise(Errc::NotPolynomial, "not a polynomial over " + sort.name + ": " + to_string(t));
  }
  std::vector<std::string> order;
  if (var_order) {
    order = *var_order;
  } else {
    collect_vars(t, order);
    std::sort(order.begin(), order.end());
  }
  Sparse poly = Expander{ring, order}(t);
  std::vector<std::pair<std::vector<unsigned>, Integer>> monos(poly.begin(), poly.end());
  std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) { return grlex_before(a.first, b.first); });
  if (monos.empty()) return Term::lit(0, sort);
  std::vector<Term> summands;
  for (const auto& [e, c] : monos) {
    std::vector<Term> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) factors.push_back(Term::var(order[i], sort));
    }
    Term coeff = Term::lit(c, sort);
    summands.push_back(factors.empty() ? coeff : Term::app(ring.times, {coeff, right_nested(ring.times, factors)}));
  }
  return right_nested(ring.plus, summands);
}

Term deriv(const Term& t, const std::string& var, const Sort& sort, const semantics::RingSymbols& ring) {
  if (!semantics::is_polynomial_shaped(t, ring, sort, nullptr)) {
    raise(Errc::NotPolynomial, "not a polynomial over " + sort.name + ": " + to_string(t));
  }
  return normalize_poly(structural_deriv(t, var, sort, ring), sort, ring);
}

Sort ring_sort(const Signature& sig, const semantics::RingSymbols& ring) { return sig.symbol(ring.plus).result; }

// ---- host descriptors ------------------------------------------------------------

namespace {

std::optional<Sort> numeral_sort(const Signature& sig) {
  const Sort* s = sig.numeral_sort();
  return s ? std::optional<Sort>(*s) : std::nullopt;
}

std::vector<meaning::SyntacticClass> numerals(const Signature& sig, std::size_t n) {
  return std::vector<meaning::SyntacticClass>(n, meaning::NumeralClass{numeral_sort(sig), false});
}

Integer fold(const Term& t, const std::string& add, const std::string& mul) {
  if (t.is_lit()) return t.value();
  if (t.is_app() && t.args().size() == 2) {
    if (t.name() == add) return fold(t.args()[0], add, mul) + fold(t.args()[1], add, mul);
    if (t.name() == mul) return fold(t.args()[0], add, mul) * fold(t.args()[1], add, mul);
  }
  raise(Errc::HostError, "cannot evaluate " + to_string(t));
}

HostDescriptor evaluator(std::string id, std::string add, std::string mul) {
  return {std::move(id), 1,
          [add](const Signature& sig) {
            return std::vector<meaning::SyntacticClass>{meaning::ClosedTermClass{sig.symbol(add).result}};
          },
          [add, mul](const Signature& sig, std::span<const Term> a) {
            return Term::lit(fold(a[0], add, mul), sig.symbol(add).result);
          },
          {}};
}

}  // namespace

std::vector<HostDescriptor> builtin_hosts() {
  std::vector<HostDescriptor> out;
  out.push_back({"numeral_add", 2, [](const Signature& sig) { return numerals(sig, 2); },
                 [](const Signature&, std::span<const Term> a) {
                   return Term::lit(a[0].value() + a[1].value(), a[0].sort());
                 },
                 {}});
  out.push_back({"numeral_mul", 2, [](const Signature& sig) { return numerals(sig, 2); },
                 [](const Signature&, std::span<const Term> a) {
                   return Term::lit(a[0].value() * a[1].value(), a[0].sort());
                 },
                 {}});
  out.push_back({"ifactors", 1, [](const Signature& sig) { return numerals(sig, 1); },
                 [](const Signature&, std::span<const Term> a) {
                   return factorization_term(factor_integer(a[0].value()), a[0].sort());
                 },
                 [](Signature& sig) {
                   const Sort* s = sig.numeral_sort();
                   if (s == nullptr) raise(Errc::LiteralNotAdmitted, "ifactors needs a sort with literals");
                   import_factor_sig(sig, *s);
                 }});
  out.push_back({"modpow", 3, [](const Signature& sig) { return numerals(sig, 3); },
                 [](const Signature&, std::span<const Term> a) {
                   return Term::lit(modpow(a[0].value(), a[1].value(), a[2].value()), a[0].sort());
                 },
                 {}});
  out.push_back({"normalize_poly", 1,
                 [](const Signature& sig) {
                   return std::vector<meaning::SyntacticClass>{
                       meaning::PolyTermClass{ring_sort(sig), std::nullopt, {}}};
                 },
                 [](const Signature& sig, std::span<const Term> a) { return normalize_poly(a[0], ring_sort(sig)); },
                 {}});
  out.push_back({"deriv", 2,
                 [](const Signature& sig) {
                   Sort s = ring_sort(sig);
                   return std::vector<meaning::SyntacticClass>{meaning::PolyTermClass{s, std::nullopt, {}},
                                                               meaning::VariableClass{s}};
                 },
                 [](const Signature& sig, std::span<const Term> a) {
                   return deriv(a[0], a[1].name(), ring_sort(sig));
                 },
                 {}});
  out.push_back(evaluator("arith_eval", "Plus", "Times"));
  out.push_back(evaluator("aa_eval_prime", "YYY", "XXX"));
  return out;
}

}  // namespace btg::transformers
