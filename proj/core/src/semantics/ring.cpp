#include "btg/semantics/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "btg/error.hpp"
#include "btg/semantics/model.hpp"

namespace btg::semantics {

using kernel::Term;

RingSymbols RingSymbols::renamed(const kernel::Renaming& r) const {
  auto map = [&](const std::string& s) {
    auto it = r.symbols.find(s);
    return it == r.symbols.end() ? s : it->second;
  };
  return RingSymbols{map(plus), map(times), map(neg), map(zero), map(one)};
}

bool is_polynomial_shaped(const Term& t, const RingSymbols& ring, const std::optional<kernel::Sort>& sort,
                          const std::vector<std::string>* vars) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (sort && t.sort() != *sort) return false;
      return vars == nullptr || std::find(vars->begin(), vars->end(), t.name()) != vars->end();
    case Term::Kind::Lit: return !sort || t.sort() == *sort;
    case Term::Kind::Quote: return false;
    case Term::Kind::App: {
      const auto& f = t.name();
      const std::size_t n = t.args().size();
      bool shape = ((f == ring.plus || f == ring.times) && n == 2) || (f == ring.neg && n == 1) ||
                   ((f == ring.zero || f == ring.one) && n == 0);
      if (!shape) return false;
      return std::all_of(t.args().begin(), t.args().end(),
                         [&](const Term& a) { return is_polynomial_shaped(a, ring, sort, vars); });
    }
  }
  return false;
}

Poly poly_denotation(const Term& t, const RingSymbols& ring) {
  switch (t.kind()) {
    case Term::Kind::Var: return Poly::variable(t.name());
    case Term::Kind::Lit: return Poly::constant(t.value());
    case Term::Kind::Quote: break;
    case Term::Kind::App: {
      const auto& f = t.name();
      const auto args = t.args();
      if (f == ring.plus && args.size() == 2) return poly_denotation(args[0], ring) + poly_denotation(args[1], ring);
      if (f == ring.times && args.size() == 2) return poly_denotation(args[0], ring) * poly_denotation(args[1], ring);
      if (f == ring.neg && args.size() == 1) return -poly_denotation(args[0], ring);
      if (f == ring.zero && args.empty()) return Poly{};
      if (f == ring.one && args.empty()) return Poly::constant(1);
      break;
    }
  }
  raise(Errc::NotPolynomial, kernel::to_string(t) + " is not polynomial-shaped");
}

namespace {

// Straight-line program over Z_p; shared subterms are computed once.
struct Program {
  enum class Op : std::uint8_t { Const, Var, Add, Mul, Neg };
  struct Instr {
    Op op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint64_t constant = 0;
  };
  std::vector<Instr> code;
  std::unordered_map<Term, std::uint32_t, kernel::TermHash> memo;
};

std::uint32_t compile(Program& prog, const Term& t, const RingSymbols& ring,
                      const std::vector<std::string>& vars, const Integer& p) {
  if (auto it = prog.memo.find(t); it != prog.memo.end()) return it->second;
  Program::Instr in{};
  switch (t.kind()) {
    case Term::Kind::Var:
      in.op = Program::Op::Var;
      in.a = static_cast<std::uint32_t>(std::find(vars.begin(), vars.end(), t.name()) - vars.begin());
      break;
    case Term::Kind::Lit:
      in.op = Program::Op::Const;
      in.constant = static_cast<std::uint64_t>(mod_floor(t.value(), p));
      break;
    default: {
      const auto& f = t.name();
      if (f == ring.zero || f == ring.one) {
        in.op = Program::Op::Const;
        in.constant = f == ring.one ? 1 % static_cast<std::uint64_t>(p) : 0;
      } else if (f == ring.neg) {
        in.op = Program::Op::Neg;
        in.a = compile(prog, t.args()[0], ring, vars, p);
      } else {
        in.op = f == ring.plus ? Program::Op::Add : Program::Op::Mul;
        in.a = compile(prog, t.args()[0], ring, vars, p);
        in.b = compile(prog, t.args()[1], ring, vars, p);
      }
    }
  }
  auto reg = static_cast<std::uint32_t>(prog.code.size());
  prog.code.push_back(in);
  prog.memo.emplace(t, reg);
  return reg;
}

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Runs the program with every variable but the last fixed to `point`; each
// register holds a univariate polynomial over Z_p in the last variable.
// Two such polynomials of degree < p agree on all of Z_p iff their
// coefficient vectors agree.
void run(const Program& prog, const std::vector<std::uint64_t>& point, std::size_t free_var, std::uint64_t p,
         std::vector<Coeffs>& regs) {
  regs.resize(prog.code.size());
  for (std::size_t r = 0; r < prog.code.size(); ++r) {
    const auto& in = prog.code[r];
    Coeffs& out = regs[r];
    out.clear();
    switch (in.op) {
      case Program::Op::Const: out.push_back(in.constant); break;
      case Program::Op::Var:
        if (in.a == free_var) {
          out = {0, 1 % p};
        } else {
          out.push_back(point[in.a]);
        }
        break;
      case Program::Op::Neg:
        for (auto c : regs[in.a]) out.push_back(c == 0 ? 0 : p - c);
        break;
      case Program::Op::Add: {
        const Coeffs& x = regs[in.a];
        const Coeffs& y = regs[in.b];
        out.assign(std::max(x.size(), y.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
        for (std::size_t i = 0; i < y.size(); ++i) {
          std::uint64_t s = out[i] + y[i];
          out[i] = s >= p ? s - p : s;
        }
        break;
      }
      case Program::Op::Mul: {
        const Coeffs& x = regs[in.a];
        const Coeffs& y = regs[in.b];
        if (x.empty() || y.empty()) break;
        out.assign(x.size() + y.size() - 1, 0);
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (x[i] == 0) continue;
          for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = (out[i + j] + x[i] * y[j]) % p;
        }
        break;
      }
    }
    trim(out);
  }
}

}  // namespace

bool poly_equal_on_zp(const kernel::Signature& sig, const Term& t1, const Term& t2,
                      const std::vector<std::string>& vars, const Integer& p, const RingSymbols& ring) {
  if (!is_prime(p)) raise(Errc::BadModulus, p.str() + " is not prime");
  if (p >= (Integer(1) << 31)) raise(Errc::BadModulus, "modulus too large for exhaustive checking");
  for (const Term* t : {&t1, &t2}) {
    kernel::well_sorted(sig, *t);
    if (!is_polynomial_shaped(*t, ring, std::nullopt, &vars)) {
      raise(Errc::NotPolynomial, kernel::to_string(*t) + " is not a polynomial in the listed variables");
    }
    const Poly poly = poly_denotation(*t, ring);
    for (const auto& v : vars) {
      if (poly.degree_in(v) >= p) {
        raise(Errc::DegreeTooHigh, "degree " + std::to_string(poly.degree_in(v)) + " in " + v + " is not below " +
                                       p.str());
      }
    }
  }
  const auto prime = static_cast<std::uint64_t>(p);

  // Variables that occur in neither term do not affect agreement.
  std::vector<std::string> used;
  for (const auto& v : vars) {
    bool occurs = false;
    for (const Term* t : {&t1, &t2}) {
      for (const auto& fv : kernel::free_vars(*t)) occurs = occurs || fv.first == v;
    }
    if (occurs) used.push_back(v);
  }

  Program prog;
  const std::uint32_t r1 = compile(prog, t1, ring, used, p);
  const std::uint32_t r2 = compile(prog, t2, ring, used, p);
  if (r1 == r2) return true;

  const std::size_t free_var = used.empty() ? 0 : used.size() - 1;
  const std::size_t outer = used.empty() ? 0 : used.size() - 1;
  std::vector<std::uint64_t> point(used.size(), 0);
  std::vector<Coeffs> regs;
  while (true) {
    run(prog, point, used.empty() ? SIZE_MAX : free_var, prime, regs);
    if (regs[r1] != regs[r2]) return false;
    std::size_t pos = outer;
    while (pos > 0 && ++point[pos - 1] == prime) point[--pos] = 0;
    if (pos == 0) break;
  }
  return true;
}

}  // namespace btg::semantics
