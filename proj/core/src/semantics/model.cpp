#include "btg/semantics/model.hpp"

#include <algorithm>

#include "btg/error.hpp"

namespace btg::semantics {

std::string to_string(const Domain& d) {
  struct Visitor {
    std::string operator()(const IntDomain&) const { return "int"; }
    std::string operator()(const ZpDomain& z) const { return "(zp " + z.p.str() + ")"; }
    std::string operator()(const PolyDomain& p) const {
      std::string out = "(poly";
      for (const auto& v : p.vars) out += " " + v;
      return out + ")";
    }
    std::string operator()(const SynDomain&) const { return "syn"; }
  };
  return std::visit(Visitor{}, d);
}

bool is_finite(const Domain& d) { return std::holds_alternative<ZpDomain>(d); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

[[noreturn]] void type_error(const std::string& prim) {
  raise(Errc::InvalidModel, "primitive " + prim + " applied to values of mismatched domains");
}

Value add(const Value& a, const Value& b) {
  if (const auto* x = std::get_if<Integer>(&a)) {
    if (const auto* y = std::get_if<Integer>(&b)) return Integer(*x + *y);
  } else if (const auto* x = std::get_if<Residue>(&a)) {
    if (const auto* y = std::get_if<Residue>(&b); y && y->modulus == x->modulus) {
      Integer s = x->value + y->value;
      if (s >= x->modulus) s -= x->modulus;
      return Residue{s, x->modulus};
    }
  } else if (const auto* x = std::get_if<Poly>(&a)) {
    if (const auto* y = std::get_if<Poly>(&b)) return *x + *y;
  }
  type_error("add");
}

Value mul(const Value& a, const Value& b) {
  if (const auto* x = std::get_if<Integer>(&a)) {
    if (const auto* y = std::get_if<Integer>(&b)) return Integer(*x * *y);
  } else if (const auto* x = std::get_if<Residue>(&a)) {
    if (const auto* y = std::get_if<Residue>(&b); y && y->modulus == x->modulus) {
      return Residue{Integer((x->value * y->value) % x->modulus), x->modulus};
    }
  } else if (const auto* x = std::get_if<Poly>(&a)) {
    if (const auto* y = std::get_if<Poly>(&b)) return *x * *y;
  }
  type_error("mul");
}

Value neg(const Value& a) {
  if (const auto* x = std::get_if<Integer>(&a)) return Integer(-*x);
  if (const auto* x = std::get_if<Residue>(&a)) {
    return Residue{x->value == 0 ? Integer(0) : Integer(x->modulus - x->value), x->modulus};
  }
  if (const auto* x = std::get_if<Poly>(&a)) return -*x;
  type_error("neg");
}

Value constant(const Domain& d, int c, const std::string& prim) {
  if (std::holds_alternative<IntDomain>(d)) return Integer(c);
  if (const auto* z = std::get_if<ZpDomain>(&d)) return Residue{mod_floor(c, z->p), z->p};
  if (std::holds_alternative<PolyDomain>(d)) return Poly::constant(c);
  raise(Errc::InvalidModel, "primitive " + prim + " has no value in the Syn carrier");
}

Value power(const Value& a, const Value& b) {
  const auto* x = std::get_if<Integer>(&a);
  const auto* y = std::get_if<Integer>(&b);
  if (!x || !y) type_error("pow");
  // Total: negative exponents map to 0, oversized exponents are rejected.
  if (*y < 0) return Integer(0);
  if (*y > 1u << 20) raise(Errc::InvalidModel, "pow exponent too large");
  return Integer(boost::multiprecision::pow(*x, static_cast<unsigned>(*y)));
}

struct Primitive {
  std::size_t arity;
  // Built against the result carrier.
  std::function<Operation(const Domain&)> make;
};

const std::map<std::string, Primitive>& primitives() {
  static const std::map<std::string, Primitive> table = {
      {"zero", {0, [](const Domain& d) -> Operation {
                  Value v = constant(d, 0, "zero");
                  return [v](std::span<const Value>) { return v; };
                }}},
      {"one", {0, [](const Domain& d) -> Operation {
                 Value v = constant(d, 1, "one");
                 return [v](std::span<const Value>) { return v; };
               }}},
      {"add", {2, [](const Domain&) -> Operation { return [](std::span<const Value> a) { return add(a[0], a[1]); }; }}},
      {"mul", {2, [](const Domain&) -> Operation { return [](std::span<const Value> a) { return mul(a[0], a[1]); }; }}},
      {"sub", {2, [](const Domain&) -> Operation {
                 return [](std::span<const Value> a) { return add(a[0], neg(a[1])); };
               }}},
      {"neg", {1, [](const Domain&) -> Operation { return [](std::span<const Value> a) { return neg(a[0]); }; }}},
      {"id", {1, [](const Domain&) -> Operation { return [](std::span<const Value> a) { return a[0]; }; }}},
      {"pow", {2, [](const Domain& d) -> Operation {
                 if (!std::holds_alternative<IntDomain>(d)) raise(Errc::InvalidModel, "pow needs an int carrier");
                 return [](std::span<const Value> a) { return power(a[0], a[1]); };
               }}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& primitive_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, p] : primitives()) out.push_back(name);
    return out;
  }();
  return names;
}

Model::Model(std::string name, std::string theory, Signature sig, std::map<Sort, Domain> carriers,
             std::map<std::string, std::string> interps)
    : name_(std::move(name)),
      theory_(std::move(theory)),
      sig_(std::move(sig)),
      carriers_(std::move(carriers)),
      interp_names_(std::move(interps)) {
  auto invalid = [&](const std::string& msg) { raise(Errc::InvalidModel, "model " + name_ + ": " + msg); };
  for (const auto& [sort, dom] : carriers_) {
    if (!sig_.has_sort(sort)) invalid("carrier for undeclared sort " + sort.name);
    if (sort == kernel::kSyn && !std::holds_alternative<SynDomain>(dom)) invalid("Syn must be carried by syn");
    if (const auto* z = std::get_if<ZpDomain>(&dom); z && !is_prime(z->p)) {
      invalid("modulus " + z->p.str() + " is not prime");
    }
  }
  for (const auto& sort : sig_.sorts()) {
    if (!carriers_.count(sort)) invalid("no carrier for sort " + sort.name);
  }
  carriers_.emplace(kernel::kSyn, SynDomain{});

  for (const auto& [symbol, prim] : interp_names_) {
    const auto* decl = sig_.find_symbol(symbol);
    if (decl == nullptr) invalid("interpretation of unknown symbol " + symbol);
    auto it = primitives().find(prim);
    if (it == primitives().end()) invalid("unknown primitive " + prim);
    if (it->second.arity != decl->arity()) {
      invalid(symbol + " has arity " + std::to_string(decl->arity()) + " but " + prim + " has arity " +
              std::to_string(it->second.arity));
    }
    const Domain& result = carriers_.at(decl->result);
    for (const auto& a : decl->args) {
      const Domain& arg = carriers_.at(a);
      if (arg != result) invalid(symbol + " mixes carriers " + to_string(arg) + " and " + to_string(result));
    }
    interps_.emplace(symbol, Interpretation{prim, decl->arity(), it->second.make(result)});
  }
  for (const auto& decl : sig_.symbols()) {
    if (decl.result == kernel::kSyn) continue;
    if (!interps_.count(decl.name)) invalid("symbol " + decl.name + " is not interpreted");
  }
}

const Domain* Model::carrier(const Sort& sort) const noexcept {
  auto it = carriers_.find(sort);
  return it == carriers_.end() ? nullptr : &it->second;
}

const Interpretation* Model::interpretation(const std::string& symbol) const noexcept {
  auto it = interps_.find(symbol);
  return it == interps_.end() ? nullptr : &it->second;
}

Value Model::literal(const Integer& value, const Sort& sort) const {
  const Domain* d = carrier(sort);
  if (d == nullptr) raise(Errc::InvalidModel, "model " + name_ + " has no carrier for " + sort.name);
  if (std::holds_alternative<IntDomain>(*d)) return value;
  if (const auto* z = std::get_if<ZpDomain>(d)) return Residue{mod_floor(value, z->p), z->p};
  if (std::holds_alternative<PolyDomain>(*d)) return Poly::constant(value);
  raise(Errc::LiteralNotAdmitted, "literal in the Syn carrier");
}

Model Model::renamed(const kernel::Renaming& r, std::string theory, Signature sig) const {
  std::map<Sort, Domain> carriers;
  for (const auto& [sort, dom] : carriers_) {
    if (sort == kernel::kSyn) continue;
    carriers.emplace(r.sort(sort), dom);
  }
  std::map<std::string, std::string> interps;
  for (const auto& [symbol, prim] : interp_names_) interps.emplace(r.symbol(symbol), prim);
  return Model(name_, std::move(theory), std::move(sig), std::move(carriers), std::move(interps));
}

Model Model::rebased(std::string theory, Signature sig) const {
  std::map<Sort, Domain> carriers = carriers_;
  carriers.erase(kernel::kSyn);
  return Model(name_, std::move(theory), std::move(sig), std::move(carriers), interp_names_);
}

}  // namespace btg::semantics
