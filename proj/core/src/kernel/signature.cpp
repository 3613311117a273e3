#include "btg/kernel/signature.hpp"

#include <algorithm>

#include "btg/error.hpp"

namespace btg::kernel {

void Signature::add_sort(const Sort& sort) {
  if (sort == kSyn) raise(Errc::NameClash, "sort Syn is built in");
  if (has_sort(sort)) raise(Errc::NameClash, "duplicate sort " + sort.name);
  sorts_.push_back(sort);
}

void Signature::add_symbol(const SymbolDecl& decl) {
  if (index_.count(decl.name)) raise(Errc::NameClash, "duplicate symbol " + decl.name);
  for (const auto& s : decl.args) {
    if (!has_sort(s)) raise(Errc::UnknownSort, "symbol " + decl.name + " uses undeclared sort " + s.name);
  }
  if (!has_sort(decl.result)) {
    raise(Errc::UnknownSort, "symbol " + decl.name + " uses undeclared sort " + decl.result.name);
  }
  index_.emplace(decl.name, symbols_.size());
  symbols_.push_back(decl);
}

void Signature::admit_literals(const Sort& sort) {
  if (sort == kSyn) raise(Errc::LiteralNotAdmitted, "Syn never admits literals");
  if (!has_sort(sort)) raise(Errc::UnknownSort, "undeclared sort " + sort.name);
  if (!admits_literals(sort)) literal_sorts_.push_back(sort);
}

void Signature::remove_symbol(std::string_view name) {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return;
  symbols_.erase(symbols_.begin() + static_cast<std::ptrdiff_t>(it->second));
  index_.clear();
  for (std::size_t i = 0; i < symbols_.size(); ++i) index_.emplace(symbols_[i].name, i);
}

bool Signature::has_sort(const Sort& sort) const noexcept {
  return sort == kSyn || std::find(sorts_.begin(), sorts_.end(), sort) != sorts_.end();
}

bool Signature::admits_literals(const Sort& sort) const noexcept {
  return std::find(literal_sorts_.begin(), literal_sorts_.end(), sort) != literal_sorts_.end();
}

const SymbolDecl* Signature::find_symbol(std::string_view name) const noexcept {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &symbols_[it->second];
}

const SymbolDecl& Signature::symbol(std::string_view name) const {
  const auto* decl = find_symbol(name);
  if (decl == nullptr) raise(Errc::UnknownSymbol, "unknown symbol " + std::string(name));
  return *decl;
}

std::vector<const SymbolDecl*> Signature::constructors_of(const Sort& sort) const {
  std::vector<const SymbolDecl*> out;
  for (const auto& decl : symbols_) {
    if (decl.result == sort) out.push_back(&decl);
  }
  return out;
}

const Sort* Signature::numeral_sort() const noexcept {
  return literal_sorts_.empty() ? nullptr : &literal_sorts_.front();
}

bool equivalent(const Signature& a, const Signature& b) {
  auto sorted = [](auto v, auto key) {
    std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return v;
  };
  auto sort_key = [](const Sort& s) { return s.name; };
  auto sym_key = [](const SymbolDecl& d) { return d.name; };
  return sorted(a.sorts(), sort_key) == sorted(b.sorts(), sort_key) &&
         sorted(a.symbols(), sym_key) == sorted(b.symbols(), sym_key) &&
         sorted(a.literal_sorts(), sort_key) == sorted(b.literal_sorts(), sort_key);
}

Signature merge_signatures(const Signature& a, const Signature& b) {
  Signature out = a;
  for (const auto& s : b.sorts()) {
    if (!out.has_sort(s)) out.add_sort(s);
  }
  for (const auto& d : b.symbols()) {
    if (const SymbolDecl* mine = out.find_symbol(d.name)) {
      if (!(*mine == d)) raise(Errc::NameClash, "symbol " + d.name + " declared differently when merging signatures");
    } else {
      out.add_symbol(d);
    }
  }
  for (const auto& s : b.literal_sorts()) out.admit_literals(s);
  return out;
}

std::string to_string(const SymbolDecl& decl) {
  std::string out = "(op " + decl.name;
  for (const auto& s : decl.args) out += " " + s.name;
  out += " -> " + decl.result.name + ")";
  return out;
}

}  // namespace btg::kernel
