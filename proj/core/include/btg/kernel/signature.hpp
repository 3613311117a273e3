#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace btg::kernel {

struct Sort {
  std::string name;

  friend auto operator<=>(const Sort&, const Sort&) = default;
};

/// Sort of reified syntax. Present in every signature without declaration.
inline const Sort kSyn{"Syn"};

struct SymbolDecl {
  std::string name;
  std::vector<Sort> args;
  Sort result;

  std::size_t arity() const noexcept { return args.size(); }
  friend bool operator==(const SymbolDecl&, const SymbolDecl&) = default;
};

/// Many-sorted first-order signature. Declaration order is kept because term
/// enumeration is ordered by it.
class Signature {
 public:
  void add_sort(const Sort& sort);
  void add_symbol(const SymbolDecl& decl);
  void admit_literals(const Sort& sort);

  /// Removes a symbol; no-op when absent.
  void remove_symbol(std::string_view name);

  bool has_sort(const Sort& sort) const noexcept;
  bool has_symbol(std::string_view name) const noexcept { return find_symbol(name) != nullptr; }
  bool admits_literals(const Sort& sort) const noexcept;

  const SymbolDecl* find_symbol(std::string_view name) const noexcept;
  /// Throws Error(UnknownSymbol).
  const SymbolDecl& symbol(std::string_view name) const;

  const std::vector<Sort>& sorts() const noexcept { return sorts_; }
  const std::vector<SymbolDecl>& symbols() const noexcept { return symbols_; }
  const std::vector<Sort>& literal_sorts() const noexcept { return literal_sorts_; }

  /// Symbols whose result sort is `sort`, in declaration order.
  std::vector<const SymbolDecl*> constructors_of(const Sort& sort) const;

  /// First literal-admitting sort, if any.
  const Sort* numeral_sort() const noexcept;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.sorts_ == b.sorts_ && a.symbols_ == b.symbols_ && a.literal_sorts_ == b.literal_sorts_;
  }

 private:
  std::vector<Sort> sorts_;
  std::vector<SymbolDecl> symbols_;
  std::vector<Sort> literal_sorts_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Same sorts, symbols and literal sorts irrespective of declaration order.
bool equivalent(const Signature& a, const Signature& b);

/// `a` followed by whatever of `b` it lacks. Throws NameClash when a symbol is
/// declared differently in both.
Signature merge_signatures(const Signature& a, const Signature& b);

std::string to_string(const SymbolDecl& decl);

}  // namespace btg::kernel
