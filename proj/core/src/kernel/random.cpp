#include "btg/kernel/random.hpp"

#include <limits>
#include <map>

namespace btg::kernel {

namespace {

constexpr std::size_t kUninhabited = std::numeric_limits<std::size_t>::max();

std::map<Sort, std::size_t> min_depths(const Signature& sig) {
  std::map<Sort, std::size_t> depth;
  for (const auto& s : sig.sorts()) depth[s] = sig.admits_literals(s) ? 0 : kUninhabited;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& decl : sig.symbols()) {
      if (decl.result == kSyn) continue;
      std::size_t d = 0;
      for (const auto& a : decl.args) {
        auto it = depth.find(a);
        if (it == depth.end() || it->second == kUninhabited) {
          d = kUninhabited;
          break;
        }
        d = std::max(d, it->second + 1);
      }
      if (d < depth[decl.result]) {
        depth[decl.result] = d;
        changed = true;
      }
    }
  }
  return depth;
}

struct Generator {
  const Signature& sig;
  Rng& rng;
  const RandomTermOptions& opts;
  std::map<Sort, std::size_t> depth;

  bool fits(const SymbolDecl& decl, std::size_t budget) const {
    if (decl.arity() == 0) return true;
    if (budget == 0) return false;
    for (const auto& a : decl.args) {
      auto it = depth.find(a);
      if (it == depth.end() || it->second > budget - 1) return false;
    }
    return true;
  }

  Term make(const Sort& sort, std::size_t budget) {
    std::vector<const SymbolDecl*> leaves, nodes;
    for (const auto* decl : sig.constructors_of(sort)) {
      if (!fits(*decl, budget)) continue;
      (decl->arity() == 0 ? leaves : nodes).push_back(decl);
    }
    const bool lit = sig.admits_literals(sort);
    const std::size_t leaf_count = leaves.size() + (lit ? 1 : 0);
    bool take_leaf = nodes.empty() || (leaf_count > 0 && rng.chance(opts.leaf_percent, 100));
    if (take_leaf) {
      std::size_t pick = rng.below(leaf_count);
      if (lit && pick == 0) return Term::lit(rng.range(opts.literal_min, opts.literal_max), sort);
      return Term::app(leaves[pick - (lit ? 1 : 0)]->name);
    }
    const auto* decl = nodes[rng.below(nodes.size())];
    std::vector<Term> args;
    for (const auto& a : decl->args) args.push_back(make(a, budget - 1));
    return Term::app(decl->name, std::move(args));
  }
};

}  // namespace

std::optional<Term> random_closed_term(const Signature& sig, const Sort& sort, Rng& rng,
                                       const RandomTermOptions& opts) {
  Generator gen{sig, rng, opts, min_depths(sig)};
  auto it = gen.depth.find(sort);
  if (it == gen.depth.end() || it->second > opts.max_depth) return std::nullopt;
  return gen.make(sort, opts.max_depth);
}

}  // namespace btg::kernel
