#include "btg/transformers/host.hpp"

#include <deque>
#include <mutex>

#include "btg/error.hpp"
#include "btg/transformers/builtins.hpp"

namespace btg::transformers {

namespace {

struct HostTable {
  std::mutex mu;
  // Deque keeps descriptor addresses stable across registrations.
  std::deque<HostDescriptor> entries;

  HostTable() {
    for (auto& d : builtin_hosts()) entries.push_back(std::move(d));
  }
};

HostTable& table() {
  static HostTable t;
  return t;
}

}  // namespace

void register_host(HostDescriptor d) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  for (const auto& e : t.entries) {
    if (e.id == d.id) raise(Errc::NameClash, "host function " + d.id + " already registered");
  }
  t.entries.push_back(std::move(d));
}

const HostDescriptor* find_host(std::string_view id) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  for (const auto& e : t.entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<std::string> host_ids() {
  auto& t = table();
  std::lock_guard lock(t.mu);
  std::vector<std::string> out;
  for (const auto& e : t.entries) out.push_back(e.id);
  return out;
}

}  // namespace btg::transformers
