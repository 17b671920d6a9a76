#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mahonian/polyring.hpp"

namespace mahonian {

namespace {

constexpr std::string_view kDefaultNames[] = {
    "a", "a1", "a2", "b", "b1", "b2", "d", "la",
    "q", "u1", "u2", "u3", "u4", "x", "z",
};

}  // namespace

struct VarRegistry::Impl {
  mutable std::shared_mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, std::uint32_t> index;
};

VarRegistry::VarRegistry() : impl_(new Impl) {
  for (auto name : kDefaultNames) {
    intern(name);
  }
}

VarRegistry& VarRegistry::instance() {
  // Leaked on purpose: VarId::name() views must outlive static destructors.
  static VarRegistry* registry = new VarRegistry;
  return *registry;
}

VarId VarRegistry::intern(std::string_view name) {
  if (name.empty()) {
    throw std::invalid_argument("empty variable name");
  }
  {
    std::shared_lock lock(impl_->mutex);
    if (auto it = impl_->index.find(std::string(name)); it != impl_->index.end()) {
      return VarId(it->second);
    }
  }
  std::unique_lock lock(impl_->mutex);
  auto [it, inserted] = impl_->index.try_emplace(
      std::string(name), static_cast<std::uint32_t>(impl_->names.size()));
  if (inserted) {
    impl_->names.emplace_back(name);
  }
  return VarId(it->second);
}

VarId VarRegistry::lookup(std::string_view name) const {
  std::shared_lock lock(impl_->mutex);
  auto it = impl_->index.find(std::string(name));
  if (it == impl_->index.end()) {
    throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  }
  return VarId(it->second);
}

bool VarRegistry::contains(std::string_view name) const {
  std::shared_lock lock(impl_->mutex);
  return impl_->index.count(std::string(name)) != 0;
}

std::string_view VarRegistry::name(VarId id) const {
  std::shared_lock lock(impl_->mutex);
  if (id.index() >= impl_->names.size()) {
    throw std::out_of_range("variable id out of range");
  }
  return impl_->names[id.index()];
}

std::size_t VarRegistry::size() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->names.size();
}

std::string_view VarId::name() const { return VarRegistry::instance().name(*this); }

VarId var(std::string_view name) { return VarRegistry::instance().intern(name); }

}  // namespace mahonian
