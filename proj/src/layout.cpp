#include "gss/layout.hpp"

#include <algorithm>
#include <set>

#include "gss/linalg.hpp"

namespace gss {

const char* role_name(Role r) {
  switch (r) {
    case Role::Secret: return "secret";
    case Role::Shield: return "shield";
    case Role::Reference: return "reference";
  }
  return "?";
}

Role role_from_name(const std::string& name) {
  if (name == "secret") return Role::Secret;
  if (name == "shield") return Role::Shield;
  if (name == "reference") return Role::Reference;
  throw Error("unknown subsystem role: " + name);
}

SystemLayout::SystemLayout(std::vector<Subsystem> subs) : subs_(std::move(subs)) {
  std::set<std::string> seen;
  for (const auto& s : subs_) {
    if (s.dim < 1) throw Error("subsystem " + s.label + ": dimension must be >= 1");
    if (s.label.empty()) throw Error("subsystem with empty label");
    if (!seen.insert(s.label).second) throw Error("duplicate subsystem label: " + s.label);
    total_dim_ *= s.dim;
  }
}

bool SystemLayout::has_label(const std::string& label) const {
  return std::any_of(subs_.begin(), subs_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t SystemLayout::position(const std::string& label) const {
  for (std::size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i].label == label) return i;
  throw Error("unknown subsystem label: " + label);
}

std::vector<std::size_t> SystemLayout::positions(const std::vector<std::string>& labels) const {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  std::set<std::size_t> seen;
  for (const auto& l : labels) {
    const std::size_t p = position(l);
    if (!seen.insert(p).second) throw Error("repeated subsystem label: " + l);
    out.push_back(p);
  }
  return out;
}

std::vector<int> SystemLayout::players() const {
  std::set<int> ids;
  for (const auto& s : subs_)
    if (s.role != Role::Reference) ids.insert(s.player);
  return {ids.begin(), ids.end()};
}

std::vector<std::string> SystemLayout::labels() const {
  std::vector<std::string> out;
  for (const auto& s : subs_) out.push_back(s.label);
  return out;
}

std::vector<std::string> SystemLayout::secret_labels() const {
  std::vector<std::string> out;
  for (const auto& s : subs_)
    if (s.role == Role::Secret) out.push_back(s.label);
  return out;
}

std::vector<std::string> SystemLayout::secret_labels(int player) const {
  std::vector<std::string> out;
  for (const auto& s : subs_)
    if (s.role == Role::Secret && s.player == player) out.push_back(s.label);
  return out;
}

std::vector<std::string> SystemLayout::shield_labels(int player) const {
  std::vector<std::string> out;
  for (const auto& s : subs_)
    if (s.role == Role::Shield && s.player == player) out.push_back(s.label);
  return out;
}

std::vector<std::string> SystemLayout::reference_labels() const {
  std::vector<std::string> out;
  for (const auto& s : subs_)
    if (s.role == Role::Reference) out.push_back(s.label);
  return out;
}

SystemLayout SystemLayout::concat(const SystemLayout& other) const {
  std::vector<Subsystem> subs = subs_;
  for (const auto& s : other.subs_) {
    if (has_label(s.label)) throw Error("label collision in tensor product: " + s.label);
    subs.push_back(s);
  }
  return SystemLayout(subs);
}

SystemLayout SystemLayout::subset(const std::vector<std::size_t>& positions) const {
  std::vector<Subsystem> subs;
  subs.reserve(positions.size());
  for (std::size_t p : positions) {
    if (p >= subs_.size()) throw Error("subsystem position out of range");
    subs.push_back(subs_[p]);
  }
  return SystemLayout(subs);
}

SystemLayout SystemLayout::permuted(const std::vector<std::size_t>& new_order) const {
  if (new_order.size() != subs_.size()) throw Error("permutation has wrong length");
  std::vector<bool> seen(subs_.size(), false);
  for (std::size_t p : new_order) {
    if (p >= subs_.size() || seen[p]) throw Error("not a permutation of subsystems");
    seen[p] = true;
  }
  return subset(new_order);
}

std::string SystemLayout::fresh_label(const std::string& base) const {
  if (!has_label(base)) return base;
  for (int i = 1;; ++i) {
    const std::string candidate = base + std::to_string(i);
    if (!has_label(candidate)) return candidate;
  }
}

std::vector<std::size_t> SystemLayout::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : subs_) out.push_back(s.dim);
  return out;
}

bool SystemLayout::operator==(const SystemLayout& other) const {
  if (subs_.size() != other.subs_.size()) return false;
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    const auto& a = subs_[i];
    const auto& b = other.subs_[i];
    if (a.label != b.label || a.player != b.player || a.role != b.role || a.dim != b.dim)
      return false;
  }
  return true;
}

}  // namespace gss
