#ifndef GSS_LAYOUT_HPP
#define GSS_LAYOUT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace gss {

enum class Role { Secret, Shield, Reference };

const char* role_name(Role r);
Role role_from_name(const std::string& name);

struct Subsystem {
  std::string label;
  int player = 0;  // 0 = no player (reference systems)
  Role role = Role::Shield;
  std::size_t dim = 2;
};

// Ordered list of labeled subsystems. The first subsystem is the most
// significant digit of the composite index (big-endian mixed radix).
class SystemLayout {
 public:
  SystemLayout() = default;
  explicit SystemLayout(std::vector<Subsystem> subs);

  std::size_t size() const { return subs_.size(); }
  const Subsystem& operator[](std::size_t i) const { return subs_[i]; }
  const std::vector<Subsystem>& subsystems() const { return subs_; }
  std::size_t total_dim() const { return total_dim_; }

  bool has_label(const std::string& label) const;
  std::size_t position(const std::string& label) const;  // throws on unknown label
  std::vector<std::size_t> positions(const std::vector<std::string>& labels) const;

  std::vector<int> players() const;  // sorted, unique, reference ids excluded
  std::vector<std::string> labels() const;
  std::vector<std::string> secret_labels() const;            // layout order
  std::vector<std::string> secret_labels(int player) const;
  std::vector<std::string> shield_labels(int player) const;
  std::vector<std::string> reference_labels() const;

  SystemLayout concat(const SystemLayout& other) const;  // throws on label collision
  SystemLayout subset(const std::vector<std::size_t>& positions) const;
  SystemLayout permuted(const std::vector<std::size_t>& new_order) const;

  // Free label of the form base, base1, base2, ...
  std::string fresh_label(const std::string& base) const;

  std::vector<std::size_t> dims() const;
  bool operator==(const SystemLayout& other) const;

 private:
  std::vector<Subsystem> subs_;
  std::size_t total_dim_ = 1;
};

}  // namespace gss

#endif
