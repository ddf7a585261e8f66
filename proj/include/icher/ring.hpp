#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace icher {

// An ordered set of commuting variable names, fixed at construction.
// Polynomials carry a shared pointer to their ring; mixing rings is an error.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw std::invalid_argument("Ring: duplicate variable '" + names_[i] + "'");
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  int index(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw std::invalid_argument("Ring: unknown variable '" + n + "'");
    return it->second;
  }
  bool has(const std::string& n) const { return index_.count(n) != 0; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

}  // namespace icher
