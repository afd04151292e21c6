#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starq/monomial.hpp"

namespace starq {

// Ordered, finite set of variable names declared up front. The declared
// order is the basis order every normalization in the engine refers to.
class VarSet {
 public:
  VarSet() = default;

  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (static_cast<int>(names_.size()) > kMaxVars)
      throw std::invalid_argument("too many variables (cap " + std::to_string(kMaxVars) + ")");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
  }

  // x1, x2, ..., xn
  static VarSet numbered(int n, const std::string& prefix = "x") {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return VarSet(std::move(names));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  bool operator==(const VarSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

}  // namespace starq
