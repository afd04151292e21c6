#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "starq/polynomial.hpp"

namespace starq {

// Truncated formal series in h with polynomial coefficients; all
// arithmetic drops terms beyond h^order.
class HSeries {
 public:
  HSeries() = default;
  explicit HSeries(int order) : coeffs_(static_cast<std::size_t>(order + 1)) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
  }

  static HSeries of(const Polynomial& p, int order) {
    HSeries s(order);
    s.coeffs_[0] = p;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Polynomial& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Polynomial& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  HSeries operator+(const HSeries& o) const {
    check(o);
    HSeries out(order());
    for (int k = 0; k <= order(); ++k) out[k] = (*this)[k] + o[k];
    return out;
  }

  HSeries operator-(const HSeries& o) const {
    check(o);
    HSeries out(order());
    for (int k = 0; k <= order(); ++k) out[k] = (*this)[k] - o[k];
    return out;
  }

  HSeries& operator+=(const HSeries& o) { return *this = *this + o; }
  HSeries& operator-=(const HSeries& o) { return *this = *this - o; }

  bool operator==(const HSeries& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const HSeries& o) const { return !(*this == o); }

  std::string str(const VarSet& vars) const {
    std::ostringstream os;
    for (int k = 0; k <= order(); ++k) {
      if (k) os << "\n";
      os << "h^" << k << ": " << (*this)[k].str(vars);
    }
    return os.str();
  }

 private:
  void check(const HSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("truncation order mismatch");
  }

  std::vector<Polynomial> coeffs_;
};

}  // namespace starq
