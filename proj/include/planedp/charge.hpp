#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <string>

#include "planedp/error.hpp"

namespace planedp {

/// Exact charge stored as an integer count of quarter units.
class Quarter {
 public:
  constexpr Quarter() = default;
  constexpr explicit Quarter(std::int64_t quarters) : q_(quarters) {}

  /// num/den with den in {1, 2, 4}.
  static constexpr Quarter frac(std::int64_t num, std::int64_t den) {
    if (den != 1 && den != 2 && den != 4) throw Error(ErrorCode::MalformedInput, "charge denominator must divide 4");
    return Quarter(num * (4 / den));
  }
  static constexpr Quarter whole(std::int64_t n) { return Quarter(4 * n); }

  constexpr std::int64_t quarters() const { return q_; }

  constexpr Quarter operator-() const { return Quarter(-q_); }
  constexpr Quarter& operator+=(Quarter o) {
    q_ += o.q_;
    return *this;
  }
  constexpr Quarter& operator-=(Quarter o) {
    q_ -= o.q_;
    return *this;
  }
  friend constexpr Quarter operator+(Quarter a, Quarter b) { return Quarter(a.q_ + b.q_); }
  friend constexpr Quarter operator-(Quarter a, Quarter b) { return Quarter(a.q_ - b.q_); }
  friend constexpr Quarter operator*(std::int64_t k, Quarter a) { return Quarter(k * a.q_); }
  friend constexpr Quarter operator*(Quarter a, std::int64_t k) { return Quarter(k * a.q_); }
  friend constexpr auto operator<=>(Quarter, Quarter) = default;

  /// "<q>/4" as used in ledger reports.
  std::string str() const { return std::to_string(q_) + "/4"; }

  /// Reduced fraction, e.g. "5/4", "-1/2", "3".
  std::string reduced() const {
    std::int64_t g = std::gcd(std::llabs(q_), std::int64_t{4});
    if (q_ == 0) return "0";
    std::int64_t num = q_ / g, den = 4 / g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  std::int64_t q_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Quarter q) { return os << q.reduced(); }

}  // namespace planedp
