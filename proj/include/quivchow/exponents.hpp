#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>

#include "quivchow/rational.hpp"

namespace quivchow {

/// Exponent vector of a monomial with inline storage. All monomials of one
/// ring share the same variable count.
class Exponents {
 public:
  static constexpr std::size_t kMaxVariables = 32;

  Exponents() = default;
  explicit Exponents(std::size_t n) : size_(static_cast<std::uint8_t>(n)) {
    if (n > kMaxVariables) throw InputError("too many variables for a monomial");
  }

  std::size_t size() const { return size_; }
  std::uint8_t operator[](std::size_t i) const { return data_[i]; }
  std::uint8_t& operator[](std::size_t i) { return data_[i]; }

  std::span<const std::uint8_t> view() const { return {data_.data(), size_}; }
  std::span<std::uint8_t> view() { return {data_.data(), size_}; }

  int total_degree() const {
    int s = 0;
    for (std::size_t i = 0; i < size_; ++i) s += data_[i];
    return s;
  }

  int weighted_degree(std::span<const int> weights) const {
    int s = 0;
    for (std::size_t i = 0; i < size_; ++i) s += data_[i] * weights[i];
    return s;
  }

  bool is_one() const {
    return std::all_of(data_.begin(), data_.begin() + size_, [](auto e) { return e == 0; });
  }

  Exponents& operator+=(const Exponents& other) {
    for (std::size_t i = 0; i < size_; ++i) {
      const unsigned s = data_[i] + other.data_[i];
      if (s > 255) throw InputError("monomial exponent overflow");
      data_[i] = static_cast<std::uint8_t>(s);
    }
    return *this;
  }
  friend Exponents operator+(Exponents a, const Exponents& b) { return a += b; }

  /// Componentwise a >= b.
  bool divisible_by(const Exponents& b) const {
    for (std::size_t i = 0; i < size_; ++i)
      if (data_[i] < b.data_[i]) return false;
    return true;
  }

  friend bool operator==(const Exponents& a, const Exponents& b) {
    return a.size_ == b.size_ && std::memcmp(a.data_.data(), b.data_.data(), a.size_) == 0;
  }
  /// Lexicographic, first variable most significant.
  friend bool operator<(const Exponents& a, const Exponents& b) {
    return std::lexicographical_compare(a.data_.begin(), a.data_.begin() + a.size_,
                                        b.data_.begin(), b.data_.begin() + b.size_);
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < size_; ++i) h = (h ^ data_[i]) * 1099511628211ull;
    return h;
  }

 private:
  std::array<std::uint8_t, kMaxVariables> data_{};
  std::uint8_t size_ = 0;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const { return e.hash(); }
};

}  // namespace quivchow
