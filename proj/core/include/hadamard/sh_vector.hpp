#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hadamard/errors.hpp"

namespace hadamard {

/// Largest vector/matrix order the core types support.
inline constexpr int kMaxOrder = 128;

/// All-ones vector of a given order. Invariant under any permutation.
struct UnityVector {
  int order;

  friend bool operator==(const UnityVector&, const UnityVector&) = default;
};

/// Even-order ±1 vector with equally many +1 and -1 entries, bit-packed:
/// a set bit means the entry is -1. At most two 64-bit words (order <= 128);
/// bit j of the packed value is entry j.
class BalancedVector {
 public:
  BalancedVector(int order, std::array<std::uint64_t, 2> bits)
      : order_(order), bits_(bits) {
    validate();
  }

  /// Parses a "+-" string, e.g. "++--".
  static BalancedVector from_string(std::string_view pm) {
    return BalancedVector(static_cast<int>(pm.size()), pack(pm));
  }

  int order() const { return order_; }

  /// True iff entry i is -1.
  bool bit(int i) const { return (bits_[i >> 6] >> (i & 63)) & 1u; }

  /// Entry value, +1 or -1.
  int entry(int i) const { return bit(i) ? -1 : 1; }

  const std::array<std::uint64_t, 2>& bits() const { return bits_; }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(order_), '+');
    for (int i = 0; i < order_; ++i)
      if (bit(i)) s[static_cast<std::size_t>(i)] = '-';
    return s;
  }

  friend bool operator==(const BalancedVector&, const BalancedVector&) = default;

  /// Orders by packed-bit value (low position = low bit), then order.
  friend std::strong_ordering operator<=>(const BalancedVector& a,
                                          const BalancedVector& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    if (auto c = a.bits_[1] <=> b.bits_[1]; c != 0) return c;
    return a.bits_[0] <=> b.bits_[0];
  }

 protected:
  static std::array<std::uint64_t, 2> pack(std::string_view pm) {
    if (pm.size() == 0 || pm.size() > kMaxOrder)
      throw DimensionError("vector length out of range");
    std::array<std::uint64_t, 2> w{0, 0};
    for (std::size_t i = 0; i < pm.size(); ++i) {
      if (pm[i] == '-')
        w[i >> 6] |= std::uint64_t{1} << (i & 63);
      else if (pm[i] != '+')
        throw PreconditionError("sign string must contain only '+' and '-'");
    }
    return w;
  }

  void validate() const {
    if (order_ <= 0 || order_ > kMaxOrder)
      throw DimensionError("order must be in [1, " +
                           std::to_string(kMaxOrder) + "]");
    if (order_ % 2 != 0) throw PreconditionError("order must be even");
    std::uint64_t mask_hi =
        order_ > 64 ? (order_ == 128 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << (order_ - 64)) - 1)
                    : 0;
    std::uint64_t mask_lo =
        order_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
    if ((bits_[0] & ~mask_lo) || (bits_[1] & ~mask_hi))
      throw PreconditionError("bits set beyond vector order");
    int minus = std::popcount(bits_[0]) + std::popcount(bits_[1]);
    if (minus * 2 != order_)
      throw PreconditionError("vector is not balanced: " +
                              std::to_string(minus) + " of " +
                              std::to_string(order_) + " entries are -1");
  }

  int order_;
  std::array<std::uint64_t, 2> bits_;
};

/// Balanced ±1 vector whose order is a multiple of 4: the column-candidate
/// unit of seminormalized Hadamard construction.
class ShVector : public BalancedVector {
 public:
  ShVector(int order, std::array<std::uint64_t, 2> bits)
      : BalancedVector(order, bits) {
    if (order % 4 != 0) throw PreconditionError("SH vector order must be 4k");
  }

  explicit ShVector(const BalancedVector& v) : ShVector(v.order(), v.bits()) {}

  static ShVector from_string(std::string_view pm) {
    return ShVector(BalancedVector::from_string(pm));
  }

  /// Entry-wise negation; balance is preserved.
  ShVector negated() const;
};

// --- exact integer inner products ---------------------------------------
// <a,b> = m - 2*popcount(a XOR b); always even for balanced inputs.

inline int inner_product(const BalancedVector& a, const BalancedVector& b) {
  if (a.order() != b.order())
    throw DimensionError("inner_product: order mismatch");
  int diff = std::popcount(a.bits()[0] ^ b.bits()[0]) +
             std::popcount(a.bits()[1] ^ b.bits()[1]);
  return a.order() - 2 * diff;
}

inline int inner_product(const BalancedVector& a, const UnityVector& o) {
  if (a.order() != o.order)
    throw DimensionError("inner_product: order mismatch");
  return 0;  // balanced by construction
}

inline int inner_product(const UnityVector& o, const BalancedVector& a) {
  return inner_product(a, o);
}

inline int inner_product(const UnityVector& a, const UnityVector& b) {
  if (a.order != b.order) throw DimensionError("inner_product: order mismatch");
  return a.order;
}

template <typename A, typename B>
bool is_orthogonal(const A& a, const B& b) {
  return inner_product(a, b) == 0;
}

inline ShVector ShVector::negated() const {
  std::uint64_t mask_hi =
      order_ > 64 ? (order_ == 128 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << (order_ - 64)) - 1)
                  : 0;
  std::uint64_t mask_lo =
      order_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order_) - 1;
  return ShVector(order_, {~bits_[0] & mask_lo, ~bits_[1] & mask_hi});
}

}  // namespace hadamard
