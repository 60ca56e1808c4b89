#pragma once

#include <cstdint>
#include <vector>

#include "hadamard/errors.hpp"
#include "hadamard/sh_vector.hpp"

namespace hadamard {

/// Bijection on indices 0..n-1. Application convention: output[j] = v[at(j)],
/// i.e. at(j) names the source index of output position j.
///
/// The two-row notation (1 2 .. n / d1 d2 .. dn), "entry at position i moves
/// to position d_i", is the inverse of this map; use from_destinations() to
/// convert it.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> source_of)
      : map_(std::move(source_of)) {
    validate();
  }

  static Permutation identity(int n) {
    std::vector<std::uint32_t> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(m));
  }

  /// Builds from two-row (destination) notation, 0-based: dest[i] is where
  /// input position i ends up.
  static Permutation from_destinations(const std::vector<std::uint32_t>& dest) {
    std::vector<std::uint32_t> src(dest.size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < dest.size(); ++i) {
      if (dest[i] >= dest.size() || src[dest[i]] != UINT32_MAX)
        throw PreconditionError("destination map is not a bijection");
      src[dest[i]] = i;
    }
    return Permutation(std::move(src));
  }

  int order() const { return static_cast<int>(map_.size()); }
  std::uint32_t at(int j) const { return map_[static_cast<std::size_t>(j)]; }

  Permutation inverse() const {
    std::vector<std::uint32_t> inv(map_.size());
    for (std::uint32_t j = 0; j < map_.size(); ++j) inv[map_[j]] = j;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  void validate() const {
    std::vector<bool> seen(map_.size(), false);
    for (auto s : map_) {
      if (s >= map_.size() || seen[s])
        throw PreconditionError("permutation map is not a bijection");
      seen[s] = true;
    }
  }

  std::vector<std::uint32_t> map_;
};

inline BalancedVector apply_permutation(const Permutation& sigma,
                                        const BalancedVector& v) {
  if (sigma.order() != v.order())
    throw DimensionError("apply_permutation: order mismatch");
  std::array<std::uint64_t, 2> out{0, 0};
  for (int j = 0; j < v.order(); ++j)
    if (v.bit(static_cast<int>(sigma.at(j))))
      out[j >> 6] |= std::uint64_t{1} << (j & 63);
  return BalancedVector(v.order(), out);
}

inline ShVector apply_permutation(const Permutation& sigma, const ShVector& v) {
  return ShVector(apply_permutation(sigma, static_cast<const BalancedVector&>(v)));
}

inline UnityVector apply_permutation(const Permutation& sigma,
                                     const UnityVector& o) {
  if (sigma.order() != o.order)
    throw DimensionError("apply_permutation: order mismatch");
  return o;
}

/// Permutes a plain value sequence; handy for non-sign vectors.
template <typename T>
std::vector<T> apply_permutation(const Permutation& sigma,
                                 const std::vector<T>& v) {
  if (sigma.order() != static_cast<int>(v.size()))
    throw DimensionError("apply_permutation: order mismatch");
  std::vector<T> out(v.size());
  for (int j = 0; j < sigma.order(); ++j)
    out[static_cast<std::size_t>(j)] = v[sigma.at(j)];
  return out;
}

}  // namespace hadamard
