#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hadamard/permutation.hpp"
#include "hadamard/sh_vector.hpp"

namespace hadamard {

/// Guard against materializing enumerations that would exhaust memory.
struct EnumerationLimits {
  std::uint64_t max_count = 10'000'000;
};

enum class VectorFamily { Unity, Ohh, Hsh, Osh, Psh, Sh };

/// Ordered half-length vector: k entries of -1 then k entries of +1.
BalancedVector ohh_vector(int k);

/// Ordered SH vector t: 2k entries of -1 then 2k entries of +1.
ShVector osh_vector(int k);

/// C(n,r) clamped to `cap`+1 when it would exceed the cap; overflow-safe.
std::uint64_t binomial_capped(int n, int r, std::uint64_t cap);

/// Number of members of a family at the given k (Hsh: C(2k,k),
/// Sh: C(4k,2k), Psh: C(2k,k)^2, Unity/Ohh/Osh: 1), clamped at cap.
std::uint64_t family_count_capped(VectorFamily family, int k,
                                  std::uint64_t cap);

/// Streams all balanced patterns of a given popcount in increasing
/// packed-bit value; restartable, single-consumer.
class BalancedEnumerator {
 public:
  /// Enumerates all `order`-length ±1 vectors with `minus_count` entries of
  /// -1, in increasing packed-bit value. order <= 64.
  BalancedEnumerator(int order, int minus_count, EnumerationLimits limits = {});

  std::optional<BalancedVector> next();
  std::uint64_t total() const { return total_; }

 private:
  int order_;
  std::uint64_t current_;
  std::uint64_t last_;
  bool done_;
  std::uint64_t total_;
};

/// All C(4k,2k) SH vectors of order 4k, increasing packed-bit value.
class ShVectorEnumerator {
 public:
  explicit ShVectorEnumerator(int k, EnumerationLimits limits = {});
  std::optional<ShVector> next();
  std::uint64_t total() const { return inner_.total(); }

 private:
  BalancedEnumerator inner_;
};

/// All C(2k,k)^2 PSH vectors (each half independently balanced),
/// increasing packed-bit value.
class PshVectorEnumerator {
 public:
  explicit PshVectorEnumerator(int k, EnumerationLimits limits = {});
  std::optional<ShVector> next();
  std::uint64_t total() const { return total_; }

 private:
  void advance_right();

  int k_;
  std::uint64_t total_;
  BalancedEnumerator right_;
  std::optional<BalancedVector> right_cur_;
  std::optional<BalancedEnumerator> left_;
};

std::vector<ShVector> enumerate_sh_vectors(int k, EnumerationLimits limits = {});
std::vector<ShVector> enumerate_psh_vectors(int k, EnumerationLimits limits = {});
std::vector<BalancedVector> enumerate_hsh_vectors(int k,
                                                  EnumerationLimits limits = {});

/// The canonical permutation sigma with sigma(t) = v: maps positions of v's
/// -1 entries (in increasing order) onto t's -1 block, likewise for +1.
Permutation canonical_osh_permutation(const ShVector& v);

/// The N_O = C(2k,k)^2 SH vectors orthogonal to v, obtained as sigma(W) for
/// the canonical sigma; the image set depends only on v's sign pattern.
std::vector<ShVector> orthogonal_set(const ShVector& v,
                                     EnumerationLimits limits = {});

/// Uniform over all C(4k,2k) SH vectors: partial shuffle placing 2k minus
/// signs into 4k positions.
ShVector random_sh_vector(int k, std::mt19937_64& rng);

}  // namespace hadamard
