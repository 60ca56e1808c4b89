#include "hadamard/vectorspace.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace hadamard {

BalancedVector ohh_vector(int k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  std::string s(static_cast<std::size_t>(k), '-');
  s.append(static_cast<std::size_t>(k), '+');
  return BalancedVector::from_string(s);
}

ShVector osh_vector(int k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  std::string s(static_cast<std::size_t>(2 * k), '-');
  s.append(static_cast<std::size_t>(2 * k), '+');
  return ShVector::from_string(s);
}

std::uint64_t binomial_capped(int n, int r, std::uint64_t cap) {
  if (r < 0 || r > n) throw PreconditionError("binomial: need 0 <= r <= n");
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t family_count_capped(VectorFamily family, int k,
                                  std::uint64_t cap) {
  switch (family) {
    case VectorFamily::Unity:
    case VectorFamily::Ohh:
    case VectorFamily::Osh:
      return 1;
    case VectorFamily::Hsh:
      return binomial_capped(2 * k, k, cap);
    case VectorFamily::Sh:
      return binomial_capped(4 * k, 2 * k, cap);
    case VectorFamily::Psh: {
      std::uint64_t half = binomial_capped(2 * k, k, cap);
      if (half > cap) return cap + 1;
      unsigned __int128 sq = static_cast<unsigned __int128>(half) * half;
      return sq > cap ? cap + 1 : static_cast<std::uint64_t>(sq);
    }
  }
  throw PreconditionError("unknown vector family");
}

BalancedEnumerator::BalancedEnumerator(int order, int minus_count,
                                       EnumerationLimits limits)
    : order_(order), done_(false) {
  if (order < 2 || order > 64 || minus_count <= 0 || minus_count >= order)
    throw PreconditionError("enumeration supports orders 2..64");
  total_ = binomial_capped(order, minus_count, limits.max_count);
  if (total_ > limits.max_count)
    throw CapacityError(
        "enumeration of C(" + std::to_string(order) + "," +
            std::to_string(minus_count) +
            ") vectors exceeds the configured limit of " +
            std::to_string(limits.max_count),
        binomial_capped(order, minus_count, UINT64_MAX - 1));
  current_ = (std::uint64_t{1} << minus_count) - 1;
  last_ = current_ << (order - minus_count);
}

std::optional<BalancedVector> BalancedEnumerator::next() {
  if (done_) return std::nullopt;
  BalancedVector out(order_, {current_, 0});
  if (current_ == last_) {
    done_ = true;
  } else {
    // Gosper's hack: next larger value with the same popcount.
    std::uint64_t u = current_ & (~current_ + 1);
    std::uint64_t v = current_ + u;
    current_ = v + (((v ^ current_) / u) >> 2);
  }
  return out;
}

ShVectorEnumerator::ShVectorEnumerator(int k, EnumerationLimits limits)
    : inner_(4 * k, 2 * k, limits) {}

std::optional<ShVector> ShVectorEnumerator::next() {
  auto v = inner_.next();
  if (!v) return std::nullopt;
  return ShVector(*v);
}

PshVectorEnumerator::PshVectorEnumerator(int k, EnumerationLimits limits)
    : k_(k), right_(2 * k, k, EnumerationLimits{limits.max_count}) {
  total_ = family_count_capped(VectorFamily::Psh, k, limits.max_count);
  if (total_ > limits.max_count)
    throw CapacityError(
        "PSH enumeration exceeds the configured limit of " +
            std::to_string(limits.max_count),
        family_count_capped(VectorFamily::Psh, k, UINT64_MAX - 1));
  advance_right();
}

void PshVectorEnumerator::advance_right() {
  right_cur_ = right_.next();
  if (right_cur_) left_.emplace(2 * k_, k_);
}

std::optional<ShVector> PshVectorEnumerator::next() {
  while (right_cur_) {
    if (auto l = left_->next()) {
      // Packed value: left half in the low 2k bits, right half above it,
      // so iterating right-major yields increasing packed values.
      std::uint64_t bits =
          l->bits()[0] | (right_cur_->bits()[0] << (2 * k_));
      return ShVector(4 * k_, {bits, 0});
    }
    advance_right();
  }
  return std::nullopt;
}

std::vector<ShVector> enumerate_sh_vectors(int k, EnumerationLimits limits) {
  ShVectorEnumerator e(k, limits);
  std::vector<ShVector> out;
  out.reserve(e.total());
  while (auto v = e.next()) out.push_back(*v);
  return out;
}

std::vector<ShVector> enumerate_psh_vectors(int k, EnumerationLimits limits) {
  PshVectorEnumerator e(k, limits);
  std::vector<ShVector> out;
  out.reserve(e.total());
  while (auto v = e.next()) out.push_back(*v);
  return out;
}

std::vector<BalancedVector> enumerate_hsh_vectors(int k,
                                                  EnumerationLimits limits) {
  BalancedEnumerator e(2 * k, k, limits);
  std::vector<BalancedVector> out;
  out.reserve(e.total());
  while (auto v = e.next()) out.push_back(*v);
  return out;
}

Permutation canonical_osh_permutation(const ShVector& v) {
  int m = v.order();
  int half = m / 2;
  std::vector<std::uint32_t> src(static_cast<std::size_t>(m));
  int minus_rank = 0, plus_rank = 0;
  for (int j = 0; j < m; ++j)
    src[static_cast<std::size_t>(j)] = v.bit(j)
                                           ? static_cast<std::uint32_t>(minus_rank++)
                                           : static_cast<std::uint32_t>(half + plus_rank++);
  return Permutation(std::move(src));
}

std::vector<ShVector> orthogonal_set(const ShVector& v,
                                     EnumerationLimits limits) {
  int k = v.order() / 4;
  Permutation sigma = canonical_osh_permutation(v);
  PshVectorEnumerator psh(k, limits);
  std::vector<ShVector> out;
  out.reserve(psh.total());
  while (auto w = psh.next()) out.push_back(apply_permutation(sigma, *w));
  return out;
}

ShVector random_sh_vector(int k, std::mt19937_64& rng) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  int m = 4 * k;
  if (m > kMaxOrder) throw CapacityError("order exceeds maximum", static_cast<std::uint64_t>(m));
  std::array<std::uint8_t, kMaxOrder> idx;
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::array<std::uint64_t, 2> bits{0, 0};
  for (int i = 0; i < 2 * k; ++i) {
    std::uniform_int_distribution<int> pick(i, m - 1);
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(pick(rng))]);
    int pos = idx[static_cast<std::size_t>(i)];
    bits[pos >> 6] |= std::uint64_t{1} << (pos & 63);
  }
  return ShVector(m, bits);
}

}  // namespace hadamard
