#include "hadamard/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace hadamard {

SignMatrix::SignMatrix(int order, std::vector<std::int8_t> row_major)
    : order_(order), data_(std::move(row_major)) {
  if (order <= 0 || order > kMaxOrder)
    throw DimensionError("matrix order out of range");
  if (data_.size() != static_cast<std::size_t>(order) * order)
    throw DimensionError("matrix data size does not match order");
  for (auto v : data_)
    if (v != 1 && v != -1)
      throw PreconditionError("matrix entries must be +1 or -1");
}

SignMatrix SignMatrix::from_rows(const std::vector<std::string>& pm_rows) {
  int n = static_cast<int>(pm_rows.size());
  std::vector<std::int8_t> data;
  data.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : pm_rows) {
    if (static_cast<int>(row.size()) != n)
      throw DimensionError("matrix rows must all have length equal to order");
    for (char c : row) {
      if (c == '+')
        data.push_back(1);
      else if (c == '-')
        data.push_back(-1);
      else
        throw PreconditionError("matrix rows must contain only '+' and '-'");
    }
  }
  return SignMatrix(n, std::move(data));
}

std::vector<std::vector<int>> SignMatrix::gram() const {
  std::vector<std::vector<int>> d(static_cast<std::size_t>(order_),
                                  std::vector<int>(static_cast<std::size_t>(order_)));
  for (int i = 0; i < order_; ++i)
    for (int j = i; j < order_; ++j) {
      int s = 0;
      for (int r = 0; r < order_; ++r) s += entry(r, i) * entry(r, j);
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = s;
    }
  return d;
}

bool SignMatrix::first_column_ones() const {
  for (int r = 0; r < order_; ++r)
    if (entry(r, 0) != 1) return false;
  return true;
}

bool SignMatrix::first_row_ones() const {
  for (int c = 0; c < order_; ++c)
    if (entry(0, c) != 1) return false;
  return true;
}

SignMatrix SignMatrix::with_negated_row(int row) const {
  auto data = data_;
  for (int c = 0; c < order_; ++c)
    data[static_cast<std::size_t>(row) * order_ + c] *= -1;
  return SignMatrix(order_, std::move(data));
}

SignMatrix SignMatrix::with_negated_column(int col) const {
  auto data = data_;
  for (int r = 0; r < order_; ++r)
    data[static_cast<std::size_t>(r) * order_ + col] *= -1;
  return SignMatrix(order_, std::move(data));
}

std::string SignMatrix::row_string(int row) const {
  std::string s(static_cast<std::size_t>(order_), '+');
  for (int c = 0; c < order_; ++c)
    if (entry(row, c) < 0) s[static_cast<std::size_t>(c)] = '-';
  return s;
}

QshMatrix::QshMatrix(int order, std::vector<ShVector> sh_columns)
    : order_(order), cols_(std::move(sh_columns)) {
  if (order % 4 != 0 || order < 4 || order > kMaxOrder)
    throw DimensionError("QSH matrix order must be a positive multiple of 4");
  if (cols_.size() != static_cast<std::size_t>(order - 1))
    throw DimensionError("QSH matrix needs exactly order-1 SH columns");
  std::set<std::array<std::uint64_t, 2>> seen;
  for (const auto& c : cols_) {
    if (c.order() != order)
      throw DimensionError("QSH column order mismatch");
    if (!seen.insert(c.bits()).second)
      throw PreconditionError("QSH columns must be pairwise distinct");
  }
}

SignMatrix QshMatrix::to_sign_matrix() const {
  std::vector<std::int8_t> data(static_cast<std::size_t>(order_) * order_);
  for (int r = 0; r < order_; ++r)
    for (int c = 0; c < order_; ++c)
      data[static_cast<std::size_t>(r) * order_ + c] =
          static_cast<std::int8_t>(entry(r, c));
  return SignMatrix(order_, std::move(data));
}

std::vector<std::vector<int>> gram_matrix(const QshMatrix& q) {
  int m = q.order();
  UnityVector o{m};
  std::vector<std::vector<int>> d(static_cast<std::size_t>(m),
                                  std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      int s;
      if (i == 0 && j == 0)
        s = m;
      else if (i == 0)
        s = inner_product(o, q.column(j));
      else if (i == j)
        s = m;
      else
        s = inner_product(q.column(i), q.column(j));
      d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s;
      d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = s;
    }
  }
  return d;
}

bool is_hadamard(const QshMatrix& q) {
  int m = q.order();
  for (int i = 1; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (inner_product(q.column(i), q.column(j)) != 0) return false;
  return true;  // column 0 orthogonality is the balance invariant
}

bool is_hadamard(const SignMatrix& m) {
  auto d = m.gram();
  int n = m.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          (i == j ? n : 0))
        return false;
  return true;
}

std::int64_t energy(int order, std::span<const ShVector> sh_columns) {
  std::int64_t e = 0;
  for (std::size_t i = 0; i < sh_columns.size(); ++i)
    for (std::size_t j = i + 1; j < sh_columns.size(); ++j)
      e += std::abs(inner_product(sh_columns[i], sh_columns[j]));
  (void)order;  // unity column contributes zero against balanced columns
  return 2 * e;
}

std::int64_t energy(const QshMatrix& q) {
  return energy(q.order(), q.sh_columns());
}

std::int64_t energy(const SignMatrix& m) {
  auto d = m.gram();
  int n = m.order();
  std::int64_t e = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        e += std::abs(static_cast<std::int64_t>(
            d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  return e;
}

ShMatrix::ShMatrix(QshMatrix q) : q_(std::move(q)) {
  if (!is_hadamard(q_))
    throw PreconditionError("matrix is not orthogonal: Q^T Q != 4k*I");
}

SignMatrix sylvester(int power) {
  if (power < 1) throw PreconditionError("sylvester: power must be >= 1");
  if (power > 7)
    throw CapacityError("sylvester: order 2^" + std::to_string(power) +
                            " exceeds the supported maximum of " +
                            std::to_string(kMaxOrder),
                        std::uint64_t{1} << power);
  int n = 1;
  std::vector<std::int8_t> data{1};
  for (int p = 0; p < power; ++p) {
    int n2 = 2 * n;
    std::vector<std::int8_t> next(static_cast<std::size_t>(n2) * n2);
    for (int r = 0; r < n2; ++r)
      for (int c = 0; c < n2; ++c) {
        std::int8_t v = data[static_cast<std::size_t>(r % n) * n + (c % n)];
        next[static_cast<std::size_t>(r) * n2 + c] =
            (r >= n && c >= n) ? static_cast<std::int8_t>(-v) : v;
      }
    n = n2;
    data = std::move(next);
  }
  return SignMatrix(n, std::move(data));
}

QshMatrix to_qsh_matrix(const SignMatrix& m) {
  int n = m.order();
  if (n % 4 != 0)
    throw PreconditionError("order is not a multiple of 4");
  if (!m.first_column_ones())
    throw PreconditionError("first column is not the unity vector");
  std::vector<ShVector> cols;
  cols.reserve(static_cast<std::size_t>(n - 1));
  for (int c = 1; c < n; ++c) {
    std::array<std::uint64_t, 2> bits{0, 0};
    for (int r = 0; r < n; ++r)
      if (m.entry(r, c) < 0) bits[r >> 6] |= std::uint64_t{1} << (r & 63);
    cols.emplace_back(n, bits);
  }
  return QshMatrix(n, std::move(cols));
}

}  // namespace hadamard
