#include "hadamard/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hadamard {

BigInt binomial(unsigned n, unsigned r) {
  if (r > n) throw PreconditionError("binomial: need 0 <= r <= n");
  r = std::min(r, n - r);
  BigInt acc = 1;
  for (unsigned i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw PreconditionError("log2 of non-positive value");
  unsigned bits = boost::multiprecision::msb(x);
  if (bits <= 1000) return std::log2(x.convert_to<double>());
  BigInt top = x >> (bits - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 52);
}

double log2_rational(const BigRational& q) {
  return log2_big(boost::multiprecision::numerator(q)) -
         log2_big(boost::multiprecision::denominator(q));
}

const std::map<int, long long>& known_nh_counts() {
  // Classification results for orders 4..32 (Hall; Kimura; Spence;
  // Kharaghani & Tayfeh-Rezaie).
  static const std::map<int, long long> table{
      {4, 1},  {8, 1},  {12, 1},  {16, 5},
      {20, 3}, {24, 60}, {28, 487}, {32, 13710027},
  };
  return table;
}

CountReport count_report(int k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  unsigned m = static_cast<unsigned>(4 * k);
  CountReport r;
  r.k = k;
  r.n_v = binomial(m, m / 2);
  BigInt half = binomial(m / 2, m / 4);
  r.n_o = half * half;
  r.n_q = 1;
  for (unsigned i = 0; i < m - 1; ++i) r.n_q *= r.n_v - i;
  // N_QU = C(N_V, 4k-1), computed without assuming N_V fits a machine word.
  BigInt qu = 1;
  for (unsigned i = 1; i <= m - 1; ++i) {
    qu *= r.n_v - (m - 1) + i;
    qu /= i;
  }
  r.n_qu = qu;
  r.n_d = BigInt(1) << (m - 1);
  auto it = known_nh_counts().find(static_cast<int>(m));
  if (it != known_nh_counts().end()) {
    r.n_nh = BigInt(it->second);
    r.n_sh = *r.n_nh * r.n_d;
  }
  return r;
}

BigRational p_perp(int k) {
  auto r = count_report(k);
  return BigRational(r.n_o, r.n_v - 1);
}

double p_perp_log2(int k) { return log2_rational(p_perp(k)); }

std::pair<double, double> p_perp_bounds(int k) {
  double kk = static_cast<double>(k);
  return {1.0 / (2.0 * std::sqrt(kk)), std::sqrt(2.0 / kk)};
}

double p_h_given_q_log2(int k) {
  double pairs = static_cast<double>(4 * k - 1) * (4 * k - 2) / 2.0;
  return pairs * p_perp_log2(k);
}

std::pair<double, double> p_h_given_q_bounds_log2(int k) {
  double kk = static_cast<double>(k);
  double e = 4.0 * kk * kk;
  return {-e * std::log2(4.0 * kk), -e * std::log2(kk / 2.0)};
}

double n_qu_log2_exact(int k) { return log2_big(count_report(k).n_qu); }

std::pair<double, double> n_qu_log2_bounds(int k) {
  double kk = static_cast<double>(k);
  double cols = 4.0 * kk - 1.0;
  double nv_lb_log2 = 4.0 * kk - std::log2(2.0 * std::sqrt(2.0 * kk));
  double nv_ub_log2 = 4.0 * kk - std::log2(2.0 * std::sqrt(kk));
  return {cols * (nv_lb_log2 - std::log2(cols)),
          cols * (nv_ub_log2 - std::log2(cols))};
}

std::pair<double, double> n_qu_log2_bounds_simplified(int k) {
  double kk = static_cast<double>(k);
  double lb = 4.0 * kk -
              std::log2(8.0 * std::sqrt(2.0) * std::pow(kk, 1.5));
  double ub = 4.0 * kk - std::log2(8.0 * std::pow(kk, 1.5));
  return {4.0 * kk * lb, 4.0 * kk * ub};
}

std::pair<double, double> expected_h_log2_bounds(int k) {
  double kk = static_cast<double>(k);
  double common = (4.0 * kk * kk + 6.0 * kk) * std::log2(kk);
  return {8.0 * kk * kk - 14.0 * kk - common,
          20.0 * kk * kk - 12.0 * kk - common};
}

double expected_h_log2_exact(int k) {
  return p_h_given_q_log2(k) + n_qu_log2_exact(k);
}

ProbabilityReport probability_report(int k) {
  ProbabilityReport r;
  r.k = k;
  r.p_perp_exact = p_perp(k);
  r.p_perp_log2 = log2_rational(r.p_perp_exact);
  r.p_perp_bounds = p_perp_bounds(k);
  r.p_h_given_q_log2 =
      static_cast<double>(4 * k - 1) * (4 * k - 2) / 2.0 * r.p_perp_log2;
  r.p_h_given_q_bounds_log2 = p_h_given_q_bounds_log2(k);
  r.expected_h_log2_bounds = expected_h_log2_bounds(k);
  r.expected_h_log2_exact = r.p_h_given_q_log2 + n_qu_log2_exact(k);
  return r;
}

std::vector<DiscrepancyRow> discrepancy_table(int k_max) {
  if (k_max < 1) throw PreconditionError("k_max must be >= 1");
  std::vector<DiscrepancyRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    auto counts = count_report(k);
    double p = p_h_given_q_log2(k);
    auto qu_bounds = n_qu_log2_bounds(k);
    DiscrepancyRow row;
    row.k = k;
    row.eh_log2_lower = p + qu_bounds.first;
    row.eh_log2_upper = p + qu_bounds.second;
    row.eh_log2_exact = p + log2_big(counts.n_qu);
    if (counts.n_sh) row.nsh_log2 = log2_big(*counts.n_sh);
    rows.push_back(row);
  }
  return rows;
}

std::vector<ShMatrix> degenerate(const ShMatrix& h) {
  int m = h.order();
  SignMatrix sign = h.to_sign_matrix();
  if (!sign.first_row_ones())
    throw PreconditionError(
        "degeneration requires a normalized matrix (all-ones first row)");
  if (m - 1 > 20)
    throw CapacityError("degeneration would produce 2^" +
                            std::to_string(m - 1) + " matrices",
                        std::uint64_t{1} << (m - 1));
  std::vector<ShMatrix> out;
  out.reserve(std::size_t{1} << (m - 1));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
    std::vector<ShVector> cols;
    cols.reserve(static_cast<std::size_t>(m - 1));
    for (int c = 1; c < m; ++c) {
      const ShVector& v = h.column(c);
      cols.push_back((mask >> (c - 1)) & 1 ? v.negated() : v);
    }
    out.emplace_back(QshMatrix(m, std::move(cols)));
  }
  return out;
}

ShMatrix seminormalize(const SignMatrix& m) {
  int n = m.order();
  auto d = m.gram();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          (i == j ? n : 0))
        throw PreconditionError("seminormalize requires an orthogonal matrix");
  SignMatrix out = m;
  for (int r = 0; r < n; ++r)
    if (out.entry(r, 0) < 0) out = out.with_negated_row(r);
  return ShMatrix(to_qsh_matrix(out));
}

}  // namespace hadamard
