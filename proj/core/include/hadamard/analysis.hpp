#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hadamard/matrix.hpp"

namespace hadamard {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact arbitrary-precision binomial coefficient.
BigInt binomial(unsigned n, unsigned r);

double log2_big(const BigInt& x);
double log2_rational(const BigRational& q);

/// Known unique H-matrix classes N_NH by order, 4..32.
const std::map<int, long long>& known_nh_counts();

/// Exact combinatorial counts for a given k; n_nh/n_sh only for orders with
/// a known classification (4..32).
struct CountReport {
  int k;
  BigInt n_v;    // C(4k,2k)
  BigInt n_o;    // C(2k,k)^2
  BigInt n_q;    // N_V! / (N_V-(4k-1))!
  BigInt n_qu;   // C(N_V, 4k-1)
  BigInt n_d;    // 2^(4k-1)
  std::optional<BigInt> n_nh;
  std::optional<BigInt> n_sh;  // n_nh * 2^(4k-1)
};

CountReport count_report(int k);

/// p_perp = C(2k,k)^2 / (C(4k,2k) - 1), exact.
BigRational p_perp(int k);
double p_perp_log2(int k);

/// (1/(2 sqrt k), sqrt(2/k)); the upper bound exceeds 1 for k <= 2.
std::pair<double, double> p_perp_bounds(int k);

/// log2 of p_perp^((4k-1)(4k-2)/2), the pairwise-independence model of a
/// random QSH matrix being Hadamard.
double p_h_given_q_log2(int k);

/// ( -4k^2 log2(4k), -4k^2 log2(k/2) ), the k>>1 estimate.
std::pair<double, double> p_h_given_q_bounds_log2(int k);

/// log2 of C(N_V, 4k-1), exact.
double n_qu_log2_exact(int k);

/// log2 bounds on N_QU before the k>>1 simplification:
/// (4k-1) * log2( (2^4k / (2 sqrt(2k or k) (4k-1))) ).
std::pair<double, double> n_qu_log2_bounds(int k);

/// The fully simplified forms (2^4k / (8 sqrt2 k^1.5))^4k and
/// (2^4k / (8 k^1.5))^4k, in log2.
std::pair<double, double> n_qu_log2_bounds_simplified(int k);

/// log2 bounds on the expected unique SH-matrix count:
/// ( 8k^2-14k - (4k^2+6k) log2 k, 20k^2-12k - (4k^2+6k) log2 k ).
std::pair<double, double> expected_h_log2_bounds(int k);

/// log2 of p_{H|Q} * C(N_V, 4k-1) with everything exact.
double expected_h_log2_exact(int k);

struct ProbabilityReport {
  int k;
  BigRational p_perp_exact;
  double p_perp_log2;
  std::pair<double, double> p_perp_bounds;
  double p_h_given_q_log2;
  std::pair<double, double> p_h_given_q_bounds_log2;
  std::pair<double, double> expected_h_log2_bounds;
  double expected_h_log2_exact;
};

ProbabilityReport probability_report(int k);

/// One row of the E[H]-vs-N_SH comparison. eh_log2_lower/upper apply the
/// combination estimate to N_QU (the estimate path, negative from k=5);
/// eh_log2_exact uses the exact N_QU (negative from k=6).
struct DiscrepancyRow {
  int k;
  double eh_log2_lower;
  double eh_log2_upper;
  double eh_log2_exact;
  std::optional<double> nsh_log2;
};

std::vector<DiscrepancyRow> discrepancy_table(int k_max);

/// All 2^(4k-1) column-negation equivalents of a normalized (all-ones first
/// row and column) SH matrix; the first column is always retained.
std::vector<ShMatrix> degenerate(const ShMatrix& h);

/// Negates every row whose first entry is -1; requires M^T M = mI.
/// Idempotent on already seminormalized input.
ShMatrix seminormalize(const SignMatrix& m);

}  // namespace hadamard
