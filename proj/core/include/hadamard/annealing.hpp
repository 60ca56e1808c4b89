#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hadamard/matrix.hpp"
#include "hadamard/search.hpp"

namespace hadamard {

/// Acceptance-threshold schedule P(n): an uphill move is accepted iff a
/// uniform draw exceeds P(n), so P = 0.5 is the hot stage and P = 1.0 is
/// strictly greedy.
struct ThresholdSchedule {
  double start_p = 0.5;
  double end_p = 1.0;
  enum class Shape { Linear, Geometric } shape = Shape::Linear;
  std::uint64_t total_steps = 1'000'000;

  double at(std::uint64_t step) const;
};

enum class AcceptanceRule {
  Threshold,   // accept uphill iff uniform(0,1) > P(n)
  Metropolis,  // accept uphill iff uniform(0,1) < exp(-dE / T(n))
};

struct OsaOptions {
  ThresholdSchedule schedule;
  AcceptanceRule rule = AcceptanceRule::Threshold;
  // Metropolis-mode temperature, geometric from t_start to t_end over
  // total_steps.
  double t_start = 8.0;
  double t_end = 1e-3;

  double temperature_at(std::uint64_t step) const;
};

/// One annealing configuration: columns 1..4k-1 of the candidate matrix
/// (duplicates transiently permitted), the Gram matrix among them, and the
/// running energy. energy == 0 iff the matrix is Hadamard.
struct AnnealerState {
  int order;
  std::vector<ShVector> columns;
  std::vector<int> gram;  // (order-1)^2 row-major, diag = order
  std::int64_t energy;
  std::uint64_t step = 0;
  double schedule_position = 0.0;

  QshMatrix to_qsh() const { return QshMatrix(order, columns); }
};

/// Random distinct SH columns.
AnnealerState make_annealer_state(int k, std::mt19937_64& rng);

/// Proposes swapping one -1 and one +1 entry in one random non-first column
/// (the column stays an SH vector), computes the energy change from the one
/// touched Gram row, and applies the acceptance rule. Returns whether the
/// move was accepted. Always advances step and schedule position.
bool osa_step(AnnealerState& state, const OsaOptions& options,
              std::mt19937_64& rng);

class OsaExhausted : public SearchFailure {
 public:
  OsaExhausted(const std::string& what, std::int64_t best, std::uint64_t steps)
      : SearchFailure(what), best_energy(best), total_steps(steps) {}
  std::int64_t best_energy;
  std::uint64_t total_steps;
};

struct OsaResult {
  ShMatrix matrix;
  std::uint64_t total_steps;   // across restarts
  std::uint32_t restarts_used;
  std::uint64_t seed;          // seed of the successful restart
};

/// Runs osa_step until energy 0 or budget.max_iterations steps, restarting
/// with seed+r up to budget.max_restarts times. The schedule's total_steps
/// is clamped to the per-restart step budget.
OsaResult osa_construct(int k, const OsaOptions& options,
                        const SearchBudget& budget);

}  // namespace hadamard
