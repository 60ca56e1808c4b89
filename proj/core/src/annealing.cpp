#include "hadamard/annealing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>

namespace hadamard {

double ThresholdSchedule::at(std::uint64_t step) const {
  double pos = total_steps == 0
                   ? 1.0
                   : std::min(1.0, static_cast<double>(step) /
                                       static_cast<double>(total_steps));
  if (shape == Shape::Geometric && start_p > 0.0)
    return start_p * std::pow(end_p / start_p, pos);
  return start_p + (end_p - start_p) * pos;
}

double OsaOptions::temperature_at(std::uint64_t step) const {
  double pos = schedule.total_steps == 0
                   ? 1.0
                   : std::min(1.0, static_cast<double>(step) /
                                       static_cast<double>(schedule.total_steps));
  return t_start * std::pow(t_end / t_start, pos);
}

AnnealerState make_annealer_state(int k, std::mt19937_64& rng) {
  int m = 4 * k;
  std::set<std::array<std::uint64_t, 2>> seen;
  std::vector<ShVector> columns;
  columns.reserve(static_cast<std::size_t>(m - 1));
  while (static_cast<int>(columns.size()) < m - 1) {
    ShVector v = random_sh_vector(k, rng);
    if (seen.insert(v.bits()).second) columns.push_back(v);
  }
  AnnealerState state{m, std::move(columns), {}, 0};
  int n = m - 1;
  state.gram.assign(static_cast<std::size_t>(n) * n, m);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int g = inner_product(state.columns[static_cast<std::size_t>(i)],
                            state.columns[static_cast<std::size_t>(j)]);
      state.gram[static_cast<std::size_t>(i) * n + j] = g;
      state.gram[static_cast<std::size_t>(j) * n + i] = g;
      state.energy += 2 * std::abs(g);
    }
  return state;
}

namespace {

// Row index of the rank-th bit of `column` with the given value.
int nth_bit_position(const ShVector& column, bool value, int rank) {
  for (int i = 0; i < column.order(); ++i)
    if (column.bit(i) == value && rank-- == 0) return i;
  return -1;
}

}  // namespace

bool osa_step(AnnealerState& state, const OsaOptions& options,
              std::mt19937_64& rng) {
  int m = state.order;
  int n = m - 1;
  int half = m / 2;
  std::uniform_int_distribution<int> pick_col(0, n - 1);
  std::uniform_int_distribution<int> pick_rank(0, half - 1);
  int c = pick_col(rng);
  const ShVector& col = state.columns[static_cast<std::size_t>(c)];
  int p = nth_bit_position(col, true, pick_rank(rng));   // a -1 entry
  int q = nth_bit_position(col, false, pick_rank(rng));  // a +1 entry

  // Only Gram row c moves; <v', u_j> = <v, u_j> + 2 u_j[p] - 2 u_j[q].
  std::int64_t delta = 0;
  for (int j = 0; j < n; ++j) {
    if (j == c) continue;
    const ShVector& u = state.columns[static_cast<std::size_t>(j)];
    int old_g = state.gram[static_cast<std::size_t>(c) * n + j];
    int new_g = old_g + 2 * (u.entry(p) - u.entry(q));
    delta += std::abs(new_g) - std::abs(old_g);
  }
  std::int64_t energy_change = 2 * delta;

  bool accept = energy_change <= 0;
  if (!accept) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    double u = uniform(rng);
    if (options.rule == AcceptanceRule::Threshold)
      accept = u > options.schedule.at(state.step);
    else
      accept = u < std::exp(-static_cast<double>(energy_change) /
                            options.temperature_at(state.step));
  }

  if (accept) {
    auto bits = col.bits();
    bits[p >> 6] &= ~(std::uint64_t{1} << (p & 63));
    bits[q >> 6] |= std::uint64_t{1} << (q & 63);
    ShVector updated(m, bits);
    for (int j = 0; j < n; ++j) {
      if (j == c) continue;
      const ShVector& u = state.columns[static_cast<std::size_t>(j)];
      int new_g = state.gram[static_cast<std::size_t>(c) * n + j] +
                  2 * (u.entry(p) - u.entry(q));
      state.gram[static_cast<std::size_t>(c) * n + j] = new_g;
      state.gram[static_cast<std::size_t>(j) * n + c] = new_g;
    }
    state.columns[static_cast<std::size_t>(c)] = updated;
    state.energy += energy_change;
  }

  ++state.step;
  state.schedule_position =
      options.schedule.total_steps == 0
          ? 1.0
          : std::min(1.0, static_cast<double>(state.step) /
                              static_cast<double>(options.schedule.total_steps));
  return accept;
}

OsaResult osa_construct(int k, const OsaOptions& options,
                        const SearchBudget& budget) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  OsaOptions opts = options;
  opts.schedule.total_steps =
      std::min(opts.schedule.total_steps, budget.max_iterations);
  std::int64_t best_energy = -1;
  std::uint64_t steps_spent = 0;
  for (std::uint32_t restart = 0; restart < budget.max_restarts; ++restart) {
    std::uint64_t seed = budget.rng_seed + restart;
    std::mt19937_64 rng(seed);
    AnnealerState state = make_annealer_state(k, rng);
    while (state.energy > 0 && state.step < budget.max_iterations)
      osa_step(state, opts, rng);
    steps_spent += state.step;
    if (state.energy == 0)
      return OsaResult{ShMatrix(state.to_qsh()), steps_spent, restart, seed};
    if (best_energy < 0 || state.energy < best_energy)
      best_energy = state.energy;
  }
  throw OsaExhausted("OSA exhausted " + std::to_string(budget.max_restarts) +
                         " restarts of " +
                         std::to_string(budget.max_iterations) +
                         " steps; best energy " + std::to_string(best_energy),
                     best_energy, steps_spent);
}

}  // namespace hadamard
