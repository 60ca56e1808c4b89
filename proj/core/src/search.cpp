#include "hadamard/search.hpp"

#include <algorithm>
#include <string>

#include "hadamard/ortho_graph.hpp"

namespace hadamard {

namespace {

bool pairwise_orthogonal(const std::vector<ShVector>& vectors,
                         const std::vector<std::uint32_t>& pick) {
  for (std::size_t a = 0; a < pick.size(); ++a)
    for (std::size_t b = a + 1; b < pick.size(); ++b)
      if (inner_product(vectors[pick[a]], vectors[pick[b]]) != 0) return false;
  return true;
}

// Advances `pick` to the next (4k-1)-combination of 0..n-1 in lexicographic
// order; returns false after the last one.
bool next_combination(std::vector<std::uint32_t>& pick, std::uint32_t n) {
  int r = static_cast<int>(pick.size());
  for (int i = r - 1; i >= 0; --i) {
    if (pick[static_cast<std::size_t>(i)] <
        n - static_cast<std::uint32_t>(r - i)) {
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < r; ++j)
        pick[static_cast<std::size_t>(j)] =
            pick[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

ExhaustiveResult exhaustive_search(int k, std::uint64_t max_direct_candidates,
                                   EnumerationLimits limits,
                                   std::uint64_t clique_node_budget) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  int m = 4 * k;
  std::uint64_t n_v = family_count_capped(VectorFamily::Sh, k, limits.max_count);
  if (n_v > limits.max_count)
    throw CapacityError("exhaustive search would need " + std::to_string(n_v) +
                            " SH vectors",
                        n_v);

  std::uint64_t n_qu =
      binomial_capped(static_cast<int>(n_v), m - 1, max_direct_candidates);
  if (n_qu <= max_direct_candidates) {
    auto vectors = enumerate_sh_vectors(k, limits);
    ExhaustiveResult result{{}, 0, false};
    std::vector<std::uint32_t> pick(static_cast<std::size_t>(m - 1));
    for (int i = 0; i < m - 1; ++i)
      pick[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i);
    do {
      ++result.candidates_examined;
      if (pairwise_orthogonal(vectors, pick)) {
        std::vector<ShVector> cols;
        cols.reserve(pick.size());
        for (auto idx : pick) cols.push_back(vectors[idx]);
        result.matrices.emplace_back(QshMatrix(m, std::move(cols)));
      }
    } while (next_combination(pick, static_cast<std::uint32_t>(n_v)));
    return result;
  }

  // Too many raw combinations; the clique enumerator yields the same set.
  auto graph = OrthoGraph::build(k, limits);
  auto cliques = graph.find_cliques(m - 1, clique_node_budget);
  ExhaustiveResult result{{}, 0, true};
  result.matrices.reserve(cliques.size());
  for (const auto& c : cliques) result.matrices.push_back(graph.clique_to_matrix(c));
  return result;
}

RvsResult rvs_construct(int k, const SearchBudget& budget) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  int m = 4 * k;
  RvsTrace last_trace;
  for (std::uint32_t restart = 0; restart < budget.max_restarts; ++restart) {
    std::uint64_t seed = budget.rng_seed + restart;
    std::mt19937_64 rng(seed);
    RvsTrace trace;
    trace.restarts_used = restart;
    std::vector<ShVector> columns;
    columns.reserve(static_cast<std::size_t>(m - 1));
    columns.push_back(random_sh_vector(k, rng));  // column 2, uncounted
    std::uint64_t draws = 0;
    bool exhausted = false;
    for (int stage = 3; stage <= m && !exhausted; ++stage) {
      std::uint64_t stage_iterations = 0;
      for (;;) {
        if (draws >= budget.max_iterations) {
          exhausted = true;
          break;
        }
        ++draws;
        ++stage_iterations;
        ShVector candidate = random_sh_vector(k, rng);
        bool ok = true;
        for (const auto& c : columns)
          if (inner_product(candidate, c) != 0) {
            ok = false;
            break;
          }
        if (ok) {
          columns.push_back(candidate);
          trace.stages.push_back({stage, stage_iterations});
          break;
        }
      }
    }
    if (!exhausted) {
      ShMatrix matrix{QshMatrix(m, std::move(columns))};
      return RvsResult{std::move(matrix), std::move(trace), seed};
    }
    last_trace = std::move(trace);
  }
  throw RvsExhausted("RVS exhausted " + std::to_string(budget.max_restarts) +
                         " restarts of " +
                         std::to_string(budget.max_iterations) + " draws",
                     std::move(last_trace));
}

}  // namespace hadamard
