#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hadamard/matrix.hpp"
#include "hadamard/vectorspace.hpp"

namespace hadamard {

/// The seed fully determines a run; restart r derives its stream from
/// seed + r.
struct SearchBudget {
  std::uint64_t max_iterations = 10'000'000;
  std::uint32_t max_restarts = 20;
  std::uint64_t rng_seed = 0;
};

struct RvsStage {
  int stage;                 // column position, 3..4k
  std::uint64_t iterations;  // random draws needed at this stage
};

struct RvsTrace {
  std::vector<RvsStage> stages;
  std::uint32_t restarts_used = 0;
  std::uint64_t total_iterations() const {
    std::uint64_t t = 0;
    for (const auto& s : stages) t += s.iterations;
    return t;
  }
};

class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when RVS exhausts its budget; carries the trace of the last
/// restart for diagnosis.
class RvsExhausted : public SearchFailure {
 public:
  RvsExhausted(const std::string& what, RvsTrace partial)
      : SearchFailure(what), partial_trace(std::move(partial)) {}
  RvsTrace partial_trace;
};

struct ExhaustiveResult {
  std::vector<ShMatrix> matrices;       // columns in lexicographic order
  std::uint64_t candidates_examined;    // unique QSH candidates tested
  bool used_clique_path;
};

/// Streams the C(N_V, 4k-1) unique column combinations in lexicographic
/// order and keeps the orthogonal ones. When the combination count exceeds
/// `max_direct_candidates` the identical output set is produced through the
/// orthogonality-graph clique enumerator instead.
ExhaustiveResult exhaustive_search(int k,
                                   std::uint64_t max_direct_candidates = 1'000'000,
                                   EnumerationLimits limits = {},
                                   std::uint64_t clique_node_budget = 50'000'000);

struct RvsResult {
  ShMatrix matrix;
  RvsTrace trace;
  std::uint64_t seed;  // the seed of the successful restart, for replay
};

/// Random Vector Selection: fixes column 1 to unity and column 2 to a random
/// SH vector, then fills each later column by redrawing until orthogonal to
/// everything already placed. max_iterations caps total draws per restart.
RvsResult rvs_construct(int k, const SearchBudget& budget);

}  // namespace hadamard
