#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hadamard/matrix.hpp"
#include "hadamard/sh_vector.hpp"
#include "hadamard/vectorspace.hpp"

namespace hadamard {

enum class GraphFormat { Dot, Json, EdgeList };

/// Orthogonality graph over all C(4k,2k) SH vectors: vertices indexed by
/// increasing packed-bit value, edge (i,j) iff <v_i, v_j> = 0. Immutable
/// after build; C(2k,k)^2-regular.
class OrthoGraph {
 public:
  static OrthoGraph build(int k, EnumerationLimits limits = {});

  int k() const { return k_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const ShVector& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<std::uint32_t>& neighbors(std::size_t i) const {
    return adjacency_[i];
  }

  std::uint64_t edge_count() const;

  /// All vertex sets of the given size that are pairwise adjacent, in
  /// lexicographic index order. `node_budget` caps explored search nodes.
  std::vector<std::vector<std::uint32_t>> find_cliques(
      int size, std::uint64_t node_budget = 50'000'000) const;

  /// Assembles a clique of size 4k-1 with the unity column into a matrix;
  /// columns sorted by packed-bit value.
  ShMatrix clique_to_matrix(const std::vector<std::uint32_t>& clique) const;

  void export_graph(std::ostream& out, GraphFormat format) const;

 private:
  OrthoGraph(int k, std::vector<ShVector> vertices,
             std::vector<std::vector<std::uint32_t>> adjacency)
      : k_(k), vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {}

  int k_;
  std::vector<ShVector> vertices_;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

}  // namespace hadamard
