#include "hadamard/ortho_graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "json.hpp"

namespace hadamard {

OrthoGraph OrthoGraph::build(int k, EnumerationLimits limits) {
  std::vector<ShVector> vertices = enumerate_sh_vectors(k, limits);
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(vertices.size());
  for (std::uint32_t i = 0; i < vertices.size(); ++i)
    index.emplace(vertices[i].bits()[0], i);

  // Each neighborhood is the permuted PSH family, not an
  // all-pairs scan.
  std::vector<std::vector<std::uint32_t>> adjacency(vertices.size());
  for (std::uint32_t i = 0; i < vertices.size(); ++i) {
    auto orth = orthogonal_set(vertices[i], limits);
    auto& row = adjacency[i];
    row.reserve(orth.size());
    for (const auto& u : orth) row.push_back(index.at(u.bits()[0]));
    std::sort(row.begin(), row.end());
  }
  return OrthoGraph(k, std::move(vertices), std::move(adjacency));
}

std::uint64_t OrthoGraph::edge_count() const {
  std::uint64_t degree_sum = 0;
  for (const auto& row : adjacency_) degree_sum += row.size();
  return degree_sum / 2;
}

namespace {

struct CliqueSearch {
  const std::vector<std::vector<std::uint32_t>>& adj;
  int target;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<std::uint32_t> current;
  std::vector<std::vector<std::uint32_t>> found;

  // Candidates are kept sorted and above the last chosen index, so each
  // clique is emitted exactly once, in lexicographic order.
  void extend(const std::vector<std::uint32_t>& candidates) {
    if (static_cast<int>(current.size()) == target) {
      found.push_back(current);
      return;
    }
    int needed = target - static_cast<int>(current.size());
    if (static_cast<int>(candidates.size()) < needed) return;
    for (std::size_t ci = 0; ci + static_cast<std::size_t>(needed) <= candidates.size(); ++ci) {
      if (++nodes > budget)
        throw CapacityError("clique search exceeded its node budget", nodes);
      std::uint32_t v = candidates[ci];
      std::vector<std::uint32_t> next;
      next.reserve(candidates.size() - ci - 1);
      const auto& nv = adj[v];
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(ci) + 1,
                            candidates.end(),
                            std::lower_bound(nv.begin(), nv.end(), v + 1),
                            nv.end(), std::back_inserter(next));
      current.push_back(v);
      extend(next);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<std::uint32_t>> OrthoGraph::find_cliques(
    int size, std::uint64_t node_budget) const {
  if (size < 1) throw PreconditionError("clique size must be >= 1");
  CliqueSearch search{adjacency_, size, node_budget};
  std::vector<std::uint32_t> all(vertices_.size());
  std::iota(all.begin(), all.end(), 0u);
  search.extend(all);
  return std::move(search.found);
}

ShMatrix OrthoGraph::clique_to_matrix(
    const std::vector<std::uint32_t>& clique) const {
  std::vector<ShVector> cols;
  cols.reserve(clique.size());
  for (auto idx : clique) cols.push_back(vertices_[idx]);
  std::sort(cols.begin(), cols.end());
  return ShMatrix(QshMatrix(4 * k_, std::move(cols)));
}

void OrthoGraph::export_graph(std::ostream& out, GraphFormat format) const {
  switch (format) {
    case GraphFormat::Dot: {
      out << "graph ortho_k" << k_ << " {\n";
      for (std::size_t i = 0; i < vertices_.size(); ++i)
        out << "  n" << i << " [label=\"" << vertices_[i].to_string() << "\"];\n";
      for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (auto j : adjacency_[i])
          if (j > i) out << "  n" << i << " -- n" << j << ";\n";
      out << "}\n";
      return;
    }
    case GraphFormat::Json: {
      nlohmann::json j;
      j["k"] = k_;
      j["order"] = 4 * k_;
      auto& verts = j["vertices"] = nlohmann::json::array();
      for (const auto& v : vertices_) verts.push_back(v.to_string());
      auto& adj = j["adjacency"] = nlohmann::json::array();
      for (const auto& row : adjacency_) adj.push_back(row);
      out << j.dump(2) << '\n';
      return;
    }
    case GraphFormat::EdgeList: {
      for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (auto j : adjacency_[i])
          if (j > i) out << i << ' ' << j << '\n';
      return;
    }
  }
  throw PreconditionError("unknown graph export format");
}

}  // namespace hadamard
