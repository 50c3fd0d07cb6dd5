#pragma once

#include <vector>

#include "smp/matrix.hpp"

namespace smp::graph {

// Digraph of a nonnegative matrix: edge (i,j) iff a(i,j) > 0.  Entries below
// 1e-15 are treated as zero to absorb round-off from upstream estimation.
class Digraph {
 public:
  explicit Digraph(std::size_t vertex_count)
      : adjacency_(vertex_count), reverse_(vertex_count) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  void add_edge(int from, int to);
  bool has_edge(int from, int to) const;
  const std::vector<int>& successors(int v) const { return adjacency_[v]; }
  const std::vector<int>& predecessors(int v) const { return reverse_[v]; }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> reverse_;
};

enum class BlockKind { transient, recurrent };

// SCC decomposition of a stochastic matrix in canonical (block upper
// triangular) order: transient classes first, closed recurrent classes last.
struct StructureReport {
  std::vector<std::vector<int>> classes;  // canonical order, 0-based states
  std::vector<int> permutation;           // permutation[new_pos] = old index
  std::vector<BlockKind> kinds;           // per class
  std::vector<double> radii;              // spectral radius per diagonal block
  std::vector<int> ua_states;             // ascending, 0-based
  bool irreducible = false;
};

Digraph digraph_of(const Matrix& a);

// True iff a directed path of length >= 1 runs from i to j.  i == j requires
// a genuine cycle through j.
bool accessible(const Digraph& g, int i, int j);

// True iff every state reaches j (including j itself via a cycle).
bool is_ua(const Digraph& g, int j);

// All states i with no path of length >= 1 to j, ascending.
std::vector<int> unreachable_sources(const Digraph& g, int j);

bool strongly_connected(const Digraph& g);

// Tarjan SCCs in reverse topological order of the condensation (each class's
// successors precede it in the output).
std::vector<std::vector<int>> tarjan_scc(const Digraph& g);

StructureReport structure(const Matrix& p);

}  // namespace smp::graph
