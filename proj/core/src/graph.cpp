#include "smp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smp/linalg.hpp"

namespace smp::graph {

namespace {
constexpr double kEdgeEps = 1e-15;
}

void Digraph::add_edge(int from, int to) {
  adjacency_[from].push_back(to);
  reverse_[to].push_back(from);
}

bool Digraph::has_edge(int from, int to) const {
  const auto& succ = adjacency_[from];
  return std::find(succ.begin(), succ.end(), to) != succ.end();
}

Digraph digraph_of(const Matrix& a) {
  if (!a.square()) throw DimensionError("digraph_of: non-square matrix");
  a.check_nonnegative("digraph_of");
  Digraph g(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) > kEdgeEps) g.add_edge(static_cast<int>(i),
                                         static_cast<int>(j));
  return g;
}

namespace {

void check_state(const Digraph& g, int v, const char* context) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
    throw DomainError(std::string(context) + ": state " + std::to_string(v + 1) +
                      " out of range 1.." + std::to_string(g.vertex_count()));
}

// Vertices with a path of length >= 0 to j (reverse traversal from j).
std::vector<bool> co_reachable(const Digraph& g, int j) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack{j};
  seen[j] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : g.predecessors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace

bool accessible(const Digraph& g, int i, int j) {
  check_state(g, i, "accessible");
  check_state(g, j, "accessible");
  auto s0 = co_reachable(g, j);
  for (int k : g.successors(i))
    if (s0[k]) return true;
  return false;
}

std::vector<int> unreachable_sources(const Digraph& g, int j) {
  check_state(g, j, "is_ua");
  auto s0 = co_reachable(g, j);
  std::vector<int> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    bool reaches = false;
    for (int k : g.successors(static_cast<int>(i)))
      if (s0[k]) {
        reaches = true;
        break;
      }
    if (!reaches) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool is_ua(const Digraph& g, int j) { return unreachable_sources(g, j).empty(); }

std::vector<std::vector<int>> tarjan_scc(const Digraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = g.successors(f.v);
      if (f.child < succ.size()) {
        int w = succ[f.child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
      } else {
        if (lowlink[f.v] == index[f.v]) {
          std::vector<int> comp;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp.push_back(w);
          } while (w != f.v);
          std::sort(comp.begin(), comp.end());
          components.push_back(std::move(comp));
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty())
          lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
      }
    }
  }
  return components;
}

bool strongly_connected(const Digraph& g) {
  return tarjan_scc(g).size() == 1;
}

StructureReport structure(const Matrix& p) {
  if (!p.square()) throw DomainError("structure: p must be square");
  const std::size_t m = p.rows();
  p.check_finite("structure");
  for (std::size_t i = 0; i < m; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (p(i, j) < 0.0 || p(i, j) > 1.0)
        throw DomainError("structure: p is not a stochastic matrix (entry (" +
                          std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") outside [0,1])");
      sum += p(i, j);
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw DomainError("structure: p is not a stochastic matrix (row " +
                        std::to_string(i + 1) + " sums to " +
                        std::to_string(sum) + ")");
  }

  Digraph g = digraph_of(p);
  auto components = tarjan_scc(g);  // reverse topological
  const std::size_t nc = components.size();

  std::vector<int> comp_of(m);
  for (std::size_t c = 0; c < nc; ++c)
    for (int v : components[c]) comp_of[v] = static_cast<int>(c);

  // Closed classes (no edge leaving) are the recurrent ones.
  std::vector<bool> closed(nc, true);
  for (std::size_t v = 0; v < m; ++v)
    for (int w : g.successors(static_cast<int>(v)))
      if (comp_of[w] != comp_of[v]) closed[comp_of[v]] = false;

  // Longest-path depth in the condensation; components arrive successors
  // first, so walk them in reverse for a topological sweep.
  std::vector<int> depth(nc, 0);
  for (std::size_t c = nc; c-- > 0;) {
    for (int v : components[c])
      for (int w : g.successors(v)) {
        int d = comp_of[w];
        if (d != static_cast<int>(c))
          depth[d] = std::max(depth[d], depth[c] + 1);
      }
  }

  // Canonical order: transients before recurrents, then by depth (a valid
  // topological order), ties broken on smallest original state index.
  std::vector<std::size_t> order(nc);
  for (std::size_t c = 0; c < nc; ++c) order[c] = c;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (closed[a] != closed[b]) return !closed[a];
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return components[a].front() < components[b].front();
  });

  StructureReport report;
  report.irreducible = nc == 1;
  for (std::size_t pos = 0; pos < nc; ++pos) {
    const auto& comp = components[order[pos]];
    const std::size_t k = comp.size();
    Matrix block(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) block(a, b) = p(comp[a], comp[b]);
    report.classes.push_back(comp);
    report.kinds.push_back(closed[order[pos]] ? BlockKind::recurrent
                                              : BlockKind::transient);
    report.radii.push_back(linalg::spectral_radius(block));
    for (int v : comp) report.permutation.push_back(v);
  }
  for (std::size_t j = 0; j < m; ++j)
    if (is_ua(g, static_cast<int>(j)))
      report.ua_states.push_back(static_cast<int>(j));
  return report;
}

}  // namespace smp::graph
