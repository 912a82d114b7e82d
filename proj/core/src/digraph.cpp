#include "subsum/digraph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

namespace subsum {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix reachability(const Digraph& g) {
  const std::size_t n = g.order();
  Matrix reach(n + 1, std::vector<char>(n + 1, 0));
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    auto& row = reach[s];
    row[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.successors(v)) {
        if (!row[w]) {
          row[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return reach;
}

std::vector<char> membership(const Digraph& g, std::span<const Vertex> chosen) {
  std::vector<char> in(g.order() + 1, 0);
  for (Vertex v : chosen) {
    if (v < 1 || v > g.order()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) : out_(n), in_(n) {
  for (const auto& [u, v] : arcs) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                       ") references a vertex outside 1.." + std::to_string(n));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  }
  std::sort(arcs.begin(), arcs.end());
  if (auto dup = std::adjacent_find(arcs.begin(), arcs.end()); dup != arcs.end()) {
    throw InputError("duplicate arc (" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + ")");
  }
  for (const auto& [u, v] : arcs) {
    out_[u - 1].push_back(v);
    in_[v - 1].push_back(u);
  }
  // in_ lists are filled in ascending u order already.
  arc_count_ = arcs.size();
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 1 || v > order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range 1.." +
                            std::to_string(order()));
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& row = out_[u - 1];
  return std::binary_search(row.begin(), row.end(), v);
}

std::span<const Vertex> Digraph::successors(Vertex v) const {
  check_vertex(v);
  return out_[v - 1];
}

std::span<const Vertex> Digraph::predecessors(Vertex v) const {
  check_vertex(v);
  return in_[v - 1];
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 1; u <= order(); ++u) {
    for (Vertex v : out_[u - 1]) result.emplace_back(u, v);
  }
  return result;
}

std::vector<Vertex> Digraph::sources() const {
  std::vector<Vertex> result;
  for (Vertex v = 1; v <= order(); ++v) {
    if (in_[v - 1].empty()) result.push_back(v);
  }
  return result;
}

std::vector<Vertex> Digraph::sinks() const {
  std::vector<Vertex> result;
  for (Vertex v = 1; v <= order(); ++v) {
    if (out_[v - 1].empty()) result.push_back(v);
  }
  return result;
}

VertexSet predecessors(const Digraph& g, Vertex v) {
  auto p = g.predecessors(v);
  return {p.begin(), p.end()};
}

VertexSet successors(const Digraph& g, Vertex v) {
  auto s = g.successors(v);
  return {s.begin(), s.end()};
}

VertexSet reachable_set(const Digraph& g, Vertex x) {
  g.successors(x);  // range check
  std::vector<char> seen(g.order() + 1, 0);
  std::vector<Vertex> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.successors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  VertexSet result;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (seen[v]) result.push_back(v);
  }
  return result;
}

SccPartition scc(const Digraph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.order();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n + 1, unvisited), low(n + 1, 0);
  std::vector<char> on_stack(n + 1, 0);
  std::vector<Vertex> stack;
  std::vector<VertexSet> components;
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (Vertex root = 1; root <= n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& frame = call.back();
      auto succ = g.successors(frame.v);
      if (frame.next < succ.size()) {
        Vertex w = succ[frame.next++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[frame.v] = std::min(low[frame.v], index[w]);
        }
        continue;
      }
      Vertex v = frame.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexSet component;
        Vertex w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }

  std::sort(components.begin(), components.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  SccPartition result;
  result.component_of.assign(n, 0);
  for (std::size_t k = 0; k < components.size(); ++k) {
    for (Vertex v : components[k]) result.component_of[v - 1] = k;
  }
  result.components = std::move(components);
  return result;
}

CondensedInstance condense(const Digraph& g, const SizeMap& sizes) {
  SccPartition parts = scc(g);
  const std::size_t t = parts.components.size();
  std::vector<Arc> arcs;
  for (const auto& [u, v] : g.arcs()) {
    std::size_t cu = parts.component_of[u - 1];
    std::size_t cv = parts.component_of[v - 1];
    if (cu != cv) arcs.emplace_back(cu + 1, cv + 1);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  std::vector<Weight> merged(t, 0);
  for (std::size_t k = 0; k < t; ++k) {
    for (Vertex v : parts.components[k]) merged[k] += sizes[v];
  }
  return {Digraph(t, std::move(arcs)), SizeMap(std::move(merged)), std::move(parts.components)};
}

std::vector<Vertex> topological_order(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> indeg(n + 1, 0);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 1; v <= n; ++v) {
    indeg[v] = g.in_degree(v);
    if (indeg[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(n);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : g.successors(v)) {
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (order.size() != n) throw NotADagError();
  return order;
}

bool is_acyclic(const Digraph& g) {
  try {
    topological_order(g);
    return true;
  } catch (const NotADagError&) {
    return false;
  }
}

Digraph transitive_closure(const Digraph& g) {
  const Matrix reach = reachability(g);
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (u != v && reach[u][v]) arcs.emplace_back(u, v);
    }
  }
  return Digraph(g.order(), std::move(arcs));
}

Digraph transitive_reduction(const Digraph& g) {
  if (!is_acyclic(g)) throw NotADagError();
  const Matrix reach = reachability(g);
  std::vector<Arc> kept;
  for (const auto& [u, v] : g.arcs()) {
    bool implied = false;
    for (Vertex w : g.successors(u)) {
      if (w != v && reach[w][v]) {
        implied = true;
        break;
      }
    }
    if (!implied) kept.emplace_back(u, v);
  }
  return Digraph(g.order(), std::move(kept));
}

Digraph induced_subgraph(const Digraph& g, const VertexSet& keep) {
  VertexSet sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> label(g.order() + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    g.successors(sorted[i]);  // range check
    label[sorted[i]] = i + 1;
  }
  std::vector<Arc> arcs;
  for (Vertex u : sorted) {
    for (Vertex v : g.successors(u)) {
      if (label[v]) arcs.emplace_back(label[u], label[v]);
    }
  }
  return Digraph(sorted.size(), std::move(arcs));
}

std::vector<VertexSet> weak_components(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n + 1, 0);
  std::vector<VertexSet> result;
  for (Vertex root = 1; root <= n; ++root) {
    if (seen[root]) continue;
    VertexSet component;
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (auto nbrs : {g.successors(v), g.predecessors(v)}) {
        for (Vertex w : nbrs) {
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(component.begin(), component.end());
    result.push_back(std::move(component));
  }
  return result;
}

std::optional<Vertex> digraph_constraint_witness(const Digraph& g,
                                                 std::span<const Vertex> chosen) {
  const auto in = membership(g, chosen);
  for (Vertex y = 1; y <= g.order(); ++y) {
    if (in[y]) continue;
    for (Vertex p : g.predecessors(y)) {
      if (in[p]) return y;
    }
  }
  return std::nullopt;
}

std::optional<Vertex> weak_digraph_constraint_witness(const Digraph& g,
                                                      std::span<const Vertex> chosen) {
  const auto in = membership(g, chosen);
  for (Vertex y = 1; y <= g.order(); ++y) {
    if (in[y]) continue;
    auto preds = g.predecessors(y);
    if (preds.empty()) continue;
    if (std::all_of(preds.begin(), preds.end(), [&](Vertex p) { return in[p] != 0; })) {
      return y;
    }
  }
  return std::nullopt;
}

bool check_digraph_constraint(const Digraph& g, std::span<const Vertex> chosen) {
  return !digraph_constraint_witness(g, chosen).has_value();
}

bool check_weak_digraph_constraint(const Digraph& g, std::span<const Vertex> chosen) {
  return !weak_digraph_constraint_witness(g, chosen).has_value();
}

std::optional<std::vector<Vertex>> is_transitive_tournament(const Digraph& g) {
  const std::size_t n = g.order();
  if (g.arc_count() != n * (n - (n > 0 ? 1 : 0)) / 2) return std::nullopt;
  std::vector<std::size_t> seen_degree(n, 0);
  std::vector<Vertex> by_rank(n, 0);
  for (Vertex v = 1; v <= n; ++v) {
    std::size_t d = g.out_degree(v);
    if (d >= n || seen_degree[d]) return std::nullopt;
    seen_degree[d] = 1;
    by_rank[n - 1 - d] = v;
  }
  // Distinct outdegrees 0..n-1 with n(n-1)/2 arcs; confirm every pair is joined once.
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (g.has_arc(u, v) == g.has_arc(v, u)) return std::nullopt;
    }
  }
  return by_rank;
}

bool is_bioriented_clique(const Digraph& g) {
  const std::size_t n = g.order();
  return g.arc_count() == n * (n - (n > 0 ? 1 : 0));
}

bool is_n_free(const Digraph& g) {
  const Matrix reach = reachability(g);
  const std::size_t n = g.order();
  auto arc = [&](Vertex a, Vertex b) { return a != b && reach[a][b]; };
  // u -> w, u -> x, v -> w; every other ordered pair among the four absent.
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex w = 1; w <= n; ++w) {
      if (!arc(u, w)) continue;
      for (Vertex x = 1; x <= n; ++x) {
        if (x == w || !arc(u, x)) continue;
        for (Vertex v = 1; v <= n; ++v) {
          if (v == u || v == w || v == x || !arc(v, w)) continue;
          const std::array<Vertex, 4> q{u, v, w, x};
          int arcs = 0;
          for (Vertex a : q) {
            for (Vertex b : q) arcs += arc(a, b) ? 1 : 0;
          }
          if (arcs == 3) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace subsum
