#include "knotguts/states.hpp"

#include "knotguts/error.hpp"
#include "union_find.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

namespace knotguts {

State all_a(const LinkDiagram& d) { return State(d.crossing_count(), Smoothing::A); }
State all_b(const LinkDiagram& d) { return State(d.crossing_count(), Smoothing::B); }

StateResolution resolve(const LinkDiagram& d, const State& state) {
  const int c = d.crossing_count();
  if (static_cast<int>(state.size()) != c) throw Error(ErrorCode::InvalidArgument, "state length differs from crossing count");
  StateResolution h;
  h.state = state;
  if (c == 0) {
    h.circle_count = 1;
    h.region_count = 2;
    h.region_of_face = {0, 1};
    h.circle_regions = {{0, 1}};
    h.circle_darts = {{}};
    return h;
  }
  h.circle_of.assign(4 * c, -1);
  for (int h0 = 0; h0 < 4 * c; ++h0) {
    if (h.circle_of[h0] >= 0) continue;
    const int id = h.circle_count++;
    h.circle_darts.emplace_back();
    // Walk outward along dart h0, then across each crossing by its smoothing.
    int cur = h0;
    do {
      h.circle_of[cur] = id;
      h.circle_darts.back().push_back(cur);
      int p = d.partner(cur);
      h.circle_of[p] = id;
      int x = crossing_of(p);
      cur = half_edge(x, smoothing_mate(slot_of(p), state[x]));
    } while (cur != h0);
  }
  h.segment_ends.resize(c);
  for (int x = 0; x < c; ++x) h.segment_ends[x] = {h.circle_of[half_edge(x, 0)], h.circle_of[half_edge(x, 2)]};

  detail::UnionFind regions(d.face_count());
  for (int x = 0; x < c; ++x) {
    if (state[x] == Smoothing::A) {
      regions.unite(d.face_of_corner(x, 1), d.face_of_corner(x, 3));
    } else {
      regions.unite(d.face_of_corner(x, 0), d.face_of_corner(x, 2));
    }
  }
  std::map<int, int> ids;
  h.region_of_face.resize(d.face_count());
  for (int f = 0; f < d.face_count(); ++f) {
    auto [it, inserted] = ids.emplace(regions.find(f), static_cast<int>(ids.size()));
    h.region_of_face[f] = it->second;
  }
  h.region_count = static_cast<int>(ids.size());
  h.segment_region.resize(c);
  for (int x = 0; x < c; ++x) {
    int corner = state[x] == Smoothing::A ? 1 : 0;
    h.segment_region[x] = h.region_of_face[d.face_of_corner(x, corner)];
  }
  h.circle_regions.resize(h.circle_count);
  for (int i = 0; i < h.circle_count; ++i) {
    int dart = h.circle_darts[i][0];
    int x = crossing_of(dart), k = slot_of(dart);
    h.circle_regions[i] = {h.region_of_face[d.face_of_corner(x, k)],
                           h.region_of_face[d.face_of_corner(x, (k + 3) & 3)]};
  }
  return h;
}

StateGraph state_graph(const StateResolution& h) {
  StateGraph g;
  g.vertex_count = h.circle_count;
  for (int x = 0; x < static_cast<int>(h.segment_ends.size()); ++x)
    g.edges.push_back({h.segment_ends[x][0], h.segment_ends[x][1], x});
  return g;
}

ReducedStateGraph reduce(const StateGraph& g) {
  ReducedStateGraph r;
  r.vertex_count = g.vertex_count;
  std::map<std::pair<int, int>, int> index;
  for (const auto& e : g.edges) {
    auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
    auto [it, inserted] = index.emplace(key, static_cast<int>(r.edges.size()));
    if (inserted) r.edges.push_back({key.first, key.second, {}});
    r.edges[it->second].crossings.push_back(e.crossing);
  }
  return r;
}

bool is_adequate(const StateGraph& g) {
  for (const auto& e : g.edges)
    if (e.u == e.v) return false;
  return true;
}

Homogeneity homogeneity(const StateResolution& h) {
  Homogeneity out;
  std::vector<int> label(h.region_count, -1);
  std::vector<bool> mixed(h.region_count, false);
  for (int x = 0; x < static_cast<int>(h.state.size()); ++x) {
    int r = h.segment_region[x];
    int s = h.state[x] == Smoothing::A ? 0 : 1;
    if (label[r] < 0) label[r] = s;
    else if (label[r] != s) mixed[r] = true;
  }
  for (int r = 0; r < h.region_count; ++r)
    if (mixed[r]) out.mixed_regions.push_back(r);
  out.homogeneous = out.mixed_regions.empty();
  return out;
}

namespace {

int count_bridges(const ReducedStateGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    const auto& e = g.edges[i];
    if (e.u == e.v) continue;
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }
  std::vector<int> tin(g.vertex_count, -1), low(g.vertex_count, 0);
  int timer = 0, bridges = 0;
  // Iterative DFS keyed on the entering edge, so parallel edges are never bridges.
  for (int root = 0; root < g.vertex_count; ++root) {
    if (tin[root] >= 0) continue;
    std::vector<std::tuple<int, int, std::size_t>> stack{{root, -1, 0}};
    tin[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, via, next] = stack.back();
      if (next < adj[v].size()) {
        auto [w, e] = adj[v][next++];
        if (e == via) continue;
        if (tin[w] >= 0) {
          low[v] = std::min(low[v], tin[w]);
        } else {
          tin[w] = low[w] = timer++;
          stack.emplace_back(w, e, 0);
        }
      } else {
        int done = v, done_via = via;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = std::get<0>(stack.back());
          low[parent] = std::min(low[parent], low[done]);
          if (low[done] > tin[parent] && done_via >= 0) ++bridges;
        }
      }
    }
  }
  return bridges;
}

std::vector<int> components_of(int n, const std::vector<std::pair<int, int>>& edges) {
  detail::UnionFind uf(n);
  for (const auto& [u, v] : edges) uf.unite(u, v);
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = uf.find(i);
  return comp;
}

}  // namespace

EulerData euler_data(const StateGraph& g, const ReducedStateGraph& reduced) {
  EulerData out;
  out.vertices = g.vertex_count;
  out.edges = static_cast<int>(g.edges.size());
  out.reduced_edges = static_cast<int>(reduced.edges.size());
  out.chi = out.vertices - out.edges;
  out.chi_reduced = out.vertices - out.reduced_edges;
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : reduced.edges) edges.emplace_back(e.u, e.v);
  auto comp = components_of(reduced.vertex_count, edges);
  std::map<int, long long> chi_of;
  for (int v = 0; v < reduced.vertex_count; ++v) chi_of[comp[v]] += 1;
  for (const auto& e : reduced.edges) chi_of[comp[e.u]] -= 1;
  for (const auto& [root, chi] : chi_of) {
    out.chi_minus += std::max(0LL, -chi);
    out.chi_plus += std::max(0LL, chi);
  }
  out.bridges = count_bridges(reduced);
  return out;
}

bool is_bipartite(const StateGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (const auto& e : g.edges) {
    if (e.u == e.v) return false;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> color(g.vertex_count, -1);
  for (int s = 0; s < g.vertex_count; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const ReducedStateGraph& g) {
  if (static_cast<int>(g.edges.size()) != g.vertex_count - 1) return false;
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges) {
    if (e.u == e.v) return false;
    edges.emplace_back(e.u, e.v);
  }
  auto comp = components_of(g.vertex_count, edges);
  return std::all_of(comp.begin(), comp.end(), [&](int r) { return r == comp[0]; });
}

FiberReport fiber_report(const LinkDiagram& d, const State& state) {
  auto h = resolve(d, state);
  auto g = state_graph(h);
  if (!is_adequate(g)) throw Error(ErrorCode::NotAdequate, "state is not adequate");
  if (!homogeneity(h).homogeneous) throw Error(ErrorCode::NotHomogeneous, "state is not homogeneous");
  auto r = reduce(g);
  FiberReport out;
  out.is_fiber = is_tree(r);
  out.orientable = is_bipartite(g);
  if (out.is_fiber && d.component_count() == 1) {
    long long chi = static_cast<long long>(g.vertex_count) - static_cast<long long>(g.edges.size());
    out.genus = Rational(1 - chi, 2);
  }
  return out;
}

bool essential_state_surface(const LinkDiagram& d, const State& state) {
  auto h = resolve(d, state);
  if (!homogeneity(h).homogeneous) throw Error(ErrorCode::NotHomogeneous, "state is not homogeneous");
  return is_adequate(state_graph(h));
}

int turaev_genus(const LinkDiagram& d) {
  const int va = resolve(d, all_a(d)).circle_count;
  const int vb = resolve(d, all_b(d)).circle_count;
  return (2 + d.crossing_count() - va - vb) / 2;
}

namespace {

std::string dot_header(const std::string& name, int vertices) {
  std::string out = "graph " + name + " {\n";
  for (int v = 0; v < vertices; ++v) out += "  c" + std::to_string(v) + ";\n";
  return out;
}

}  // namespace

std::string to_dot(const StateResolution& h, const std::string& name) {
  std::string out = dot_header(name, h.circle_count);
  for (int x = 0; x < static_cast<int>(h.segment_ends.size()); ++x) {
    out += "  c" + std::to_string(h.segment_ends[x][0]) + " -- c" + std::to_string(h.segment_ends[x][1]) +
           " [label=\"" + std::to_string(x) + "\", region=" + std::to_string(h.segment_region[x]) +
           ", smoothing=" + (h.state[x] == Smoothing::A ? "A" : "B") + "];\n";
  }
  return out + "}\n";
}

std::string to_dot(const StateGraph& g, const std::string& name) {
  std::string out = dot_header(name, g.vertex_count);
  for (const auto& e : g.edges)
    out += "  c" + std::to_string(e.u) + " -- c" + std::to_string(e.v) + " [label=\"" + std::to_string(e.crossing) + "\"];\n";
  return out + "}\n";
}

std::string to_dot(const ReducedStateGraph& g, const std::string& name) {
  std::string out = dot_header(name, g.vertex_count);
  for (const auto& e : g.edges) {
    std::string label;
    for (std::size_t i = 0; i < e.crossings.size(); ++i) label += (i ? "," : "") + std::to_string(e.crossings[i]);
    out += "  c" + std::to_string(e.u) + " -- c" + std::to_string(e.v) + " [label=\"" + label +
           "\", multiplicity=" + std::to_string(e.crossings.size()) + "];\n";
  }
  return out + "}\n";
}

}  // namespace knotguts
