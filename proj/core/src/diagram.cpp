#include "knotguts/diagram.hpp"

#include "knotguts/error.hpp"
#include "union_find.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace knotguts {

namespace {

int opposite(int h) { return half_edge(crossing_of(h), (slot_of(h) + 2) & 3); }

}  // namespace

LinkDiagram::LinkDiagram() : faces_(2) {}

LinkDiagram LinkDiagram::build(const std::vector<int>& partner, const std::vector<bool>& under02,
                               const std::vector<int>& strong, const std::vector<int>& weak, bool strict) {
  const int c = static_cast<int>(under02.size());
  const int n = 4 * c;
  if (static_cast<int>(partner.size()) != n) throw Error(ErrorCode::InvalidArgument, "partner array has wrong size");
  if (c == 0) return LinkDiagram();
  for (int h = 0; h < n; ++h) {
    int p = partner[h];
    if (p < 0 || p >= n || p == h || partner[p] != h)
      throw Error(ErrorCode::InvalidArgument, "arc pairing is not a fixed-point-free involution");
  }

  detail::UnionFind crossings(c);
  for (int h = 0; h < n; ++h) crossings.unite(crossing_of(h), crossing_of(partner[h]));
  if (crossings.sets() != 1) throw Error(ErrorCode::Disconnected, "diagram is not connected");

  auto hint = [](const std::vector<int>& v, int h) { return v.empty() ? -1 : v[h]; };

  std::vector<int> in(n, -1);
  std::vector<int> comp(n, -1);
  int components = 0;
  for (int h0 = 0; h0 < n; ++h0) {
    if (comp[h0] >= 0) continue;
    std::vector<int> ins, outs;
    int cur = h0;
    do {
      ins.push_back(cur);
      int o = opposite(cur);
      outs.push_back(o);
      comp[cur] = comp[o] = components;
      cur = partner[o];
    } while (cur != h0);
    auto votes = [&](const std::vector<int>& v, int& keep, int& flip) {
      for (int h : ins) {
        if (hint(v, h) == 1) ++keep;
        if (hint(v, h) == 0) ++flip;
      }
      for (int h : outs) {
        if (hint(v, h) == 0) ++keep;
        if (hint(v, h) == 1) ++flip;
      }
    };
    int keep = 0, flip = 0;
    votes(strong, keep, flip);
    if (keep > 0 && flip > 0 && strict)
      throw Error(ErrorCode::InconsistentOrientation,
                  "orientation of component " + std::to_string(components) + " is inconsistent");
    if (keep == 0 && flip == 0) votes(weak, keep, flip);
    const bool reversed = flip > keep;
    for (int h : ins) in[h] = reversed ? 0 : 1;
    for (int h : outs) in[h] = reversed ? 1 : 0;
    ++components;
  }

  std::vector<int> rot(c);
  for (int x = 0; x < c; ++x) {
    int u = under02[x] ? 0 : 1;
    rot[x] = in[half_edge(x, u)] ? u : u + 2;
  }
  auto remap = [&](int h) { return half_edge(crossing_of(h), (slot_of(h) - rot[crossing_of(h)] + 4) & 3); };

  LinkDiagram d;
  d.partner_.assign(n, -1);
  d.component_of_.assign(n, -1);
  d.over_in_.assign(c, 1);
  for (int h = 0; h < n; ++h) {
    d.partner_[remap(h)] = remap(partner[h]);
    d.component_of_[remap(h)] = comp[h];
  }
  for (int x = 0; x < c; ++x) {
    int old1 = half_edge(x, (1 + rot[x]) & 3);
    d.over_in_[x] = in[old1] ? 1 : 3;
  }
  d.components_ = components;

  d.faces_.clear();
  d.face_of_dart_.assign(n, -1);
  for (int h0 = 0; h0 < n; ++h0) {
    if (d.face_of_dart_[h0] >= 0) continue;
    const int f = static_cast<int>(d.faces_.size());
    d.faces_.emplace_back();
    int h = h0;
    do {
      d.face_of_dart_[h] = f;
      d.faces_.back().push_back(h);
      int p = d.partner_[h];
      h = half_edge(crossing_of(p), (slot_of(p) + 3) & 3);
    } while (h != h0);
  }
  if (static_cast<int>(d.faces_.size()) != c + 2)
    throw Error(ErrorCode::NonPlanar, "arc pairing is not planar: " + std::to_string(d.faces_.size()) +
                                          " faces, expected " + std::to_string(c + 2));
  return d;
}

LinkDiagram LinkDiagram::from_planar_map(const std::vector<int>& partner, const std::vector<bool>& under02,
                                         const std::vector<int>& incoming) {
  return build(partner, under02, incoming, {}, false);
}

LinkDiagram LinkDiagram::from_pd(const PDCode& pd) {
  const int c = static_cast<int>(pd.crossings.size());
  if (c == 0) throw Error(ErrorCode::EmptyInput, "PD code has no crossings");
  std::map<int, std::vector<int>> where;
  for (int x = 0; x < c; ++x)
    for (int k = 0; k < 4; ++k) where[pd.crossings[x][k]].push_back(half_edge(x, k));
  std::vector<int> partner(4 * c, -1);
  for (const auto& [label, hs] : where) {
    if (hs.size() != 2)
      throw Error(ErrorCode::ArcCount, "arc label " + std::to_string(label) + " appears " +
                                           std::to_string(hs.size()) + " times");
    partner[hs[0]] = hs[1];
    partner[hs[1]] = hs[0];
  }
  std::vector<int> strong(4 * c, -1), weak(4 * c, -1);
  for (int x = 0; x < c; ++x) {
    strong[half_edge(x, 0)] = 1;
    strong[half_edge(x, 2)] = 0;
    const int j = pd.crossings[x][1];
    const int l = pd.crossings[x][3];
    const bool three_in = (j == l + 1) || (l > j + 1);
    weak[half_edge(x, 3)] = three_in ? 1 : 0;
    weak[half_edge(x, 1)] = three_in ? 0 : 1;
  }
  return build(partner, std::vector<bool>(c, true), strong, weak, true);
}

LinkDiagram LinkDiagram::from_braid(const BraidWord& word) {
  const int n = word.strands;
  if (n < 1) throw Error(ErrorCode::MissingStrandCount, "braid needs at least one strand");
  PlanarBuilder b;
  std::vector<int> bottom(n), current(n);
  for (int p = 0; p < n; ++p) bottom[p] = current[p] = b.add_terminal();
  for (const auto& letter : word.letters) {
    if (letter.generator < 1 || letter.generator >= n)
      throw Error(ErrorCode::GeneratorOutOfRange, "generator s" + std::to_string(letter.generator) + " out of range");
    const int i = letter.generator - 1;
    const int count = letter.exponent < 0 ? -letter.exponent : letter.exponent;
    for (int t = 0; t < count; ++t) {
      const int x = b.add_crossing();
      int sw, se, nw, ne;
      if (letter.exponent > 0) {
        ne = b.port(x, 0), nw = b.port(x, 1), sw = b.port(x, 2), se = b.port(x, 3);
      } else {
        nw = b.port(x, 0), sw = b.port(x, 1), se = b.port(x, 2), ne = b.port(x, 3);
      }
      b.connect(current[i], sw);
      b.connect(current[i + 1], se);
      b.hint_incoming(sw, true);
      b.hint_incoming(se, true);
      b.hint_incoming(nw, false);
      b.hint_incoming(ne, false);
      current[i] = nw;
      current[i + 1] = ne;
    }
  }
  for (int p = 0; p < n; ++p) b.connect(current[p], bottom[p]);
  return b.build();
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (int x = 0; x < crossing_count(); ++x) w += sign(x);
  return w;
}

bool LinkDiagram::is_incoming(int h) const {
  const int k = slot_of(h);
  if (k == 0) return true;
  if (k == 2) return false;
  return k == over_in_[crossing_of(h)];
}

PDCode LinkDiagram::to_pd() const {
  const int c = crossing_count();
  PDCode pd;
  if (c == 0) return pd;
  std::vector<int> label(4 * c, 0);
  int next = 0;
  std::vector<bool> done(components_, false);
  // Start each component at its lowest incoming under-slot when it has one.
  std::vector<int> start(components_, -1);
  for (int h = 0; h < 4 * c; ++h) {
    if (!is_incoming(h)) continue;
    int& s = start[component_of_[h]];
    if (s < 0 || (slot_of(s) != 0 && slot_of(h) == 0)) s = h;
  }
  for (int comp = 0; comp < components_; ++comp) {
    const int h0 = start[comp];
    int cur = h0;
    label[cur] = ++next;
    while (true) {
      int o = opposite(cur);
      int nxt = partner_[o];
      if (nxt == h0) break;
      label[nxt] = ++next;
      cur = nxt;
    }
  }
  for (int h = 0; h < 4 * c; ++h)
    if (!is_incoming(h)) label[h] = label[partner_[h]];
  for (int x = 0; x < c; ++x)
    pd.crossings.push_back({label[half_edge(x, 0)], label[half_edge(x, 1)], label[half_edge(x, 2)],
                            label[half_edge(x, 3)]});
  return pd;
}

TwistRegions twist_regions(const LinkDiagram& d) {
  const int c = d.crossing_count();
  TwistRegions out;
  detail::UnionFind chains(c), classes(c);
  for (const auto& face : d.faces()) {
    if (face.size() != 2) continue;
    int a = crossing_of(face[0]), b = crossing_of(face[1]);
    if (a != b) chains.unite(a, b);
  }
  std::map<std::pair<int, int>, std::vector<int>> by_pair;
  for (int x = 0; x < c; ++x) {
    for (int k = 0; k < 2; ++k) {
      int f = d.face_of_corner(x, k), g = d.face_of_corner(x, k + 2);
      if (f == g) continue;
      by_pair[{std::min(f, g), std::max(f, g)}].push_back(x);
    }
  }
  for (const auto& [pair, xs] : by_pair)
    for (std::size_t i = 1; i < xs.size(); ++i) classes.unite(xs[0], xs[i]);

  auto collect = [c](detail::UnionFind& uf) {
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < c; ++x) groups[uf.find(x)].push_back(x);
    std::vector<std::vector<int>> v;
    for (auto& [root, xs] : groups) v.push_back(std::move(xs));
    return v;
  };
  out.regions = collect(chains);
  out.equivalence_classes = collect(classes);
  out.region_of.assign(c, -1);
  for (int r = 0; r < static_cast<int>(out.regions.size()); ++r)
    for (int x : out.regions[r]) out.region_of[x] = r;
  out.twist_number = static_cast<int>(out.regions.size());
  out.twist_reduced = out.regions == out.equivalence_classes;
  return out;
}

std::optional<TwoEdgeCut> find_essential_cut(const LinkDiagram& d) {
  const int c = d.crossing_count();
  if (c < 2) return std::nullopt;
  std::map<std::pair<int, int>, std::vector<int>> by_faces;
  for (int h = 0; h < 4 * c; ++h) {
    if (d.partner(h) < h) continue;
    int f = d.face_of_corner(crossing_of(h), slot_of(h));
    int g = d.face_of_corner(crossing_of(h), (slot_of(h) + 3) & 3);
    if (f == g) continue;
    by_faces[{std::min(f, g), std::max(f, g)}].push_back(h);
  }
  for (const auto& [faces, arcs] : by_faces) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        const int e1 = arcs[i], e2 = arcs[j];
        auto cut = [&](int h) {
          int a = std::min(h, d.partner(h));
          return a == e1 || a == e2;
        };
        std::vector<bool> seen(c, false);
        std::queue<int> q;
        q.push(crossing_of(e1));
        seen[crossing_of(e1)] = true;
        int reached = 1;
        while (!q.empty()) {
          int x = q.front();
          q.pop();
          for (int k = 0; k < 4; ++k) {
            int h = half_edge(x, k);
            if (cut(h)) continue;
            int y = crossing_of(d.partner(h));
            if (!seen[y]) {
              seen[y] = true;
              ++reached;
              q.push(y);
            }
          }
        }
        if (reached == c) continue;
        TwoEdgeCut out;
        out.side = seen;
        out.arc1 = seen[crossing_of(e1)] ? e1 : d.partner(e1);
        out.arc2 = seen[crossing_of(e2)] ? e2 : d.partner(e2);
        return out;
      }
    }
  }
  return std::nullopt;
}

PrimeReport primeness(const LinkDiagram& d) {
  PrimeReport r;
  for (int x = 0; x < d.crossing_count(); ++x) {
    if (d.face_of_corner(x, 0) == d.face_of_corner(x, 2) || d.face_of_corner(x, 1) == d.face_of_corner(x, 3)) {
      r.has_nugatory = true;
      r.nugatory_crossings.push_back(x);
    }
  }
  r.is_prime = !find_essential_cut(d).has_value();
  return r;
}

SplitResult split_along(const LinkDiagram& d, const TwoEdgeCut& cut) {
  const int c = d.crossing_count();
  SplitResult out;
  std::vector<int> index(c, -1);
  for (int x = 0; x < c; ++x) {
    auto& list = cut.side[x] ? out.first_crossings : out.second_crossings;
    index[x] = static_cast<int>(list.size());
    list.push_back(x);
  }
  const int p1 = d.partner(cut.arc1), p2 = d.partner(cut.arc2);
  auto piece = [&](const std::vector<int>& xs, int a, int b) {
    const int m = static_cast<int>(xs.size());
    std::vector<int> partner(4 * m);
    std::vector<int> incoming(4 * m);
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k < 4; ++k) {
        int h = half_edge(xs[i], k);
        int p = h == a ? b : h == b ? a : d.partner(h);
        partner[half_edge(i, k)] = half_edge(index[crossing_of(p)], slot_of(p));
        incoming[half_edge(i, k)] = d.is_incoming(h) ? 1 : 0;
      }
    }
    return LinkDiagram::from_planar_map(partner, std::vector<bool>(m, true), incoming);
  };
  out.first = piece(out.first_crossings, cut.arc1, cut.arc2);
  out.second = piece(out.second_crossings, p1, p2);
  return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
  const int c = d.crossing_count();
  if (c == 0) return d;
  std::vector<int> incoming(4 * c);
  for (int h = 0; h < 4 * c; ++h) incoming[h] = d.is_incoming(h) ? 1 : 0;
  return LinkDiagram::from_planar_map(d.partners(), std::vector<bool>(c, false), incoming);
}

LinkDiagram cable(const LinkDiagram& d, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cable parameter must be at least 1");
  const int c = d.crossing_count();
  if (n == 1) return d;
  if (c == 0) throw Error(ErrorCode::Disconnected, "parallel copies of a crossingless circle are split");
  const int per = n * n;
  auto node = [&](int x, int i, int j) { return x * per + i * n + j; };
  // Copy with rank r (counted from the right, looking outward along slot k).
  auto port = [&](int x, int k, int r) {
    switch (k) {
      case 0: return half_edge(node(x, r, 0), 0);
      case 1: return half_edge(node(x, n - 1, r), 1);
      case 2: return half_edge(node(x, n - 1 - r, n - 1), 2);
      default: return half_edge(node(x, 0, n - 1 - r), 3);
    }
  };
  std::vector<int> partner(4 * c * per, -1);
  std::vector<int> incoming(4 * c * per, -1);
  auto join = [&](int a, int b) {
    partner[a] = b;
    partner[b] = a;
  };
  for (int x = 0; x < c; ++x) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int y = node(x, i, j);
        if (j + 1 < n) join(half_edge(y, 2), half_edge(node(x, i, j + 1), 0));
        if (i + 1 < n) join(half_edge(y, 1), half_edge(node(x, i + 1, j), 3));
        incoming[half_edge(y, 0)] = 1;
        incoming[half_edge(y, 2)] = 0;
        const bool three_in = d.sign(x) > 0;
        incoming[half_edge(y, 3)] = three_in ? 1 : 0;
        incoming[half_edge(y, 1)] = three_in ? 0 : 1;
      }
    }
    for (int k = 0; k < 4; ++k) {
      const int h = half_edge(x, k);
      const int p = d.partner(h);
      if (p < h) continue;
      for (int r = 0; r < n; ++r) join(port(x, k, r), port(crossing_of(p), slot_of(p), n - 1 - r));
    }
  }
  return LinkDiagram::from_planar_map(partner, std::vector<bool>(c * per, true), incoming);
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int x, Smoothing s) {
  const int c = d.crossing_count();
  if (x < 0 || x >= c) throw Error(ErrorCode::InvalidArgument, "no crossing " + std::to_string(x));
  PlanarBuilder b;
  std::vector<int> index(c, -1);
  for (int y = 0; y < c; ++y)
    if (y != x) index[y] = b.add_crossing();
  std::array<int, 4> term{};
  for (int k = 0; k < 4; ++k) term[k] = b.add_terminal();
  auto node = [&](int h) {
    int y = crossing_of(h);
    return y == x ? term[slot_of(h)] : b.port(index[y], slot_of(h));
  };
  for (int h = 0; h < 4 * c; ++h) {
    int p = d.partner(h);
    if (p < h) continue;
    b.connect(node(h), node(p));
  }
  for (int k = 0; k < 4; ++k) {
    int m = smoothing_mate(k, s);
    if (k < m) b.connect(term[k], term[m]);
  }
  for (int y = 0; y < c; ++y) {
    if (y == x) continue;
    for (int k = 0; k < 4; ++k) b.hint_incoming(b.port(index[y], k), d.is_incoming(half_edge(y, k)));
  }
  return b.build();
}

int PlanarBuilder::add_crossing(bool under02) {
  const int x = static_cast<int>(crossing_nodes_.size());
  crossing_nodes_.push_back(static_cast<int>(nodes_.size()));
  under02_.push_back(under02);
  for (int k = 0; k < 4; ++k) nodes_.push_back(Node{x, k, {}});
  return x;
}

int PlanarBuilder::add_terminal() {
  nodes_.push_back(Node{});
  return static_cast<int>(nodes_.size()) - 1;
}

void PlanarBuilder::connect(int a, int b) {
  nodes_[a].wires.push_back(b);
  nodes_[b].wires.push_back(a);
}

void PlanarBuilder::hint_incoming(int node, bool incoming) { hints_.emplace_back(node, incoming); }

LinkDiagram PlanarBuilder::build() const {
  const int c = crossing_count();
  const int total = static_cast<int>(nodes_.size());
  // Wires as edges so that self-wired terminals are handled uniformly.
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> incident(total);
  for (int a = 0; a < total; ++a) {
    for (int b : nodes_[a].wires) {
      if (b < a) continue;
      if (a == b) {
        // a self-wire is recorded twice in the wire list; keep one edge
        bool seen = false;
        for (int e : incident[a])
          if (edges[e] == std::make_pair(a, a)) seen = true;
        if (seen) continue;
        incident[a].push_back(static_cast<int>(edges.size()));
      }
      incident[a].push_back(static_cast<int>(edges.size()));
      if (a != b) incident[b].push_back(static_cast<int>(edges.size()));
      edges.emplace_back(a, b);
    }
  }
  for (int a = 0; a < total; ++a) {
    const std::size_t want = nodes_[a].crossing >= 0 ? 1 : 2;
    if (incident[a].size() != want) throw std::logic_error("planar builder: dangling or overfull wire");
  }
  std::vector<bool> used(edges.size(), false);
  std::vector<int> partner(4 * c, -1);
  auto to_half = [&](int node) { return half_edge(nodes_[node].crossing, nodes_[node].slot); };
  for (int a = 0; a < total; ++a) {
    if (nodes_[a].crossing < 0 || partner[to_half(a)] >= 0) continue;
    int e = incident[a][0];
    int cur = a;
    while (true) {
      used[e] = true;
      int nxt = edges[e].first == cur ? edges[e].second : edges[e].first;
      if (nodes_[nxt].crossing >= 0) {
        partner[to_half(a)] = to_half(nxt);
        partner[to_half(nxt)] = to_half(a);
        break;
      }
      e = incident[nxt][0] == e ? incident[nxt][1] : incident[nxt][0];
      cur = nxt;
    }
  }
  int free_loops = 0;
  for (std::size_t e0 = 0; e0 < edges.size(); ++e0) {
    if (used[e0]) continue;
    ++free_loops;
    int e = static_cast<int>(e0);
    int cur = edges[e].first;
    while (!used[e]) {
      used[e] = true;
      int nxt = edges[e].first == cur ? edges[e].second : edges[e].first;
      e = incident[nxt][0] == e ? incident[nxt][1] : incident[nxt][0];
      cur = nxt;
    }
  }
  if (c == 0) {
    if (free_loops == 1) return LinkDiagram();
    throw Error(ErrorCode::Disconnected, "diagram has " + std::to_string(free_loops) + " split circles");
  }
  if (free_loops > 0) throw Error(ErrorCode::Disconnected, "diagram has a crossingless split component");
  std::vector<int> incoming(4 * c, -1);
  for (const auto& [node, in] : hints_)
    if (nodes_[node].crossing >= 0) incoming[to_half(node)] = in ? 1 : 0;
  return LinkDiagram::from_planar_map(partner, under02_, incoming);
}

}  // namespace knotguts
