#include "openbook/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace openbook {

void validate_surface(const FatGraph& g) {
  if (g.vertex_cycles.empty())
    throw Error(ErrorCode::EmptySurface, "no vertices");
  int n_half = 2 * g.num_edges;
  std::vector<int> seen(n_half, 0);
  for (const auto& cyc : g.vertex_cycles) {
    for (int h : cyc) {
      if (h < 0 || h >= n_half)
        throw Error(ErrorCode::DanglingHalfEdge,
                    "half-edge " + std::to_string(h) + " out of range");
      if (seen[h]++)
        throw Error(ErrorCode::DanglingHalfEdge,
                    "half-edge " + std::to_string(h) + " placed twice");
    }
  }
  for (int h = 0; h < n_half; ++h)
    if (!seen[h])
      throw Error(ErrorCode::DanglingHalfEdge,
                  "half-edge " + std::to_string(h) + " not placed");
  if (!g.allow_disconnected) {
    auto comp = vertex_components(g);
    if (*std::max_element(comp.begin(), comp.end()) > 0)
      throw Error(ErrorCode::ValidationError,
                  "surface is disconnected but not flagged as a disjoint union");
  }
}

std::vector<int> vertex_components(const FatGraph& g) {
  int n = (int)g.vertex_cycles.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> owner(2 * g.num_edges, -1);
  for (int v = 0; v < n; ++v)
    for (int h : g.vertex_cycles[v]) owner[h] = v;
  for (int e = 0; e < g.num_edges; ++e) {
    int a = find(owner[2 * e]), b = find(owner[2 * e + 1]);
    if (a != b) parent[a] = b;
  }
  std::vector<int> root_to_id(n, -1), out(n);
  int next_id = 0;
  for (int v = 0; v < n; ++v) {
    int r = find(v);
    if (root_to_id[r] < 0) root_to_id[r] = next_id++;
    out[v] = root_to_id[r];
  }
  return out;
}

int corner_count(const FatGraph& g, int v) {
  return std::max<int>(1, (int)g.vertex_cycles[v].size());
}

int gate_after_corner(const FatGraph& g, const Corner& c) {
  const auto& cyc = g.vertex_cycles[c.vertex];
  if (cyc.empty()) return -1;
  return cyc[(c.slot + 1) % cyc.size()];
}

int gate_before_corner(const FatGraph& g, const Corner& c) {
  const auto& cyc = g.vertex_cycles[c.vertex];
  if (cyc.empty()) return -1;
  return cyc[c.slot];
}

Corner next_corner(const FatGraph& g, const SurfaceIndex& idx, const Corner& c) {
  int h = gate_after_corner(g, c);
  if (h < 0) return c;  // isolated disk: its boundary is one circle
  int m = mate(h);
  return Corner{idx.place[m].vertex, idx.place[m].slot};
}

Corner prev_corner(const FatGraph& g, const SurfaceIndex& idx, const Corner& c) {
  int h = gate_before_corner(g, c);
  if (h < 0) return c;
  int m = mate(h);
  const auto& cyc = g.vertex_cycles[idx.place[m].vertex];
  int k = (int)cyc.size();
  return Corner{idx.place[m].vertex, (idx.place[m].slot + k - 1) % k};
}

SurfaceIndex build_index(const FatGraph& g) {
  SurfaceIndex idx;
  idx.place.assign(2 * g.num_edges, HalfEdgePlace{});
  for (int v = 0; v < (int)g.vertex_cycles.size(); ++v)
    for (int s = 0; s < (int)g.vertex_cycles[v].size(); ++s)
      idx.place[g.vertex_cycles[v][s]] = HalfEdgePlace{v, s};

  std::vector<int> offsets(g.vertex_cycles.size() + 1, 0);
  for (int v = 0; v < (int)g.vertex_cycles.size(); ++v)
    offsets[v + 1] = offsets[v] + corner_count(g, v);
  idx.total_corners = offsets.back();
  idx.corner_component.assign(idx.total_corners, -1);
  idx.corner_position.assign(idx.total_corners, -1);

  idx.offsets = std::move(offsets);
  for (int v = 0; v < (int)g.vertex_cycles.size(); ++v) {
    for (int s = 0; s < corner_count(g, v); ++s) {
      Corner start{v, s};
      if (idx.corner_component[idx.flat(start)] >= 0) continue;
      int comp = (int)idx.boundary.size();
      std::vector<Corner> cycle;
      Corner c = start;
      do {
        idx.corner_component[idx.flat(c)] = comp;
        idx.corner_position[idx.flat(c)] = (int)cycle.size();
        cycle.push_back(c);
        c = next_corner(g, idx, c);
      } while (!(c == start));
      idx.boundary.push_back(std::move(cycle));
    }
  }
  return idx;
}

int euler_characteristic(const FatGraph& g) {
  return (int)g.vertex_cycles.size() - g.num_edges;
}

int num_boundary_components(const FatGraph& g) {
  return (int)build_index(g).boundary.size();
}

// --- contraction -------------------------------------------------------------

EdgeContraction contract_edge(const FatGraph& g, int e) {
  SurfaceIndex idx = build_index(g);
  int h0 = 2 * e, h1 = 2 * e + 1;
  int u = idx.place[h0].vertex, i = idx.place[h0].slot;
  int w = idx.place[h1].vertex, j = idx.place[h1].slot;
  if (u == w)
    throw Error(ErrorCode::ValidationError,
                "cannot contract a loop edge (both ends on one disk)");

  EdgeContraction out;
  out.contracted_edge = e;
  out.old_near_vertex = u;
  out.old_far_vertex = w;

  int ku = (int)g.vertex_cycles[u].size();
  int kw = (int)g.vertex_cycles[w].size();

  // Merged cycle: u's cycle after slot i (without h0), then w's after slot j.
  std::vector<int> merged;
  std::vector<bool> from_far;
  for (int s = 1; s < ku; ++s) {
    merged.push_back(g.vertex_cycles[u][(i + s) % ku]);
    from_far.push_back(false);
  }
  for (int s = 1; s < kw; ++s) {
    merged.push_back(g.vertex_cycles[w][(j + s) % kw]);
    from_far.push_back(true);
  }

  int nv = (int)g.vertex_cycles.size();
  out.vertex_map.assign(nv, -1);
  int keep = std::min(u, w), drop = std::max(u, w);
  for (int v = 0; v < nv; ++v) {
    if (v == drop) { out.vertex_map[v] = keep < drop ? keep : keep - 1; continue; }
    out.vertex_map[v] = v < drop ? v : v - 1;
  }
  out.vertex_map[u] = out.vertex_map[keep];
  out.vertex_map[w] = out.vertex_map[keep];
  out.merged_vertex = out.vertex_map[keep];

  out.edge_map.assign(g.num_edges, -1);
  for (int e2 = 0; e2 < g.num_edges; ++e2)
    if (e2 != e) out.edge_map[e2] = e2 < e ? e2 : e2 - 1;
  out.half_edge_map.assign(2 * g.num_edges, -1);
  for (int h = 0; h < 2 * g.num_edges; ++h)
    if (edge_of(h) != e)
      out.half_edge_map[h] = 2 * out.edge_map[edge_of(h)] + (h & 1);

  // Build result graph.
  out.result.num_edges = g.num_edges - 1;
  out.result.allow_disconnected = g.allow_disconnected;
  out.result.vertex_cycles.assign(nv - 1, {});
  for (int v = 0; v < nv; ++v) {
    if (v == u || v == w) continue;
    std::vector<int> cyc;
    for (int h : g.vertex_cycles[v]) cyc.push_back(out.half_edge_map[h]);
    out.result.vertex_cycles[out.vertex_map[v]] = std::move(cyc);
  }
  {
    std::vector<int> cyc;
    for (int h : merged) cyc.push_back(out.half_edge_map[h]);
    out.result.vertex_cycles[out.merged_vertex] = std::move(cyc);
    out.merged_slot_from_far = from_far;
  }

  // Corner transport.
  out.corner_map.assign(nv, {});
  for (int v = 0; v < nv; ++v)
    out.corner_map[v].assign(corner_count(g, v), EdgeContraction::CornerImage{});
  for (int v = 0; v < nv; ++v) {
    if (v == u || v == w) continue;
    for (int s = 0; s < corner_count(g, v); ++s)
      out.corner_map[v][s] = {Corner{out.vertex_map[v], s}, 0};
  }
  int M = out.merged_vertex;
  int merged_len = (int)merged.size();
  auto merged_corner = [&](int pos) {
    // corner after merged[pos]; for an empty merged cycle, the single corner 0
    return Corner{M, merged_len == 0 ? 0 : ((pos % merged_len) + merged_len) % merged_len};
  };
  if (ku >= 2 && kw >= 2) {
    // u-corners other than the two flanking h0 map by position of their gate.
    // Position of u's gate (i+s)%ku in merged = s-1 (s=1..ku-1).
    for (int s = 1; s < ku; ++s) {
      // corner after gate (i+s)%ku is u-corner (i+s)%ku
      int uc = (i + s) % ku;
      if (s == ku - 1) {
        // corner after u's last kept gate (= corner before h0, i.e. S(u, i-1))
        out.corner_map[u][uc] = {merged_corner(ku - 2), 0};
      } else {
        out.corner_map[u][uc] = {merged_corner(s - 1), 0};
      }
    }
    // S(u, i) (corner after h0) appends to the corner after w's last kept gate.
    out.corner_map[u][i] = {merged_corner(merged_len - 1), 1};
    for (int s = 1; s < kw; ++s) {
      int wc = (j + s) % kw;
      if (s == kw - 1) {
        out.corner_map[w][wc] = {merged_corner(merged_len - 1), 0};
      } else {
        out.corner_map[w][wc] = {merged_corner(ku - 1 + s - 1), 0};
      }
    }
    // S(w, j) (corner after h1) appends to the corner after u's last kept gate.
    out.corner_map[w][j] = {merged_corner(ku - 2), 1};
  } else if (ku == 1 && kw >= 2) {
    // Finger disk u: S(u,0) lands between S(w, j-1) and S(w, j).
    for (int s = 1; s < kw; ++s) {
      int wc = (j + s) % kw;
      out.corner_map[w][wc] = {merged_corner(s - 1), 0};
    }
    // corner after w's last kept gate is S(w, j-1): bucket 0 (set above);
    out.corner_map[u][0] = {merged_corner(merged_len - 1), 1};
    out.corner_map[w][j] = {merged_corner(merged_len - 1), 2};
  } else if (kw == 1 && ku >= 2) {
    for (int s = 1; s < ku; ++s) {
      int uc = (i + s) % ku;
      out.corner_map[u][uc] = {merged_corner(s - 1), 0};
    }
    out.corner_map[w][0] = {merged_corner(merged_len - 1), 1};
    out.corner_map[u][i] = {merged_corner(merged_len - 1), 2};
  } else {  // ku == 1 && kw == 1: two fingers joined by one band = disk
    out.corner_map[u][0] = {Corner{M, 0}, 0};
    out.corner_map[w][0] = {Corner{M, 0}, 1};
  }
  return out;
}

ReducedPresentation reduce_presentation(const FatGraph& g) {
  ReducedPresentation out;
  out.result = g;
  for (;;) {
    SurfaceIndex idx = build_index(out.result);
    int target = -1;
    for (int e = 0; e < out.result.num_edges; ++e) {
      if (idx.place[2 * e].vertex != idx.place[2 * e + 1].vertex) { target = e; break; }
    }
    if (target < 0) break;
    EdgeContraction step = contract_edge(out.result, target);
    out.result = step.result;
    out.steps.push_back(std::move(step));
  }
  return out;
}

// --- canonical form / isomorphism --------------------------------------------

namespace {

// Deterministic traversal encoding of one connected component, rooted at a
// half-edge.  Vertices are read from their entry half-edge; edges are labeled
// in first-visit order.
std::string encode_component_from(const FatGraph& g, const SurfaceIndex& idx,
                                  int root_half) {
  std::string out;
  std::map<int, int> edge_label;
  std::vector<int> vertex_order;
  std::map<int, int> vertex_entry_slot;
  std::set<int> vertex_seen;
  std::queue<std::pair<int, int>> todo;  // (vertex, entry slot)
  int v0 = idx.place[root_half].vertex;
  todo.push({v0, idx.place[root_half].slot});
  vertex_seen.insert(v0);
  while (!todo.empty()) {
    auto [v, s0] = todo.front();
    todo.pop();
    const auto& cyc = g.vertex_cycles[v];
    int k = (int)cyc.size();
    out += "v" + std::to_string(k) + ":";
    for (int t = 0; t < k; ++t) {
      int h = cyc[(s0 + t) % k];
      int e = edge_of(h);
      auto it = edge_label.find(e);
      int label;
      int visit;
      if (it == edge_label.end()) {
        label = (int)edge_label.size();
        edge_label[e] = label;
        visit = 0;
        int m = mate(h);
        int vm = idx.place[m].vertex;
        if (!vertex_seen.count(vm)) {
          vertex_seen.insert(vm);
          todo.push({vm, idx.place[m].slot});
        }
      } else {
        label = it->second;
        visit = 1;
      }
      out += std::to_string(label) + (visit ? "b" : "a") + ",";
    }
    out += ";";
  }
  return out;
}

}  // namespace

std::string canonical_key(const FatGraph& g) {
  SurfaceIndex idx = build_index(g);
  auto comps = vertex_components(g);
  int ncomp = *std::max_element(comps.begin(), comps.end()) + 1;
  std::vector<std::string> best(ncomp);
  for (int h = 0; h < 2 * g.num_edges; ++h) {
    int c = comps[idx.place[h].vertex];
    std::string k = encode_component_from(g, idx, h);
    if (best[c].empty() || k < best[c]) best[c] = k;
  }
  for (int v = 0; v < (int)g.vertex_cycles.size(); ++v) {
    if (g.vertex_cycles[v].empty()) best[comps[v]] = "v0:;";
  }
  std::sort(best.begin(), best.end());
  std::string out;
  for (const auto& k : best) { out += k; out += "|"; }
  return out;
}

namespace {

// Rigid propagation of an orientation-preserving map sending half-edge rg of g
// to half-edge rh of h.  Returns the full half-edge bijection or nullopt.
std::optional<std::vector<int>> propagate_iso(const FatGraph& g, const SurfaceIndex& ig,
                                              const FatGraph& h, const SurfaceIndex& ih,
                                              int rg, int rh) {
  std::vector<int> hmap(2 * g.num_edges, -1);
  std::vector<int> vmap(g.vertex_cycles.size(), -1);
  std::queue<std::pair<int, int>> todo;  // half-edge of g -> half-edge of h
  todo.push({rg, rh});
  while (!todo.empty()) {
    auto [a, b] = todo.front();
    todo.pop();
    if (hmap[a] >= 0) {
      if (hmap[a] != b) return std::nullopt;
      continue;
    }
    int va = ig.place[a].vertex, vb = ih.place[b].vertex;
    const auto& ca = g.vertex_cycles[va];
    const auto& cb = h.vertex_cycles[vb];
    if (ca.size() != cb.size()) return std::nullopt;
    if (vmap[va] >= 0 && vmap[va] != vb) return std::nullopt;
    if (vmap[va] < 0) {
      vmap[va] = vb;
      int k = (int)ca.size();
      int sa = ig.place[a].slot, sb = ih.place[b].slot;
      for (int t = 0; t < k; ++t) {
        int x = ca[(sa + t) % k], y = cb[(sb + t) % k];
        if (hmap[x] >= 0 && hmap[x] != y) return std::nullopt;
        hmap[x] = y;
        todo.push({mate(x), mate(y)});
      }
    }
  }
  for (int x : hmap)
    if (x < 0) return std::nullopt;  // disconnected input: not handled here
  // bijectivity
  std::vector<char> used(2 * h.num_edges, 0);
  for (int x : hmap) {
    if (used[x]) return std::nullopt;
    used[x] = 1;
  }
  return hmap;
}

}  // namespace

std::vector<std::vector<int>> enumerate_isomorphisms(const FatGraph& g,
                                                     const FatGraph& h,
                                                     int max_count) {
  std::vector<std::vector<int>> out;
  if (g.vertex_cycles.size() != h.vertex_cycles.size()) return out;
  if (g.num_edges != h.num_edges) return out;
  if (g.num_edges == 0) {
    // disks only; any vertex bijection works, represent as empty half-edge map
    if (g.vertex_cycles.size() == h.vertex_cycles.size()) out.push_back({});
    return out;
  }
  SurfaceIndex ig = build_index(g), ih = build_index(h);
  auto cg = vertex_components(g);
  if (*std::max_element(cg.begin(), cg.end()) > 0)
    throw Error(ErrorCode::ValidationError,
                "isomorphism search expects connected graphs");
  for (int rh = 0; rh < 2 * h.num_edges && (int)out.size() < max_count; ++rh) {
    auto m = propagate_iso(g, ig, h, ih, 0, rh);
    if (m) out.push_back(*m);
  }
  return out;
}

FatGraph make_disk() {
  FatGraph g;
  g.vertex_cycles = {{}};
  g.num_edges = 0;
  return g;
}

FatGraph make_annulus() {
  FatGraph g;
  g.vertex_cycles = {{0, 1}};
  g.num_edges = 1;
  return g;
}

}  // namespace openbook
