#include "openbook/openbook.hpp"

#include <algorithm>
#include <climits>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "openbook/errors.hpp"
#include "openbook/overlay.hpp"

namespace openbook {

namespace {

// Which crossing sign selects the coherent (positive-exponent) branch of the
// once-unclean monodromy compensation.  Calibrated by the attach/cut
// round-trip fixtures.
constexpr int kCoherentBranchSign = -1;

struct ArcAnalysis {
  Path alpha;  // normalized
  ArcReport report;
};

ArcAnalysis analyze_arc(const OpenBook& book, const Path& alpha) {
  if (alpha.is_loop) throw Error(ErrorCode::NotAnArc, "expected an arc, got a loop");
  Path a = normalize(book.surface, alpha);
  ArcReport report = invariants_of(book.surface, book.monodromy, a);
  return {std::move(a), std::move(report)};
}

CutVerdict verdict_of(const ArcClassification& cl) {
  if (cl.fixed) return CutVerdict::SplitUnion;
  if (cl.geometry.i_total == 1) return CutVerdict::Fiber;
  return CutVerdict::NotFiberByThisSurface;
}


// --- band attachment ---------------------------------------------------------

struct BandAttachment {
  FatGraph graph;
  int new_edge = -1;
  Path closure;  // the new band's core, closed through it
};

// Glues one new band with its ends at the arc's two endpoints.  The arc
// itself is consumed: only the closed-up core survives as a loop.
BandAttachment attach_band_along(const FatGraph& g, const Path& arc) {
  const int E = g.num_edges;
  FatGraph out = g;
  out.num_edges = E + 1;
  struct Ins {
    int slot;
    long long key;
    int half;
  };
  std::vector<std::vector<Ins>> per_vertex(g.vertex_cycles.size());
  per_vertex[arc.start.corner.vertex].push_back(
      {arc.start.corner.slot, arc.start.key, 2 * E});
  per_vertex[arc.end.corner.vertex].push_back(
      {arc.end.corner.slot, arc.end.key, 2 * E + 1});
  for (std::size_t v = 0; v < per_vertex.size(); ++v) {
    auto& ins = per_vertex[v];
    if (ins.empty()) continue;
    std::sort(ins.begin(), ins.end(), [](const Ins& x, const Ins& y) {
      return std::tie(x.slot, x.key, x.half) < std::tie(y.slot, y.key, y.half);
    });
    const std::vector<int>& cyc = g.vertex_cycles[v];
    std::vector<int> rebuilt;
    if (cyc.empty()) {
      for (const Ins& i : ins) rebuilt.push_back(i.half);
    } else {
      std::size_t next = 0;
      for (int s = 0; s < static_cast<int>(cyc.size()); ++s) {
        rebuilt.push_back(cyc[s]);
        while (next < ins.size() && ins[next].slot == s)
          rebuilt.push_back(ins[next++].half);
      }
    }
    out.vertex_cycles[v] = rebuilt;
  }
  validate_surface(out);
  std::vector<int> closure_word = arc.traversals;
  closure_word.push_back(2 * E + 1);
  BandAttachment att{std::move(out), E, {}};
  att.closure = normalize(att.graph, make_loop(std::move(closure_word)));
  return att;
}

// --- crossing resolution -------------------------------------------------------

Path checked_loop(const FatGraph& g, std::vector<int> word, const char* role) {
  Path p = normalize(g, make_loop(std::move(word)));
  if (is_null_homotopic_loop(p))
    throw Error(ErrorCode::HypothesesUnmet,
                std::string("resolution loop '") + role + "' is null-homotopic");
  return p;
}

// Resolves a crossing joining a point on chord i to a point on chord j of the
// cyclic itinerary T (i < j).  The coherent smoothing splits T into T[i..j)
// and the complement; the other smoothing runs the complement and then the
// first piece backwards.
ResolutionLoops smooth_at(const FatGraph& g, const std::vector<int>& T,
                          std::size_t i, std::size_t j) {
  std::vector<int> wa(T.begin() + i, T.begin() + j);
  std::vector<int> wb(T.begin() + j, T.end());
  wb.insert(wb.end(), T.begin(), T.begin() + i);
  std::vector<int> wc = wb;
  for (auto it = wa.rbegin(); it != wa.rend(); ++it) wc.push_back(mate(*it));
  Path first = checked_loop(g, std::move(wa), "a");
  Path second = checked_loop(g, std::move(wb), "b");
  Path other = checked_loop(g, std::move(wc), "c");
  SurfaceIndex idx = build_index(g);
  auto disk_key = [&](const Path& p) {
    int lo = INT_MAX;
    for (int h : p.traversals) lo = std::min(lo, idx.place[mate(h)].vertex);
    return lo;
  };
  bool swap_ab = std::make_pair(disk_key(second), second.traversals) <
                 std::make_pair(disk_key(first), first.traversals);
  ResolutionLoops out;
  out.a = swap_ab ? std::move(second) : std::move(first);
  out.b = swap_ab ? std::move(first) : std::move(second);
  out.c = std::move(other);
  return out;
}

struct OnceResolution {
  ResolutionLoops loops;
  int crossing_sign = 0;
};

// Smooths the single interior crossing of alpha ∪ image.  Both arcs must
// share endpoints and meet exactly once away from them.
OnceResolution resolve_once_unclean(const FatGraph& g, const Path& alpha,
                                    const Path& image) {
  OverlaySummary ov = overlay_pair(g, alpha, image, /*shared_endpoints=*/true);
  std::vector<int> interior;
  for (int k = 0; k < static_cast<int>(ov.crossings.size()); ++k)
    if (k != ov.germ_at_start && k != ov.germ_at_end) interior.push_back(k);
  if (interior.size() != 1)
    throw Error(ErrorCode::HypothesesUnmet,
                "expected exactly one interior crossing, found " +
                    std::to_string(interior.size()));
  const OverlayCrossing& cr = ov.crossings[interior[0]];
  if (cr.curve_a != 0 || cr.curve_b != 1)
    throw Error(ErrorCode::NonDiskRegionUnresolved,
                "pair overlay attributed a crossing to one curve");
  const Path& a = ov.curves[0];
  const Path& b = ov.curves[1];
  const std::size_t n = a.traversals.size(), m = b.traversals.size();
  if (n + m == 0)
    throw Error(ErrorCode::HypothesesUnmet, "union loop has no traversals");
  std::vector<int> T = a.traversals;
  for (auto it = b.traversals.rbegin(); it != b.traversals.rend(); ++it)
    T.push_back(mate(*it));
  // On the union loop, alpha's chord k keeps index k (0 and n are the fused
  // end chords) while the image's chord j runs backward at index n+m-j.
  std::size_t i = cr.chord_a;
  std::size_t j = (n + m - cr.chord_b) % (n + m);
  if (i == j)
    throw Error(ErrorCode::HypothesesUnmet,
                "interior crossing is removable on the union loop");
  if (i > j) std::swap(i, j);
  return {smooth_at(g, T, i, j), cr.sign};
}

// --- cutting the surface -------------------------------------------------------

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct CutPieces {
  FatGraph graph;
  std::vector<Path> carried;  // the input loops, re-expressed on `graph`
  bool boundary_parallel = false;
  bool split = false;
};

// Cuts the surface along the arc and transports the carried loops.  Requires
// every carried loop to be movable off the arc: any remaining crossing with
// it in joint minimal position aborts with HypothesesUnmet.
CutPieces cut_surface_along_arc(const FatGraph& g, const Path& alpha_in,
                                const std::vector<Path>& carried_in) {
  std::vector<Path> curves{alpha_in};
  curves.insert(curves.end(), carried_in.begin(), carried_in.end());
  OverlaySummary ov = overlay_system(g, std::move(curves));
  for (const OverlayCrossing& cr : ov.crossings)
    if (cr.curve_a == 0 || cr.curve_b == 0)
      throw Error(ErrorCode::HypothesesUnmet,
                  "a monodromy letter crosses the cut arc and cannot be "
                  "carried to the cut surface");
  const Path& alpha = ov.curves[0];
  if (!alpha.is_loop && alpha.start.corner == alpha.end.corner &&
      alpha.start.key == alpha.end.key)
    throw Error(ErrorCode::InvalidPath, "cut arc endpoints coincide");
  const int E = g.num_edges;
  const int V = static_cast<int>(g.vertex_cycles.size());
  const std::size_t n = alpha.traversals.size();

  // The alpha strands across band e cut it into sub-bands ("lanes"),
  // numbered in the strand order read along the gate of half-edge 2e.
  std::vector<std::vector<int>> below(E);  // band position -> alpha strands before it
  std::vector<int> strands_of(E, 0);       // alpha strands per band
  for (int e = 0; e < E; ++e) {
    const auto& strands = ov.band_strands[e];
    below[e].assign(strands.size() + 1, 0);
    for (std::size_t r = 0; r < strands.size(); ++r)
      below[e][r + 1] = below[e][r] + (strands[r].first == 0 ? 1 : 0);
    strands_of[e] = below[e].back();
  }
  std::vector<int> base(E + 1, 0);
  for (int e = 0; e < E; ++e) base[e + 1] = base[e] + strands_of[e] + 1;
  auto new_half = [&](int h, int lane) {
    return 2 * (base[edge_of(h)] + lane) + (h & 1);
  };

  // Band position of each traversal of each curve.
  std::vector<std::vector<int>> strand_pos(ov.curves.size());
  for (std::size_t c = 0; c < ov.curves.size(); ++c)
    strand_pos[c].assign(ov.curves[c].traversals.size(), -1);
  for (int e = 0; e < E; ++e)
    for (std::size_t r = 0; r < ov.band_strands[e].size(); ++r) {
      const auto& [c, t] = ov.band_strands[e][r];
      strand_pos[c][t] = static_cast<int>(r);
    }

  // Walk each disk boundary once, recording the sub-gates between the marked
  // points where alpha's chords end.  The marks split the boundary circle
  // into segments; each chord glues the segments flanking its endpoints into
  // the two regions on its sides.
  CutPieces pieces;
  std::vector<std::vector<int>> new_cycles;
  for (int v = 0; v < V; ++v) {
    const std::vector<int>& cyc = g.vertex_cycles[v];
    struct GateItem {
      int half;
      int lane;
    };
    std::vector<GateItem> items;
    std::vector<int> item_segment;
    int marks = 0;
    std::map<int, std::pair<int, int>> mark_pairs;  // chord -> its two mark ordinals
    auto add_mark = [&](int chord) {
      auto it = mark_pairs.find(chord);
      if (it == mark_pairs.end())
        mark_pairs.emplace(chord, std::make_pair(marks, -1));
      else
        it->second.second = marks;
      ++marks;
    };
    auto add_pins_on = [&](int slot) {
      if (alpha.is_loop) return;
      std::vector<std::pair<long long, int>> pins;  // (key, chord)
      if (alpha.start.corner == Corner{v, slot})
        pins.emplace_back(alpha.start.key, 0);
      if (alpha.end.corner == Corner{v, slot})
        pins.emplace_back(alpha.end.key, static_cast<int>(n));
      std::sort(pins.begin(), pins.end());
      for (const auto& [key, chord] : pins) add_mark(chord);
    };
    if (cyc.empty()) {
      add_pins_on(0);
    } else {
      for (int s = 0; s < static_cast<int>(cyc.size()); ++s) {
        const int h = cyc[s];
        const int e = edge_of(h);
        const auto& strands = ov.band_strands[e];
        auto push_gate = [&](int lane) {
          items.push_back({h, lane});
          item_segment.push_back(marks);
        };
        auto mark_strand = [&](std::size_t t) {
          const int ti = static_cast<int>(t);
          add_mark(alpha.traversals[t] == h ? ti : ti + 1);
        };
        if ((h & 1) == 0) {
          int lane = 0;
          push_gate(lane);
          for (std::size_t r = 0; r < strands.size(); ++r) {
            if (strands[r].first != 0) continue;
            mark_strand(strands[r].second);
            push_gate(++lane);
          }
        } else {
          int lane = strands_of[e];
          push_gate(lane);
          for (std::size_t r = strands.size(); r-- > 0;) {
            if (strands[r].first != 0) continue;
            mark_strand(strands[r].second);
            push_gate(--lane);
          }
        }
        add_pins_on(s);
      }
    }
    if (marks == 0) {
      std::vector<int> cycle;
      for (const GateItem& it : items) cycle.push_back(new_half(it.half, it.lane));
      new_cycles.push_back(std::move(cycle));
      continue;
    }
    const int M = marks;
    Dsu dsu(M);
    for (const auto& [chord, pq] : mark_pairs) {
      if (pq.second < 0)
        throw Error(ErrorCode::NonDiskRegionUnresolved,
                    "chord with a single endpoint in its disk");
      dsu.unite(pq.first, (pq.second + 1) % M);
      dsu.unite(pq.second, (pq.first + 1) % M);
    }
    std::map<int, int> region_of_root;
    std::vector<std::vector<int>> region_cycles;
    for (int seg = 0; seg < M; ++seg) {
      const int root = dsu.find(seg);
      if (!region_of_root.count(root)) {
        region_of_root.emplace(root, static_cast<int>(region_cycles.size()));
        region_cycles.emplace_back();
      }
    }
    for (std::size_t k = 0; k < items.size(); ++k) {
      const int reg = region_of_root[dsu.find(item_segment[k] % M)];
      region_cycles[reg].push_back(new_half(items[k].half, items[k].lane));
    }
    if (region_cycles.size() != mark_pairs.size() + 1)
      throw Error(ErrorCode::NonDiskRegionUnresolved,
                  "cutting a disk along k chords must give k+1 regions");
    for (auto& rc : region_cycles) {
      if (rc.empty()) pieces.boundary_parallel = true;
      new_cycles.push_back(std::move(rc));
    }
  }

  FatGraph out;
  out.vertex_cycles = std::move(new_cycles);
  out.num_edges = base[E];
  std::vector<int> comp = vertex_components(out);
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  out.allow_disconnected = ncomp > 1;
  validate_surface(out);
  if (euler_characteristic(out) != euler_characteristic(g) + 1)
    throw Error(ErrorCode::NonDiskRegionUnresolved,
                "cut did not raise the euler characteristic by one");
  pieces.split = ncomp > 1;

  for (std::size_t c = 1; c < ov.curves.size(); ++c) {
    const Path& p = ov.curves[c];
    std::vector<int> word;
    word.reserve(p.traversals.size());
    for (std::size_t t = 0; t < p.traversals.size(); ++t) {
      const int h = p.traversals[t];
      const int lane = below[edge_of(h)][strand_pos[c][t]];
      word.push_back(new_half(h, lane));
    }
    pieces.carried.push_back(normalize(out, make_loop(std::move(word))));
  }
  pieces.graph = std::move(out);
  return pieces;
}

// --- split comparison ----------------------------------------------------------

struct ComponentBook {
  FatGraph graph;
  TwistWord word;
};

std::vector<ComponentBook> split_components(const FatGraph& g, const TwistWord& w) {
  std::vector<int> comp = vertex_components(g);
  int ncomp = 0;
  for (int c : comp) ncomp = std::max(ncomp, c + 1);
  SurfaceIndex idx = build_index(g);
  std::vector<int> edge_local(g.num_edges, -1), edge_comp(g.num_edges, -1);
  std::vector<int> edge_count(ncomp, 0);
  for (int e = 0; e < g.num_edges; ++e) {
    edge_comp[e] = comp[idx.place[2 * e].vertex];
    edge_local[e] = edge_count[edge_comp[e]]++;
  }
  std::vector<ComponentBook> out(ncomp);
  for (int c = 0; c < ncomp; ++c) out[c].graph.num_edges = edge_count[c];
  for (std::size_t v = 0; v < comp.size(); ++v) {
    std::vector<int> cyc;
    cyc.reserve(g.vertex_cycles[v].size());
    for (int h : g.vertex_cycles[v])
      cyc.push_back(2 * edge_local[edge_of(h)] + (h & 1));
    out[comp[v]].graph.vertex_cycles.push_back(std::move(cyc));
  }
  for (const TwistLetter& l : w.letters) {
    const int c = edge_comp[edge_of(l.loop.traversals.front())];
    std::vector<int> word;
    word.reserve(l.loop.traversals.size());
    for (int h : l.loop.traversals)
      word.push_back(2 * edge_local[edge_of(h)] + (h & 1));
    out[c].word.letters.push_back({make_loop(std::move(word)), l.exponent});
  }
  for (ComponentBook& cb : out) {
    validate_surface(cb.graph);
    for (TwistLetter& l : cb.word.letters) l.loop = normalize(cb.graph, l.loop);
  }
  return out;
}

bool component_books_match(const ComponentBook& x, const ComponentBook& y) {
  if (canonical_key(x.graph) != canonical_key(y.graph)) return false;
  for (const std::vector<int>& iso :
       enumerate_isomorphisms(x.graph, y.graph, 256)) {
    TwistWord moved;
    for (const TwistLetter& l : x.word.letters)
      moved.letters.push_back(
          {relabel_path(x.graph, y.graph, iso, l.loop), l.exponent});
    if (mcg_equal(y.graph, moved, y.word)) return true;
  }
  return false;
}

}  // namespace

// --- public API ----------------------------------------------------------------

OpenBook make_open_book(FatGraph surface, TwistWord monodromy, std::string origin) {
  validate_surface(surface);
  validate_twist_word(surface, monodromy);
  OpenBook book;
  book.surface = std::move(surface);
  book.monodromy = std::move(monodromy);
  book.provenance.push_back(std::move(origin));
  return book;
}

Path band_cocore(const FatGraph& g, int edge) {
  validate_surface(g);
  if (edge < 0 || edge >= g.num_edges)
    throw Error(ErrorCode::InvalidPath, "no such band: " + std::to_string(edge));
  SurfaceIndex idx = build_index(g);
  const HalfEdgePlace& p0 = idx.place[2 * edge];
  const HalfEdgePlace& p1 = idx.place[2 * edge + 1];
  return make_arc({Corner{p0.vertex, p0.slot}, 0}, {2 * edge},
                  {Corner{p1.vertex, p1.slot}, 0});
}

Path arc_union_loop(const FatGraph& g, const Path& alpha, const Path& image) {
  if (alpha.is_loop || image.is_loop)
    throw Error(ErrorCode::NotAnArc, "union loop needs two arcs");
  Path a = normalize(g, alpha);
  Path b = normalize(g, image);
  if (!(a.start == b.start && a.end == b.end))
    throw Error(ErrorCode::HypothesesUnmet, "arcs do not share both endpoints");
  std::vector<int> word = a.traversals;
  for (auto it = b.traversals.rbegin(); it != b.traversals.rend(); ++it)
    word.push_back(mate(*it));
  return normalize(g, make_loop(std::move(word)));
}

const char* cut_verdict_name(CutVerdict v) {
  switch (v) {
    case CutVerdict::Fiber: return "fiber";
    case CutVerdict::NotFiberByThisSurface: return "not-fiber-by-this-surface";
    case CutVerdict::SplitUnion: return "split-union";
  }
  return "?";
}

CutVerdict decide_cut_fiber(const OpenBook& book, const Path& alpha) {
  return verdict_of(analyze_arc(book, alpha).report.classification);
}

ResolutionLoops smooth_once_crossing_loop(const FatGraph& g, const Path& loop) {
  if (!loop.is_loop)
    throw Error(ErrorCode::InvalidPath, "smoothing expects a loop");
  OverlaySummary ov = overlay_system(g, {normalize(g, loop)});
  if (ov.crossings.size() != 1)
    throw Error(ErrorCode::SelfCrossingCountWrong,
                "loop has " + std::to_string(ov.crossings.size()) +
                    " essential self-crossings, need exactly 1");
  const OverlayCrossing& cr = ov.crossings[0];
  const std::size_t i = std::min(cr.chord_a, cr.chord_b);
  const std::size_t j = std::max(cr.chord_a, cr.chord_b);
  if (i == j)
    throw Error(ErrorCode::NonDiskRegionUnresolved,
                "self-crossing reported on a single chord");
  return smooth_at(g, ov.curves[0].traversals, i, j);
}

ResolutionLoops resolution_loops(const OpenBook& book, const Path& alpha) {
  ArcAnalysis an = analyze_arc(book, alpha);
  const ArcClassification& cl = an.report.classification;
  if (cl.unclean != 1)
    throw Error(ErrorCode::HypothesesUnmet,
                "resolution loops need a once-unclean arc, got: " + cl.label());
  return resolve_once_unclean(book.surface, an.alpha, an.report.image).loops;
}

CutOutcome cut_along_arc(const OpenBook& book, const Path& alpha) {
  ArcAnalysis an = analyze_arc(book, alpha);
  const ArcClassification& cl = an.report.classification;
  switch (verdict_of(cl)) {
    case CutVerdict::NotFiberByThisSurface:
      throw Error(ErrorCode::CutNotFiber,
                  "cut is not a fiber surface (" + cl.label() +
                      ", total intersection " +
                      std::to_string(cl.geometry.i_total) + ")");
    case CutVerdict::Fiber:
    case CutVerdict::SplitUnion:
      break;
  }
  TwistWord w = book.monodromy;
  std::optional<OnceResolution> res;
  std::string how;
  if (cl.fixed) {
    how = "fixed arc";
  } else if (cl.unclean == 0) {
    // De-plumbing a Hopf band: compensate with the inverse twist along the
    // band's core, which is the loop alpha ∪ h(alpha).
    Path core = arc_union_loop(book.surface, an.alpha, an.report.image);
    TwistWord comp;
    comp.letters.push_back({std::move(core), -cl.geometry.i_boundary});
    w = compose_words(w, comp);
    how = "hopf deplumbing, boundary count " +
          std::to_string(cl.geometry.i_boundary);
  } else {
    // Removing a once-overlapped band: compensate with the resolution loops
    // of alpha ∪ h(alpha), branch keyed to the crossing sign.
    res = resolve_once_unclean(book.surface, an.alpha, an.report.image);
    const int sigma = res->crossing_sign == kCoherentBranchSign ? 1 : -1;
    TwistWord comp;
    comp.letters.push_back({res->loops.c, -sigma});
    comp.letters.push_back({res->loops.b, 2 * sigma});
    comp.letters.push_back({res->loops.a, 2 * sigma});
    w = compose_words(w, comp);
    how = std::string("band desurgery, ") +
          (sigma > 0 ? "coherent" : "reverse") + " branch";
  }
  w = cleaned(book.surface, w);
  std::vector<Path> carried;
  for (const TwistLetter& l : w.letters) carried.push_back(l.loop);
  CutPieces pieces = cut_surface_along_arc(book.surface, an.alpha, carried);
  TwistWord moved;
  for (std::size_t k = 0; k < carried.size(); ++k)
    moved.letters.push_back({pieces.carried[k], w.letters[k].exponent});
  moved = cleaned(pieces.graph, moved);
  validate_twist_word(pieces.graph, moved);
  CutOutcome out;
  out.book.surface = std::move(pieces.graph);
  out.book.monodromy = std::move(moved);
  out.book.provenance = book.provenance;
  out.book.provenance.push_back("cut-along-arc " + path_token(an.alpha) + " (" +
                                how + ")");
  out.split = pieces.split;
  out.boundary_parallel = pieces.boundary_parallel;
  if (res) out.resolution = res->loops;
  return out;
}

OpenBook plumb_hopf(const OpenBook& book, const Path& a, int sign) {
  if (sign != 1 && sign != -1)
    throw Error(ErrorCode::ValidationError, "hopf band sign must be +1 or -1");
  if (a.is_loop)
    throw Error(ErrorCode::NotAnArc, "plumbing arc must be an arc");
  Path arc = normalize(book.surface, a);
  if (min_self_crossings(book.surface, arc) != 0)
    throw Error(ErrorCode::NotEmbedded, "plumbing arc must be embedded");
  BandAttachment att = attach_band_along(book.surface, arc);
  TwistWord comp;
  comp.letters.push_back({att.closure, sign});
  TwistWord w = cleaned(att.graph, compose_words(book.monodromy, comp));
  validate_twist_word(att.graph, w);
  if (euler_characteristic(att.graph) != euler_characteristic(book.surface) - 1)
    throw Error(ErrorCode::NonDiskRegionUnresolved,
                "plumbing must lower the euler characteristic by one");
  OpenBook out;
  out.surface = std::move(att.graph);
  out.monodromy = std::move(w);
  out.provenance = book.provenance;
  out.provenance.push_back(std::string("plumb-hopf ") +
                           (sign > 0 ? "+1" : "-1") + " along " +
                           path_token(arc));
  return out;
}

OpenBook attach_generalized_hopf_band(const OpenBook& book, const Path& ell,
                                      BandSide side) {
  if (ell.is_loop)
    throw Error(ErrorCode::NotAnArc, "band core projection must be an arc");
  OverlaySummary tight =
      overlay_system(book.surface, {normalize(book.surface, ell)});
  if (tight.crossings.size() > 1)
    throw Error(ErrorCode::SelfCrossingCountWrong,
                "band core projection has " +
                    std::to_string(tight.crossings.size()) +
                    " essential self-crossings, need at most 1");
  const int sigma = side == BandSide::Over ? 1 : -1;
  BandAttachment att = attach_band_along(book.surface, tight.curves[0]);
  OverlaySummary closed = overlay_system(att.graph, {att.closure});
  TwistWord w = book.monodromy;
  std::string how;
  if (closed.crossings.empty()) {
    // The overlap was removable: the band is a plain Hopf band and the
    // correction collapses to the single twist along its core.
    TwistWord comp;
    comp.letters.push_back({closed.curves[0], sigma});
    w = compose_words(w, comp);
    how = "degenerate: hopf plumbing";
  } else if (closed.crossings.size() == 1) {
    const OverlayCrossing& cr = closed.crossings[0];
    const std::size_t i = std::min(cr.chord_a, cr.chord_b);
    const std::size_t j = std::max(cr.chord_a, cr.chord_b);
    if (i == j)
      throw Error(ErrorCode::NonDiskRegionUnresolved,
                  "self-crossing reported on a single chord");
    ResolutionLoops r = smooth_at(att.graph, closed.curves[0].traversals, i, j);
    TwistWord comp;
    comp.letters.push_back({std::move(r.a), -2 * sigma});
    comp.letters.push_back({std::move(r.b), -2 * sigma});
    comp.letters.push_back({std::move(r.c), sigma});
    w = compose_words(w, comp);
    how = "once-overlapped band";
  } else {
    throw Error(ErrorCode::SelfCrossingCountWrong,
                "band closure has " + std::to_string(closed.crossings.size()) +
                    " essential self-crossings after attachment");
  }
  w = cleaned(att.graph, w);
  validate_twist_word(att.graph, w);
  if (euler_characteristic(att.graph) != euler_characteristic(book.surface) - 1)
    throw Error(ErrorCode::NonDiskRegionUnresolved,
                "band attachment must lower the euler characteristic by one");
  OpenBook out;
  out.surface = std::move(att.graph);
  out.monodromy = std::move(w);
  out.provenance = book.provenance;
  out.provenance.push_back(
      std::string("attach-generalized-hopf-band ") +
      (side == BandSide::Over ? "over" : "under") + " along " +
      path_token(tight.curves[0]) + " (" + how + ")");
  return out;
}

const char* banding_kind_name(BandingKind k) {
  switch (k) {
    case BandingKind::HopfPositive: return "hopf(+1)";
    case BandingKind::HopfNegative: return "hopf(-1)";
    case BandingKind::GeneralizedHopf: return "generalized-hopf";
    case BandingKind::Neither: return "neither";
  }
  return "?";
}

BandingKind detect_banding(const OpenBook& book, const Path& alpha) {
  const ArcClassification& cl = analyze_arc(book, alpha).report.classification;
  if (cl.fixed) return BandingKind::Neither;
  if (cl.unclean == 0 && cl.alternating)
    return cl.geometry.i_boundary > 0 ? BandingKind::HopfPositive
                                      : BandingKind::HopfNegative;
  if (cl.unclean == 1 && !cl.alternating) return BandingKind::GeneralizedHopf;
  return BandingKind::Neither;
}

bool detect_prefiber_case(const OpenBook& book, const Path& alpha) {
  const ArcClassification& cl = analyze_arc(book, alpha).report.classification;
  return !cl.fixed && cl.unclean == 0 && !cl.alternating;
}

bool open_book_equal(const OpenBook& x, const OpenBook& y) {
  ReducedPresentation rx = reduce_presentation(x.surface);
  ReducedPresentation ry = reduce_presentation(y.surface);
  auto transported = [](const ReducedPresentation& rp, const TwistWord& w) {
    TwistWord out;
    for (const TwistLetter& l : w.letters)
      out.letters.push_back({transport_through_reduction(rp, l.loop), l.exponent});
    return out;
  };
  std::vector<ComponentBook> cx =
      split_components(rx.result, cleaned(rx.result, transported(rx, x.monodromy)));
  std::vector<ComponentBook> cy =
      split_components(ry.result, cleaned(ry.result, transported(ry, y.monodromy)));
  if (cx.size() != cy.size()) return false;
  std::vector<bool> used(cy.size(), false);
  std::function<bool(std::size_t)> match = [&](std::size_t i) {
    if (i == cx.size()) return true;
    for (std::size_t j = 0; j < cy.size(); ++j) {
      if (used[j] || !component_books_match(cx[i], cy[j])) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

}  // namespace openbook
