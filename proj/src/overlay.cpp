#include "openbook/overlay.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "openbook/errors.hpp"

namespace openbook {
namespace {

// Strand order keys leave room for midpoint insertion between neighbors.
constexpr long long kGap = 1ll << 20;

[[noreturn]] void bug(const std::string& what) {
  throw Error(ErrorCode::NonDiskRegionUnresolved, what);
}

// Thrown when a jitter draw produces concurrent crossings (or a degenerate
// endpoint germ); the disk arrangements are rebuilt with the next draw.
struct RetryJitter {};

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

int sgn128(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

__int128 sq(long long v) { return (__int128)v * v; }

using Strand = std::pair<std::size_t, std::size_t>;  // (curve, traversal index)

// ---------------------------------------------------------------------------
// Divergence order of the strands crossing one band.
//
// Two strands are compared by following both curves out of the band (toward
// the end-1 disk) and ranking the first exits that differ, measured
// counterclockwise from the shared entry gate; pinned endpoints on a corner
// slot in by their boundary keys.  This is the cross-section order in which
// disjoint normal representatives would sit, so embedded curves receive
// crossing-free initial positions.
// ---------------------------------------------------------------------------

struct Ray {
  const Path* p = nullptr;
  long long at = 0;  // dir=+1: index of the next traversal; dir=-1: the one behind
  int dir = +1;
};

struct RayExit {
  bool pin = false;
  int half = -1;  // gate exited through (when !pin)
  int slot = 0;
  int pin_vertex = -1;
  long long key = 0;
};

class StrandOrder {
 public:
  StrandOrder(const FatGraph& g, const SurfaceIndex& idx,
              const std::vector<Path>& curves)
      : g_(g), idx_(idx), curves_(curves) {}

  bool less(const Strand& s1, const Strand& s2) const {
    if (s1 == s2) return false;
    const Path& p1 = curves_[s1.first];
    const Path& p2 = curves_[s2.first];
    int e = edge_of(p1.traversals[s1.second]);
    if (e != edge_of(p2.traversals[s2.second]))
      bug("strand comparison across distinct bands");
    Ray r1 = make_ray(p1, (long long)s1.second);
    Ray r2 = make_ray(p2, (long long)s2.second);
    int gate = 2 * e + 1;
    long long cap = 2ll * ((long long)p1.traversals.size() + 2) *
                        ((long long)p2.traversals.size() + 2) +
                    8;
    for (long long step = 0; step < cap; ++step) {
      RayExit x1 = exit_of(r1);
      RayExit x2 = exit_of(r2);
      int v = idx_.place[gate].vertex;
      int k = (int)g_.vertex_cycles[v].size();
      int s_in = idx_.place[gate].slot;
      int rk1 = rank(x1, v, k, s_in);
      int rk2 = rank(x2, v, k, s_in);
      if (rk1 != rk2) return rk1 < rk2;
      if (x1.pin) {
        if (x1.key != x2.key) return x1.key < x2.key;
        bug("distinct strands with identical pinned exits");
      }
      r1.at += r1.dir;
      r2.at += r2.dir;
      gate = mate(x1.half);
    }
    // Parallel forever (several passes of one loop, or coinciding loops):
    // put the later strand on the travel-left of the earlier one, the
    // convention matching an annular push-off.
    Strand u = std::min(s1, s2);
    bool u_aligned = curves_[u.first].traversals[u.second] % 2 == 0;
    return (u == s1) ? u_aligned : !u_aligned;
  }

 private:
  static Ray make_ray(const Path& p, long long t) {
    // Toward the end-1 disk of the band: forward along the curve when the
    // strand enters via the even half-edge, backward otherwise.
    if (p.traversals[t] % 2 == 0) return Ray{&p, t + 1, +1};
    return Ray{&p, t - 1, -1};
  }

  RayExit exit_of(const Ray& r) const {
    const Path& p = *r.p;
    long long n = (long long)p.traversals.size();
    RayExit x;
    if (p.is_loop) {
      long long i = ((r.at % n) + n) % n;
      x.half = r.dir > 0 ? p.traversals[i] : mate(p.traversals[i]);
      return x;
    }
    if (r.dir > 0) {
      if (r.at >= n) return pin_exit(p.end);
      x.half = p.traversals[r.at];
      return x;
    }
    if (r.at < 0) return pin_exit(p.start);
    x.half = mate(p.traversals[r.at]);
    return x;
  }

  static RayExit pin_exit(const BoundaryPoint& b) {
    RayExit x;
    x.pin = true;
    x.slot = b.corner.slot;
    x.pin_vertex = b.corner.vertex;
    x.key = b.key;
    return x;
  }

  int rank(const RayExit& x, int v, int k, int s_in) const {
    if (x.pin && x.pin_vertex != v) bug("pinned exit off the expected disk");
    int slot = x.pin ? x.slot : idx_.place[x.half].slot;
    int d = ((slot - s_in) % k + k) % k;
    return 2 * d + (x.pin ? 1 : 0);
  }

  const FatGraph& g_;
  const SurfaceIndex& idx_;
  const std::vector<Path>& curves_;
};

// ---------------------------------------------------------------------------
// Per-disk arrangements.  Every disk becomes a convex polygon whose vertices
// sit on the parabola y = x^2 (so straight chords cross iff their endpoints
// interleave); gates contribute a mark at each end of their point run, every
// corner contributes an anchor, and pinned endpoints sit on their corners in
// key order.
// ---------------------------------------------------------------------------

struct PtRef {
  int disk = -1;
  int idx = -1;
};

struct PolyPt {
  int kind = 0;  // 0 open mark, 1 close mark, 2 anchor, 3 strand, 4 pin
  int gate = -1;
  int corner_slot = -1;
  std::size_t curve = 0;
  std::size_t trav = 0;
  int pin_which = -1;
  long long x = 0;
};

struct DChord {
  std::size_t curve = 0;
  std::size_t gap = 0;
  int from = -1, to = -1;  // polygon point indices, in curve order
  std::vector<int> hits;   // crossing ids ordered from `from` to `to`
};

struct DCross {
  int ca = -1, cb = -1;  // local chord ids, ca < cb
  Rational x;
};

struct DEdge {
  int tail = -1, head = -1;  // arrangement vertex ids
  long long slope = 0;
  int kind = 0;  // 0 boundary hull, 1 mouth hull, 2 chord segment
  int corner_slot = -1;                    // kind 0
  int band = -1, band_end = -1, lane = -1; // kind 1 (lane in end-0 indexing)
  int chord = -1;                          // kind 2
};

struct DiskArr {
  std::vector<PolyPt> pts;
  std::vector<DChord> chords;
  std::vector<DCross> crosses;
  std::vector<Rational> vx;  // x coordinate per arrangement vertex
  std::vector<DEdge> edges;
  std::vector<std::vector<int>> rot;  // per vertex: directed half-edges, ccw
  std::vector<int> rotpos;            // per directed half-edge
  std::vector<std::vector<int>> faces;
  std::vector<int> face_of, face_pos;
  int outer = -1;
};

struct DheRef {
  int disk = -1;
  int dhe = -1;
};

struct Piece {
  int type = 0;  // 0 chord segment, 1 band strand side, 2 boundary
  std::size_t curve = 0;
  std::size_t gap = 0;   // type 0
  std::size_t trav = 0;  // type 1
  bool aligned = true;   // type 1: walk direction equals curve direction
  bool region_above = false;  // type 1: the region sits on the strand's high-key side
  int disk = -1, dhe = -1;    // type 0
};

struct RegionInfo {
  int faces = 0, lanes = 0, boundary = 0, pins = 0, corners = 0;
  std::array<std::pair<int, int>, 2> corner_id{{{-1, -1}, {-1, -1}}};
};

struct Walk {
  std::vector<std::pair<int, int>> corners;  // (disk, local crossing id)
  std::vector<std::vector<Piece>> sides;     // sides[i] runs corner i -> i+1
};

struct Engine {
  const FatGraph& g;
  const SurfaceIndex& idx;
  OverlayOptions opt;
  bool pair_mode = false;
  bool shared = false;
  bool allow_self = true;

  std::vector<Path> curves;
  std::vector<std::vector<long long>> keys;

  // Arrangement state, rebuilt by build().
  std::vector<std::vector<Strand>> band_order;
  std::vector<std::vector<int>> strand_rank;
  std::vector<DiskArr> disks;
  std::vector<std::vector<PtRef>> depart_pt, arrive_pt;
  std::vector<std::array<PtRef, 2>> pin_pts;
  std::vector<std::vector<std::pair<int, int>>> chord_ref;  // [curve][gap] -> (disk, local)
  std::vector<std::array<std::vector<DheRef>, 2>> mouth_at; // [edge][end][lane]
  std::vector<int> face_offset;
  std::vector<int> uf;
  std::map<int, RegionInfo> regions;
  std::vector<std::vector<int>> lane_root;
  int total_crossings = 0;

  Engine(const FatGraph& gg, const SurfaceIndex& ii, const OverlayOptions& oo)
      : g(gg), idx(ii), opt(oo) {}

  // --- union-find over arrangement faces ------------------------------------

  int find(int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  }

  void unite(int a, int b) { uf[find(a)] = find(b); }

  // --- key initialization ----------------------------------------------------

  void init_keys() {
    keys.assign(curves.size(), {});
    for (std::size_t c = 0; c < curves.size(); ++c)
      keys[c].assign(curves[c].traversals.size(), 0);
    if (!opt.comparator_init) {
      long long pos = 1;
      for (std::size_t c = 0; c < curves.size(); ++c)
        for (std::size_t t = 0; t < curves[c].traversals.size(); ++t)
          keys[c][t] = (pos++) * kGap;
      return;
    }
    std::vector<std::vector<Strand>> per_band(g.num_edges);
    for (std::size_t c = 0; c < curves.size(); ++c)
      for (std::size_t t = 0; t < curves[c].traversals.size(); ++t)
        per_band[edge_of(curves[c].traversals[t])].push_back({c, t});
    StrandOrder ord(g, idx, curves);
    for (auto& band : per_band) {
      std::sort(band.begin(), band.end(),
                [&](const Strand& a, const Strand& b) { return ord.less(a, b); });
      for (std::size_t r = 0; r < band.size(); ++r)
        keys[band[r].first][band[r].second] = (long long)(r + 1) * kGap;
    }
  }

  void renumber_band(int e) {
    for (std::size_t r = 0; r < band_order[e].size(); ++r) {
      auto [c, t] = band_order[e][r];
      keys[c][t] = (long long)(r + 1) * kGap;
    }
  }

  // --- arrangement construction ----------------------------------------------

  void build_attempts() {
    for (std::uint64_t salt = 0; salt < 64; ++salt) {
      try {
        build(salt);
        return;
      } catch (const RetryJitter&) {
      }
    }
    bug("could not avoid concurrent crossings after 64 jitter draws");
  }

  void build(std::uint64_t salt) {
    int nv = (int)g.vertex_cycles.size();
    disks.assign(nv, {});
    band_order.assign(g.num_edges, {});
    strand_rank.assign(curves.size(), {});
    depart_pt.assign(curves.size(), {});
    arrive_pt.assign(curves.size(), {});
    pin_pts.assign(curves.size(), {});
    chord_ref.assign(curves.size(), {});
    mouth_at.assign(g.num_edges, {});
    total_crossings = 0;

    for (std::size_t c = 0; c < curves.size(); ++c) {
      std::size_t n = curves[c].traversals.size();
      strand_rank[c].assign(n, -1);
      depart_pt[c].assign(n, {});
      arrive_pt[c].assign(n, {});
      chord_ref[c].assign((std::size_t)chord_count(curves[c]), {-1, -1});
      for (std::size_t t = 0; t < n; ++t)
        band_order[edge_of(curves[c].traversals[t])].push_back({c, t});
    }
    for (int e = 0; e < g.num_edges; ++e) {
      auto& band = band_order[e];
      std::sort(band.begin(), band.end(), [&](const Strand& a, const Strand& b) {
        return keys[a.first][a.second] < keys[b.first][b.second];
      });
      for (std::size_t r = 0; r < band.size(); ++r)
        strand_rank[band[r].first][band[r].second] = (int)r;
      mouth_at[e][0].assign(band.size() + 1, {});
      mouth_at[e][1].assign(band.size() + 1, {});
    }

    // Pins grouped by corner, in boundary order.
    std::map<std::pair<int, int>, std::vector<std::pair<long long, std::pair<std::size_t, int>>>>
        pins_at;
    for (std::size_t c = 0; c < curves.size(); ++c) {
      if (curves[c].is_loop) continue;
      pins_at[{curves[c].start.corner.vertex, curves[c].start.corner.slot}].push_back(
          {curves[c].start.key, {c, 0}});
      pins_at[{curves[c].end.corner.vertex, curves[c].end.corner.slot}].push_back(
          {curves[c].end.key, {c, 1}});
    }
    for (auto& [corner, pins] : pins_at) {
      std::sort(pins.begin(), pins.end());
      for (std::size_t i = 1; i < pins.size(); ++i)
        if (pins[i].first == pins[i - 1].first)
          bug("coincident pinned endpoints on one corner");
    }

    for (int v = 0; v < nv; ++v) build_polygon(v, salt, pins_at);

    for (std::size_t c = 0; c < curves.size(); ++c) emit_chords(c);

    for (int v = 0; v < nv; ++v) finish_disk(v);

    build_regions();
  }

  void build_polygon(
      int v, std::uint64_t salt,
      const std::map<std::pair<int, int>,
                     std::vector<std::pair<long long, std::pair<std::size_t, int>>>>& pins_at) {
    DiskArr& D = disks[v];
    const auto& cyc = g.vertex_cycles[v];
    std::map<int, std::array<int, 3>> mouth_tag;  // tail pt -> (band, end, lane)

    auto add = [&](PolyPt p) {
      D.pts.push_back(p);
      return (int)D.pts.size() - 1;
    };
    auto add_pins = [&](int slot) {
      auto it = pins_at.find({v, slot});
      if (it == pins_at.end()) return;
      for (const auto& [key, who] : it->second) {
        PolyPt p;
        p.kind = 4;
        p.corner_slot = slot;
        p.curve = who.first;
        p.pin_which = who.second;
        int i = add(p);
        pin_pts[who.first][who.second] = {v, i};
      }
    };

    if (cyc.empty()) {
      for (int i = 0; i < 3; ++i) {
        PolyPt p;
        p.kind = 2;
        p.corner_slot = 0;
        add(p);
      }
      add_pins(0);
    } else {
      for (int s = 0; s < (int)cyc.size(); ++s) {
        int h = cyc[s];
        int e = edge_of(h), end = h & 1;
        PolyPt open;
        open.kind = 0;
        open.gate = h;
        open.corner_slot = s;
        std::vector<int> run{add(open)};
        int K = (int)band_order[e].size();
        for (int t = 0; t < K; ++t) {
          Strand st = band_order[e][end == 0 ? t : K - 1 - t];
          PolyPt p;
          p.kind = 3;
          p.gate = h;
          p.corner_slot = s;
          p.curve = st.first;
          p.trav = st.second;
          int i = add(p);
          bool depart = curves[st.first].traversals[st.second] == h;
          (depart ? depart_pt : arrive_pt)[st.first][st.second] = {v, i};
          run.push_back(i);
        }
        PolyPt close;
        close.kind = 1;
        close.gate = h;
        close.corner_slot = s;
        run.push_back(add(close));
        for (int j = 0; j + 1 < (int)run.size(); ++j) {
          int l0 = end == 0 ? j : K - j;
          mouth_tag[run[j]] = {e, end, l0};
          mouth_at[e][end][l0] = {v, 2 * run[j]};
        }
        PolyPt anchor;
        anchor.kind = 2;
        anchor.corner_slot = s;
        add(anchor);
        add_pins(s);
      }
    }

    int m = (int)D.pts.size();
    for (int i = 0; i < m; ++i)
      D.pts[i].x = 1024ll * (i + 1) +
                   (long long)(mix64((salt << 40) ^ ((std::uint64_t)v << 20) ^
                                     (std::uint64_t)i) &
                               1023);

    // Hull edges: i -> i+1 (counterclockwise).
    D.edges.reserve(2 * m);
    for (int i = 0; i < m; ++i) {
      int j = (i + 1) % m;
      DEdge e;
      e.tail = i;
      e.head = j;
      e.slope = D.pts[i].x + D.pts[j].x;
      auto it = mouth_tag.find(i);
      if (it != mouth_tag.end()) {
        if (j != i + 1) bug("gate run wrapped around the polygon");
        e.kind = 1;
        e.band = it->second[0];
        e.band_end = it->second[1];
        e.lane = it->second[2];
      } else {
        e.kind = 0;
        e.corner_slot = D.pts[i].corner_slot;
      }
      D.edges.push_back(e);
    }
  }

  void emit_chords(std::size_t c) {
    const Path& p = curves[c];
    std::size_t n = p.traversals.size();
    auto push = [&](PtRef from, PtRef to, std::size_t gap) {
      if (from.disk != to.disk) bug("chord endpoints on distinct disks");
      DChord ch;
      ch.curve = c;
      ch.gap = gap;
      ch.from = from.idx;
      ch.to = to.idx;
      disks[from.disk].chords.push_back(ch);
      chord_ref[c][gap] = {from.disk, (int)disks[from.disk].chords.size() - 1};
    };
    if (p.is_loop) {
      for (std::size_t gap = 0; gap < n; ++gap)
        push(arrive_pt[c][(gap + n - 1) % n], depart_pt[c][gap], gap);
      return;
    }
    if (n == 0) {
      push(pin_pts[c][0], pin_pts[c][1], 0);
      return;
    }
    push(pin_pts[c][0], depart_pt[c][0], 0);
    for (std::size_t gap = 1; gap < n; ++gap)
      push(arrive_pt[c][gap - 1], depart_pt[c][gap], gap);
    push(arrive_pt[c][n - 1], pin_pts[c][1], n);
  }

  // Hull x-coordinates (pin, far end) of curve c's germ chord at endpoint
  // `which`, oriented away from the pin.
  std::pair<long long, long long> germ_ray(std::size_t c, int which) const {
    auto [d, ci] = chord_ref[c][which == 0 ? 0 : chord_ref[c].size() - 1];
    const DiskArr& D = disks[d];
    const DChord& ch = D.chords[ci];
    long long xp = D.pts[ch.from].x, xq = D.pts[ch.to].x;
    if (which == 1) std::swap(xp, xq);
    return {xp, xq};
  }

  // Side of the first curve's germ on which the second curve departs at the
  // shared endpoint.  The pushed-apart pins coincide in the limit, so the two
  // germ chords emanate from one point p of the strictly convex hull and the
  // side is the orientation of (p, q_a, q_b); on the parabola that determinant
  // factors as sgn(q_a-p) sgn(q_b-p) sgn(q_b-q_a).  The pin offset itself must
  // not enter: it is scaffolding, comparable in size to the far-end gaps.
  int germ_side(int which) const {
    auto [pa, qa] = germ_ray(0, which);
    auto [pb, qb] = germ_ray(1, which);
    int s = sgn128(qa - pa) * sgn128(qb - pb) * sgn128(qb - qa);
    if (s == 0) bug("degenerate endpoint germ");
    return s;
  }

  void finish_disk(int v) {
    DiskArr& D = disks[v];
    int m = (int)D.pts.size();

    // Crossings: chords cross iff their endpoints interleave on the hull.
    for (int a = 0; a < (int)D.chords.size(); ++a) {
      for (int b = a + 1; b < (int)D.chords.size(); ++b) {
        int lo1 = std::min(D.chords[a].from, D.chords[a].to);
        int hi1 = std::max(D.chords[a].from, D.chords[a].to);
        int lo2 = std::min(D.chords[b].from, D.chords[b].to);
        int hi2 = std::max(D.chords[b].from, D.chords[b].to);
        bool in1 = lo1 < lo2 && lo2 < hi1;
        bool in2 = lo1 < hi2 && hi2 < hi1;
        if (in1 == in2) continue;
        long long pa = D.pts[D.chords[a].from].x, qa = D.pts[D.chords[a].to].x;
        long long pb = D.pts[D.chords[b].from].x, qb = D.pts[D.chords[b].to].x;
        long long den = (pa + qa) - (pb + qb);
        if (den == 0) throw RetryJitter{};
        DCross cr;
        cr.ca = a;
        cr.cb = b;
        cr.x = Rational(pa * qa - pb * qb, den);
        int cid = (int)D.crosses.size();
        D.crosses.push_back(cr);
        D.chords[a].hits.push_back(cid);
        D.chords[b].hits.push_back(cid);
      }
    }
    total_crossings += (int)D.crosses.size();

    for (auto& ch : D.chords) {
      std::sort(ch.hits.begin(), ch.hits.end(), [&](int i, int j) {
        return D.crosses[i].x < D.crosses[j].x;
      });
      for (std::size_t i = 1; i < ch.hits.size(); ++i)
        if (D.crosses[ch.hits[i - 1]].x == D.crosses[ch.hits[i]].x)
          throw RetryJitter{};  // concurrent crossings on one chord
      if (D.pts[ch.from].x > D.pts[ch.to].x)
        std::reverse(ch.hits.begin(), ch.hits.end());
    }

    // Arrangement vertices: polygon points, then crossings.
    D.vx.reserve(m + D.crosses.size());
    for (int i = 0; i < m; ++i) D.vx.push_back(Rational(D.pts[i].x));
    for (auto& cr : D.crosses) D.vx.push_back(cr.x);

    for (int ci = 0; ci < (int)D.chords.size(); ++ci) {
      const DChord& ch = D.chords[ci];
      long long slope = D.pts[ch.from].x + D.pts[ch.to].x;
      std::vector<int> seq{ch.from};
      for (int cid : ch.hits) seq.push_back(m + cid);
      seq.push_back(ch.to);
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        DEdge e;
        e.tail = seq[i];
        e.head = seq[i + 1];
        e.slope = slope;
        e.kind = 2;
        e.chord = ci;
        D.edges.push_back(e);
      }
    }

    // Rotations: directions sorted counterclockwise starting just past
    // straight down.  A chord direction coinciding in slope with a hull edge
    // (a chord joining adjacent hull points) bulges infinitesimally inward,
    // which shifts its slope up when heading right and down when heading left.
    int V = (int)D.vx.size();
    D.rot.assign(V, {});
    int ne = (int)D.edges.size();
    for (int ei = 0; ei < ne; ++ei) {
      D.rot[D.edges[ei].tail].push_back(2 * ei);
      D.rot[D.edges[ei].head].push_back(2 * ei + 1);
    }
    auto dhe_tail = [&](int dhe) {
      return dhe % 2 == 0 ? D.edges[dhe / 2].tail : D.edges[dhe / 2].head;
    };
    auto dhe_head = [&](int dhe) {
      return dhe % 2 == 0 ? D.edges[dhe / 2].head : D.edges[dhe / 2].tail;
    };
    for (int v2 = 0; v2 < V; ++v2) {
      std::sort(D.rot[v2].begin(), D.rot[v2].end(), [&](int a, int b) {
        const DEdge& ea = D.edges[a / 2];
        const DEdge& eb = D.edges[b / 2];
        bool la = D.vx[dhe_head(a)] < D.vx[dhe_tail(a)];
        bool lb = D.vx[dhe_head(b)] < D.vx[dhe_tail(b)];
        if (la != lb) return lb;
        if (ea.slope != eb.slope) return ea.slope < eb.slope;
        int xa = ea.kind == 2 ? (la ? -1 : 1) : 0;
        int xb = eb.kind == 2 ? (lb ? -1 : 1) : 0;
        if (xa == xb) bug("coincident directions in a rotation");
        return xa < xb;
      });
    }
    D.rotpos.assign(2 * ne, -1);
    for (int v2 = 0; v2 < V; ++v2)
      for (int i = 0; i < (int)D.rot[v2].size(); ++i) D.rotpos[D.rot[v2][i]] = i;

    // Face tracing: the successor of a directed edge is the clockwise-next
    // direction at its head, which walks every face with its interior on the
    // left.
    D.face_of.assign(2 * ne, -1);
    D.face_pos.assign(2 * ne, -1);
    for (int start = 0; start < 2 * ne; ++start) {
      if (D.face_of[start] != -1) continue;
      int f = (int)D.faces.size();
      D.faces.push_back({});
      int cur = start;
      do {
        D.face_of[cur] = f;
        D.face_pos[cur] = (int)D.faces[f].size();
        D.faces[f].push_back(cur);
        int w = dhe_head(cur);
        const auto& r = D.rot[w];
        int p = D.rotpos[cur ^ 1];
        cur = r[(p + (int)r.size() - 1) % (int)r.size()];
      } while (cur != start);
    }

    // The outer face contains the clockwise hull edge from an anchor back to
    // the preceding close mark (those two points never carry chords).
    int marker = -1;
    for (int i = 0; i < m; ++i)
      if (D.pts[i].kind == 1 || (g.vertex_cycles[v].empty() && i == 0)) {
        marker = i;
        break;
      }
    if (marker < 0) bug("disk without a close mark or anchor");
    D.outer = D.face_of[2 * marker + 1];
  }

  void build_regions() {
    int nv = (int)disks.size();
    face_offset.assign(nv + 1, 0);
    for (int v = 0; v < nv; ++v)
      face_offset[v + 1] = face_offset[v] + (int)disks[v].faces.size();
    uf.resize(face_offset[nv]);
    for (int i = 0; i < face_offset[nv]; ++i) uf[i] = i;

    lane_root.assign(g.num_edges, {});
    for (int e = 0; e < g.num_edges; ++e) {
      int K = (int)band_order[e].size();
      for (int l0 = 0; l0 <= K; ++l0) {
        DheRef a = mouth_at[e][0][l0];
        DheRef b = mouth_at[e][1][l0];
        if (a.disk < 0 || b.disk < 0) bug("band without both gate mouths");
        if (disks[a.disk].face_of[a.dhe] == disks[a.disk].outer ||
            disks[b.disk].face_of[b.dhe] == disks[b.disk].outer)
          bug("mouth on the outer face");
        unite(face_offset[a.disk] + disks[a.disk].face_of[a.dhe],
              face_offset[b.disk] + disks[b.disk].face_of[b.dhe]);
      }
    }

    regions.clear();
    for (int v = 0; v < nv; ++v) {
      const DiskArr& D = disks[v];
      int m = (int)D.pts.size();
      for (int f = 0; f < (int)D.faces.size(); ++f) {
        if (f == D.outer) continue;
        RegionInfo& R = regions[find(face_offset[v] + f)];
        R.faces += 1;
        for (int dhe : D.faces[f]) {
          const DEdge& E = D.edges[dhe / 2];
          if (E.kind == 0) R.boundary += 1;
          int head = dhe % 2 == 0 ? E.head : E.tail;
          if (head >= m) {
            if (R.corners < 2) R.corner_id[R.corners] = {v, head - m};
            R.corners += 1;
          } else if (D.pts[head].kind == 4) {
            R.pins += 1;
          }
        }
      }
    }
    for (int e = 0; e < g.num_edges; ++e) {
      int K = (int)band_order[e].size();
      lane_root[e].assign(K + 1, -1);
      for (int l0 = 0; l0 <= K; ++l0) {
        DheRef a = mouth_at[e][0][l0];
        int root = find(face_offset[a.disk] + disks[a.disk].face_of[a.dhe]);
        lane_root[e][l0] = root;
        RegionInfo& R = regions[root];
        R.lanes += 1;
        if (l0 == 0) R.boundary += 1;
        if (l0 == K) R.boundary += 1;
      }
    }
  }

  // --- move selection ----------------------------------------------------------

  struct MoveSel {
    std::pair<int, int> key;
    int root = -1;
    bool monogon = false;
  };

  std::optional<MoveSel> find_move() {
    std::optional<MoveSel> best;
    for (const auto& [root, R] : regions) {
      if (R.boundary != 0 || R.pins != 0) continue;
      if (R.faces - R.lanes != 1) continue;
      bool monogon;
      std::pair<int, int> key;
      if (R.corners == 2) {
        // A disk whose boundary passes the same crossing twice is a curl
        // wrapping that crossing, not an embedded bigon; sliding across it
        // shuffles strands without reducing anything.
        if (R.corner_id[0] == R.corner_id[1]) continue;
        monogon = false;
        key = std::min(R.corner_id[0], R.corner_id[1]);
      } else if (R.corners == 1 && allow_self) {
        monogon = true;
        key = R.corner_id[0];
      } else {
        continue;
      }
      if (!best || key < best->key) best = MoveSel{key, root, monogon};
    }
    return best;
  }

  int successor(int d, int dhe) const {
    const DiskArr& D = disks[d];
    int f = D.face_of[dhe];
    return D.faces[f][(D.face_pos[dhe] + 1) % (int)D.faces[f].size()];
  }

  Walk walk_region(int root) {
    // Locate the lexicographically first non-mouth directed edge of the
    // region (this also fixes the walk start deterministically).
    DheRef start{-1, -1};
    int real_total = 0;
    for (int d = 0; d < (int)disks.size(); ++d) {
      const DiskArr& D = disks[d];
      for (int f = 0; f < (int)D.faces.size(); ++f) {
        if (f == D.outer || find(face_offset[d] + f) != root) continue;
        for (int dhe : D.faces[f]) {
          if (D.edges[dhe / 2].kind == 1) continue;
          ++real_total;
          if (start.disk < 0 ||
              std::make_pair(d, dhe) < std::make_pair(start.disk, start.dhe))
            start = {d, dhe};
        }
      }
    }
    if (start.disk < 0) bug("region without chord edges");

    struct Item {
      bool corner = false;
      Piece piece;
      std::pair<int, int> cid{-1, -1};
    };
    std::vector<Item> items;
    DheRef cur = start;
    int consumed = 0;
    long long lanes_total = 0;
    for (const auto& band : band_order) lanes_total += (long long)band.size() + 1;
    long long guard = 8ll * (real_total + lanes_total) + 4096;
    do {
      const DiskArr& D = disks[cur.disk];
      const DEdge& E = D.edges[cur.dhe / 2];
      if (E.kind == 1) bug("region walk landed on a mouth");
      if (E.kind == 0) bug("boundary edge inside a crossing region");
      ++consumed;
      Item it;
      it.piece.type = 0;
      it.piece.curve = D.chords[E.chord].curve;
      it.piece.gap = D.chords[E.chord].gap;
      it.piece.disk = cur.disk;
      it.piece.dhe = cur.dhe;
      items.push_back(it);

      int m = (int)D.pts.size();
      int head = cur.dhe % 2 == 0 ? E.head : E.tail;
      DheRef nxt{cur.disk, successor(cur.disk, cur.dhe)};
      bool jumped = false;
      while (disks[nxt.disk].edges[nxt.dhe / 2].kind == 1) {
        jumped = true;
        const DEdge& M = disks[nxt.disk].edges[nxt.dhe / 2];
        int e = M.band, end = M.band_end, l0 = M.lane;
        int K = (int)band_order[e].size();
        if ((end == 0 && l0 == 0) || (end == 1 && l0 == K))
          bug("boundary lane inside a crossing region");
        Strand s = band_order[e][end == 0 ? l0 - 1 : l0];
        Item lane;
        lane.piece.type = 1;
        lane.piece.curve = s.first;
        lane.piece.trav = s.second;
        lane.piece.aligned = (curves[s.first].traversals[s.second] & 1) == end;
        // Entering at end 0 the walk follows the strand below the lane, so
        // the region is on its high-key side; at end 1 the reverse.
        lane.piece.region_above = end == 0;
        items.push_back(lane);
        DheRef far = mouth_at[e][1 - end][l0];
        nxt = {far.disk, successor(far.disk, far.dhe)};
        if (--guard < 0) bug("region walk did not close");
      }
      if (!jumped) {
        if (head >= m) {
          Item corner;
          corner.corner = true;
          corner.cid = {cur.disk, head - m};
          items.push_back(corner);
        } else if (D.pts[head].kind == 4) {
          bug("pinned point inside a crossing region");
        }
      }
      cur = nxt;
      if (--guard < 0) bug("region walk did not close");
    } while (!(cur.disk == start.disk && cur.dhe == start.dhe));
    if (consumed != real_total) bug("region boundary is not a single cycle");

    std::vector<int> corner_pos;
    for (int i = 0; i < (int)items.size(); ++i)
      if (items[i].corner) corner_pos.push_back(i);
    if (corner_pos.empty()) bug("crossing region without corners");

    Walk w;
    int nc = (int)corner_pos.size();
    for (int i = 0; i < nc; ++i) {
      w.corners.push_back(items[corner_pos[i]].cid);
      std::vector<Piece> side;
      for (int j = corner_pos[i] + 1;; ++j) {
        int jj = j % (int)items.size();
        if (jj == corner_pos[(i + 1) % nc]) break;
        if (!items[jj].corner) side.push_back(items[jj].piece);
      }
      w.sides.push_back(std::move(side));
    }
    return w;
  }

  // --- rerouting ----------------------------------------------------------------

  void reduce_with_keys(Path& p, std::vector<long long>& ky) {
    std::vector<int> t;
    std::vector<long long> k2;
    for (std::size_t i = 0; i < p.traversals.size(); ++i) {
      if (!t.empty() && p.traversals[i] == mate(t.back())) {
        t.pop_back();
        k2.pop_back();
      } else {
        t.push_back(p.traversals[i]);
        k2.push_back(ky[i]);
      }
    }
    if (p.is_loop) {
      std::size_t b = 0, e = t.size();
      while (e - b >= 2 && t[b] == mate(t[e - 1])) {
        ++b;
        --e;
      }
      t = std::vector<int>(t.begin() + b, t.begin() + e);
      k2 = std::vector<long long>(k2.begin() + b, k2.begin() + e);
    }
    p.traversals = std::move(t);
    ky = std::move(k2);
  }

  // Replaces the moved side of a region with a corridor hugging the guide
  // side.  Returns false when key space ran out: the affected bands were
  // renumbered and the caller should rebuild and retry the same move.
  bool apply_reroute(const std::vector<Piece>& moved,
                     const std::vector<Piece>& guide, int root) {
    if (moved.empty() || moved.front().type != 0 || moved.back().type != 0)
      bug("region side must start and end with chord pieces");
    std::size_t j = moved.front().curve;
    for (const auto& p : moved)
      if (p.type == 0 && p.curve != j) bug("region side on several curves");

    // Walk direction of the moved side relative to its own curve.
    const Piece& f = moved.front();
    const DiskArr& FD = disks[f.disk];
    const DEdge& fe = FD.edges[f.dhe / 2];
    int tail = f.dhe % 2 == 0 ? fe.tail : fe.head;
    int head = f.dhe % 2 == 0 ? fe.head : fe.tail;
    const DChord& fc = FD.chords[fe.chord];
    bool walk_asc = FD.vx[tail] < FD.vx[head];
    bool chord_asc = FD.pts[fc.from].x < FD.pts[fc.to].x;
    bool with_j = walk_asc == chord_asc;

    long long gA = (long long)moved.front().gap;
    long long gB = (long long)moved.back().gap;
    Path& pj = curves[j];
    std::vector<long long>& kj = keys[j];
    long long n = (long long)pj.traversals.size();
    long long lo, count;
    if (pj.is_loop) {
      lo = with_j ? gA : gB;
      count = with_j ? ((gB - gA) % n + n) % n : ((gA - gB) % n + n) % n;
    } else {
      lo = with_j ? gA : gB;
      count = with_j ? gB - gA : gA - gB;
      if (count < 0) bug("region side interval inverted");
    }

    // Corridor elements copied from the guide side, in moved-walk order
    // (the guide was walked the opposite way around the region).
    struct NewElem {
      int half;
      long long key;
    };
    std::vector<NewElem> elems;
    std::vector<int> renumber;
    for (auto it = guide.rbegin(); it != guide.rend(); ++it) {
      if (it->type != 1) continue;
      bool aligned = !it->aligned;
      std::size_t i = it->curve, t = it->trav;
      int h = aligned ? curves[i].traversals[t] : mate(curves[i].traversals[t]);
      int e = edge_of(h);
      int r = strand_rank[i][t];
      int K = (int)band_order[e].size();
      if (lane_root[e][it->region_above ? r + 1 : r] != root)
        bug("corridor lane is not part of the region");
      // The move carries the rerouted side across the guide strand: the
      // corridor lands on the side away from the vanished region.  That side
      // is crossing-free along this stretch, since entering the region
      // through the guide was impossible.
      bool above = !it->region_above;
      long long key_r = keys[i][t];
      long long nk;
      if (above) {
        long long hi = r + 1 < K ? keys[band_order[e][r + 1].first]
                                       [band_order[e][r + 1].second]
                                 : key_r + 2 * kGap;
        if (hi - key_r < 8) {
          renumber.push_back(e);
          continue;
        }
        nk = key_r + (hi - key_r) / 4;
      } else {
        long long lo_k = r > 0 ? keys[band_order[e][r - 1].first]
                                     [band_order[e][r - 1].second]
                               : key_r - 2 * kGap;
        if (key_r - lo_k < 8) {
          renumber.push_back(e);
          continue;
        }
        nk = key_r - (key_r - lo_k) / 4;
      }
      elems.push_back({h, nk});
    }
    if (!renumber.empty()) {
      for (int e : renumber) renumber_band(e);
      return false;
    }
    if (!with_j) {
      std::reverse(elems.begin(), elems.end());
      for (auto& el : elems) el.half = mate(el.half);
    }

    if (pj.is_loop && lo > 0) {
      std::rotate(pj.traversals.begin(), pj.traversals.begin() + lo,
                  pj.traversals.end());
      std::rotate(kj.begin(), kj.begin() + lo, kj.end());
      lo = 0;
    }

    std::vector<int> nt(pj.traversals.begin(), pj.traversals.begin() + lo);
    std::vector<long long> nk2(kj.begin(), kj.begin() + lo);
    for (const auto& el : elems) {
      nt.push_back(el.half);
      nk2.push_back(el.key);
    }
    nt.insert(nt.end(), pj.traversals.begin() + lo + count, pj.traversals.end());
    nk2.insert(nk2.end(), kj.begin() + lo + count, kj.end());
    pj.traversals = std::move(nt);
    kj = std::move(nk2);
    reduce_with_keys(pj, kj);
    if (pj.is_loop && pj.traversals.empty())
      bug("curve vanished during reduction");
    return true;
  }

  bool apply(const Walk& w, int root) {
    if (w.corners.size() == 1) return apply_reroute(w.sides[0], {}, root);
    if (w.corners.size() != 2) bug("removable region with wrong corner count");
    auto curve_of = [&](const std::vector<Piece>& side) -> std::size_t {
      for (const auto& p : side)
        if (p.type == 0) return p.curve;
      bug("region side without chord pieces");
    };
    auto first_gap = [&](const std::vector<Piece>& side) -> std::size_t {
      for (const auto& p : side)
        if (p.type == 0) return p.gap;
      bug("region side without chord pieces");
    };
    std::size_t c0 = curve_of(w.sides[0]), c1 = curve_of(w.sides[1]);
    int moved;
    if (c0 != c1) {
      moved = c1 > c0 ? 1 : 0;
    } else {
      if (pair_mode && !allow_self) bug("self bigon in an embedded pair overlay");
      moved = first_gap(w.sides[1]) > first_gap(w.sides[0]) ? 1 : 0;
    }
    return apply_reroute(w.sides[moved], w.sides[1 - moved], root);
  }

  // --- main loop -------------------------------------------------------------------

  void check_embedded() const {
    for (const auto& D : disks)
      for (const auto& cr : D.crosses)
        if (D.chords[cr.ca].curve == D.chords[cr.cb].curve)
          throw Error(ErrorCode::NotEmbedded,
                      "curve " + std::to_string(D.chords[cr.ca].curve) +
                          " is not embedded");
  }

  void run_min() {
    init_keys();
    build_attempts();
    if (pair_mode && opt.comparator_init) check_embedded();
    bool dbg = std::getenv("OVERLAY_DEBUG") != nullptr;
    long long move_guard = total_crossings + 16;
    long long renumber_guard = 1000;
    while (true) {
      auto mv = find_move();
      if (!mv) {
        if (dbg) {
          std::fprintf(stderr, "[ov] done total=%d; regions:\n", total_crossings);
          for (const auto& [root, R] : regions)
            std::fprintf(stderr,
                         "[ov]  root=%d faces=%d lanes=%d boundary=%d pins=%d "
                         "corners=%d ids=(%d,%d)(%d,%d)\n",
                         root, R.faces, R.lanes, R.boundary, R.pins, R.corners,
                         R.corner_id[0].first, R.corner_id[0].second,
                         R.corner_id[1].first, R.corner_id[1].second);
        }
        break;
      }
      Walk w = walk_region(mv->root);
      if (dbg) {
        std::fprintf(stderr, "[ov] total=%d move key=(%d,%d) corners=%zu\n",
                     total_crossings, mv->key.first, mv->key.second,
                     w.corners.size());
        for (std::size_t si = 0; si < w.sides.size(); ++si) {
          std::fprintf(stderr, "[ov]  side %zu:", si);
          for (const auto& p : w.sides[si]) {
            if (p.type == 0)
              std::fprintf(stderr, " c%zu.g%zu", p.curve, p.gap);
            else
              std::fprintf(stderr, " [c%zu.t%zu%s%s]", p.curve, p.trav,
                           p.aligned ? "+" : "-", p.region_above ? "^" : "v");
          }
          std::fprintf(stderr, "\n");
        }
      }
      int before = total_crossings;
      if (apply(w, mv->root)) {
        if (--move_guard < 0) bug("crossing reduction failed to terminate");
        build_attempts();
        if (total_crossings >= before)
          bug("region removal did not reduce crossings");
      } else {
        if (--renumber_guard < 0) bug("band renumbering did not stabilize");
        build_attempts();
        if (total_crossings != before)
          bug("band renumbering changed the overlay");
      }
    }
  }

  // --- packaging ---------------------------------------------------------------------

  OverlaySummary package() {
    OverlaySummary out;
    out.curves = curves;
    out.band_strands = band_order;

    struct Rec {
      int disk;
      int local;
      OverlayCrossing c;
      Rational along;
    };
    std::vector<Rec> recs;
    for (int d = 0; d < (int)disks.size(); ++d) {
      const DiskArr& D = disks[d];
      for (int ci = 0; ci < (int)D.crosses.size(); ++ci) {
        const DCross& cr = D.crosses[ci];
        const DChord* a = &D.chords[cr.ca];
        const DChord* b = &D.chords[cr.cb];
        if (std::make_pair(a->curve, a->gap) > std::make_pair(b->curve, b->gap))
          std::swap(a, b);
        __int128 ax = D.pts[a->to].x - D.pts[a->from].x;
        __int128 ay = sq(D.pts[a->to].x) - sq(D.pts[a->from].x);
        __int128 bx = D.pts[b->to].x - D.pts[b->from].x;
        __int128 by = sq(D.pts[b->to].x) - sq(D.pts[b->from].x);
        Rec r;
        r.disk = d;
        r.local = ci;
        r.c.disk = d;
        r.c.sign = sgn128(ax * by - ay * bx);
        if (r.c.sign == 0) bug("degenerate crossing sign");
        r.c.curve_a = a->curve;
        r.c.chord_a = a->gap;
        r.c.curve_b = b->curve;
        r.c.chord_b = b->gap;
        bool asc = D.pts[a->from].x < D.pts[a->to].x;
        r.along = asc ? cr.x : Rational(-cr.x.num, cr.x.den);
        recs.push_back(r);
      }
    }
    std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
      auto ka = std::make_tuple(a.c.curve_a, a.c.chord_a);
      auto kb = std::make_tuple(b.c.curve_a, b.c.chord_a);
      if (ka != kb) return ka < kb;
      return a.along < b.along;
    });
    for (const auto& r : recs) out.crossings.push_back(r.c);

    if (shared) analyze_germs(out, recs);
    return out;
  }

  template <typename Recs>
  void analyze_germs(OverlaySummary& out, const Recs& recs) {
    std::array<std::pair<int, int>, 2> claim{{{-1, -1}, {-1, -1}}};
    for (int which = 0; which < 2; ++which) {
      PtRef pb = pin_pts[1][which], pa = pin_pts[0][which];
      if (pb.disk != pa.disk || pa.idx != pb.idx + 1)
        bug("pushed endpoint out of position");
      const DiskArr& D = disks[pb.disk];
      int dhe = 2 * pb.idx;  // hull edge between the two pins, counterclockwise
      if (D.edges[dhe / 2].kind != 0) bug("germ edge is not a boundary edge");
      if (D.face_of[dhe] == D.outer) bug("germ face is outer");
      const RegionInfo& R =
          regions.at(find(face_offset[pb.disk] + D.face_of[dhe]));
      // A crossing is an artifact of pushing the arcs apart exactly when the
      // region between it and the pin-to-pin hull edge is a collapsible
      // strip: a disk (possibly threading band lanes) whose only boundary
      // contact is that hull edge, with the two pins and the one corner.
      // Collapsing the push there removes the crossing; any region touching
      // more boundary, or of higher genus, pins a genuine crossing instead.
      if (R.faces - R.lanes == 1 && R.boundary == 1 && R.pins == 2 &&
          R.corners == 1) {
        auto [cd, cl] = R.corner_id[0];
        const DCross& cr = disks[cd].crosses[cl];
        if (disks[cd].chords[cr.ca].curve != disks[cd].chords[cr.cb].curve)
          claim[which] = R.corner_id[0];
      }
      out.tangent_sign[which] = germ_side(which);
    }
    auto index_of = [&](std::pair<int, int> id) -> int {
      for (int i = 0; i < (int)recs.size(); ++i)
        if (recs[i].disk == id.first && recs[i].local == id.second) return i;
      bug("claimed crossing missing from the report");
    };
    if (claim[0].first >= 0) out.germ_at_start = index_of(claim[0]);
    if (claim[1].first >= 0) out.germ_at_end = index_of(claim[1]);
    out.germ_shared =
        claim[0].first >= 0 && claim[0] == claim[1];
  }
};

void reject_null_loop(const Path& p, const char* role) {
  if (p.is_loop && p.traversals.empty())
    throw Error(ErrorCode::InvalidPath,
                std::string(role) + " reduces to a null-homotopic loop");
}

void reject_coincident_pins(const std::vector<Path>& curves) {
  std::vector<BoundaryPoint> pins;
  for (const auto& p : curves) {
    if (p.is_loop) continue;
    pins.push_back(p.start);
    pins.push_back(p.end);
  }
  for (std::size_t i = 0; i < pins.size(); ++i)
    for (std::size_t j = i + 1; j < pins.size(); ++j)
      if (pins[i] == pins[j])
        throw Error(ErrorCode::InvalidPath,
                    "coincident marked endpoints on the boundary");
}

}  // namespace

OverlaySummary overlay_pair(const FatGraph& g, const Path& alpha, const Path& beta,
                            bool shared_endpoints, const OverlayOptions& opt) {
  validate_surface(g);
  SurfaceIndex idx = build_index(g);
  validate_path(g, idx, alpha);
  validate_path(g, idx, beta);
  Path a = reduced(alpha), b = reduced(beta);
  reject_null_loop(a, "first curve");
  reject_null_loop(b, "second curve");

  BoundaryPoint a_start = a.start, a_end = a.end;
  BoundaryPoint b_start = b.start, b_end = b.end;
  if (shared_endpoints) {
    if (a.is_loop || b.is_loop)
      throw Error(ErrorCode::NotAnArc, "shared-endpoint overlay requires arcs");
    if (!(a.start == b.start && a.end == b.end))
      throw Error(ErrorCode::HypothesesUnmet,
                  "arcs passed as sharing endpoints do not share them");
    if (a.start == a.end)
      throw Error(ErrorCode::InvalidPath,
                  "arc begins and ends at the same boundary point");
    // The second arc is pushed off its endpoints in the negative boundary
    // direction; key space is widened first so the push stays on the corner.
    a.start.key *= kGap;
    a.end.key *= kGap;
    b.start.key = a.start.key - 1;
    b.end.key = a.end.key - 1;
  } else {
    reject_coincident_pins({a, b});
  }

  Engine eng(g, idx, opt);
  eng.pair_mode = true;
  eng.shared = shared_endpoints;
  eng.allow_self = !opt.comparator_init;
  eng.curves = {a, b};
  eng.run_min();
  OverlaySummary out = eng.package();
  if (shared_endpoints) {
    out.curves[0].start = a_start;
    out.curves[0].end = a_end;
    out.curves[1].start = b_start;
    out.curves[1].end = b_end;
  }
  return out;
}

OverlaySummary overlay_system(const FatGraph& g, std::vector<Path> curves,
                              const OverlayOptions& opt) {
  validate_surface(g);
  SurfaceIndex idx = build_index(g);
  if (curves.empty())
    throw Error(ErrorCode::InvalidPath, "overlay of an empty curve system");
  for (auto& p : curves) {
    validate_path(g, idx, p);
    p = reduced(p);
    reject_null_loop(p, "curve");
  }
  reject_coincident_pins(curves);

  Engine eng(g, idx, opt);
  eng.pair_mode = false;
  eng.shared = false;
  eng.allow_self = true;
  eng.curves = std::move(curves);
  eng.run_min();
  return eng.package();
}

int min_self_crossings(const FatGraph& g, const Path& curve) {
  return (int)overlay_system(g, {curve}, {}).crossings.size();
}

}  // namespace openbook
