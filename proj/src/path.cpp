#include "openbook/path.hpp"

#include <algorithm>
#include <sstream>

namespace openbook {

namespace {
constexpr long long kKeyGap = 1LL << 20;
constexpr long long kBucketStride = 1LL << 40;

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
}  // namespace

Path make_arc(BoundaryPoint start, std::vector<int> traversals, BoundaryPoint end) {
  Path p;
  p.is_loop = false;
  p.start = start;
  p.end = end;
  p.traversals = std::move(traversals);
  return p;
}

Path make_loop(std::vector<int> traversals) {
  Path p;
  p.is_loop = true;
  p.traversals = std::move(traversals);
  return p;
}

int chord_count(const Path& p) {
  return (int)p.traversals.size() + (p.is_loop ? 0 : 1);
}

int chord_vertex(const SurfaceIndex& idx, const Path& p, int i) {
  int n = (int)p.traversals.size();
  if (p.is_loop) return idx.place[p.traversals[i % n]].vertex;
  if (i == 0) return n > 0 ? idx.place[p.traversals[0]].vertex : p.start.corner.vertex;
  return idx.place[mate(p.traversals[i - 1])].vertex;
}

void validate_path(const FatGraph& g, const SurfaceIndex& idx, const Path& p) {
  int n_half = 2 * g.num_edges;
  for (int t : p.traversals)
    if (t < 0 || t >= n_half)
      throw Error(ErrorCode::InvalidPath, "traversal out of range");
  int n = (int)p.traversals.size();
  if (p.is_loop) {
    for (int j = 0; j < n; ++j) {
      int prev = p.traversals[(j + n - 1) % n];
      if (idx.place[p.traversals[j]].vertex != idx.place[mate(prev)].vertex)
        throw Error(ErrorCode::InvalidPath, "loop traversals do not chain");
    }
    return;
  }
  auto check_corner = [&](const BoundaryPoint& bp) {
    if (bp.corner.vertex < 0 || bp.corner.vertex >= (int)g.vertex_cycles.size())
      throw Error(ErrorCode::InvalidPath, "endpoint vertex out of range");
    if (bp.corner.slot < 0 || bp.corner.slot >= corner_count(g, bp.corner.vertex))
      throw Error(ErrorCode::InvalidPath, "endpoint corner slot out of range");
  };
  check_corner(p.start);
  check_corner(p.end);
  if (n == 0) {
    if (p.start.corner.vertex != p.end.corner.vertex)
      throw Error(ErrorCode::InvalidPath, "chordless arc must stay in one disk");
    return;
  }
  if (idx.place[p.traversals[0]].vertex != p.start.corner.vertex)
    throw Error(ErrorCode::InvalidPath, "first traversal not at start disk");
  for (int j = 1; j < n; ++j)
    if (idx.place[p.traversals[j]].vertex != idx.place[mate(p.traversals[j - 1])].vertex)
      throw Error(ErrorCode::InvalidPath, "traversals do not chain");
  if (idx.place[mate(p.traversals[n - 1])].vertex != p.end.corner.vertex)
    throw Error(ErrorCode::InvalidPath, "last traversal not at end disk");
}

Path reduced(const Path& p) {
  Path out = p;
  std::vector<int> stack;
  for (int t : out.traversals) {
    if (!stack.empty() && t == mate(stack.back()))
      stack.pop_back();
    else
      stack.push_back(t);
  }
  if (out.is_loop) {
    // cyclic cancellation at the seam
    while (stack.size() >= 2 && stack.front() == mate(stack.back())) {
      stack.erase(stack.begin());
      stack.pop_back();
    }
  }
  out.traversals = std::move(stack);
  return out;
}

bool is_null_homotopic_loop(const Path& p) {
  return p.is_loop && reduced(p).traversals.empty();
}

Path reversed(const Path& p) {
  Path out;
  out.is_loop = p.is_loop;
  out.traversals.reserve(p.traversals.size());
  for (auto it = p.traversals.rbegin(); it != p.traversals.rend(); ++it)
    out.traversals.push_back(mate(*it));
  out.start = p.end;
  out.end = p.start;
  return out;
}

namespace {
bool equal_as_given(const Path& a, const Path& b) {
  if (a.is_loop != b.is_loop) return false;
  if (a.is_loop) return a.traversals == b.traversals;
  return a.traversals == b.traversals && a.start == b.start && a.end == b.end;
}
}  // namespace

bool same_path(const Path& a, const Path& b) {
  Path ra = reduced(a), rb = reduced(b);
  if (ra.is_loop != rb.is_loop) return false;
  if (ra.is_loop) return same_loop_class(ra, rb);
  return equal_as_given(ra, rb) || equal_as_given(reversed(ra), rb);
}

std::string path_token(const Path& p) {
  std::ostringstream os;
  os << (p.is_loop ? "loop[" : "arc[");
  for (std::size_t i = 0; i < p.traversals.size(); ++i) {
    if (i) os << ' ';
    os << p.traversals[i];
  }
  os << ']';
  if (!p.is_loop) {
    os << '@' << p.start.corner.vertex << '.' << p.start.corner.slot << ':'
       << p.start.key << '-' << p.end.corner.vertex << '.'
       << p.end.corner.slot << ':' << p.end.key;
  }
  return os.str();
}

bool same_loop_class(const Path& a, const Path& b) {
  Path ra = reduced(a), rb = reduced(b);
  if (!ra.is_loop || !rb.is_loop) return false;
  size_t n = ra.traversals.size();
  if (n != rb.traversals.size()) return false;
  if (n == 0) return true;
  auto rotations_contain = [&](const std::vector<int>& w, const std::vector<int>& target) {
    for (size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i)
        if (w[(s + i) % n] != target[i]) ok = false;
      if (ok) return true;
    }
    return false;
  };
  if (rotations_contain(ra.traversals, rb.traversals)) return true;
  Path rev = reversed(ra);
  return rotations_contain(rev.traversals, rb.traversals);
}

std::vector<long long> keys_on_corner(const Path& p, const Corner& c) {
  std::vector<long long> out;
  if (!p.is_loop) {
    if (p.start.corner == c) out.push_back(p.start.key);
    if (p.end.corner == c) out.push_back(p.end.key);
  }
  return out;
}

std::optional<Path> slide_endpoint(const FatGraph& g, const SurfaceIndex& idx,
                                   const Path& p, bool move_start, bool forward,
                                   const std::vector<long long>& occupied) {
  if (p.is_loop) return std::nullopt;
  BoundaryPoint bp = move_start ? p.start : p.end;
  const auto& cyc = g.vertex_cycles[bp.corner.vertex];
  if (cyc.empty()) return std::nullopt;

  // The endpoint must be extreme on its corner in the slide direction.
  std::vector<long long> here = keys_on_corner(p, bp.corner);
  for (long long k : occupied) here.push_back(k);
  for (long long k : here) {
    if (k == bp.key) continue;
    if (forward && k > bp.key) return std::nullopt;
    if (!forward && k < bp.key) return std::nullopt;
  }

  int gate = forward ? gate_after_corner(g, bp.corner) : gate_before_corner(g, bp.corner);
  int m = mate(gate);
  Corner target;
  if (forward) {
    target = Corner{idx.place[m].vertex, idx.place[m].slot};
  } else {
    int k = (int)g.vertex_cycles[idx.place[m].vertex].size();
    target = Corner{idx.place[m].vertex, (idx.place[m].slot + k - 1) % k};
  }

  Path out = p;
  BoundaryPoint& moved = move_start ? out.start : out.end;
  const BoundaryPoint& other = move_start ? out.end : out.start;
  moved.corner = target;
  long long extreme = 0;
  bool any = false;
  if (!out.is_loop && other.corner == target) { extreme = other.key; any = true; }
  if (forward) {
    moved.key = any ? std::min(extreme, 0LL) - kKeyGap : -kKeyGap;
  } else {
    moved.key = any ? std::max(extreme, 0LL) + kKeyGap : kKeyGap;
  }
  // The arc now also crosses the band of the gate.  Crossing happens into the
  // disk the endpoint used to be on.
  if (move_start) {
    out.traversals.insert(out.traversals.begin(), m);
  } else {
    out.traversals.push_back(gate);
  }
  return reduced(out);
}

Path transport_through_contraction(const EdgeContraction& ec, const Path& p) {
  Path out;
  out.is_loop = p.is_loop;
  for (int t : p.traversals) {
    if (edge_of(t) == ec.contracted_edge) continue;
    out.traversals.push_back(ec.half_edge_map[t]);
  }
  if (!p.is_loop) {
    auto mapbp = [&](const BoundaryPoint& bp) {
      const auto& ci = ec.corner_map[bp.corner.vertex][bp.corner.slot];
      return BoundaryPoint{ci.corner, ci.bucket * kBucketStride + bp.key};
    };
    out.start = mapbp(p.start);
    out.end = mapbp(p.end);
  }
  return reduced(out);
}

Path lift_through_contraction(const FatGraph& original, const EdgeContraction& ec,
                              const Path& p) {
  SurfaceIndex oidx = build_index(original);
  SurfaceIndex nidx = build_index(ec.result);

  // Inverse half-edge map.
  std::vector<int> inv_half(2 * ec.result.num_edges, -1);
  for (int h = 0; h < (int)ec.half_edge_map.size(); ++h)
    if (ec.half_edge_map[h] >= 0) inv_half[ec.half_edge_map[h]] = h;

  // Inverse corner map: (merged corner slot, bucket) -> old corner.
  int M = ec.merged_vertex;
  std::vector<std::vector<Corner>> inv_corner(corner_count(ec.result, M));
  for (int v = 0; v < (int)ec.corner_map.size(); ++v) {
    for (int s = 0; s < (int)ec.corner_map[v].size(); ++s) {
      const auto& ci = ec.corner_map[v][s];
      if (ci.corner.vertex != M) continue;
      auto& slot_buckets = inv_corner[ci.corner.slot];
      if ((int)slot_buckets.size() <= ci.bucket) slot_buckets.resize(ci.bucket + 1);
      slot_buckets[ci.bucket] = Corner{v, s};
    }
  }

  // Inverse vertex map for unmerged vertices.
  std::vector<int> inv_vertex(ec.result.vertex_cycles.size(), -1);
  for (int v = 0; v < (int)ec.vertex_map.size(); ++v) {
    if (v == ec.old_near_vertex || v == ec.old_far_vertex) continue;
    inv_vertex[ec.vertex_map[v]] = v;
  }

  // Side of a position on the merged disk: false = near (holds 2e), true = far.
  auto gate_side = [&](int new_half) {
    return ec.merged_slot_from_far[nidx.place[new_half].slot];
  };
  auto point_side_and_corner = [&](const BoundaryPoint& bp) {
    int bucket = (int)floor_div(bp.key + kBucketStride / 2, kBucketStride);
    const auto& buckets = inv_corner[bp.corner.slot];
    if (bucket < 0 || bucket >= (int)buckets.size())
      throw Error(ErrorCode::InvalidPath, "boundary point bucket out of range in lift");
    Corner old_c = buckets[bucket];
    bool far = old_c.vertex == ec.old_far_vertex;
    return std::pair<bool, BoundaryPoint>(
        far, BoundaryPoint{old_c, bp.key - (long long)bucket * kBucketStride});
  };

  int e = ec.contracted_edge;
  int n = (int)p.traversals.size();
  int chords = chord_count(p);
  Path out;
  out.is_loop = p.is_loop;

  BoundaryPoint new_start{}, new_end{};
  // side of each chord boundary position
  auto chord_sides = [&](int i) -> std::optional<std::pair<bool, bool>> {
    if (chord_vertex(nidx, p, i) != M) return std::nullopt;
    bool from_side, to_side;
    if (!p.is_loop && i == 0) {
      auto [s, bp] = point_side_and_corner(p.start);
      from_side = s;
      new_start = bp;
    } else {
      from_side = gate_side(mate(p.traversals[p.is_loop ? ((i - 1 + n) % n) : (i - 1)]));
    }
    if (!p.is_loop && i == chords - 1) {
      auto [s, bp] = point_side_and_corner(p.end);
      to_side = s;
      new_end = bp;
    } else {
      to_side = gate_side(p.traversals[i % std::max(n, 1)]);
    }
    return std::make_pair(from_side, to_side);
  };

  for (int i = 0; i < chords; ++i) {
    auto sides = chord_sides(i);
    if (sides) {
      auto [from_side, to_side] = *sides;
      if (from_side != to_side)
        out.traversals.push_back(from_side ? 2 * e + 1 : 2 * e);
    } else if (!p.is_loop && i == 0) {
      // start not on merged disk: plain corner transport
    }
    if (i < n) out.traversals.push_back(inv_half[p.traversals[i]]);
  }

  if (!p.is_loop) {
    auto lift_plain = [&](const BoundaryPoint& bp) {
      if (bp.corner.vertex == M) {
        // handled in chord_sides; recompute for safety
        auto [s, old_bp] = point_side_and_corner(bp);
        (void)s;
        return old_bp;
      }
      return BoundaryPoint{Corner{inv_vertex[bp.corner.vertex], bp.corner.slot}, bp.key};
    };
    out.start = lift_plain(p.start);
    out.end = lift_plain(p.end);
  }
  (void)oidx;
  return reduced(out);
}

Path transport_through_reduction(const ReducedPresentation& rp, const Path& p) {
  Path cur = p;
  for (const auto& step : rp.steps) cur = transport_through_contraction(step, cur);
  return cur;
}

Path lift_through_reduction(const FatGraph& original, const ReducedPresentation& rp,
                            const Path& p) {
  // Reconstruct the chain of intermediate graphs.
  std::vector<const FatGraph*> chain;
  chain.push_back(&original);
  for (const auto& step : rp.steps) chain.push_back(&step.result);
  Path cur = p;
  for (int s = (int)rp.steps.size() - 1; s >= 0; --s)
    cur = lift_through_contraction(*chain[s], rp.steps[s], cur);
  return cur;
}

Path relabel_path(const FatGraph& from, const FatGraph& to,
                  const std::vector<int>& half_edge_map, const Path& p) {
  SurfaceIndex fi = build_index(from), ti = build_index(to);
  Path out;
  out.is_loop = p.is_loop;
  for (int t : p.traversals) out.traversals.push_back(half_edge_map[t]);
  if (!p.is_loop) {
    auto mapbp = [&](const BoundaryPoint& bp) {
      const auto& cyc = from.vertex_cycles[bp.corner.vertex];
      if (cyc.empty()) {
        // lone disk: only meaningful when both graphs are single disks
        return BoundaryPoint{Corner{0, 0}, bp.key};
      }
      int gate = cyc[bp.corner.slot];
      int image = half_edge_map[gate];
      return BoundaryPoint{Corner{ti.place[image].vertex, ti.place[image].slot}, bp.key};
    };
    out.start = mapbp(p.start);
    out.end = mapbp(p.end);
  }
  (void)fi;
  return out;
}

}  // namespace openbook
