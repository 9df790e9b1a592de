#include "openbook/monodromy.hpp"

#include <cstddef>
#include <utility>
#include <vector>

#include "openbook/errors.hpp"
#include "openbook/overlay.hpp"

namespace openbook {

Positivity positivity_of(const TwistWord& w) {
  bool pos = false, neg = false;
  for (const TwistLetter& l : w.letters) {
    if (l.exponent > 0) pos = true;
    if (l.exponent < 0) neg = true;
  }
  if (pos && neg) return Positivity::Mixed;
  return neg ? Positivity::AllLeft : Positivity::AllRight;
}

void validate_twist_word(const FatGraph& g, const TwistWord& w) {
  SurfaceIndex idx = build_index(g);
  for (const TwistLetter& l : w.letters) {
    if (!l.loop.is_loop)
      throw Error(ErrorCode::InvalidPath, "twist letters must twist along loops");
    validate_path(g, idx, l.loop);
    if (l.exponent == 0)
      throw Error(ErrorCode::ZeroTwist, "twist exponent must be nonzero");
    if (!is_null_homotopic_loop(l.loop) && min_self_crossings(g, l.loop) != 0)
      throw Error(ErrorCode::LoopNotEmbedded, "twist loops must be embedded");
  }
}

TwistWord inverse_word(const TwistWord& w) {
  TwistWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->loop, -it->exponent});
  return out;
}

TwistWord compose_words(const TwistWord& first, const TwistWord& then) {
  TwistWord out = first;
  out.letters.insert(out.letters.end(), then.letters.begin(), then.letters.end());
  return out;
}

TwistWord cleaned(const FatGraph& g, const TwistWord& w) {
  TwistWord out;
  for (const TwistLetter& raw : w.letters) {
    if (raw.exponent == 0) continue;
    TwistLetter letter{normalize(g, raw.loop), raw.exponent};
    if (is_null_homotopic_loop(letter.loop)) continue;
    if (!out.letters.empty() &&
        same_loop_class(out.letters.back().loop, letter.loop)) {
      out.letters.back().exponent += letter.exponent;
      if (out.letters.back().exponent == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(std::move(letter));
    }
  }
  return out;
}

namespace {

// Splices one letter's insertions into the path.  `s` holds the minimal
// position of (path, loop); each crossing receives |exponent| runs of the
// loop, read forward when the crossing sign matches the exponent sign and
// backward (mate-reversed) otherwise.  The runs start at the loop chord that
// meets the crossing, so every inserted traversal continues from the disk the
// walk is currently in; the result is valid by construction and is reduced by
// the caller.
Path splice_twist(const OverlaySummary& s, int exponent) {
  const Path& base = s.curves[0];
  const std::vector<int>& cw = s.curves[1].traversals;
  const std::size_t m = cw.size();
  if (m == 0) return base;
  const int exponent_dir = exponent > 0 ? 1 : -1;
  const int runs = exponent > 0 ? exponent : -exponent;

  std::vector<int> out;
  out.reserve(base.traversals.size() + s.crossings.size() * m * (std::size_t)runs);
  std::size_t ci = 0;
  const std::size_t chords = (std::size_t)chord_count(base);
  for (std::size_t i = 0; i < chords; ++i) {
    for (; ci < s.crossings.size() && s.crossings[ci].chord_a == i; ++ci) {
      const OverlayCrossing& cr = s.crossings[ci];
      if (cr.curve_a != 0 || cr.curve_b != 1)
        throw Error(ErrorCode::NotEmbedded,
                    "twist splice needs an embedded pair in minimal position");
      const int d = cr.sign * exponent_dir;
      for (int run = 0; run < runs; ++run) {
        for (std::size_t k = 0; k < m; ++k) {
          if (d > 0)
            out.push_back(cw[(cr.chord_b + k) % m]);
          else
            out.push_back(mate(cw[(cr.chord_b + m - 1 - k) % m]));
        }
      }
    }
    if (i < base.traversals.size()) out.push_back(base.traversals[i]);
  }
  if (ci != s.crossings.size())
    throw Error(ErrorCode::ValidationError, "twist splice missed a crossing");

  Path next = base;
  next.traversals = std::move(out);
  return next;
}

}  // namespace

Path apply_word(const FatGraph& g, const TwistWord& w, const Path& p) {
  Path cur = normalize(g, p);
  for (const TwistLetter& l : w.letters) {
    if (!l.loop.is_loop)
      throw Error(ErrorCode::InvalidPath, "twist letters must twist along loops");
    if (l.exponent == 0)
      throw Error(ErrorCode::ZeroTwist, "twist exponent must be nonzero");
    if (is_null_homotopic_loop(l.loop)) continue;  // trivial twist
    if (cur.is_loop && cur.traversals.empty()) continue;  // trivial loop stays put
    OverlaySummary s = overlay_pair(g, cur, l.loop, /*shared_endpoints=*/false);
    cur = normalize(g, s.crossings.empty() ? s.curves[0] : splice_twist(s, l.exponent));
  }
  return cur;
}

ArcReport invariants_of(const FatGraph& g, const TwistWord& w, const Path& alpha) {
  if (alpha.is_loop)
    throw Error(ErrorCode::NotAnArc, "arc reports need an arc, not a loop");
  ArcReport r;
  r.positivity = positivity_of(w);
  r.image = apply_word(g, w, alpha);
  r.classification = classify_arc(g, alpha, r.image);
  return r;
}

std::vector<Path> filling_arc_system(const FatGraph& g) {
  SurfaceIndex idx = build_index(g);
  std::vector<Path> arcs;
  arcs.reserve((std::size_t)g.num_edges);
  for (int e = 0; e < g.num_edges; ++e) {
    const HalfEdgePlace at = idx.place[(std::size_t)(2 * e)];
    const int k = (int)g.vertex_cycles[(std::size_t)at.vertex].size();
    // The chord that cuts the band off at its even end, hugging that gate
    // from the corner just before it to the corner just after it.  Putting
    // the start key above the end key keeps the arc embedded when the two
    // corners coincide and keeps the arcs of adjacent gates disjoint.
    const BoundaryPoint from{Corner{at.vertex, (at.slot + k - 1) % k}, 1};
    const BoundaryPoint to{Corner{at.vertex, at.slot}, 0};
    arcs.push_back(make_arc(from, {}, to));
  }
  return arcs;
}

bool mcg_equal(const FatGraph& g, const TwistWord& w1, const TwistWord& w2) {
  // Alexander method: the dual arcs cut every component into disks, so two
  // words agree on the whole surface exactly when the pinned normal forms of
  // the dual images agree.  Images keep their endpoints, so plain equality of
  // the reduced itineraries decides it.
  for (const Path& arc : filling_arc_system(g)) {
    const Path i1 = apply_word(g, w1, arc);
    const Path i2 = apply_word(g, w2, arc);
    if (i1.traversals != i2.traversals || i1.start != i2.start || i1.end != i2.end)
      return false;
  }
  return true;
}

VeeringVerdict right_veering_witness(const FatGraph& g, const TwistWord& w,
                                     const Path& alpha) {
  if (positivity_of(w) != Positivity::AllRight)
    throw Error(ErrorCode::NotPositiveWord,
                "right-veering certification needs an all-right word");
  VeeringVerdict v;
  v.classification = invariants_of(g, w, alpha).classification;
  v.consistent = v.classification.fixed || v.classification.geometry.i_boundary == 1;
  return v;
}

}  // namespace openbook
