#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "openbook/path.hpp"
#include "openbook/rational.hpp"
#include "openbook/surface.hpp"

namespace openbook {

// One transverse crossing between two curve chords inside a vertex disk.
// curve_a/chord_a identify the chord of the first curve (a chord with index g
// sits between traversals g-1 and g of its curve; for arcs, chord 0 starts at
// the pinned start point and chord n ends at the pinned end point).
struct OverlayCrossing {
  int disk = 0;
  int sign = 0;  // orientation of the (first-curve, second-curve) tangent frame
  std::size_t curve_a = 0;
  std::size_t chord_a = 0;
  std::size_t curve_b = 0;
  std::size_t chord_b = 0;
};

struct OverlaySummary {
  std::vector<Path> curves;  // final representatives after minimization
  std::vector<OverlayCrossing> crossings;  // sorted along the first curve

  // Strand order across each band in the final configuration. Entry e lists
  // (curve, traversal) pairs in the order the strands cross edge e, read along
  // the gate of half-edge 2e in the ccw direction of its disk; the gate of
  // 2e+1 sees the reverse order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> band_strands;

  // Pair mode with shared endpoints only: index into `crossings` of the
  // crossing claimed by the boundary germ at the start/end (-1 when the germ
  // region is crossing free), whether both germs claim the same crossing (the
  // configuration of an arc isotopic to its partner), and the orientation
  // sign of the (alpha tangent, beta tangent) frame at each endpoint.
  int germ_at_start = -1;
  int germ_at_end = -1;
  bool germ_shared = false;
  std::array<int, 2> tangent_sign{0, 0};
};

struct OverlayOptions {
  // Start from the divergence-ordered strand placement. Disabling it starts
  // from an arbitrary placement so that bigon removal does all the work;
  // useful for exercising the reduction machinery in tests.
  bool comparator_init = true;
};

// Minimal position of two embedded curves. With shared_endpoints set, both
// must be arcs with identical endpoints; beta is pushed off in the negative
// boundary direction and boundary germ data is reported.
OverlaySummary overlay_pair(const FatGraph& g, const Path& alpha, const Path& beta,
                            bool shared_endpoints, const OverlayOptions& opt = {});

// Simultaneous minimal position of a system of curves (no germ handling).
// Also serves as the single-curve tightener: monogons and self-bigons are
// removed, so the result of a one-curve system reports self-crossings.
OverlaySummary overlay_system(const FatGraph& g, std::vector<Path> curves,
                              const OverlayOptions& opt = {});

// Self-crossing count of one (possibly immersed) curve after greedy monogon
// and bigon removal.
int min_self_crossings(const FatGraph& g, const Path& curve);

}  // namespace openbook
