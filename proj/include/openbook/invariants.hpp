#pragma once

#include <array>
#include <string>
#include <vector>

#include "openbook/overlay.hpp"
#include "openbook/path.hpp"
#include "openbook/surface.hpp"

namespace openbook {

// Minimal-position intersection data for an ordered pair of curves.  When the
// two curves are arcs pinned at the same two boundary points, the second one
// is pushed off its endpoints in the negative boundary direction; a crossing
// claimed by an endpoint germ is converted into the boundary sign at that
// endpoint and removed from the interior list, so rho == crossings.size().
struct ArcPairGeometry {
  std::vector<OverlayCrossing> crossings;   // interior crossings only
  std::array<int, 2> boundary_signs{0, 0};  // at (start, end); zero when unshared
  int rho = 0;
  int i_boundary = 0;  // (boundary_signs[0] + boundary_signs[1]) / 2
  int i_total = 0;     // rho + |i_boundary|
  bool fixed_arc = false;  // the second arc is isotopic to the first
};

// Canonical representative of the isotopy class: validates, cancels
// backtracks, and rotates loop words to the lexicographically least rotation.
// Idempotent; arc endpoints are preserved.
Path normalize(const FatGraph& g, const Path& p);

// Puts alpha and beta in minimal position and reports the intersection data.
// shared_endpoints declares the arc-versus-image situation: both arcs pinned
// at identical boundary points.  Throws NotEmbedded when an input is not
// embedded; NonDiskRegionUnresolved signals an internal defect, never a
// valid outcome.
ArcPairGeometry minimal_position(const FatGraph& g, const Path& alpha,
                                 const Path& beta, bool shared_endpoints);

// Projections of ArcPairGeometry.  boundary_intersection and i_total concern
// the shared-endpoint situation; rho accepts any pair.
int boundary_intersection(const FatGraph& g, const Path& alpha, const Path& beta);
int rho(const FatGraph& g, const Path& alpha, const Path& beta, bool shared_endpoints);
int i_total(const FatGraph& g, const Path& alpha, const Path& beta);

// How an arc sits against its image under the monodromy: the interior count
// (clean when zero, once-unclean when one, n-unclean in general) crossed with
// the boundary behaviour (alternating when |i_boundary| = 1, non-alternating
// when 0, or fixed when the image is isotopic to the arc).
struct ArcClassification {
  int unclean = 0;  // interior intersections with the image (= rho)
  bool alternating = false;
  bool fixed = false;
  ArcPairGeometry geometry;

  std::string label() const;  // e.g. "clean-fixed", "once-unclean-alternating",
                              // "2-unclean-non-alternating"
};

ArcClassification classify_arc(const FatGraph& g, const Path& alpha,
                               const Path& image);

}  // namespace openbook
