#pragma once

#include <optional>
#include <string>
#include <vector>

#include "openbook/surface.hpp"

namespace openbook {

// A point on the boundary of the surface: a corner (boundary segment) plus an
// order key.  Keys increase in the boundary direction induced by the surface
// orientation (counterclockwise around each disk); they have no meaning beyond
// their relative order among the points present on one corner.
struct BoundaryPoint {
  Corner corner;
  long long key = 0;
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;
};

// An arc or loop carried by the band decomposition, up to isotopy: the
// sequence of half-edges it enters, in order.  Entering half-edge h means
// crossing the gate of h from the disk holding h into the band of h, emerging
// in the disk holding mate(h).  Chord i runs inside a disk between traversal
// i-1 and traversal i; arcs additionally have a first chord leaving `start`
// and a last chord reaching `end`.  A reduced itinerary (no traversal followed
// by its mate) is a canonical representative of the isotopy class; band strand
// orders are derived data computed by the overlay engine, not class data.
struct Path {
  bool is_loop = false;
  std::vector<int> traversals;
  BoundaryPoint start, end;  // arcs only
};

Path make_arc(BoundaryPoint start, std::vector<int> traversals, BoundaryPoint end);
Path make_loop(std::vector<int> traversals);

// Number of disk chords: arcs have |traversals|+1, loops |traversals|.
int chord_count(const Path& p);

// Disk containing chord i.
int chord_vertex(const SurfaceIndex& idx, const Path& p, int i);

// Checks that consecutive traversals are compatible with the gluing and that
// arc endpoints lie on the disks of the first/last chords.  Throws InvalidPath
// or NotAnArc (loop passed where an arc is required happens at call sites).
void validate_path(const FatGraph& g, const SurfaceIndex& idx, const Path& p);

// Cancels backtracks (a traversal followed by its mate), cyclically for
// loops.  Idempotent; preserves endpoints.
Path reduced(const Path& p);

bool is_null_homotopic_loop(const Path& p);

// The same arc with orientation reversed (traversals mate-reversed, endpoints
// swapped); loops likewise.
Path reversed(const Path& p);

// Exact equality of reduced representatives, up to orientation reversal.
// Arcs compare endpoints exactly (corner and key): callers compare images of
// pinned arcs, where keys are preserved by construction.
bool same_path(const Path& a, const Path& b);

// Loops compare up to rotation as well.
bool same_loop_class(const Path& a, const Path& b);

// One-line display form for logs and error messages: "loop[traversals]" or
// "arc[traversals]@start-end".
std::string path_token(const Path& p);

// --- boundary slides (free isotopy moves; change the pinned class) ----------

// Keys used by p on the given corner.
std::vector<long long> keys_on_corner(const Path& p, const Corner& c);

// Slides one endpoint across the adjacent gate, forward = along the boundary
// orientation.  The result is reduced.  Fails (nullopt) when another marked
// point is in the way — the endpoint must be the extreme one on its corner in
// the slide direction — or when the disk has no gates.  `occupied` lists keys
// of other objects on the endpoint's current corner that block the exit.
std::optional<Path> slide_endpoint(const FatGraph& g, const SurfaceIndex& idx,
                                   const Path& p, bool move_start, bool forward,
                                   const std::vector<long long>& occupied = {});

// --- transport through presentation moves -----------------------------------

// Image of a path after contracting an edge (traversals through the vanished
// band are dropped; endpoints follow the corner map).
Path transport_through_contraction(const EdgeContraction& ec, const Path& p);

// Lift of a path living on ec.result back to the original graph: chords of
// the merged disk that join the two old sides acquire a traversal of the
// contracted edge.  Fresh endpoints on merged corners land in the bucket-0
// constituent.
Path lift_through_contraction(const FatGraph& original, const EdgeContraction& ec,
                              const Path& p);

Path transport_through_reduction(const ReducedPresentation& rp, const Path& p);
Path lift_through_reduction(const FatGraph& original, const ReducedPresentation& rp,
                            const Path& p);

// Relabel a path through a half-edge isomorphism map (from enumerate_isomorphisms,
// indexed by source half-edge).  Corner images follow the vertex/slot images.
Path relabel_path(const FatGraph& from, const FatGraph& to,
                  const std::vector<int>& half_edge_map, const Path& p);

}  // namespace openbook
