#pragma once

#include <optional>
#include <string>
#include <vector>

#include "openbook/errors.hpp"

namespace openbook {

// A compact oriented surface with nonempty boundary, presented as a disk-with-
// bands ribbon graph.  Vertices are disks; each vertex record is the cyclic
// sequence of half-edge ids attached to it, in counterclockwise order with
// respect to the surface orientation.  Edge e owns half-edges 2e (end 0) and
// 2e+1 (end 1); mate(h) = h ^ 1.
struct FatGraph {
  std::vector<std::vector<int>> vertex_cycles;
  int num_edges = 0;
  // Disjoint unions are permitted only when this flag is set (split results of
  // cutting along an arc fixed by the monodromy).
  bool allow_disconnected = false;
};

inline int mate(int h) { return h ^ 1; }
inline int edge_of(int h) { return h >> 1; }

// Location of a half-edge inside its vertex cycle.
struct HalfEdgePlace {
  int vertex = -1;
  int slot = -1;
};

// Boundary corner: the piece of boundary on vertex `vertex` that follows the
// gate of cycle position `slot` counterclockwise.  A vertex with an empty
// cycle carries the single corner (vertex, 0).
struct Corner {
  int vertex = 0;
  int slot = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

// Index built once per graph: half-edge placements plus the traced boundary.
struct SurfaceIndex {
  std::vector<HalfEdgePlace> place;            // by half-edge id
  std::vector<std::vector<Corner>> boundary;   // corner cycles, one per component
  std::vector<int> corner_component;           // flat corner id -> component
  std::vector<int> corner_position;            // flat corner id -> position
  std::vector<int> offsets;                    // vertex -> first flat corner id
  int total_corners = 0;

  int flat(const Corner& c) const { return offsets[c.vertex] + c.slot; }
  int component_of(const Corner& c) const { return corner_component[flat(c)]; }
  int position_of(const Corner& c) const { return corner_position[flat(c)]; }
};

// Validates the gluing data: every half-edge 0..2E-1 placed exactly once,
// at least one vertex, connectivity unless flagged.  Throws DanglingHalfEdge /
// EmptySurface / ValidationError.
void validate_surface(const FatGraph& g);

SurfaceIndex build_index(const FatGraph& g);

int euler_characteristic(const FatGraph& g);

// Number of corners in vertex v's boundary circle (= max(cycle length, 1)).
int corner_count(const FatGraph& g, int v);

// The corner reached from `c` walking along the boundary in the surface
// orientation (counterclockwise around each disk), passing one band side.
Corner next_corner(const FatGraph& g, const SurfaceIndex& idx, const Corner& c);
Corner prev_corner(const FatGraph& g, const SurfaceIndex& idx, const Corner& c);

// The gate crossed when walking forward from corner c: the half-edge at cycle
// position (slot+1) mod k of c.vertex.  Empty-cycle vertices have no gates.
int gate_after_corner(const FatGraph& g, const Corner& c);
// The gate crossed walking backward from corner c (cycle position slot).
int gate_before_corner(const FatGraph& g, const Corner& c);

int num_boundary_components(const FatGraph& g);

// Connected components of the underlying graph; vertex -> component id.
std::vector<int> vertex_components(const FatGraph& g);

// --- presentation moves -----------------------------------------------------

// Result of contracting edge e (whose ends lie on distinct vertices): the two
// disks merge into one across the band.  Records enough to transport curves.
struct EdgeContraction {
  FatGraph result;
  int contracted_edge = -1;
  std::vector<int> vertex_map;    // old vertex -> new vertex (merged pair -> one)
  std::vector<int> edge_map;      // old edge -> new edge (contracted -> -1)
  std::vector<int> half_edge_map; // old half-edge -> new half-edge (or -1)
  // Corner transport: old corner -> (new corner, order bucket).  The two
  // corners adjacent to the removed gates merge pairwise; bucket 0 keeps its
  // points first, bucket 1 appends after them.
  struct CornerImage { Corner corner; int bucket; };
  std::vector<std::vector<CornerImage>> corner_map;  // [vertex][slot]
  // The merged vertex's circle positions that came from the old far vertex
  // (needed to lift chords back across the vanished band).
  int merged_vertex = -1;
  std::vector<bool> merged_slot_from_far;  // by new slot of merged vertex
  int old_near_vertex = -1, old_far_vertex = -1;
};

EdgeContraction contract_edge(const FatGraph& g, int e);

// Contracts edges joining distinct vertices until every component has exactly
// one vertex.  The composite is returned step by step for curve transport.
struct ReducedPresentation {
  FatGraph result;
  std::vector<EdgeContraction> steps;  // applied in order to the original
};

ReducedPresentation reduce_presentation(const FatGraph& g);

// --- isomorphism ------------------------------------------------------------

// Canonical key of a fat graph, invariant under relabeling of vertices, edges
// and cyclic rotation of vertex cycles.  Components are keyed independently
// and sorted.  Intended for the small graphs of this project.
std::string canonical_key(const FatGraph& g);

// Orientation-preserving fat-graph isomorphisms g -> h as half-edge bijections
// (vector indexed by g's half-edges).  Bounded backtracking search; intended
// for small graphs.  Returns at most max_count maps.
std::vector<std::vector<int>> enumerate_isomorphisms(const FatGraph& g,
                                                     const FatGraph& h,
                                                     int max_count = 64);

// --- convenience constructors ----------------------------------------------

FatGraph make_disk();
// One vertex, one edge, half-edges adjacent in the cyclic order.
FatGraph make_annulus();

}  // namespace openbook
