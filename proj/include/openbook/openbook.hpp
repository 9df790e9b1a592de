#pragma once

#include <optional>
#include <string>
#include <vector>

#include "openbook/invariants.hpp"
#include "openbook/monodromy.hpp"
#include "openbook/path.hpp"
#include "openbook/surface.hpp"

namespace openbook {

// A fiber surface together with its monodromy, presented as a twist word.
// `provenance` logs the operations that built the book, oldest first; every
// operation below appends one line to the copy it returns.
struct OpenBook {
  FatGraph surface;
  TwistWord monodromy;
  std::vector<std::string> provenance;
};

// Validates the pair and starts the construction log with `origin`.
OpenBook make_open_book(FatGraph surface, TwistWord monodromy, std::string origin);

// The arc dual to one band: it crosses band `edge` once and nothing else,
// pinned on the two corners directly past the band's gates.
Path band_cocore(const FatGraph& g, int edge);

// The loop alpha followed by the reverse of `image`, for two arcs sharing
// both endpoints (the endpoints are forgotten).  Normalized.
Path arc_union_loop(const FatGraph& g, const Path& alpha, const Path& image);

enum class CutVerdict {
  Fiber,                  // cutting along the arc yields a fiber surface
  NotFiberByThisSurface,  // this cut fails; says nothing about other surfaces
  SplitUnion,             // arc fixed by the monodromy: banding splits the link
};

const char* cut_verdict_name(CutVerdict v);

// Total intersection count 1 decides the fiber verdict; arcs fixed by the
// monodromy are reported as the split case.  Throws NotAnArc on loops.
CutVerdict decide_cut_fiber(const OpenBook& book, const Path& alpha);

// The three loops obtained by resolving a single transverse crossing: the
// orientation-coherent smoothing yields the disjoint pair a, b (ordered by
// the lowest disk their chords visit, then lexicographically); the other
// smoothing yields the single loop c, which crosses both.
struct ResolutionLoops {
  Path a, b, c;
};

// Resolves the unique self-crossing of `loop` (after tightening) in both
// ways.  Throws SelfCrossingCountWrong unless exactly one crossing remains.
ResolutionLoops smooth_once_crossing_loop(const FatGraph& g, const Path& loop);

// Resolution loops of alpha ∪ h(alpha) at its single interior crossing.
// Defined only for once-unclean arcs (either boundary flavor); throws
// HypothesesUnmet otherwise.  The loops live on the book's own surface and
// cannot be moved off alpha: the union loop crosses alpha's band an odd net
// number of times, so at least one smoothing component does too.  Only the
// composed twist word of cut_along_arc restricts to the cut surface.
ResolutionLoops resolution_loops(const OpenBook& book, const Path& alpha);

struct CutOutcome {
  OpenBook book;
  // The cut separated the surface (the split-union verdict concerns the
  // banded link; the abstract cut surface may stay connected even then).
  bool split = false;
  // One side of the cut is a disk meeting no bands: the arc was inessential.
  // Such cuts still go through but are flagged.
  bool boundary_parallel = false;
  // For once-unclean arcs: the resolution loops that entered the compensating
  // word, on the input surface (they do not survive the cut themselves).
  std::optional<ResolutionLoops> resolution;
};

// Cuts the surface along the arc and restricts the monodromy.  The verdict
// must be Fiber or SplitUnion; NotFiberByThisSurface throws CutNotFiber.
// Clean arcs compensate with the inverse twist along alpha ∪ h(alpha) (the
// de-plumbed band's core); once-unclean arcs compensate with the squared
// resolution pair against c, branch chosen by the crossing sign.  After
// compensation every letter must be movable off the arc; if a letter still
// crosses it after word cleanup the monodromy cannot be presented on the cut
// surface by this routine and HypothesesUnmet is thrown.
CutOutcome cut_along_arc(const OpenBook& book, const Path& alpha);

// Plumbs a positive (sign +1) or negative (sign -1) Hopf band onto the book:
// one new band glued along the embedded arc `a`, with the twist along the new
// band's core composed after the monodromy.
OpenBook plumb_hopf(const OpenBook& book, const Path& a, int sign);

enum class BandSide { Over, Under };

// Attaches a generalized Hopf band: a new band whose core projects to the
// immersed arc `ell` with exactly one self-crossing, passing over or under
// itself.  The monodromy is corrected so that cutting along the new band's
// dual arc restores the original book.  An `ell` whose self-crossing is
// removable degenerates to a plain Hopf plumbing.  Throws
// SelfCrossingCountWrong when more than one essential self-crossing remains.
OpenBook attach_generalized_hopf_band(const OpenBook& book, const Path& ell,
                                      BandSide side);

enum class BandingKind { HopfPositive, HopfNegative, GeneralizedHopf, Neither };

const char* banding_kind_name(BandingKind k);

// Recognizes which banding produced the arc: clean alternating arcs are Hopf
// bandings signed by the boundary count, once-unclean non-alternating arcs
// are generalized Hopf bandings, everything else (including fixed arcs) is
// Neither.
BandingKind detect_banding(const OpenBook& book, const Path& alpha);

// True when the arc is clean and non-alternating but not fixed: the
// configuration admitting surgery along disjoint parallel copies.
bool detect_prefiber_case(const OpenBook& book, const Path& alpha);

// Equality of open books up to homeomorphism: the surfaces are isomorphic as
// fat graphs by a map carrying one monodromy to the other (compared by their
// action on a filling arc system).  Handles split books componentwise; the
// provenance log is ignored.
bool open_book_equal(const OpenBook& x, const OpenBook& y);

}  // namespace openbook
