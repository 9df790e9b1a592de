#pragma once

#include <optional>
#include <vector>

#include "openbook/openbook.hpp"
#include "openbook/rational.hpp"

namespace openbook {

// The family of surgery slopes on an arc's loop that keep the surface a
// fiber: clean arcs admit the shifted harmonic family {i_b + 1/n}, once-
// unclean arcs exactly one slope {i_b}, anything more unclean none at all.
enum class SlopeFamily { ShiftedHarmonic, Single, Empty };

const char* slope_family_name(SlopeFamily f);

// Fiber-preserving surgery slopes, measured against the preferred longitude
// of the loop doubling the arc.  The framing the surface induces on that loop
// differs from the preferred one by the boundary count of the arc:
// lambda_banded = lambda + longitude_shift * mu.
struct SlopeSet {
  SlopeFamily family = SlopeFamily::Empty;
  Rational base;             // boundary count i_b of the arc
  Rational longitude_shift;  // mu-coefficient of the banded longitude (= base)
};

SlopeSet fiber_preserving_slopes(const OpenBook& book, const Path& alpha);

// Exact membership: gamma lies in the shifted harmonic family iff
// gamma - base is a unit fraction 1/n for a nonzero integer n.
bool slope_in_set(const SlopeSet& s, const Rational& gamma);

// The members of index |n| <= max_index, positive n first (n = 1..N, then
// -1..-N).  Single returns its one slope, Empty nothing.
std::vector<Rational> slope_members(const SlopeSet& s, int max_index);

// Outcome of the n-twist at an arc's loop: the (-1/n)-surgery realizing a
// crossing change when |n| = 1 and a generalized crossing change otherwise.
enum class TwistCase {
  ChiIncreases,                // still fibered, but by a simpler surface
  FiberPreservedStallings,     // clean non-alternating arc: every n works
  FiberPreservedHopfReversal,  // n = +-2 reversing a Hopf band's hand
  FiberPreservedUnclean,       // n = +-1 at a once-unclean alternating arc
  NotFiberByThisSurface,       // this surface stops fibering; no more is said
};

const char* twist_case_name(TwistCase c);

struct TwistVerdict {
  TwistCase kind = TwistCase::NotFiberByThisSurface;
  // The updated open book, present exactly for the fiber-preserved cases.
  std::optional<OpenBook> book;
};

// Classifies the n-twist along the arc's loop by the (rho, i_b, n) table and
// performs the monodromy update when the fiber persists.  Throws ZeroTwist
// when n = 0.
TwistVerdict classify_crossing_change(const OpenBook& book, const Path& alpha,
                                      int n);

// The update alone.  Stallings arcs compose the -n twist along the
// crossing-free projection of the loop (a trivial projection leaves the word
// unchanged); the Hopf-reversal case composes the n twist along the same
// projection, which is the de-plumb/re-plumb of the band with its hand
// reversed collapsed onto one surface; the once-unclean case composes the
// squared resolution pair against c, branch picked by the interior crossing
// sign.  Throws NotFiberPreserving outside the three preserved cases.
OpenBook twist_monodromy_update(const OpenBook& book, const Path& alpha, int n);

// Minimum one-bridge crossing number of the arc's loop; equals the interior
// count rho of the arc against its monodromy image.
int mbc1(const OpenBook& book, const Path& alpha);

}  // namespace openbook
