#pragma once

#include <vector>

#include "openbook/invariants.hpp"
#include "openbook/path.hpp"
#include "openbook/surface.hpp"

namespace openbook {

// One Dehn-twist power: the exponent-fold twist along an embedded loop.
// Positive exponents are right-handed twists.
struct TwistLetter {
  Path loop;
  int exponent = 1;
};

// A monodromy presented as a twist word.  Letters act in sequence order:
// letters.front() is applied first.
struct TwistWord {
  std::vector<TwistLetter> letters;
};

enum class Positivity { AllRight, AllLeft, Mixed };

// Sign pattern of the exponents; the empty word counts as all-right (an
// empty product of right twists).
Positivity positivity_of(const TwistWord& w);

// Checks that every letter twists along a valid embedded loop with nonzero
// exponent.  Null-homotopic loops pass (their twists are trivial).  Throws
// InvalidPath / LoopNotEmbedded / ZeroTwist.
void validate_twist_word(const FatGraph& g, const TwistWord& w);

TwistWord inverse_word(const TwistWord& w);

// Word performing `first`, then `then`.
TwistWord compose_words(const TwistWord& first, const TwistWord& then);

// Normalizes every letter, drops trivial twists, and cancels adjacent twists
// along the same loop class (a loop and its reverse twist identically).
// Preserves the mapping class.
TwistWord cleaned(const FatGraph& g, const TwistWord& w);

// Image of a path under the word.  Each letter puts the path and the twist
// loop in minimal position and splices |exponent| runs of the loop into the
// path at every crossing, directed by the crossing sign times the exponent
// sign; the result is renormalized.  A loop disjoint from the path, or a
// null-homotopic loop (trivial twist), leaves the path unchanged.  Arc
// endpoints are preserved.
Path apply_word(const FatGraph& g, const TwistWord& w, const Path& p);

// Everything the library knows about one arc against its image.
struct ArcReport {
  Path image;
  ArcClassification classification;
  Positivity positivity = Positivity::AllRight;
};

ArcReport invariants_of(const FatGraph& g, const TwistWord& w, const Path& alpha);

// The canonical filling system: one arc dual to each band.  Cutting along
// all of them turns every component into its stack of vertex polygons, so a
// mapping class is determined by its action on the system.
std::vector<Path> filling_arc_system(const FatGraph& g);

// Alexander-method equality: true iff the words send every arc of the
// canonical filling system to the same normal form.  Identifies maps up to
// isotopy fixing each boundary segment setwise.
bool mcg_equal(const FatGraph& g, const TwistWord& w1, const TwistWord& w2);

struct VeeringVerdict {
  bool consistent = false;  // arc fixed, or boundary count +1
  ArcClassification classification;
};

// Self-check hook for all-right words: their arcs must be fixed or
// alternating with boundary count +1.  An inconsistent verdict indicates an
// implementation defect upstream, never a valid outcome.  Throws
// NotPositiveWord when the word is not all-right.
VeeringVerdict right_veering_witness(const FatGraph& g, const TwistWord& w,
                                     const Path& alpha);

}  // namespace openbook
