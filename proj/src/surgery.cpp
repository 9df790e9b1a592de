#include "openbook/surgery.hpp"

#include <string>
#include <utility>

#include "openbook/errors.hpp"
#include "openbook/invariants.hpp"
#include "openbook/monodromy.hpp"

namespace openbook {

namespace {

// Which interior-crossing sign selects the coherent (positive) branch of the
// once-unclean twist update.  Calibrated by the +-1-twist round trips on the
// doubly twisted annulus: the t^2 book needs the negative branch at its +1
// crossing to land on t^-2 and back.
constexpr int kCoherentTwistSign = -1;

struct TwistPrep {
  Path arc;
  Path image;
  ArcClassification cl;
};

TwistPrep prep_arc(const OpenBook& book, const Path& alpha) {
  if (alpha.is_loop)
    throw Error(ErrorCode::NotAnArc, "expected an arc, got a loop");
  Path arc = normalize(book.surface, alpha);
  Path image = apply_word(book.surface, book.monodromy, arc);
  ArcClassification cl = classify_arc(book.surface, arc, image);
  return {std::move(arc), std::move(image), std::move(cl)};
}

TwistCase table(const ArcClassification& cl, int n) {
  if (cl.unclean == 0) {
    if (!cl.alternating) return TwistCase::FiberPreservedStallings;
    if (n == -cl.geometry.i_boundary) return TwistCase::ChiIncreases;
    if ((n == 2 || n == -2) && cl.geometry.i_boundary == -n / 2)
      return TwistCase::FiberPreservedHopfReversal;
    return TwistCase::NotFiberByThisSurface;
  }
  if (cl.unclean == 1 && cl.alternating && (n == 1 || n == -1) &&
      cl.geometry.i_boundary == -n)
    return TwistCase::FiberPreservedUnclean;
  return TwistCase::NotFiberByThisSurface;
}

OpenBook apply_update(const OpenBook& book, const TwistPrep& p, int n,
                      TwistCase kind) {
  TwistWord w = book.monodromy;
  std::string note;
  switch (kind) {
    case TwistCase::FiberPreservedStallings: {
      Path cbar = arc_union_loop(book.surface, p.arc, p.image);
      if (is_null_homotopic_loop(cbar)) {
        note = "trivial loop, monodromy unchanged";
      } else {
        w = compose_words(w, TwistWord{{TwistLetter{std::move(cbar), -n}}});
        note = "stallings";
      }
      break;
    }
    case TwistCase::FiberPreservedHopfReversal: {
      // De-plumbing composes the -i_b twist along the loop's projection and
      // re-plumbing the opposite hand composes it once more; the band sits at
      // the same corners, so the surface is untouched and the net effect is
      // the -2 i_b = n twist along the projection.
      Path core = arc_union_loop(book.surface, p.arc, p.image);
      w = compose_words(w, TwistWord{{TwistLetter{std::move(core), n}}});
      note = "hopf reversal";
      break;
    }
    case TwistCase::FiberPreservedUnclean: {
      ResolutionLoops r = resolution_loops(book, p.arc);
      const int ip = p.cl.geometry.crossings[0].sign;
      const int sigma = ip == kCoherentTwistSign ? 1 : -1;
      TwistWord comp;
      comp.letters.push_back({r.c, -sigma});
      comp.letters.push_back({r.b, 2 * sigma});
      comp.letters.push_back({r.a, 2 * sigma});
      w = compose_words(w, comp);
      note = sigma > 0 ? "unclean, coherent branch" : "unclean, reverse branch";
      break;
    }
    default:
      throw Error(ErrorCode::NotFiberPreserving,
                  "the " + std::to_string(n) + "-twist at a " +
                      p.cl.label() + " arc does not keep this fiber surface");
  }
  OpenBook out;
  out.surface = book.surface;
  out.monodromy = cleaned(out.surface, w);
  validate_twist_word(out.surface, out.monodromy);
  out.provenance = book.provenance;
  out.provenance.push_back("twist n=" + std::to_string(n) + " at " +
                           path_token(p.arc) + " (" + note + ")");
  return out;
}

}  // namespace

const char* slope_family_name(SlopeFamily f) {
  switch (f) {
    case SlopeFamily::ShiftedHarmonic: return "shifted-harmonic";
    case SlopeFamily::Single: return "single";
    case SlopeFamily::Empty: return "empty";
  }
  return "unknown";
}

const char* twist_case_name(TwistCase c) {
  switch (c) {
    case TwistCase::ChiIncreases: return "chi-increases";
    case TwistCase::FiberPreservedStallings: return "fiber-preserved-stallings";
    case TwistCase::FiberPreservedHopfReversal:
      return "fiber-preserved-hopf-reversal";
    case TwistCase::FiberPreservedUnclean: return "fiber-preserved-unclean";
    case TwistCase::NotFiberByThisSurface: return "not-fiber-by-this-surface";
  }
  return "unknown";
}

SlopeSet fiber_preserving_slopes(const OpenBook& book, const Path& alpha) {
  TwistPrep p = prep_arc(book, alpha);
  SlopeSet out;
  out.base = Rational(p.cl.geometry.i_boundary);
  out.longitude_shift = out.base;
  if (p.cl.unclean == 0)
    out.family = SlopeFamily::ShiftedHarmonic;
  else if (p.cl.unclean == 1)
    out.family = SlopeFamily::Single;
  else
    out.family = SlopeFamily::Empty;
  return out;
}

bool slope_in_set(const SlopeSet& s, const Rational& gamma) {
  switch (s.family) {
    case SlopeFamily::ShiftedHarmonic: {
      Rational d = gamma - s.base;
      return d.num == 1 || d.num == -1;
    }
    case SlopeFamily::Single:
      return gamma == s.base;
    case SlopeFamily::Empty:
      return false;
  }
  return false;
}

std::vector<Rational> slope_members(const SlopeSet& s, int max_index) {
  std::vector<Rational> out;
  switch (s.family) {
    case SlopeFamily::ShiftedHarmonic:
      for (int n = 1; n <= max_index; ++n) out.push_back(s.base + Rational(1, n));
      for (int n = 1; n <= max_index; ++n) out.push_back(s.base - Rational(1, n));
      break;
    case SlopeFamily::Single:
      out.push_back(s.base);
      break;
    case SlopeFamily::Empty:
      break;
  }
  return out;
}

TwistVerdict classify_crossing_change(const OpenBook& book, const Path& alpha,
                                      int n) {
  if (n == 0)
    throw Error(ErrorCode::ZeroTwist, "the 0-twist changes nothing");
  TwistPrep p = prep_arc(book, alpha);
  TwistVerdict v;
  v.kind = table(p.cl, n);
  if (v.kind == TwistCase::FiberPreservedStallings ||
      v.kind == TwistCase::FiberPreservedHopfReversal ||
      v.kind == TwistCase::FiberPreservedUnclean)
    v.book = apply_update(book, p, n, v.kind);
  return v;
}

OpenBook twist_monodromy_update(const OpenBook& book, const Path& alpha,
                                int n) {
  if (n == 0)
    throw Error(ErrorCode::ZeroTwist, "the 0-twist changes nothing");
  TwistPrep p = prep_arc(book, alpha);
  return apply_update(book, p, n, table(p.cl, n));
}

int mbc1(const OpenBook& book, const Path& alpha) {
  return prep_arc(book, alpha).cl.unclean;
}

}  // namespace openbook
