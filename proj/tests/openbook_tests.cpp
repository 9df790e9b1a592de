#include <doctest.h>

#include <string>
#include <vector>

#include "openbook/errors.hpp"
#include "openbook/monodromy.hpp"
#include "openbook/openbook.hpp"
#include "openbook/overlay.hpp"
#include "openbook/path.hpp"
#include "openbook/surface.hpp"

using namespace openbook;

namespace {

TwistWord word(std::vector<TwistLetter> letters) {
  return TwistWord{std::move(letters)};
}

template <class F>
ErrorCode thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return ErrorCode::ValidationError;
}

// Three-holed sphere: one disk, two disjoint bands.
FatGraph pants() {
  FatGraph g;
  g.vertex_cycles = {{0, 1, 2, 3}};
  g.num_edges = 2;
  return g;
}

// One-vertex genus-one surface: two interleaved bands.
FatGraph holed_torus() {
  FatGraph g;
  g.vertex_cycles = {{0, 2, 1, 3}};
  g.num_edges = 2;
  return g;
}

OpenBook disk_book() { return make_open_book(make_disk(), {}, "disk"); }

// The annulus with one right-handed (sign +1) or left-handed twist.
OpenBook twisted_annulus_book(int exponent) {
  return make_open_book(make_annulus(), word({{make_loop({0}), exponent}}),
                        "annulus^" + std::to_string(exponent));
}

Path annulus_spanning_arc() {
  return make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 1}, 0});
}

}  // namespace

TEST_CASE("open books validate their parts and log their origin") {
  OpenBook b = twisted_annulus_book(1);
  REQUIRE(b.provenance.size() == 1);
  CHECK(b.provenance[0] == "annulus^1");

  FatGraph broken;
  broken.vertex_cycles = {{0}};
  broken.num_edges = 1;
  CHECK(thrown_code([&] { make_open_book(broken, {}, "x"); }) ==
        ErrorCode::DanglingHalfEdge);
  CHECK(thrown_code([&] {
          make_open_book(make_annulus(), word({{make_loop({0}), 0}}), "x");
        }) == ErrorCode::ZeroTwist);
}

TEST_CASE("cut verdict on the twisted annulus family") {
  Path alpha = annulus_spanning_arc();
  CHECK(decide_cut_fiber(twisted_annulus_book(1), alpha) == CutVerdict::Fiber);
  CHECK(decide_cut_fiber(twisted_annulus_book(-1), alpha) == CutVerdict::Fiber);
  CHECK(decide_cut_fiber(make_open_book(make_annulus(), {}, "id"), alpha) ==
        CutVerdict::SplitUnion);
  for (int k : {2, -2, 3, -3, 4, -4}) {
    CAPTURE(k);
    CHECK(decide_cut_fiber(twisted_annulus_book(k), alpha) ==
          CutVerdict::NotFiberByThisSurface);
  }
  CHECK(thrown_code([&] {
          decide_cut_fiber(twisted_annulus_book(1), make_loop({0}));
        }) == ErrorCode::NotAnArc);
  CHECK(thrown_code([&] { cut_along_arc(twisted_annulus_book(2), alpha); }) ==
        ErrorCode::CutNotFiber);
}

TEST_CASE("de-plumbing the twisted annulus yields the disk book") {
  for (int sign : {1, -1}) {
    CAPTURE(sign);
    OpenBook b = twisted_annulus_book(sign);
    for (const Path& alpha :
         {annulus_spanning_arc(), band_cocore(b.surface, 0)}) {
      CAPTURE(alpha.traversals.size());
      CutOutcome out = cut_along_arc(b, alpha);
      CHECK(euler_characteristic(out.book.surface) == 1);
      CHECK(out.book.monodromy.letters.empty());
      CHECK(!out.split);
      CHECK(!out.boundary_parallel);
      CHECK(!out.resolution.has_value());
      CHECK(open_book_equal(out.book, disk_book()));
      REQUIRE(out.book.provenance.size() == 2);
    }
  }
}

TEST_CASE("plumbing a band onto the disk builds the twisted annulus") {
  Path seam = make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 0}, 1});
  OpenBook plus = plumb_hopf(disk_book(), seam, 1);
  OpenBook minus = plumb_hopf(disk_book(), seam, -1);
  CHECK(euler_characteristic(plus.surface) == 0);
  CHECK(open_book_equal(plus, twisted_annulus_book(1)));
  CHECK(open_book_equal(minus, twisted_annulus_book(-1)));
  CHECK(!open_book_equal(plus, minus));

  Path alpha = band_cocore(plus.surface, 0);
  CHECK(detect_banding(plus, alpha) == BandingKind::HopfPositive);
  CHECK(detect_banding(minus, alpha) == BandingKind::HopfNegative);
  CHECK(decide_cut_fiber(plus, alpha) == CutVerdict::Fiber);
  CHECK(!detect_prefiber_case(plus, alpha));
}

TEST_CASE("plumbing errors") {
  CHECK(thrown_code([&] {
          plumb_hopf(disk_book(),
                     make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 0}, 1}), 0);
        }) == ErrorCode::ValidationError);
  CHECK(thrown_code([&] { plumb_hopf(disk_book(), make_loop({}), 1); }) ==
        ErrorCode::NotAnArc);
  // an arc winding twice through the band cannot be drawn embedded
  CHECK(thrown_code([&] {
          plumb_hopf(twisted_annulus_book(1),
                     make_arc({Corner{0, 0}, 0}, {0, 0}, {Corner{0, 0}, 1}), 1);
        }) == ErrorCode::NotEmbedded);
  CHECK(thrown_code([&] { band_cocore(make_annulus(), 1); }) ==
        ErrorCode::InvalidPath);
  CHECK(thrown_code([&] {
          arc_union_loop(make_annulus(), annulus_spanning_arc(),
                         make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 0}, 5}));
        }) == ErrorCode::HypothesesUnmet);
}

TEST_CASE("plumb then cut along the new band's dual arc is the identity") {
  std::vector<std::pair<OpenBook, Path>> bases;
  bases.emplace_back(disk_book(),
                     make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 0}, 1}));
  bases.emplace_back(twisted_annulus_book(1), annulus_spanning_arc());
  bases.emplace_back(twisted_annulus_book(-1),
                     make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 0}, 1}));
  bases.emplace_back(
      make_open_book(pants(), word({{make_loop({0}), 1}}), "pants"),
      make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 2}, 0}));
  bases.emplace_back(
      make_open_book(holed_torus(), word({{make_loop({0}), 1}}), "torus"),
      make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 2}, 0}));
  for (const auto& [base, seam] : bases) {
    for (int sign : {1, -1}) {
      CAPTURE(base.provenance[0]);
      CAPTURE(sign);
      OpenBook plumbed = plumb_hopf(base, seam, sign);
      CHECK(euler_characteristic(plumbed.surface) ==
            euler_characteristic(base.surface) - 1);
      Path alpha = band_cocore(plumbed.surface, base.surface.num_edges);
      CHECK(detect_banding(plumbed, alpha) ==
            (sign > 0 ? BandingKind::HopfPositive : BandingKind::HopfNegative));
      CutOutcome out = cut_along_arc(plumbed, alpha);
      CHECK(euler_characteristic(out.book.surface) ==
            euler_characteristic(base.surface));
      CHECK(open_book_equal(out.book, base));
    }
  }
}

TEST_CASE("cutting along a fixed arc can keep the surface connected") {
  // The monodromy twists along the band-0 loop only, so the dual arc of
  // band 1 is fixed: the banded link splits, yet the abstract cut surface
  // here is still connected (an annulus).
  OpenBook b = make_open_book(pants(), word({{make_loop({0}), 2}}), "pants");
  Path alpha = band_cocore(b.surface, 1);
  CHECK(decide_cut_fiber(b, alpha) == CutVerdict::SplitUnion);
  CHECK(detect_banding(b, alpha) == BandingKind::Neither);
  CutOutcome out = cut_along_arc(b, alpha);
  CHECK(!out.split);
  CHECK(!out.boundary_parallel);
  CHECK(euler_characteristic(out.book.surface) == 0);
  CHECK(open_book_equal(out.book, twisted_annulus_book(2)));
}

TEST_CASE("cutting along a separating fixed arc splits the book") {
  OpenBook b = make_open_book(pants(), word({{make_loop({0}), 1}}), "pants");
  Path alpha = make_arc({Corner{0, 1}, 0}, {}, {Corner{0, 3}, 0});
  CHECK(decide_cut_fiber(b, alpha) == CutVerdict::SplitUnion);
  CutOutcome out = cut_along_arc(b, alpha);
  CHECK(out.split);
  CHECK(!out.boundary_parallel);
  CHECK(out.book.surface.allow_disconnected);

  FatGraph two_annuli;
  two_annuli.vertex_cycles = {{0, 1}, {2, 3}};
  two_annuli.num_edges = 2;
  two_annuli.allow_disconnected = true;
  OpenBook expected =
      make_open_book(two_annuli, word({{make_loop({0}), 1}}), "expected");
  CHECK(open_book_equal(out.book, expected));

  // component matching must not depend on listing order, and must notice
  // genuinely different words
  OpenBook swapped =
      make_open_book(two_annuli, word({{make_loop({2}), 1}}), "swapped");
  CHECK(open_book_equal(out.book, swapped));
  OpenBook both = make_open_book(
      two_annuli, word({{make_loop({0}), 1}, {make_loop({2}), 1}}), "both");
  CHECK(!open_book_equal(out.book, both));
}

TEST_CASE("cutting along an inessential arc is flagged as boundary parallel") {
  OpenBook b = twisted_annulus_book(1);
  Path alpha = make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 0}, 1});
  CHECK(decide_cut_fiber(b, alpha) == CutVerdict::SplitUnion);
  CutOutcome out = cut_along_arc(b, alpha);
  CHECK(out.boundary_parallel);
  CHECK(out.split);

  FatGraph annulus_and_disk;
  annulus_and_disk.vertex_cycles = {{0, 1}, {}};
  annulus_and_disk.num_edges = 1;
  annulus_and_disk.allow_disconnected = true;
  OpenBook expected = make_open_book(
      annulus_and_disk, word({{make_loop({0}), 1}}), "annulus and disk");
  CHECK(open_book_equal(out.book, expected));
}

TEST_CASE("attaching a once-overlapped band and cutting it off round-trips") {
  OpenBook base = twisted_annulus_book(1);
  // an arc through the band twice: its projection has exactly one
  // self-crossing, the once-overlapped band core of the construction
  Path ell = make_arc({Corner{0, 0}, 0}, {0, 0}, {Corner{0, 0}, 1});
  CHECK(overlay_system(base.surface, {ell}).crossings.size() == 1);

  OpenBook over = attach_generalized_hopf_band(base, ell, BandSide::Over);
  OpenBook under = attach_generalized_hopf_band(base, ell, BandSide::Under);
  for (const OpenBook* b : {&over, &under}) {
    CHECK(euler_characteristic(b->surface) == -1);
    CHECK(num_boundary_components(b->surface) == 3);
  }
  CHECK(!open_book_equal(over, under));

  for (const OpenBook* b : {&over, &under}) {
    Path alpha = band_cocore(b->surface, base.surface.num_edges);
    CHECK(detect_banding(*b, alpha) == BandingKind::GeneralizedHopf);
    CHECK(decide_cut_fiber(*b, alpha) == CutVerdict::Fiber);

    ResolutionLoops loops = resolution_loops(*b, alpha);
    CHECK(min_self_crossings(b->surface, loops.a) == 0);
    CHECK(min_self_crossings(b->surface, loops.b) == 0);
    CHECK(min_self_crossings(b->surface, loops.c) == 0);

    CutOutcome out = cut_along_arc(*b, alpha);
    CHECK(euler_characteristic(out.book.surface) == 0);
    REQUIRE(out.resolution.has_value());
    // the reported loops live on the uncut surface (at least one must cross
    // the removed band, so they cannot be carried to the cut surface)
    validate_twist_word(b->surface, word({{out.resolution->a, 1},
                                          {out.resolution->b, 1},
                                          {out.resolution->c, 1}}));
    CHECK(open_book_equal(out.book, base));
  }
}

TEST_CASE("an over-wound band core is rejected") {
  OpenBook base = twisted_annulus_book(1);
  Path ell = make_arc({Corner{0, 0}, 0}, {0, 0, 0}, {Corner{0, 0}, 1});
  CHECK(thrown_code([&] {
          attach_generalized_hopf_band(base, ell, BandSide::Over);
        }) == ErrorCode::SelfCrossingCountWrong);
}

TEST_CASE("an embedded band core degenerates the attachment to a plumbing") {
  OpenBook base = twisted_annulus_book(1);
  Path seam = annulus_spanning_arc();
  CHECK(open_book_equal(attach_generalized_hopf_band(base, seam, BandSide::Over),
                        plumb_hopf(base, seam, 1)));
  CHECK(open_book_equal(
      attach_generalized_hopf_band(base, seam, BandSide::Under),
      plumb_hopf(base, seam, -1)));
}

TEST_CASE("resolution loops demand a once-unclean arc") {
  OpenBook b = twisted_annulus_book(1);
  CHECK(thrown_code([&] { resolution_loops(b, annulus_spanning_arc()); }) ==
        ErrorCode::HypothesesUnmet);
  CHECK(thrown_code([&] {
          smooth_once_crossing_loop(b.surface, make_loop({0}));
        }) == ErrorCode::SelfCrossingCountWrong);
  CHECK(thrown_code([&] {
          smooth_once_crossing_loop(b.surface, annulus_spanning_arc());
        }) == ErrorCode::InvalidPath);
}

TEST_CASE("a monodromy word that cannot leave the cut arc is refused") {
  // The word t_x t_z t_x^{-1} with x, z disjoint presents the same mapping
  // class as t_z alone, but no letter-by-letter cleanup can cancel the x
  // letters, and x crosses the cut arc.  The cut must refuse rather than
  // silently drop letters.
  FatGraph g = pants();
  Path x = make_loop({2});
  Path z = make_loop({0});
  OpenBook b = make_open_book(g, word({{x, 1}, {z, 1}, {x, -1}}), "conjugated");
  Path alpha = band_cocore(g, 1);
  CHECK(decide_cut_fiber(b, alpha) == CutVerdict::SplitUnion);
  CHECK(thrown_code([&] { cut_along_arc(b, alpha); }) ==
        ErrorCode::HypothesesUnmet);

  // the same mapping class presented without the conjugation cuts fine
  OpenBook plain = make_open_book(g, word({{z, 1}}), "plain");
  CHECK(mcg_equal(g, b.monodromy, plain.monodromy));
  CHECK(open_book_equal(cut_along_arc(plain, alpha).book,
                        twisted_annulus_book(1)));
}

TEST_CASE("fiber verdict coincides with banding detection") {
  std::vector<std::pair<OpenBook, Path>> fixtures;
  fixtures.emplace_back(twisted_annulus_book(1), annulus_spanning_arc());
  fixtures.emplace_back(twisted_annulus_book(-1), annulus_spanning_arc());
  fixtures.emplace_back(twisted_annulus_book(2), annulus_spanning_arc());
  fixtures.emplace_back(twisted_annulus_book(-3), annulus_spanning_arc());
  fixtures.emplace_back(make_open_book(make_annulus(), {}, "id"),
                        annulus_spanning_arc());
  fixtures.emplace_back(
      make_open_book(pants(), word({{make_loop({0}), 2}}), "pants"),
      band_cocore(pants(), 1));
  fixtures.emplace_back(
      make_open_book(holed_torus(), word({{make_loop({0}), 1}}), "torus"),
      band_cocore(holed_torus(), 0));
  OpenBook over = attach_generalized_hopf_band(
      twisted_annulus_book(1),
      make_arc({Corner{0, 0}, 0}, {0, 0}, {Corner{0, 0}, 1}), BandSide::Over);
  fixtures.emplace_back(over, band_cocore(over.surface, 1));

  for (const auto& [book, alpha] : fixtures) {
    CAPTURE(book.provenance[0]);
    const CutVerdict v = decide_cut_fiber(book, alpha);
    const BandingKind k = detect_banding(book, alpha);
    CHECK((v == CutVerdict::Fiber) == (k != BandingKind::Neither));
    if (v == CutVerdict::SplitUnion) CHECK(k == BandingKind::Neither);
    if (k != BandingKind::Neither) CHECK(!detect_prefiber_case(book, alpha));
  }
}
