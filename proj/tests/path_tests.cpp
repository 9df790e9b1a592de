#include <doctest.h>

#include "openbook/path.hpp"

using namespace openbook;

namespace {

FatGraph two_disk_band_pattern(int p) {
  FatGraph g;
  g.num_edges = p;
  std::vector<int> v0, v1;
  for (int e = 0; e < p; ++e) {
    v0.push_back(2 * e);
    v1.push_back(2 * e + 1);
  }
  g.vertex_cycles = {v0, v1};
  return g;
}

}  // namespace

TEST_CASE("reduction cancels backtracks, cyclically for loops") {
  FatGraph g = make_annulus();
  SurfaceIndex idx = build_index(g);
  // arc: enter band, come straight back = removable backtrack
  Path a = make_arc({Corner{0, 0}, 0}, {0, 1}, {Corner{0, 0}, 100});
  validate_path(g, idx, a);
  Path r = reduced(a);
  CHECK(r.traversals.empty());
  CHECK(r.start == a.start);
  CHECK(r.end == a.end);

  Path l = make_loop({0, 0, 1});  // core twice, once back: reduces to core
  validate_path(g, idx, l);
  CHECK(reduced(l).traversals == std::vector<int>{0});
  CHECK(is_null_homotopic_loop(make_loop({0, 1})));
  CHECK(!is_null_homotopic_loop(make_loop({0})));
}

TEST_CASE("validate_path rejects non-chaining traversals") {
  FatGraph g = two_disk_band_pattern(3);
  SurfaceIndex idx = build_index(g);
  // entering band 0 from disk 0 lands on disk 1; entering band 1 again from
  // disk 0 does not chain
  Path bad = make_loop({0, 2});
  CHECK_THROWS_AS(validate_path(g, idx, bad), Error);
  Path good = make_loop({0, 3});  // through band 0 and back through band 1
  validate_path(g, idx, good);
}

TEST_CASE("reversal is an involution and respects class equality") {
  FatGraph g = two_disk_band_pattern(3);
  SurfaceIndex idx = build_index(g);
  Path a = make_arc({Corner{0, 0}, 0}, {2, 5}, {Corner{0, 2}, 0});
  validate_path(g, idx, a);
  CHECK(same_path(a, reversed(a)));
  CHECK(same_path(reversed(reversed(a)), a));
  Path b = make_arc({Corner{0, 0}, 0}, {2, 5}, {Corner{0, 2}, 50});
  CHECK(!same_path(a, b));  // different pinned endpoint
  CHECK(same_loop_class(make_loop({0, 3}), make_loop({3, 0})));
  CHECK(same_loop_class(make_loop({0, 3}), make_loop({2, 1})));  // reversed
}

TEST_CASE("slides move endpoints across gates and are blocked by other points") {
  FatGraph g = make_annulus();
  SurfaceIndex idx = build_index(g);
  // spanning arc of the annulus: from corner after half-edge 0 to corner
  // after half-edge 1, through the band
  Path a = make_arc({Corner{0, 0}, 0}, {1}, {Corner{0, 1}, 0});
  validate_path(g, idx, a);

  auto slid = slide_endpoint(g, idx, a, /*move_start=*/true, /*forward=*/true);
  REQUIRE(slid.has_value());
  validate_path(g, idx, *slid);
  // sliding forward pulls the initial band crossing straight: the new first
  // traversal (entering at mate(1) = 0) cancels against the old traversal 1,
  // leaving the plain chord between the two boundary circles of the annulus
  CHECK(slid->traversals.empty());
  CHECK(slid->start.corner == Corner{0, 0});

  // blocked slide: another marked point ahead on the same corner
  auto blocked = slide_endpoint(g, idx, a, true, true, {10});
  CHECK(!blocked.has_value());
}

TEST_CASE("slides undo themselves") {
  FatGraph g = two_disk_band_pattern(3);
  SurfaceIndex idx = build_index(g);
  Path a = make_arc({Corner{0, 0}, 0}, {2, 5}, {Corner{0, 2}, 0});
  for (bool move_start : {true, false}) {
    for (bool forward : {true, false}) {
      auto once = slide_endpoint(g, idx, a, move_start, forward);
      REQUIRE(once.has_value());
      validate_path(g, idx, *once);
      auto back = slide_endpoint(g, idx, *once, move_start, !forward);
      REQUIRE(back.has_value());
      CHECK(back->traversals == a.traversals);
      CHECK(back->start.corner == a.start.corner);
      CHECK(back->end.corner == a.end.corner);
    }
  }
}

TEST_CASE("contraction transport drops the vanished band") {
  FatGraph g = two_disk_band_pattern(2);
  SurfaceIndex idx = build_index(g);
  // loop through both bands (the core of the Hopf pattern)
  Path core = make_loop({2, 1});
  validate_path(g, idx, core);
  EdgeContraction ec = contract_edge(g, 0);
  Path t = transport_through_contraction(ec, core);
  SurfaceIndex ridx = build_index(ec.result);
  validate_path(ec.result, ridx, t);
  CHECK((int)t.traversals.size() == 1);  // only the surviving band

  // lift back: the lifted loop must reduce to the original class
  Path lifted = lift_through_contraction(g, ec, t);
  validate_path(g, idx, lifted);
  CHECK(same_loop_class(lifted, core));
}

TEST_CASE("arc transport through full reduction and back") {
  FatGraph g = two_disk_band_pattern(3);
  SurfaceIndex idx = build_index(g);
  Path a = make_arc({Corner{0, 0}, 0}, {2, 5}, {Corner{0, 2}, 0});
  validate_path(g, idx, a);
  ReducedPresentation rp = reduce_presentation(g);
  Path down = transport_through_reduction(rp, a);
  SurfaceIndex ridx = build_index(rp.result);
  validate_path(rp.result, ridx, down);
  Path up = lift_through_reduction(g, rp, down);
  validate_path(g, idx, up);
  CHECK(same_path(up, a));
}
