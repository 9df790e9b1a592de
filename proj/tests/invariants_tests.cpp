#include <doctest.h>

#include <vector>

#include "openbook/errors.hpp"
#include "openbook/invariants.hpp"
#include "openbook/rational.hpp"

using namespace openbook;

namespace {

Path spanning_arc() {
  return make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 1}, 0});
}

// Image of the spanning arc under k annulus twists; half=0 is the positive
// (right-handed) direction.
Path twisted_arc(int k, int half) {
  std::vector<int> t((std::size_t)k, half);
  return make_arc({Corner{0, 0}, 0}, t, {Corner{0, 1}, 0});
}

// One-vertex genus-one surface: two interleaved bands.
FatGraph holed_torus() {
  FatGraph g;
  g.vertex_cycles = {{0, 2, 1, 3}};
  g.num_edges = 2;
  return g;
}

template <typename F>
ErrorCode thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return ErrorCode::ValidationError;
}

}  // namespace

TEST_CASE("normalize cancels backtracks and keeps endpoints") {
  FatGraph g = make_annulus();
  Path wrinkled = make_arc({Corner{0, 0}, 0}, {0, 1}, {Corner{0, 1}, 0});
  Path n = normalize(g, wrinkled);
  CHECK(n.traversals.empty());
  CHECK(n.start == wrinkled.start);
  CHECK(n.end == wrinkled.end);
  CHECK(normalize(g, spanning_arc()).traversals.empty());
}

TEST_CASE("normalize rotates loop words to the least rotation") {
  FatGraph g = holed_torus();
  Path n = normalize(g, make_loop({2, 0}));
  CHECK(n.traversals == std::vector<int>{0, 2});
  // idempotent
  Path nn = normalize(g, n);
  CHECK(nn.traversals == n.traversals);
}

TEST_CASE("positive twist images: rho grows, boundary signs stay +1") {
  FatGraph g = make_annulus();
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    ArcPairGeometry geo = minimal_position(g, spanning_arc(), twisted_arc(k, 0), true);
    CHECK(geo.rho == k - 1);
    CHECK((int)geo.crossings.size() == geo.rho);
    CHECK(geo.boundary_signs[0] == 1);
    CHECK(geo.boundary_signs[1] == 1);
    CHECK(geo.i_boundary == 1);
    CHECK(geo.i_total == k);
    CHECK(!geo.fixed_arc);
  }
}

TEST_CASE("negative twist images mirror the boundary signs") {
  FatGraph g = make_annulus();
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    ArcPairGeometry geo = minimal_position(g, spanning_arc(), twisted_arc(k, 1), true);
    CHECK(geo.rho == k - 1);
    CHECK(geo.boundary_signs[0] == -1);
    CHECK(geo.boundary_signs[1] == -1);
    CHECK(geo.i_boundary == -1);
    CHECK(geo.i_total == k);
  }
}

TEST_CASE("an arc against its own image is reported fixed") {
  FatGraph g = make_annulus();
  ArcPairGeometry geo = minimal_position(g, spanning_arc(), spanning_arc(), true);
  CHECK(geo.fixed_arc);
  CHECK(geo.rho == 0);
  CHECK(geo.i_boundary == 0);
  CHECK(geo.i_total == 0);
  // the free choice of boundary signs is pinned as (+1, -1)
  CHECK(geo.boundary_signs[0] == 1);
  CHECK(geo.boundary_signs[1] == -1);

  // an unreduced but isotopic image is still recognized
  Path wrinkled = make_arc({Corner{0, 0}, 0}, {0, 1}, {Corner{0, 1}, 0});
  CHECK(minimal_position(g, spanning_arc(), wrinkled, true).fixed_arc);
}

TEST_CASE("dual handle arcs are clean and alternating") {
  FatGraph g = holed_torus();
  Path a = make_arc({Corner{0, 3}, 100}, {0}, {Corner{0, 1}, 100});
  Path b = make_arc({Corner{0, 3}, 100}, {2}, {Corner{0, 1}, 100});
  ArcPairGeometry ab = minimal_position(g, a, b, true);
  ArcPairGeometry ba = minimal_position(g, b, a, true);
  CHECK(ab.rho == 0);
  CHECK(ba.rho == 0);
  CHECK(std::abs(ab.i_boundary) == 1);
  // orientation antisymmetry of the boundary count
  CHECK(ab.i_boundary == -ba.i_boundary);
  CHECK(classify_arc(g, a, b).label() == "clean-alternating");
}

TEST_CASE("an arc dragged around a handle is clean non-alternating") {
  FatGraph g = holed_torus();
  Path a = make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 0}, 10});
  Path b = make_arc({Corner{0, 0}, 0}, {0, 2}, {Corner{0, 0}, 10});
  for (int ord = 0; ord < 2; ++ord) {
    CAPTURE(ord);
    ArcPairGeometry geo = ord == 0 ? minimal_position(g, a, b, true)
                                   : minimal_position(g, b, a, true);
    CHECK(geo.rho == 0);
    CHECK(geo.i_boundary == 0);
    CHECK(geo.i_total == 0);
    CHECK(!geo.fixed_arc);
    CHECK(geo.boundary_signs[0] == -geo.boundary_signs[1]);
  }
  ArcClassification c = classify_arc(g, a, b);
  CHECK(c.label() == "clean-non-alternating");
  CHECK(!c.fixed);
}

TEST_CASE("classification labels track rho and the boundary count") {
  FatGraph g = make_annulus();
  CHECK(classify_arc(g, spanning_arc(), twisted_arc(1, 0)).label() ==
        "clean-alternating");
  CHECK(classify_arc(g, spanning_arc(), twisted_arc(1, 1)).label() ==
        "clean-alternating");
  CHECK(classify_arc(g, spanning_arc(), twisted_arc(2, 0)).label() ==
        "once-unclean-alternating");
  CHECK(classify_arc(g, spanning_arc(), twisted_arc(3, 0)).label() ==
        "2-unclean-alternating");
  CHECK(classify_arc(g, spanning_arc(), twisted_arc(4, 1)).label() ==
        "3-unclean-alternating");
  CHECK(classify_arc(g, spanning_arc(), spanning_arc()).label() == "clean-fixed");

  ArcClassification c;
  c.unclean = 1;
  CHECK(c.label() == "once-unclean-non-alternating");
  c.unclean = 5;
  CHECK(c.label() == "5-unclean-non-alternating");
}

TEST_CASE("interior crossing signs follow the surface orientation") {
  FatGraph g = make_disk();
  Path a = make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 0}, 10});
  Path b = make_arc({Corner{0, 0}, 5}, {}, {Corner{0, 0}, 15});
  ArcPairGeometry ab = minimal_position(g, a, b, false);
  REQUIRE(ab.rho == 1);
  CHECK(ab.crossings[0].sign == 1);
  CHECK(ab.boundary_signs[0] == 0);
  CHECK(ab.i_boundary == 0);
  CHECK(ab.i_total == 1);
  ArcPairGeometry ba = minimal_position(g, b, a, false);
  REQUIRE(ba.rho == 1);
  CHECK(ba.crossings[0].sign == -1);
}

TEST_CASE("unshared pairs report plain interior counts") {
  FatGraph g = make_disk();
  Path a = make_arc({Corner{0, 0}, 0}, {}, {Corner{0, 0}, 10});
  Path b = make_arc({Corner{0, 0}, 20}, {}, {Corner{0, 0}, 30});
  CHECK(rho(g, a, b, false) == 0);

  FatGraph ann = make_annulus();
  CHECK(rho(ann, spanning_arc(), make_loop({0}), false) == 1);
}

TEST_CASE("rho is symmetric in the pair") {
  FatGraph ann = make_annulus();
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    CHECK(rho(ann, spanning_arc(), twisted_arc(k, 0), true) ==
          rho(ann, twisted_arc(k, 0), spanning_arc(), true));
    CHECK(rho(ann, spanning_arc(), twisted_arc(k, 1), true) ==
          rho(ann, twisted_arc(k, 1), spanning_arc(), true));
  }
}

TEST_CASE("the three projections agree with the geometry") {
  FatGraph g = make_annulus();
  CHECK(boundary_intersection(g, spanning_arc(), twisted_arc(1, 0)) == 1);
  CHECK(boundary_intersection(g, spanning_arc(), twisted_arc(2, 1)) == -1);
  CHECK(i_total(g, spanning_arc(), twisted_arc(3, 0)) == 3);
  CHECK(rho(g, spanning_arc(), twisted_arc(3, 0), true) == 2);
}

TEST_CASE("non-embedded input is rejected through the invariants layer") {
  FatGraph g = make_annulus();
  CHECK(thrown_code([&] {
          minimal_position(g, make_loop({0, 0}), make_loop({0}), false);
        }) == ErrorCode::NotEmbedded);
}

TEST_CASE("rational parsing accepts integers and reduced fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("1/-2") == Rational(-1, 2));
  for (const char* bad : {"", "x", "1/", "1/0", "3 /2", "2/2x"}) {
    CAPTURE(bad);
    CHECK(thrown_code([&] { parse_rational(bad); }) == ErrorCode::SyntaxError);
  }
}
