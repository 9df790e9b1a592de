#include <doctest.h>

#include <algorithm>
#include <random>

#include "openbook/surface.hpp"

using namespace openbook;

namespace {

// Two disks joined by p bands, gates in matching cyclic order on both disks:
// the band pattern of the (2,p) torus link fiber.
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

TEST_CASE("disk: one vertex, zero edges") {
  FatGraph g = make_disk();
  validate_surface(g);
  CHECK(euler_characteristic(g) == 1);
  CHECK(num_boundary_components(g) == 1);
}

TEST_CASE("annulus: one vertex, one edge, adjacent half-edges") {
  FatGraph g = make_annulus();
  validate_surface(g);
  CHECK(euler_characteristic(g) == 0);
  CHECK(num_boundary_components(g) == 2);
}

TEST_CASE("two-disk band patterns: chi and boundary counts") {
  for (int p = 1; p <= 9; ++p) {
    FatGraph g = two_disk_band_pattern(p);
    validate_surface(g);
    CHECK(euler_characteristic(g) == 2 - p);
    CHECK(num_boundary_components(g) == (p % 2 == 1 ? 1 : 2));
  }
}

TEST_CASE("planar ladder (reversed second cycle) is planar: p boundary circles") {
  // Same bands, but the second disk sees the gates in reversed cyclic order:
  // an embedded-in-the-plane ladder, whose boundary has p components.
  for (int p = 2; p <= 5; ++p) {
    FatGraph g;
    g.num_edges = p;
    std::vector<int> v0, v1;
    for (int e = 0; e < p; ++e) v0.push_back(2 * e);
    for (int e = p - 1; e >= 0; --e) v1.push_back(2 * e + 1);
    g.vertex_cycles = {v0, v1};
    validate_surface(g);
    CHECK(num_boundary_components(g) == p);
  }
}

TEST_CASE("validation rejects bad gluing data") {
  FatGraph g;
  g.num_edges = 1;
  g.vertex_cycles = {{0}};
  CHECK_THROWS_AS(validate_surface(g), Error);  // 1 unplaced

  g.vertex_cycles = {{0, 0, 1}};
  CHECK_THROWS_AS(validate_surface(g), Error);  // 0 placed twice

  FatGraph empty;
  CHECK_THROWS_AS(validate_surface(empty), Error);

  FatGraph split;
  split.num_edges = 0;
  split.vertex_cycles = {{}, {}};
  CHECK_THROWS_AS(validate_surface(split), Error);
  split.allow_disconnected = true;
  validate_surface(split);
}

TEST_CASE("boundary trace partitions all corners") {
  for (int p = 1; p <= 6; ++p) {
    FatGraph g = two_disk_band_pattern(p);
    SurfaceIndex idx = build_index(g);
    int total = 0;
    for (const auto& comp : idx.boundary) total += (int)comp.size();
    CHECK(total == idx.total_corners);
    // next/prev are inverse
    for (const auto& comp : idx.boundary)
      for (const auto& c : comp)
        CHECK(prev_corner(g, idx, next_corner(g, idx, c)) == c);
  }
}

TEST_CASE("boundary trace invariant under relabeling") {
  std::mt19937 rng(7);
  FatGraph g = two_disk_band_pattern(4);
  std::string key = canonical_key(g);
  for (int trial = 0; trial < 20; ++trial) {
    // random relabel: permute edges, swap half-edge pairs, rotate cycles,
    // permute vertices
    int E = g.num_edges;
    std::vector<int> eperm(E);
    std::iota(eperm.begin(), eperm.end(), 0);
    std::shuffle(eperm.begin(), eperm.end(), rng);
    std::vector<int> hmap(2 * E);
    for (int e = 0; e < E; ++e) {
      int flip = rng() % 2;
      hmap[2 * e] = 2 * eperm[e] + flip;
      hmap[2 * e + 1] = 2 * eperm[e] + (1 - flip);
    }
    FatGraph h;
    h.num_edges = E;
    h.vertex_cycles.resize(g.vertex_cycles.size());
    std::vector<int> vperm(g.vertex_cycles.size());
    std::iota(vperm.begin(), vperm.end(), 0);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    for (size_t v = 0; v < g.vertex_cycles.size(); ++v) {
      std::vector<int> cyc;
      for (int x : g.vertex_cycles[v]) cyc.push_back(hmap[x]);
      int rot = rng() % std::max<size_t>(1, cyc.size());
      std::rotate(cyc.begin(), cyc.begin() + rot, cyc.end());
      h.vertex_cycles[vperm[v]] = cyc;
    }
    validate_surface(h);
    CHECK(canonical_key(h) == key);
    CHECK(num_boundary_components(h) == num_boundary_components(g));
  }
}

TEST_CASE("contraction merges disks and preserves chi and boundary") {
  FatGraph g = two_disk_band_pattern(3);
  EdgeContraction ec = contract_edge(g, 1);
  validate_surface(ec.result);
  CHECK((int)ec.result.vertex_cycles.size() == 1);
  CHECK(ec.result.num_edges == 2);
  CHECK(euler_characteristic(ec.result) == euler_characteristic(g));
  CHECK(num_boundary_components(ec.result) == num_boundary_components(g));
}

TEST_CASE("reduce_presentation reaches one disk per component") {
  FatGraph g = two_disk_band_pattern(2);
  ReducedPresentation rp = reduce_presentation(g);
  CHECK((int)rp.result.vertex_cycles.size() == 1);
  CHECK(rp.result.num_edges == 1);
  // the Hopf pattern contracts to the standard annulus
  CHECK(canonical_key(rp.result) == canonical_key(make_annulus()));
}

TEST_CASE("isomorphism search finds the band-swap symmetry") {
  FatGraph g = two_disk_band_pattern(2);
  auto isos = enumerate_isomorphisms(g, g);
  // rotations of each 2-cycle, times the vertex swap: the automorphism group
  // of the Hopf pattern has order 4 on half-edges
  CHECK(isos.size() == 4);
  // the 3-band pattern is chiral: reversing one disk's cyclic order gives the
  // planar ladder, which is not isomorphic (3 boundary circles vs 1)
  FatGraph g3 = two_disk_band_pattern(3);
  FatGraph ladder;
  ladder.num_edges = 3;
  ladder.vertex_cycles = {{0, 2, 4}, {5, 3, 1}};
  CHECK(enumerate_isomorphisms(g3, ladder).empty());
  CHECK(!enumerate_isomorphisms(g3, g3).empty());
}
