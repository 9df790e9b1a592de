#include "openbook/invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "openbook/errors.hpp"

namespace openbook {

Path normalize(const FatGraph& g, const Path& p) {
  SurfaceIndex idx = build_index(g);
  validate_path(g, idx, p);
  Path out = reduced(p);
  if (out.is_loop && out.traversals.size() > 1) {
    // lexicographically least rotation; any least rotation gives the same word
    const std::vector<int>& w = out.traversals;
    std::size_t n = w.size(), best = 0;
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        int a = w[(r + k) % n], b = w[(best + k) % n];
        if (a != b) {
          if (a < b) best = r;
          break;
        }
      }
    }
    std::rotate(out.traversals.begin(), out.traversals.begin() + best,
                out.traversals.end());
  }
  return out;
}

ArcPairGeometry minimal_position(const FatGraph& g, const Path& alpha,
                                 const Path& beta, bool shared_endpoints) {
  ArcPairGeometry out;
  if (shared_endpoints) {
    // An arc isotopic to its partner meets the pushed-off copy in one crossing
    // claimed by both germs; the boundary signs are then a free choice and are
    // fixed as (+1, -1) so that i_boundary vanishes.
    Path a = reduced(alpha), b = reduced(beta);
    if (!a.is_loop && !b.is_loop && same_path(a, b)) {
      SurfaceIndex idx = build_index(g);
      validate_path(g, idx, a);
      out.fixed_arc = true;
      out.boundary_signs = {+1, -1};
      return out;
    }
  }
  OverlaySummary s = overlay_pair(g, alpha, beta, shared_endpoints);
  if (s.germ_shared)
    throw Error(ErrorCode::NonDiskRegionUnresolved,
                "shared germ crossing reported for non-isotopic arcs");
  std::vector<char> claimed(s.crossings.size(), 0);
  if (s.germ_at_start >= 0) claimed[s.germ_at_start] = 1;
  if (s.germ_at_end >= 0) claimed[s.germ_at_end] = 1;
  for (std::size_t i = 0; i < s.crossings.size(); ++i)
    if (!claimed[i]) out.crossings.push_back(s.crossings[i]);
  out.boundary_signs = s.tangent_sign;
  out.rho = (int)out.crossings.size();
  out.i_boundary = (out.boundary_signs[0] + out.boundary_signs[1]) / 2;
  out.i_total = out.rho + std::abs(out.i_boundary);
  return out;
}

int boundary_intersection(const FatGraph& g, const Path& alpha, const Path& beta) {
  return minimal_position(g, alpha, beta, true).i_boundary;
}

int rho(const FatGraph& g, const Path& alpha, const Path& beta,
        bool shared_endpoints) {
  return minimal_position(g, alpha, beta, shared_endpoints).rho;
}

int i_total(const FatGraph& g, const Path& alpha, const Path& beta) {
  return minimal_position(g, alpha, beta, true).i_total;
}

std::string ArcClassification::label() const {
  if (fixed) return "clean-fixed";
  std::string head = unclean == 0    ? "clean"
                     : unclean == 1 ? "once-unclean"
                                    : std::to_string(unclean) + "-unclean";
  return head + (alternating ? "-alternating" : "-non-alternating");
}

ArcClassification classify_arc(const FatGraph& g, const Path& alpha,
                               const Path& image) {
  ArcClassification c;
  c.geometry = minimal_position(g, alpha, image, true);
  c.unclean = c.geometry.rho;
  c.fixed = c.geometry.fixed_arc;
  c.alternating = !c.fixed && std::abs(c.geometry.i_boundary) == 1;
  return c;
}

}  // namespace openbook
