// Opens of the rational line as finite unions of bounded open intervals,
// and the dyadic grid covers that base its metric uniformity.
#ifndef PFC_LINE_HPP
#define PFC_LINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pfc/rat.hpp"
#include "pfc/report.hpp"

namespace pfc {

struct RatInterval {
  Rat lo, hi;  // open interval (lo, hi), lo < hi
};

// Canonical form: disjoint components sorted by endpoint. Touching open
// intervals stay separate (their union misses the shared endpoint).
class RationalOpen {
 public:
  RationalOpen() = default;
  static RationalOpen interval(const Rat& lo, const Rat& hi);
  static RationalOpen of(std::vector<RatInterval> comps);

  bool empty() const { return comps_.empty(); }
  const std::vector<RatInterval>& components() const { return comps_; }

  bool contains(const Rat& q) const;
  bool subset_of(const RationalOpen& o) const;
  RationalOpen meet(const RationalOpen& o) const;
  RationalOpen join(const RationalOpen& o) const;
  // Distance from q to the set (0 when inside or on a component boundary).
  Rat dist(const Rat& q) const;
  bool operator==(const RationalOpen& o) const;
  std::string str() const;

 private:
  std::vector<RatInterval> comps_;
};

// Grid cover U_j: open intervals of length 2^-j centered on the
// (2^-j / 4)-grid. Mesh and step are exact rationals.
Rat grid_mesh(int j);
Rat grid_step(int j);
RationalOpen grid_member(int j, const Int& idx);  // centered at idx * step
// A member of U_j containing q, centered at the nearest grid point
// (ties toward the lower index).
RationalOpen grid_member_around(int j, const Rat& q);
// Does some member of U_j contain both p and q?
bool grid_contains_pair(int j, const Rat& p, const Rat& q);

// st(a, U_j), computed exactly (each component thickens by less than 2^-j
// on both sides, snapped to the grid).
RationalOpen line_star(const RationalOpen& a, int j);

// Depth-bounded search for a witness st(a, U_j) <= b; nullopt = unknown.
std::optional<int> line_uniformly_below(const RationalOpen& a, const RationalOpen& b, int depth);

// Star-refinement of the grid base: U_{j+2}* refines U_j, verified by exact
// worst-case arithmetic for every j <= maxj.
Report check_grid_star_witness(int maxj);

}  // namespace pfc

#endif
