#include "pfc/line.hpp"

#include <algorithm>

namespace pfc {

RationalOpen RationalOpen::interval(const Rat& lo, const Rat& hi) {
  RationalOpen o;
  if (lo < hi) o.comps_.push_back({lo, hi});
  return o;
}

RationalOpen RationalOpen::of(std::vector<RatInterval> comps) {
  std::vector<RatInterval> keep;
  for (auto& c : comps)
    if (c.lo < c.hi) keep.push_back(c);
  std::sort(keep.begin(), keep.end(), [](const RatInterval& a, const RatInterval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  RationalOpen o;
  for (auto& c : keep) {
    if (!o.comps_.empty() && c.lo < o.comps_.back().hi) {
      if (c.hi > o.comps_.back().hi) o.comps_.back().hi = c.hi;
    } else {
      o.comps_.push_back(c);
    }
  }
  return o;
}

bool RationalOpen::contains(const Rat& q) const {
  for (const auto& c : comps_)
    if (c.lo < q && q < c.hi) return true;
  return false;
}

bool RationalOpen::subset_of(const RationalOpen& o) const {
  // Each component, being connected, must fit inside a single component.
  for (const auto& c : comps_) {
    bool inside = false;
    for (const auto& d : o.comps_)
      if (d.lo <= c.lo && c.hi <= d.hi) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

RationalOpen RationalOpen::meet(const RationalOpen& o) const {
  std::vector<RatInterval> out;
  for (const auto& c : comps_)
    for (const auto& d : o.comps_) {
      Rat lo = std::max(c.lo, d.lo), hi = std::min(c.hi, d.hi);
      if (lo < hi) out.push_back({lo, hi});
    }
  return of(std::move(out));
}

RationalOpen RationalOpen::join(const RationalOpen& o) const {
  std::vector<RatInterval> out = comps_;
  out.insert(out.end(), o.comps_.begin(), o.comps_.end());
  return of(std::move(out));
}

Rat RationalOpen::dist(const Rat& q) const {
  Rat best(-1);
  for (const auto& c : comps_) {
    Rat d;
    if (q <= c.lo)
      d = c.lo - q;
    else if (q >= c.hi)
      d = q - c.hi;
    else
      d = 0;
    if (best < 0 || d < best) best = d;
  }
  return best < 0 ? Rat(0) : best;  // empty set: callers guard; distance 0 by convention
}

bool RationalOpen::operator==(const RationalOpen& o) const {
  if (comps_.size() != o.comps_.size()) return false;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i].lo != o.comps_[i].lo || comps_[i].hi != o.comps_[i].hi) return false;
  return true;
}

std::string RationalOpen::str() const {
  if (comps_.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += " u ";
    s += "(" + rat_display(comps_[i].lo) + "," + rat_display(comps_[i].hi) + ")";
  }
  return s;
}

Rat grid_mesh(int j) { return pow2(-j); }
Rat grid_step(int j) { return pow2(-j - 2); }

RationalOpen grid_member(int j, const Int& idx) {
  Rat c = Rat(idx) * grid_step(j);
  Rat half = grid_mesh(j) / 2;
  return RationalOpen::interval(c - half, c + half);
}

RationalOpen grid_member_around(int j, const Rat& q) {
  Rat step = grid_step(j);
  Int lo = floor_multiple(q, step);
  Rat dlo = q - Rat(lo) * step, dhi = Rat(lo + 1) * step - q;
  return grid_member(j, dlo <= dhi ? lo : lo + 1);
}

bool grid_contains_pair(int j, const Rat& p, const Rat& q) {
  Rat half = grid_mesh(j) / 2, step = grid_step(j);
  Rat v = std::max(p, q) - half, w = std::min(p, q) + half;
  if (!(v < w)) return false;
  Int cmin = floor_multiple(v, step) + 1;
  return Rat(cmin) * step < w;
}

RationalOpen line_star(const RationalOpen& a, int j) {
  Rat eps = grid_mesh(j), half = eps / 2, step = grid_step(j);
  std::vector<RatInterval> out;
  for (const auto& c : a.components()) {
    // Members meeting (x,y) have centers strictly inside (x - eps/2, y + eps/2).
    Int cmin = floor_multiple(c.lo - half, step) + 1;
    Int cmax = ceil_multiple(c.hi + half, step) - 1;
    out.push_back({Rat(cmin) * step - half, Rat(cmax) * step + half});
  }
  return RationalOpen::of(std::move(out));
}

std::optional<int> line_uniformly_below(const RationalOpen& a, const RationalOpen& b, int depth) {
  if (a.empty()) return 0;
  for (int j = 0; j < depth; ++j)
    if (line_star(a, j).subset_of(b)) return j;
  return std::nullopt;
}

Report check_grid_star_witness(int maxj) {
  Report r;
  for (int j = 0; j <= maxj; ++j) {
    // A member of U_{j+2} centered at c stars out to (c - 3e'/2, c + 3e'/2)
    // with e' = 2^-(j+2); the nearest U_j grid point c' is at most half a
    // U_j step away. Containment in the member at c' needs
    // |c - c'| + 3e'/2 <= 2^-j / 2, exactly.
    Rat worst_offset = grid_step(j) / 2;
    Rat star_half = Rat(3) * grid_mesh(j + 2) / 2;
    bool ok = worst_offset + star_half <= grid_mesh(j) / 2;

    // Spot-check with the actual star computation at the worst offset: the
    // U_{j+2} center at index 2 sits exactly between the U_j grid points
    // 0 and 1, and its star must fit inside a single U_j member.
    RationalOpen st = line_star(grid_member(j + 2, Int(2)), j + 2);
    bool spot = st.subset_of(grid_member(j, Int(0))) || st.subset_of(grid_member(j, Int(1)));
    r.add("star-witness[j=" + std::to_string(j) + "]", ok && spot,
          ok ? "" : "worst-case offset exceeds the mesh");
  }
  return r;
}

}  // namespace pfc
