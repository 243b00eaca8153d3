#include "pfc/frame.hpp"

#include <algorithm>

namespace pfc {

namespace {

std::string subset_name(const std::vector<std::string>& points, unsigned mask) {
  if (mask == 0) return "0";
  if (mask + 1 == (1u << points.size())) return "1";
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    if (!first) s += ",";
    s += points[i];
    first = false;
  }
  return s + "}";
}

}  // namespace

FiniteFrame FiniteFrame::from_relation(std::vector<std::string> names,
                                       const std::vector<std::pair<int, int>>& leq_pairs) {
  FiniteFrame f;
  int n = int(names.size());
  f.names_ = std::move(names);
  f.up_.assign(n, Bits(n));
  f.down_.assign(n, Bits(n));
  for (auto [a, b] : leq_pairs) {
    f.up_[a].set(b);
    f.down_[b].set(a);
  }
  return f;
}

FiniteFrame FiniteFrame::from_generating_pairs(std::vector<std::string> names,
                                               const std::vector<std::pair<int, int>>& leq_pairs) {
  int n = int(names.size());
  std::vector<Bits> up(n, Bits(n));
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (auto [a, b] : leq_pairs) up[a].set(b);
  bool changed = true;  // transitive closure
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && up[a].get(b)) {
          Bits merged = up[a] | up[b];
          if (merged != up[a]) {
            up[a] = std::move(merged);
            changed = true;
          }
        }
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    up[a].for_each([&](int b) { pairs.emplace_back(a, b); });
  return from_relation(std::move(names), pairs);
}

FiniteFrame FiniteFrame::powerset(const std::vector<std::string>& points) {
  unsigned n = 1u << points.size();
  std::vector<std::string> names(n);
  std::vector<std::pair<int, int>> pairs;
  for (unsigned a = 0; a < n; ++a) {
    names[a] = subset_name(points, a);
    for (unsigned b = 0; b < n; ++b)
      if ((a & b) == a) pairs.emplace_back(int(a), int(b));
  }
  FiniteFrame f = from_relation(std::move(names), pairs);
  f.finalize();
  return f;
}

FiniteFrame FiniteFrame::chain(int n) {
  std::vector<std::string> names(n);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    names[a] = a == 0 ? "0" : (a == n - 1 ? "1" : "c" + std::to_string(a));
    for (int b = a; b < n; ++b) pairs.emplace_back(a, b);
  }
  if (n == 1) names[0] = "1";
  FiniteFrame f = from_relation(std::move(names), pairs);
  f.finalize();
  return f;
}

FiniteFrame FiniteFrame::downsets(int n, const std::vector<std::pair<int, int>>& strict_pairs) {
  // Downsets of the poset on {0..n-1}, ordered by inclusion.
  std::vector<unsigned> below(n, 0);
  for (auto [a, b] : strict_pairs) below[b] |= 1u << a;  // a < b
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a)
        if (below[b] >> a & 1) {
          unsigned m = below[b] | below[a];
          if (m != below[b]) below[b] = m, changed = true;
        }
  }
  std::vector<unsigned> downsets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (int b = 0; b < n && closed; ++b)
      if (mask >> b & 1)
        if ((below[b] & mask) != below[b]) closed = false;
    if (closed) downsets.push_back(mask);
  }
  std::vector<std::string> pts(n);
  for (int i = 0; i < n; ++i) pts[i] = "p" + std::to_string(i);
  std::vector<std::string> names;
  names.reserve(downsets.size());
  for (unsigned m : downsets) names.push_back(subset_name(pts, m));
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t a = 0; a < downsets.size(); ++a)
    for (std::size_t b = 0; b < downsets.size(); ++b)
      if ((downsets[a] & downsets[b]) == downsets[a]) pairs.emplace_back(int(a), int(b));
  FiniteFrame f = from_relation(std::move(names), pairs);
  f.finalize();
  return f;
}

std::optional<int> FiniteFrame::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Report check_frame_axioms(const FiniteFrame& f) {
  const int n = f.size();
  Report r;
  if (n == 0) throw MalformedOrder("empty carrier");
  for (int a = 0; a < n; ++a)
    if (!f.leq(a, a)) throw MalformedOrder("leq not reflexive at " + f.name(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f.leq(a, b) && !f.up_[b].subset_of(f.up_[a]))
        throw MalformedOrder("leq not transitive through " + f.name(a) + " <= " + f.name(b));

  bool anti_ok = true;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (f.leq(a, b) && f.leq(b, a)) {
        r.add("antisymmetry", false, f.name(a) + " and " + f.name(b) + " are order-equivalent");
        anti_ok = false;
      }
  if (anti_ok) r.add("antisymmetry", true);
  if (!anti_ok) return r;

  // Binary meets/joins must exist (with top and bottom this gives all
  // finite meets and joins by folding).
  std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1)), join(n, std::vector<int>(n, -1));
  bool lattice_ok = true;
  for (int a = 0; a < n && lattice_ok; ++a)
    for (int b = a; b < n; ++b) {
      Bits ub = f.up_[a] & f.up_[b];
      int lub = -1;
      ub.for_each([&](int c) {
        if (lub == -1 || f.leq(c, lub)) lub = c;
      });
      bool least = lub != -1;
      if (least)
        ub.for_each([&](int c) {
          if (!f.leq(lub, c)) least = false;
        });
      if (!least) {
        r.add("join-exists", false, "no least upper bound of {" + f.name(a) + "," + f.name(b) + "}");
        lattice_ok = false;
        break;
      }
      join[a][b] = join[b][a] = lub;

      Bits lb = f.down_[a] & f.down_[b];
      int glb = -1;
      lb.for_each([&](int c) {
        if (glb == -1 || f.leq(glb, c)) glb = c;
      });
      bool greatest = glb != -1;
      if (greatest)
        lb.for_each([&](int c) {
          if (!f.leq(c, glb)) greatest = false;
        });
      if (!greatest) {
        r.add("meet-exists", false, "no greatest lower bound of {" + f.name(a) + "," + f.name(b) + "}");
        lattice_ok = false;
        break;
      }
      meet[a][b] = meet[b][a] = glb;
    }
  if (!lattice_ok) return r;
  r.add("join-exists", true);
  r.add("meet-exists", true);

  int top = 0, bottom = 0;
  for (int a = 0; a < n; ++a) {
    top = join[top][a];
    bottom = meet[bottom][a];
  }
  r.add("bounded", true, "top=" + f.name(top) + " bottom=" + f.name(bottom));

  // Distributivity. Binary suffices for the general law over finite joins;
  // witness reported as (a, {b,c}).
  bool dist_ok = true;
  for (int a = 0; a < n && dist_ok; ++a)
    for (int b = 0; b < n && dist_ok; ++b)
      for (int c = b + 1; c < n; ++c) {
        int lhs = meet[a][join[b][c]];
        int rhs = join[meet[a][b]][meet[a][c]];
        if (lhs != rhs) {
          r.add("distributivity", false,
                "a=" + f.name(a) + " B={" + f.name(b) + "," + f.name(c) + "}: a /\\ \\/B = " +
                    f.name(lhs) + " but \\/{a /\\ b} = " + f.name(rhs));
          dist_ok = false;
          break;
        }
      }
  if (dist_ok) r.add("distributivity", true);

  // For small carriers also check the subset form of the law directly.
  if (dist_ok && n <= 10) {
    bool full_ok = true;
    for (int a = 0; a < n && full_ok; ++a)
      for (unsigned mask = 0; mask < (1u << n) && full_ok; ++mask) {
        int bigjoin = bottom, rhs = bottom;
        for (int b = 0; b < n; ++b)
          if (mask >> b & 1) {
            bigjoin = join[bigjoin][b];
            rhs = join[rhs][meet[a][b]];
          }
        if (meet[a][bigjoin] != rhs) {
          r.add("distributivity-subsets", false, "a=" + f.name(a) + " subset mask=" + std::to_string(mask));
          full_ok = false;
        }
      }
    if (full_ok) r.add("distributivity-subsets", true);
  }
  return r;
}

void FiniteFrame::finalize() {
  if (finalized_) return;
  Report r = check_frame_axioms(*this);
  if (!r.ok()) throw Error("not a frame: " + r.summary());
  const int n = size();
  meet_.assign(n, std::vector<int>(n, -1));
  join_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Bits ub = up_[a] & up_[b];
      int lub = -1;
      ub.for_each([&](int c) {
        if (lub == -1 || leq(c, lub)) lub = c;
      });
      join_[a][b] = lub;
      Bits lb = down_[a] & down_[b];
      int glb = -1;
      lb.for_each([&](int c) {
        if (glb == -1 || leq(glb, c)) glb = c;
      });
      meet_[a][b] = glb;
    }
  top_ = 0;
  bottom_ = 0;
  for (int a = 0; a < n; ++a) {
    top_ = join_[top_][a];
    bottom_ = meet_[bottom_][a];
  }
  finalized_ = true;
}

int FiniteFrame::join_all(const Bits& s) const {
  int acc = bottom_;
  s.for_each([&](int a) { acc = join_[acc][a]; });
  return acc;
}

int FiniteFrame::meet_all(const Bits& s) const {
  int acc = top_;
  s.for_each([&](int a) { acc = meet_[acc][a]; });
  return acc;
}

int FiniteFrame::join_all(const std::vector<int>& v) const {
  int acc = bottom_;
  for (int a : v) acc = join_[acc][a];
  return acc;
}

int FiniteFrame::meet_all(const std::vector<int>& v) const {
  int acc = top_;
  for (int a : v) acc = meet_[acc][a];
  return acc;
}

std::vector<int> FiniteFrame::atoms() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (a == bottom_) continue;
    bool atom = true;
    down_[a].for_each([&](int b) {
      if (b != a && b != bottom_) atom = false;
    });
    if (atom) out.push_back(a);
  }
  return out;
}

std::vector<int> FiniteFrame::join_irreducibles() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (a == bottom_) continue;
    int below = bottom_;
    down_[a].for_each([&](int b) {
      if (b != a) below = join_[below][b];
    });
    if (below != a) out.push_back(a);
  }
  return out;
}

Report check_morphism(const LatticeMap& f, MorphismKind kind) {
  Report r;
  const FiniteFrame& S = *f.source;
  const FiniteFrame& T = *f.target;
  const int n = S.size();
  if (int(f.table.size()) != n) {
    r.add("total", false, "table size mismatch");
    return r;
  }
  for (int a = 0; a < n; ++a)
    if (f.table[a] < 0 || f.table[a] >= T.size()) {
      r.add("total", false, "image out of range at " + S.name(a));
      return r;
    }
  r.add("total", true);

  // Empty join.
  if (f(S.bottom()) != T.bottom())
    r.add("empty-join", false, "f(0) = " + T.name(f(S.bottom())));
  else
    r.add("empty-join", true);

  bool joins_ok = true;
  for (int a = 0; a < n && joins_ok; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (f(S.join(a, b)) != T.join(f(a), f(b))) {
        r.add("binary-joins", false,
              "f(" + S.name(a) + " \\/ " + S.name(b) + ") = " + T.name(f(S.join(a, b))) +
                  " != " + T.name(T.join(f(a), f(b))));
        joins_ok = false;
        break;
      }
    }
  if (joins_ok) r.add("binary-joins", true);

  // All subset joins where feasible; equivalent to binary + empty by folding.
  if (joins_ok && n <= 16) {
    bool subset_ok = true;
    for (unsigned mask = 0; mask < (1u << n) && subset_ok; ++mask) {
      int sj = S.bottom(), tj = T.bottom();
      for (int a = 0; a < n; ++a)
        if (mask >> a & 1) {
          sj = S.join(sj, a);
          tj = T.join(tj, f(a));
        }
      if (f(sj) != tj) {
        r.add("subset-joins", false, "mask=" + std::to_string(mask));
        subset_ok = false;
      }
    }
    if (subset_ok) r.add("subset-joins", true);
  }

  if (kind == MorphismKind::FrameHom) {
    if (f(S.top()) != T.top())
      r.add("top", false, "f(1) = " + T.name(f(S.top())));
    else
      r.add("top", true);
    bool meets_ok = true;
    for (int a = 0; a < n && meets_ok; ++a)
      for (int b = a; b < n; ++b) {
        if (f(S.meet(a, b)) != T.meet(f(a), f(b))) {
          r.add("binary-meets", false,
                "f(" + S.name(a) + " /\\ " + S.name(b) + ") = " + T.name(f(S.meet(a, b))) +
                    " != " + T.name(T.meet(f(a), f(b))));
          meets_ok = false;
          break;
        }
      }
    if (meets_ok) r.add("binary-meets", true);
  }
  return r;
}

LatticeMap compose(const LatticeMap& g, const LatticeMap& f) {
  LatticeMap h;
  h.source = f.source;
  h.target = g.target;
  h.table.resize(f.table.size());
  for (std::size_t a = 0; a < f.table.size(); ++a) h.table[a] = g.table[f.table[a]];
  return h;
}

}  // namespace pfc
