#include "pfc/coverage.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace pfc {

namespace {

// Elements of the free bounded distributive lattice on n generators are the
// upward-closed families of subsets of {0..n-1}: an element x is encoded by
// the set {T : /\T <= x}, meets are intersections, joins are unions.
struct FreeLattice {
  int n;                   // generators
  int nsub;                // 2^n subsets
  std::uint64_t full;      // all subsets

  explicit FreeLattice(int gens) : n(gens), nsub(1 << gens), full(nsub == 64 ? ~0ull : (1ull << nsub) - 1) {}

  std::uint64_t gen(int g) const {
    std::uint64_t f = 0;
    for (int t = 0; t < nsub; ++t)
      if (t >> g & 1) f |= 1ull << t;
    return f;
  }

  static bool leq(std::uint64_t a, std::uint64_t b) { return (a & ~b) == 0; }

  // Heyting implication r => t: the largest family z with r /\ z <= t.
  std::uint64_t imp(std::uint64_t r, std::uint64_t t) const {
    std::uint64_t out = 0;
    for (int T = 0; T < nsub; ++T) {
      bool ok = true;
      int rest = ~T & (nsub - 1);
      for (int s = rest;; s = (s - 1) & rest) {
        int Tp = T | s;
        if ((r >> Tp & 1) && !(t >> Tp & 1)) {
          ok = false;
          break;
        }
        if (s == 0) break;
      }
      if (ok) out |= 1ull << T;
    }
    return out;
  }

  // The whole lattice, as the closure of {0, 1, generators} under binary
  // meets and joins.
  std::vector<std::uint64_t> carrier() const {
    std::vector<std::uint64_t> elems{0, full};
    std::unordered_set<std::uint64_t> seen(elems.begin(), elems.end());
    for (int g = 0; g < n; ++g)
      if (seen.insert(gen(g)).second) elems.push_back(gen(g));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (std::uint64_t c : {elems[i] & elems[j], elems[i] | elems[j]})
          if (seen.insert(c).second) elems.push_back(c);
    std::sort(elems.begin(), elems.end());
    return elems;
  }
};

}  // namespace

Report coverage_iso_check(const Site& site, const Budgets& budgets) {
  Report r;
  const int n = site.size();
  if (n > budgets.max_free_gens)
    throw SizeBudgetExceeded("coverage check limited to sites with <= " +
                             std::to_string(budgets.max_free_gens) + " elements");

  // Refinement-stability hypothesis: whenever (a <= \/A) is a rule and
  // b <= a, some rule (b <= \/B) refines A from inside the downset of b.
  bool hyp = true;
  for (const auto& rule : site.rules()) {
    for (int b = 0; b < n && hyp; ++b) {
      if (!site.leq(b, rule.head)) continue;
      bool found = false;
      for (const auto& cand : site.rules()) {
        if (cand.head != b) continue;
        bool refs = true;
        for (int x : cand.body) {
          bool below = false;
          for (int y : rule.body)
            if (site.leq(x, y)) {
              below = true;
              break;
            }
          if (!below) {
            refs = false;
            break;
          }
        }
        if (refs) {
          found = true;
          break;
        }
      }
      if (!found) {
        r.add("hypothesis", false,
              "no refined rule at " + site.name(b) + " for rule " +
                  (rule.label.empty() ? site.name(rule.head) : rule.label));
        hyp = false;
      }
    }
    if (!hyp) break;
  }
  if (hyp) r.add("hypothesis", true);
  if (!hyp) return r;

  // Frame side: free lattice quotiented by the preorder, the meet-structure
  // relations and the covering rules.
  FreeLattice fl(n);
  std::vector<std::uint64_t> gen(n);
  for (int g = 0; g < n; ++g) gen[g] = fl.gen(g);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> rels;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && site.leq(a, b)) rels.push_back({gen[a], gen[b]});
  std::uint64_t all_join = 0;
  for (int g = 0; g < n; ++g) all_join |= gen[g];
  rels.push_back({fl.full, all_join});  // 1 <= \/G
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      std::uint64_t rhs = 0;
      for (int c = 0; c < n; ++c)
        if (site.leq(c, a) && site.leq(c, b)) rhs |= gen[c];
      rels.push_back({gen[a] & gen[b], rhs});
    }
  for (const auto& rule : site.rules()) {
    std::uint64_t rhs = 0;
    for (int x : rule.body) rhs |= gen[x];
    rels.push_back({gen[rule.head], rhs});
  }

  std::vector<std::uint64_t> carrier = fl.carrier();
  std::vector<std::uint64_t> fixed;  // the quotient frame
  for (std::uint64_t t : carrier) {
    bool ok = true;
    for (const auto& [l, rr] : rels)
      if (!FreeLattice::leq(l & fl.imp(rr, t), t)) {
        ok = false;
        break;
      }
    if (ok) fixed.push_back(t);
  }
  auto saturate = [&](std::uint64_t x) {
    std::uint64_t acc = fl.full;
    for (std::uint64_t t : fixed)
      if (FreeLattice::leq(x, t)) acc &= t;
    return acc;
  };

  // Suplattice side: rule-closed downsets.
  IdealEngine eng(site, /*saturate=*/false, budgets);
  std::vector<Bits> downs = eng.all_ideals();

  r.add("frame-side-size", true, std::to_string(fixed.size()) + " elements");
  r.add("sup-side-size", true, std::to_string(downs.size()) + " elements");

  if (fixed.size() != downs.size()) {
    r.add("order-isomorphism", false,
          "frame side has " + std::to_string(fixed.size()) + " elements, suplattice side " +
              std::to_string(downs.size()));
    return r;
  }

  // phi(D) = saturation of the join of the generators in D.
  std::vector<std::uint64_t> image(downs.size());
  for (std::size_t i = 0; i < downs.size(); ++i) {
    std::uint64_t x = 0;
    downs[i].for_each([&](int g) { x |= gen[g]; });
    image[i] = saturate(x);
  }

  bool iso = true;
  for (std::size_t i = 0; i < downs.size() && iso; ++i)
    for (std::size_t j = 0; j < downs.size(); ++j) {
      bool dle = downs[i].subset_of(downs[j]);
      bool fle = FreeLattice::leq(image[i], image[j]);
      if (dle != fle) {
        r.add("order-isomorphism", false,
              "downsets " + std::to_string(i) + "," + std::to_string(j) +
                  (dle ? " ordered" : " unordered") + " but images " + (fle ? "ordered" : "unordered"));
        iso = false;
        break;
      }
    }
  if (iso) {
    // Order-embedding between equal finite cardinalities onto the fixed set:
    // check the image covers the frame side.
    std::unordered_set<std::uint64_t> got(image.begin(), image.end());
    for (std::uint64_t t : fixed)
      if (!got.count(t)) {
        r.add("order-isomorphism", false, "frame-side element not in the image");
        iso = false;
        break;
      }
  }
  if (iso) r.add("order-isomorphism", true);

  bool gens_ok = true;
  for (int g = 0; g < n && gens_ok; ++g) {
    Bits pg = eng.principal(g);
    int idx = -1;
    for (std::size_t i = 0; i < downs.size(); ++i)
      if (downs[i] == pg) {
        idx = int(i);
        break;
      }
    if (idx < 0 || image[idx] != saturate(gen[g])) {
      r.add("generator-correspondence", false, "generator " + site.name(g));
      gens_ok = false;
    }
  }
  if (gens_ok) r.add("generator-correspondence", true);
  return r;
}

}  // namespace pfc
