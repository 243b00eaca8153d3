// Exact finite frames (finite distributive lattices) and lattice maps.
#ifndef PFC_FRAME_HPP
#define PFC_FRAME_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfc/bits.hpp"
#include "pfc/report.hpp"

namespace pfc {

// A finite lattice candidate stored by its order relation. Element ids are
// opaque strings; meet/join tables are derived once by finalize() and cached.
// A raw (unfinalized) frame supports only leq queries, so that
// check_frame_axioms can examine defective inputs.
class FiniteFrame {
 public:
  FiniteFrame() = default;

  // Relation taken exactly as given.
  static FiniteFrame from_relation(std::vector<std::string> names,
                                   const std::vector<std::pair<int, int>>& leq_pairs);
  // Reflexive-transitive closure of the given pairs.
  static FiniteFrame from_generating_pairs(std::vector<std::string> names,
                                           const std::vector<std::pair<int, int>>& leq_pairs);
  // Powerset of a finite point set ("0", "{a}", ..., "1"); finalized.
  static FiniteFrame powerset(const std::vector<std::string>& points);
  // Chain 0 < c1 < ... < 1 with n elements; finalized.
  static FiniteFrame chain(int n);
  // Downset lattice of a poset given by strict pairs on {0..n-1}; finalized.
  static FiniteFrame downsets(int n, const std::vector<std::pair<int, int>>& strict_pairs);

  int size() const { return int(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  bool leq(int a, int b) const { return up_[a].get(b); }
  const Bits& upset(int a) const { return up_[a]; }
  const Bits& downset(int a) const { return down_[a]; }

  bool finalized() const { return finalized_; }
  // Derives tables; throws Error (or MalformedOrder) unless the axioms hold.
  void finalize();

  int meet(int a, int b) const { return meet_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }
  int top() const { return top_; }
  int bottom() const { return bottom_; }

  int join_all(const Bits& s) const;
  int meet_all(const Bits& s) const;
  int join_all(const std::vector<int>& v) const;
  int meet_all(const std::vector<int>& v) const;

  // Atoms (covers of bottom); only meaningful once finalized.
  std::vector<int> atoms() const;
  // Join-irreducible elements (nonzero, not a join of strictly smaller ones).
  std::vector<int> join_irreducibles() const;

 private:
  std::vector<std::string> names_;
  std::vector<Bits> up_;    // row a: {b : a <= b}
  std::vector<Bits> down_;  // row a: {b : b <= a}
  std::vector<std::vector<int>> meet_, join_;
  int top_ = -1, bottom_ = -1;
  bool finalized_ = false;

  friend Report check_frame_axioms(const FiniteFrame&);
};

// Lists every violated axiom instance (antisymmetry, existence of binary
// meets/joins and top/bottom, distributivity) or certifies validity.
// Throws MalformedOrder if leq is not reflexive/transitive on the carrier.
Report check_frame_axioms(const FiniteFrame& f);

struct LatticeMap {
  const FiniteFrame* source = nullptr;
  const FiniteFrame* target = nullptr;
  std::vector<int> table;  // source element -> target element

  int operator()(int a) const { return table[a]; }
};

enum class MorphismKind { FrameHom, SupHom };

// Frame-hom: top, binary meets, and joins of subsets (exhaustive for small
// sources, binary + empty beyond, which is equivalent by folding).
// Sup-hom: joins only, including the empty join; top need not be preserved.
Report check_morphism(const LatticeMap& f, MorphismKind kind);

LatticeMap compose(const LatticeMap& g, const LatticeMap& f);  // g after f

}  // namespace pfc

#endif
