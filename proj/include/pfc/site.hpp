// Sites (meet-semilattices with covering rules), the C-ideal engine that
// computes presented frames exactly, and induced homomorphisms.
#ifndef PFC_SITE_HPP
#define PFC_SITE_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfc/bits.hpp"
#include "pfc/frame.hpp"
#include "pfc/presentation.hpp"
#include "pfc/report.hpp"

namespace pfc {

// A finite meet-semilattice with covering rules. Rule bodies are kept below
// their head (a relation a <= \/A is installed as a covered by {x /\ a}).
// Elements are canonical closed generator sets; for hand-made semilattices
// the elements act as their own generators via upsets.
class Site {
 public:
  struct Rule {
    int head;
    std::vector<int> body;
    std::string label;
  };

  int size() const { return int(gensets_.size()); }
  int num_gens() const { return num_gens_; }
  const std::string& gen_name(int g) const { return gen_names_[g]; }

  bool leq(int a, int b) const { return gensets_[b].subset_of(gensets_[a]); }
  int top() const { return top_; }
  int meet(int a, int b) const;
  int meet_with_gen(int elem, int g) const { return meet_gen_[elem][g]; }
  const Bits& genset(int e) const { return gensets_[e]; }
  std::optional<int> elem_by_genset(const Bits& closed) const;
  // Meet of the listed generators (top for an empty list).
  int elem_of_gens(const std::vector<GenId>& gens) const;

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<std::vector<int>>& hasse_down() const { return hasse_down_; }

  // Deterministic display name (minimal generating meet).
  const std::string& name(int e) const;

  static Site from_meet_table(std::vector<std::string> names,
                              const std::vector<std::vector<int>>& meet_table,
                              std::vector<Rule> rules);

 private:
  int num_gens_ = 0;
  std::vector<std::string> gen_names_;
  std::vector<Bits> gensets_;                // element -> closed generator set
  std::vector<std::vector<int>> meet_gen_;   // element x generator -> element
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> hasse_down_;  // immediate predecessors
  int top_ = -1;
  std::unordered_map<Bits, int, BitsHash> index_;
  mutable std::vector<std::string> names_;

  void compute_hasse();

  friend Site build_site(const Presentation&, std::optional<int>, const Budgets&);
};

// Builds the meet-semilattice generated by the presentation's generators
// modulo its meet-structure relations, and installs the remaining relations
// (single meet <= join of meets) as covering rules. Throws NotSiteForm when
// a relation fits neither shape; callers pre-normalize.
Site build_site(const Presentation& p, std::optional<int> horizon = std::nullopt,
                const Budgets& budgets = {});

// Solver for C-ideals of a site: closures, joins and meets of individual
// ideals without enumerating the whole frame, plus full enumeration.
// With saturate=true the covering rules are localized below their heads
// (meet-stability), which is what makes the C-ideals compute the presented
// frame; with saturate=false the rules apply verbatim, which computes the
// suplattice presented by the preordered elements and the rules alone.
class IdealEngine {
 public:
  using Ideal = Bits;

  IdealEngine(const Site& site, bool saturate, const Budgets& budgets = {});

  const Site& site() const { return *site_; }
  const Ideal& bottom_ideal() const { return b0_; }
  Ideal top_ideal() const;
  Ideal closure(const std::vector<int>& seeds) const;
  Ideal closure_of(const Bits& seeds) const;
  Ideal principal(int e) const { return closure({e}); }
  Ideal join(const std::vector<Ideal>& parts) const;
  static Ideal meet(const Ideal& a, const Ideal& b) { return a & b; }
  static bool leq(const Ideal& a, const Ideal& b) { return a.subset_of(b); }

  // All C-ideals in lectic order; throws SizeBudgetExceeded past the budget.
  std::vector<Ideal> all_ideals() const;

 private:
  const Site* site_;
  Budgets budgets_;
  std::vector<int> inst_head_;
  std::vector<int> inst_body_off_;
  std::vector<int> inst_body_;
  std::vector<int> adj_off_, adj_inst_;
  Bits b0_;
  mutable std::vector<int> cnt_;
  mutable std::vector<unsigned> stamp_;
  mutable unsigned epoch_ = 0;

  void run(Bits& ideal, std::vector<int>& queue) const;
};

struct CIdealFrame {
  FiniteFrame frame;
  std::vector<int> embed;  // site element -> frame element (its principal C-ideal)
};

// Enumerates all C-ideals (saturated rules) as an exact finite frame.
CIdealFrame c_ideal_frame(const Site& site, const Budgets& budgets = {});

struct SupLattice {
  FiniteFrame lattice;  // raw carrier: order only; need not be distributive
  std::vector<int> embed;
};

// The suplattice presented by a preordered generator set and covering rules
// alone: downsets of the preorder closed under the rules, no saturation.
SupLattice suplattice_of_preorder(std::vector<std::string> names,
                                  const std::vector<std::pair<int, int>>& leq_pairs,
                                  const std::vector<Site::Rule>& rules,
                                  const Budgets& budgets = {});

// Same, with the site's elements as the preordered generators.
SupLattice suplattice_of_site(const Site& site, const Budgets& budgets = {});

// Result of evaluating a presentation's relations under a generator
// assignment into a finite frame. The presented frame sits behind a stable
// allocation so that the lattice map's pointers survive moves.
struct InducedHom {
  std::optional<std::string> violation;  // first violated relation, with sides
  std::vector<int> assign;
  const FiniteFrame* target = nullptr;
  std::shared_ptr<CIdealFrame> presented;  // when materialized
  std::optional<LatticeMap> map;           // presented frame -> target

  bool valid() const { return !violation.has_value(); }
  int eval(const Expr& e) const;
};

InducedHom induced_hom(const Presentation& p, const std::vector<int>& assign,
                       const FiniteFrame& target, std::optional<int> horizon = std::nullopt,
                       bool materialize = false, const Budgets& budgets = {});

}  // namespace pfc

#endif
