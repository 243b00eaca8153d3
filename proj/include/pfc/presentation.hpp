// Geometric expressions and frame presentations by generators and relations.
#ifndef PFC_PRESENTATION_HPP
#define PFC_PRESENTATION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pfc/report.hpp"

namespace pfc {

using GenId = int;

// A join of finitely many meets of generators. The empty meet is TOP, the
// empty join BOTTOM. Terms and their generator lists are kept sorted.
struct Expr {
  std::vector<std::vector<GenId>> terms;

  static Expr bottom() { return {}; }
  static Expr top() { return Expr{{{}}}; }
  static Expr gen(GenId g) { return Expr{{{g}}}; }
  static Expr meet(std::vector<GenId> gens);
  static Expr join_of_gens(const std::vector<GenId>& gens);
  static Expr join_of_meets(std::vector<std::vector<GenId>> meets);

  bool is_bottom() const { return terms.empty(); }
  bool is_single_meet() const { return terms.size() == 1; }
  void normalize();
  std::string str(const std::vector<std::string>& gen_names) const;
};

enum class RelKind { Eq, Leq };

struct Relation {
  RelKind kind = RelKind::Leq;
  Expr lhs, rhs;
  std::string label;
};

// An N-indexed family of relations; instances at horizon K use all natural
// parameters < K.
struct RelationSchema {
  std::string name;
  std::function<std::vector<Relation>(int K)> instantiate;
};

struct Presentation {
  std::vector<std::string> gens;
  std::vector<std::pair<GenId, GenId>> gen_preorder;  // pairs g <= h
  std::vector<Relation> relations;
  std::vector<RelationSchema> schemas;

  GenId add_gen(std::string name) {
    gens.push_back(std::move(name));
    return GenId(gens.size() - 1);
  }
  std::optional<GenId> gen_index(const std::string& name) const;

  // Relations plus schema instances; throws HorizonRequired when schemas
  // exist and no horizon is given.
  std::vector<Relation> all_relations(std::optional<int> horizon) const;
};

}  // namespace pfc

#endif
