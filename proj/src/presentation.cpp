#include "pfc/presentation.hpp"

#include <algorithm>

namespace pfc {

Expr Expr::meet(std::vector<GenId> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Expr{{std::move(gens)}};
}

Expr Expr::join_of_gens(const std::vector<GenId>& gens) {
  Expr e;
  for (GenId g : gens) e.terms.push_back({g});
  e.normalize();
  return e;
}

Expr Expr::join_of_meets(std::vector<std::vector<GenId>> meets) {
  Expr e;
  e.terms = std::move(meets);
  e.normalize();
  return e;
}

void Expr::normalize() {
  for (auto& t : terms) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  std::sort(terms.begin(), terms.end());
  terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
}

std::string Expr::str(const std::vector<std::string>& gen_names) const {
  if (terms.empty()) return "BOT";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " \\/ ";
    if (terms[i].empty()) {
      s += "TOP";
      continue;
    }
    for (std::size_t k = 0; k < terms[i].size(); ++k) {
      if (k) s += " /\\ ";
      s += gen_names[terms[i][k]];
    }
  }
  return s;
}

std::optional<GenId> Presentation::gen_index(const std::string& name) const {
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == name) return GenId(i);
  return std::nullopt;
}

std::vector<Relation> Presentation::all_relations(std::optional<int> horizon) const {
  std::vector<Relation> out = relations;
  if (!schemas.empty()) {
    if (!horizon) throw HorizonRequired("presentation has relation schemas; supply a horizon");
    for (const auto& s : schemas) {
      auto inst = s.instantiate(*horizon);
      out.insert(out.end(), inst.begin(), inst.end());
    }
  }
  return out;
}

}  // namespace pfc
