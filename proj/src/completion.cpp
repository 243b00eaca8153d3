#include "pfc/completion.hpp"

#include <algorithm>
#include <set>

namespace pfc {

CompletionPresentation completion_presentation(const FiniteFrame& f, const UniformityBase& base) {
  CompletionPresentation out;
  Presentation& p = out.pres;
  out.gen_of_elem.resize(f.size());
  for (int a = 0; a < f.size(); ++a)
    out.gen_of_elem[a] = p.add_gen("[" + f.name(a) + " in F]");
  const auto& g = out.gen_of_elem;

  p.relations.push_back({RelKind::Eq, Expr::gen(g[f.top()]), Expr::top(), "(i)"});
  for (int a = 0; a < f.size(); ++a)
    for (int b = a + 1; b < f.size(); ++b)
      p.relations.push_back({RelKind::Eq, Expr::meet({g[a], g[b]}), Expr::gen(g[f.meet(a, b)]),
                             "(ii) " + f.name(a) + "," + f.name(b)});
  p.relations.push_back({RelKind::Leq, Expr::gen(g[f.bottom()]), Expr::bottom(), "(iii)"});
  for (std::size_t j = 0; j < base.covers.size(); ++j) {
    std::vector<GenId> members;
    for (int u : base.covers[j].members) members.push_back(g[u]);
    p.relations.push_back(
        {RelKind::Leq, Expr::top(), Expr::join_of_gens(members), "(iv) U" + std::to_string(j)});
  }
  for (int a = 0; a < f.size(); ++a) {
    std::vector<GenId> below;
    for (int b = 0; b < f.size(); ++b)
      if (uniformly_below(f, b, a, base)) below.push_back(g[b]);
    p.relations.push_back(
        {RelKind::Leq, Expr::gen(g[a]), Expr::join_of_gens(below), "(v) " + f.name(a)});
  }
  return out;
}

CompletionFrame completion_frame(const FiniteFrame& f, const UniformityBase& base,
                                 const Budgets& budgets) {
  CompletionPresentation cp = completion_presentation(f, base);
  CompletionFrame out;
  out.site = build_site(cp.pres, std::nullopt, budgets);
  IdealEngine eng(out.site, /*saturate=*/true, budgets);
  out.ideals = eng.all_ideals();

  std::vector<std::string> names;
  for (const auto& I : out.ideals) {
    std::vector<int> members = I.to_vector(), maximal;
    for (int x : members) {
      bool mx = true;
      for (int y : members)
        if (y != x && out.site.leq(x, y)) {
          mx = false;
          break;
        }
      if (mx) maximal.push_back(x);
    }
    std::string s = "<";
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      if (i) s += ", ";
      s += out.site.name(maximal[i]);
    }
    names.push_back(s + ">");
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < out.ideals.size(); ++i)
    for (std::size_t j = 0; j < out.ideals.size(); ++j)
      if (out.ideals[i].subset_of(out.ideals[j])) pairs.emplace_back(int(i), int(j));
  out.frame = FiniteFrame::from_relation(std::move(names), pairs);
  out.frame.finalize();

  out.gen_embed.resize(f.size());
  for (int a = 0; a < f.size(); ++a) {
    Bits p = eng.principal(out.site.elem_of_gens({cp.gen_of_elem[a]}));
    int id = -1;
    for (std::size_t i = 0; i < out.ideals.size(); ++i)
      if (out.ideals[i] == p) {
        id = int(i);
        break;
      }
    out.gen_embed[a] = id;
  }

  for (std::size_t j = 0; j < base.covers.size(); ++j) {
    Cover c;
    for (int u : base.covers[j].members) c.members.push_back(out.gen_embed[u]);
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    out.inherited.covers.push_back(std::move(c));
  }
  out.inherited.star_witness = base.star_witness;
  return out;
}

LatticeMap completion_unit_hom(const FiniteFrame& f, const UniformityBase& base,
                               const CompletionFrame& comp) {
  // gamma*([a in F]) = \/ {b : b uniformly below a}; on ideals, join over
  // members of the meets of the generator images.
  std::vector<int> gen_value(f.size());
  for (int a = 0; a < f.size(); ++a) {
    int acc = f.bottom();
    for (int b = 0; b < f.size(); ++b)
      if (uniformly_below(f, b, a, base)) acc = f.join(acc, b);
    gen_value[a] = acc;
  }
  LatticeMap gamma;
  gamma.source = &comp.frame;
  gamma.target = &f;
  gamma.table.resize(comp.frame.size());
  for (std::size_t i = 0; i < comp.ideals.size(); ++i) {
    int acc = f.bottom();
    comp.ideals[i].for_each([&](int s) {
      int m = f.top();
      comp.site.genset(s).for_each([&](int g) { m = f.meet(m, gen_value[g]); });
      acc = f.join(acc, m);
    });
    gamma.table[i] = acc;
  }
  return gamma;
}

Report check_completion_unit(const FiniteFrame& f, const UniformityBase& base,
                             const CompletionFrame& comp) {
  Report r;

  // The generator assignment satisfies the completion relations.
  CompletionPresentation cp = completion_presentation(f, base);
  std::vector<int> assign(f.size());
  for (int a = 0; a < f.size(); ++a) {
    int acc = f.bottom();
    for (int b = 0; b < f.size(); ++b)
      if (uniformly_below(f, b, a, base)) acc = f.join(acc, b);
    assign[cp.gen_of_elem[a]] = acc;
  }
  InducedHom h = induced_hom(cp.pres, assign, f);
  r.add("unit-relations", h.valid(), h.valid() ? "" : *h.violation);

  LatticeMap gamma = completion_unit_hom(f, base, comp);
  r.add("unit-frame-hom", check_morphism(gamma, MorphismKind::FrameHom).ok());

  bool dense = true;
  for (int c = 0; c < comp.frame.size(); ++c)
    if (gamma.table[c] == f.bottom() && c != comp.frame.bottom()) dense = false;
  r.add("dense", dense);

  auto iv = validate_uniformity(comp.frame, comp.inherited);
  r.add("inherited-base", iv.validity.ok(),
        iv.validity.ok() ? "" : iv.validity.first_failure()->note);
  r.add("completion-uniform", iv.uniform);

  bool covers_top = true;
  for (const auto& c : comp.inherited.covers)
    if (comp.frame.join_all(c.members) != comp.frame.top()) covers_top = false;
  r.add("image-covers-join-to-top", covers_top);

  // Uniform reflection along the unit: the image of gamma* must equal the
  // subframe fixed under the base pulled back through gamma.
  UniformityBase initial;
  for (std::size_t j = 0; j < base.covers.size(); ++j) {
    Cover c;
    for (int u : base.covers[j].members) c.members.push_back(gamma.table[comp.gen_embed[u]]);
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    initial.covers.push_back(std::move(c));
  }
  initial.star_witness = base.star_witness;
  std::set<int> image(gamma.table.begin(), gamma.table.end());
  std::set<int> fixed;
  for (int u = 0; u < f.size(); ++u) {
    int acc = f.bottom();
    for (int b = 0; b < f.size(); ++b)
      if (uniformly_below(f, b, u, initial)) acc = f.join(acc, b);
    if (acc == u) fixed.insert(u);
  }
  r.add("image-is-initial-reflection", image == fixed);

  // In the uniform case gamma* is a bijection onto the uniform reflection of
  // (f, base), i.e. onto the whole frame.
  if (validate_uniformity(f, base).uniform) {
    std::set<int> distinct(gamma.table.begin(), gamma.table.end());
    bool inj = int(distinct.size()) == comp.frame.size();
    Subframe refl = uniform_reflection(f, base);
    std::set<int> rset(refl.parent_elem.begin(), refl.parent_elem.end());
    r.add("unit-bijective-onto-reflection", inj && image == rset);
  }
  return r;
}

}  // namespace pfc
