#include "pfc/site.hpp"

#include <algorithm>
#include <deque>

namespace pfc {

namespace {

// Horn-implication closure over generator sets, used while discovering the
// semilattice elements of a presentation.
class GenClosure {
 public:
  GenClosure(int num_gens, const std::vector<std::pair<std::vector<GenId>, std::vector<GenId>>>& imps)
      : n_(num_gens), by_gen_(num_gens) {
    for (const auto& [body, add] : imps) {
      if (body.empty()) {
        for (GenId g : add) base_.push_back(g);
        continue;
      }
      bodies_.push_back(body);
      adds_.push_back(add);
      int id = int(bodies_.size()) - 1;
      for (GenId g : body) by_gen_[g].push_back(id);
    }
    cnt_.assign(bodies_.size(), 0);
    stamp_.assign(bodies_.size(), 0);
  }

  Bits close(Bits t) const {
    ++epoch_;
    for (GenId g : base_) t.set(g);
    std::vector<int> queue;
    t.for_each([&](int g) { queue.push_back(g); });
    while (!queue.empty()) {
      int g = queue.back();
      queue.pop_back();
      for (int id : by_gen_[g]) {
        if (stamp_[id] != epoch_) {
          stamp_[id] = epoch_;
          cnt_[id] = int(bodies_[id].size());
        }
        if (--cnt_[id] == 0)
          for (GenId h : adds_[id])
            if (!t.get(h)) {
              t.set(h);
              queue.push_back(h);
            }
      }
    }
    return t;
  }

 private:
  int n_;
  std::vector<GenId> base_;  // forced by empty-bodied implications
  std::vector<std::vector<GenId>> bodies_, adds_;
  std::vector<std::vector<int>> by_gen_;
  mutable std::vector<int> cnt_;
  mutable std::vector<unsigned> stamp_;
  mutable unsigned epoch_ = 0;
};

}  // namespace

int Site::meet(int a, int b) const {
  int cur = a;
  gensets_[b].for_each([&](int g) {
    if (!gensets_[cur].get(g)) cur = meet_gen_[cur][g];
  });
  return cur;
}

std::optional<int> Site::elem_by_genset(const Bits& closed) const {
  auto it = index_.find(closed);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Site::elem_of_gens(const std::vector<GenId>& gens) const {
  int cur = top_;
  for (GenId g : gens)
    if (!gensets_[cur].get(g)) cur = meet_gen_[cur][g];
  return cur;
}

const std::string& Site::name(int e) const {
  if (names_.empty()) names_.resize(size());
  if (!names_[e].empty()) return names_[e];
  if (e == top_) {
    names_[e] = "TOP";
    return names_[e];
  }
  // Greedy minimal generating subset, dropping later generators first.
  std::vector<int> keep = gensets_[e].to_vector();
  for (int i = int(keep.size()) - 1; i >= 0; --i) {
    std::vector<int> trial;
    for (int k = 0; k < int(keep.size()); ++k)
      if (k != i) trial.push_back(keep[k]);
    if (elem_of_gens(trial) == e) keep = std::move(trial);
  }
  std::string s;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (i) s += " /\\ ";
    s += gen_names_[keep[i]];
  }
  names_[e] = s.empty() ? "TOP" : s;
  return names_[e];
}

void Site::compute_hasse() {
  const int n = size();
  hasse_down_.assign(n, {});
  for (int s = 0; s < n; ++s) {
    // Every strict predecessor lies below some meet with a missing
    // generator, so the covers of s are the maximal such meets.
    std::vector<int> cand;
    for (int g = 0; g < num_gens_; ++g) {
      if (gensets_[s].get(g)) continue;
      int m = meet_gen_[s][g];
      if (m != s) cand.push_back(m);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (int c : cand) {
      bool maximal = true;
      for (int d : cand)
        if (d != c && leq(c, d)) {  // c < d <= s
          maximal = false;
          break;
        }
      if (maximal) hasse_down_[s].push_back(c);
    }
  }
}

Site Site::from_meet_table(std::vector<std::string> names,
                           const std::vector<std::vector<int>>& meet_table,
                           std::vector<Rule> rules) {
  Site s;
  const int n = int(names.size());
  s.num_gens_ = n;
  s.gen_names_ = names;
  s.names_ = std::move(names);
  s.gensets_.assign(n, Bits(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (meet_table[a][b] == a) s.gensets_[a].set(b);  // a <= b
  s.meet_gen_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) s.meet_gen_[a] = meet_table[a];
  s.top_ = -1;
  for (int a = 0; a < n; ++a) {
    bool is_top = true;
    for (int b = 0; b < n; ++b)
      if (meet_table[a][b] != b) is_top = false;
    if (is_top) s.top_ = a;
  }
  if (s.top_ < 0) throw NotSiteForm("meet table has no top element");
  for (int a = 0; a < n; ++a) s.index_.emplace(s.gensets_[a], a);
  s.rules_ = std::move(rules);
  for (auto& r : s.rules_)
    for (int b : r.body)
      if (!s.leq(b, r.head)) throw NotSiteForm("covering member above its head in rule " + r.label);
  s.compute_hasse();
  return s;
}

Site build_site(const Presentation& p, std::optional<int> horizon, const Budgets& budgets) {
  const int nG = int(p.gens.size());
  auto relations = p.all_relations(horizon);

  // Split relations into meet-structure implications and covering rules.
  std::vector<std::pair<std::vector<GenId>, std::vector<GenId>>> imps;
  struct PendingRule {
    std::vector<GenId> head;
    std::vector<std::vector<GenId>> body;
    std::string label;
  };
  std::vector<PendingRule> pending;

  for (auto [g, h] : p.gen_preorder) imps.push_back({{g}, {h}});

  auto add_leq = [&](const Expr& lhs, const Expr& rhs, const std::string& label) {
    if (lhs.is_bottom()) return;  // vacuous
    if (lhs.terms.size() > 1)
      throw NotSiteForm("join on the left of relation " + label);
    const std::vector<GenId>& head = lhs.terms[0];
    if (rhs.is_single_meet()) {
      imps.push_back({head, rhs.terms[0]});
      return;
    }
    pending.push_back({head, rhs.terms, label});
  };

  for (const auto& rel : relations) {
    Expr lhs = rel.lhs, rhs = rel.rhs;
    lhs.normalize();
    rhs.normalize();
    if (rel.kind == RelKind::Leq) {
      add_leq(lhs, rhs, rel.label);
    } else {
      // Eq splits into two inequalities; each must fit a site shape.
      add_leq(lhs, rhs, rel.label);
      add_leq(rhs, lhs, rel.label);
    }
  }

  GenClosure closer(nG, imps);

  Site s;
  s.num_gens_ = nG;
  s.gen_names_ = p.gens;

  auto intern = [&](const Bits& closed) -> int {
    auto it = s.index_.find(closed);
    if (it != s.index_.end()) return it->second;
    if (s.gensets_.size() >= budgets.max_site_elems)
      throw SizeBudgetExceeded("site exceeds " + std::to_string(budgets.max_site_elems) + " elements");
    int id = int(s.gensets_.size());
    s.gensets_.push_back(closed);
    s.meet_gen_.emplace_back();
    s.index_.emplace(closed, id);
    return id;
  };

  s.top_ = intern(closer.close(Bits(nG)));

  // Discover all elements as iterated generator meets.
  for (std::size_t e = 0; e < s.gensets_.size(); ++e) {
    s.meet_gen_[e].assign(nG, -1);
    for (int g = 0; g < nG; ++g) {
      if (s.gensets_[e].get(g)) {
        s.meet_gen_[e][g] = int(e);
        continue;
      }
      Bits t = s.gensets_[e];
      t.set(g);
      s.meet_gen_[e][g] = intern(closer.close(std::move(t)));
    }
  }

  for (const auto& pr : pending) {
    Site::Rule rule;
    rule.label = pr.label;
    rule.head = s.elem_of_gens(pr.head);
    for (const auto& term : pr.body) {
      std::vector<GenId> joint = pr.head;
      joint.insert(joint.end(), term.begin(), term.end());
      rule.body.push_back(s.elem_of_gens(joint));
    }
    std::sort(rule.body.begin(), rule.body.end());
    rule.body.erase(std::unique(rule.body.begin(), rule.body.end()), rule.body.end());
    s.rules_.push_back(std::move(rule));
  }

  s.compute_hasse();
  return s;
}

IdealEngine::IdealEngine(const Site& site, bool saturate, const Budgets& budgets)
    : site_(&site), budgets_(budgets) {
  const int n = site.size();

  // Localized rule instances. With saturation each rule (h, A) is installed
  // at every a <= h as (a, A /\ a); instances whose head sits in their own
  // body are vacuous for closure.
  std::vector<std::vector<int>> bodies;
  std::vector<int> heads;
  for (const auto& r : site.rules()) {
    if (saturate) {
      for (int a = 0; a < n; ++a) {
        if (!site.leq(a, r.head)) continue;
        std::vector<int> body;
        body.reserve(r.body.size());
        bool vacuous = false;
        for (int b : r.body) {
          int m = site.meet(b, a);
          if (m == a) {
            vacuous = true;
            break;
          }
          body.push_back(m);
        }
        if (vacuous) continue;
        std::sort(body.begin(), body.end());
        body.erase(std::unique(body.begin(), body.end()), body.end());
        heads.push_back(a);
        bodies.push_back(std::move(body));
      }
    } else {
      std::vector<int> body = r.body;
      std::sort(body.begin(), body.end());
      body.erase(std::unique(body.begin(), body.end()), body.end());
      bool vacuous = false;
      for (int b : body)
        if (b == r.head) vacuous = true;
      if (vacuous) continue;
      heads.push_back(r.head);
      bodies.push_back(std::move(body));
    }
  }

  // Bottom ideal: everything forced into every C-ideal, by plain fixpoint
  // over the instances together with downward closure.
  b0_ = Bits(n);
  auto down_close_into = [&](int x, Bits& ideal) {
    std::vector<int> stack{x};
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int z : site.hasse_down()[y])
        if (!ideal.get(z)) {
          ideal.set(z);
          stack.push_back(z);
        }
    }
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < heads.size(); ++i) {
      if (b0_.get(heads[i])) continue;
      bool all = true;
      for (int b : bodies[i])
        if (!b0_.get(b)) {
          all = false;
          break;
        }
      if (all) {
        b0_.set(heads[i]);
        down_close_into(heads[i], b0_);
        changed = true;
      }
    }
  }

  // Reduce instances relative to the bottom ideal.
  for (std::size_t i = 0; i < heads.size(); ++i) {
    if (b0_.get(heads[i])) continue;
    std::vector<int> body;
    for (int b : bodies[i])
      if (!b0_.get(b)) body.push_back(b);
    inst_head_.push_back(heads[i]);
    inst_body_off_.push_back(int(inst_body_.size()));
    inst_body_.insert(inst_body_.end(), body.begin(), body.end());
  }
  inst_body_off_.push_back(int(inst_body_.size()));

  // Adjacency: element -> instances mentioning it in the body.
  std::vector<int> deg(n, 0);
  for (int b : inst_body_) ++deg[b];
  adj_off_.assign(n + 1, 0);
  for (int e = 0; e < n; ++e) adj_off_[e + 1] = adj_off_[e] + deg[e];
  adj_inst_.assign(inst_body_.size(), 0);
  std::vector<int> fill = adj_off_;
  for (std::size_t i = 0; i + 1 < inst_body_off_.size(); ++i)
    for (int k = inst_body_off_[i]; k < inst_body_off_[i + 1]; ++k)
      adj_inst_[fill[inst_body_[k]]++] = int(i);

  cnt_.assign(inst_head_.size(), 0);
  stamp_.assign(inst_head_.size(), 0);
}

void IdealEngine::run(Bits& ideal, std::vector<int>& queue) const {
  ++epoch_;
  const auto& hasse = site_->hasse_down();
  while (!queue.empty()) {
    int x = queue.back();
    queue.pop_back();
    for (int y : hasse[x])
      if (!ideal.get(y)) {
        ideal.set(y);
        queue.push_back(y);
      }
    for (int k = adj_off_[x]; k < adj_off_[x + 1]; ++k) {
      int i = adj_inst_[k];
      if (stamp_[i] != epoch_) {
        stamp_[i] = epoch_;
        cnt_[i] = inst_body_off_[i + 1] - inst_body_off_[i];
      }
      if (--cnt_[i] == 0) {
        int h = inst_head_[i];
        if (!ideal.get(h)) {
          ideal.set(h);
          queue.push_back(h);
        }
      }
    }
  }
}

IdealEngine::Ideal IdealEngine::closure(const std::vector<int>& seeds) const {
  Bits ideal = b0_;
  std::vector<int> queue;
  for (int s : seeds)
    if (!ideal.get(s)) {
      ideal.set(s);
      queue.push_back(s);
    }
  run(ideal, queue);
  return ideal;
}

IdealEngine::Ideal IdealEngine::closure_of(const Bits& seeds) const {
  Bits ideal = b0_;
  std::vector<int> queue;
  seeds.for_each([&](int s) {
    if (!ideal.get(s)) {
      ideal.set(s);
      queue.push_back(s);
    }
  });
  run(ideal, queue);
  return ideal;
}

IdealEngine::Ideal IdealEngine::top_ideal() const {
  Bits all(site_->size());
  for (int i = 0; i < site_->size(); ++i) all.set(i);
  return all;
}

IdealEngine::Ideal IdealEngine::join(const std::vector<Ideal>& parts) const {
  Bits u(site_->size());
  for (const auto& p : parts) u |= p;
  return closure_of(u);
}

std::vector<IdealEngine::Ideal> IdealEngine::all_ideals() const {
  // Ganter's NextClosure in lectic order (bit 0 most significant).
  const int n = site_->size();
  std::vector<Ideal> out;
  Bits a = closure({});
  out.push_back(a);
  while (true) {
    bool found = false;
    Bits b(n);
    for (int i = n - 1; i >= 0; --i) {
      if (a.get(i)) {
        a.reset(i);
        continue;
      }
      Bits t = a;
      t.set(i);
      b = closure_of(t);
      // Accept when no element smaller than i was added.
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (b.get(j) && !a.get(j)) ok = false;
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) break;
    out.push_back(b);
    if (out.size() > budgets_.max_ideals)
      throw SizeBudgetExceeded("more than " + std::to_string(budgets_.max_ideals) + " C-ideals");
    a = b;
  }
  return out;
}

namespace {

std::vector<int> embedding_of(const Site& site, const IdealEngine& eng,
                              const std::vector<Bits>& ideals) {
  std::unordered_map<Bits, int, BitsHash> pos;
  for (std::size_t i = 0; i < ideals.size(); ++i) pos.emplace(ideals[i], int(i));
  std::vector<int> embed(site.size(), -1);
  for (int s = 0; s < site.size(); ++s) {
    auto it = pos.find(eng.principal(s));
    if (it != pos.end()) embed[s] = it->second;
  }
  return embed;
}

FiniteFrame lattice_of_ideals(const Site& site, const std::vector<Bits>& ideals) {
  std::vector<std::string> names;
  names.reserve(ideals.size());
  for (const auto& I : ideals) {
    // Named by the maximal site elements the ideal contains.
    std::vector<int> members = I.to_vector();
    std::vector<int> maximal;
    for (int x : members) {
      bool max = true;
      for (int y : members)
        if (y != x && site.leq(x, y)) {
          max = false;
          break;
        }
      if (max) maximal.push_back(x);
    }
    std::string s = "{";
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      if (i) s += ", ";
      s += site.name(maximal[i]);
    }
    names.push_back(s + "}");
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = 0; j < ideals.size(); ++j)
      if (ideals[i].subset_of(ideals[j])) pairs.emplace_back(int(i), int(j));
  return FiniteFrame::from_relation(std::move(names), pairs);
}

}  // namespace

CIdealFrame c_ideal_frame(const Site& site, const Budgets& budgets) {
  IdealEngine eng(site, /*saturate=*/true, budgets);
  std::vector<Bits> ideals = eng.all_ideals();
  CIdealFrame out;
  out.frame = lattice_of_ideals(site, ideals);
  out.frame.finalize();
  out.embed = embedding_of(site, eng, ideals);
  return out;
}

SupLattice suplattice_of_preorder(std::vector<std::string> names,
                                  const std::vector<std::pair<int, int>>& leq_pairs,
                                  const std::vector<Site::Rule>& rules, const Budgets& budgets) {
  const int n = int(names.size());
  std::vector<Bits> down(n, Bits(n));
  for (int i = 0; i < n; ++i) down[i].set(i);
  for (auto [a, b] : leq_pairs) down[b].set(a);  // a <= b
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 0; b < n; ++b) {
      Bits acc = down[b];
      down[b].for_each([&](int a) { acc |= down[a]; });
      if (acc != down[b]) {
        down[b] = std::move(acc);
        changed = true;
      }
    }
  }

  auto close = [&](Bits t) {
    bool more = true;
    while (more) {
      more = false;
      Bits acc = t;
      t.for_each([&](int a) { acc |= down[a]; });
      for (const auto& r : rules) {
        if (acc.get(r.head)) continue;
        bool all = true;
        for (int b : r.body)
          if (!acc.get(b)) {
            all = false;
            break;
          }
        if (all) {
          acc.set(r.head);
          acc |= down[r.head];
        }
      }
      if (acc != t) {
        t = std::move(acc);
        more = true;
      }
    }
    return t;
  };

  // NextClosure over the ground set.
  std::vector<Bits> ideals;
  Bits a = close(Bits(n));
  ideals.push_back(a);
  while (true) {
    bool found = false;
    Bits b(n);
    for (int i = n - 1; i >= 0; --i) {
      if (a.get(i)) {
        a.reset(i);
        continue;
      }
      Bits t = a;
      t.set(i);
      b = close(t);
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (b.get(j) && !a.get(j)) ok = false;
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) break;
    ideals.push_back(b);
    if (ideals.size() > budgets.max_ideals) throw SizeBudgetExceeded("too many closed downsets");
    a = b;
  }

  SupLattice out;
  std::vector<std::string> ideal_names;
  for (const auto& I : ideals) {
    std::string s = "{";
    bool first = true;
    I.for_each([&](int e) {
      if (!first) s += ", ";
      s += names[e];
      first = false;
    });
    ideal_names.push_back(s + "}");
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = 0; j < ideals.size(); ++j)
      if (ideals[i].subset_of(ideals[j])) pairs.emplace_back(int(i), int(j));
  out.lattice = FiniteFrame::from_relation(std::move(ideal_names), pairs);
  out.embed.assign(n, -1);
  std::unordered_map<Bits, int, BitsHash> pos;
  for (std::size_t i = 0; i < ideals.size(); ++i) pos.emplace(ideals[i], int(i));
  for (int e = 0; e < n; ++e) {
    Bits t(n);
    t.set(e);
    auto it = pos.find(close(t));
    if (it != pos.end()) out.embed[e] = it->second;
  }
  return out;
}

SupLattice suplattice_of_site(const Site& site, const Budgets& budgets) {
  IdealEngine eng(site, /*saturate=*/false, budgets);
  std::vector<Bits> ideals = eng.all_ideals();
  SupLattice out;
  out.lattice = lattice_of_ideals(site, ideals);
  out.embed = embedding_of(site, eng, ideals);
  return out;
}

int InducedHom::eval(const Expr& e) const {
  const FiniteFrame& t = *target;
  int acc = t.bottom();
  for (const auto& term : e.terms) {
    int m = t.top();
    for (GenId g : term) m = t.meet(m, assign[g]);
    acc = t.join(acc, m);
  }
  return acc;
}

InducedHom induced_hom(const Presentation& p, const std::vector<int>& assign,
                       const FiniteFrame& target, std::optional<int> horizon,
                       bool materialize, const Budgets& budgets) {
  InducedHom out;
  out.assign = assign;
  out.target = &target;

  auto relations = p.all_relations(horizon);
  for (auto [g, h] : p.gen_preorder)
    if (!target.leq(assign[g], assign[h])) {
      out.violation = "generator preorder " + p.gens[g] + " <= " + p.gens[h] + " violated";
      return out;
    }
  for (const auto& rel : relations) {
    int l = out.eval(rel.lhs), r = out.eval(rel.rhs);
    bool ok = rel.kind == RelKind::Eq ? l == r : target.leq(l, r);
    if (!ok) {
      out.violation = "relation " + rel.label + ": " + rel.lhs.str(p.gens) +
                      (rel.kind == RelKind::Eq ? " = " : " <= ") + rel.rhs.str(p.gens) +
                      " evaluates to " + target.name(l) + " vs " + target.name(r);
      return out;
    }
  }

  if (materialize) {
    Site site = build_site(p, horizon, budgets);
    IdealEngine eng(site, true, budgets);
    std::vector<Bits> ideals = eng.all_ideals();
    auto cif = std::make_shared<CIdealFrame>();
    cif->frame = lattice_of_ideals(site, ideals);
    cif->frame.finalize();
    cif->embed = embedding_of(site, eng, ideals);
    LatticeMap map;
    map.source = &cif->frame;
    map.target = &target;
    map.table.resize(int(ideals.size()));
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      int acc = target.bottom();
      ideals[i].for_each([&](int s) {
        int m = target.top();
        site.genset(s).for_each([&](int g) { m = target.meet(m, assign[g]); });
        acc = target.join(acc, m);
      });
      map.table[i] = acc;
    }
    out.presented = std::move(cif);
    out.map = std::move(map);
  }
  return out;
}

}  // namespace pfc
