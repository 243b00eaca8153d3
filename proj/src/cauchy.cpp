#include "pfc/cauchy.hpp"

#include <memory>
#include <vector>

namespace pfc {

CauchySchema cauchy_presentation(const FiniteFrame& f, const UniformityBase& base) {
  return CauchySchema{f, base};
}

TruncatedCauchy truncate_cauchy(const CauchySchema& schema, int K) {
  if (K < 2) throw ValidationError("horizon must be at least 2");
  TruncatedCauchy tc;
  tc.K = K;
  tc.frame = schema.frame;
  tc.base = schema.base;
  const FiniteFrame& f = tc.frame;
  const int J = int(tc.base.covers.size());
  Presentation& p = tc.pres;

  tc.slot_gen.assign(K, std::vector<GenId>(f.size()));
  for (int n = 0; n < K; ++n)
    for (int u = 0; u < f.size(); ++u)
      tc.slot_gen[n][u] = p.add_gen("[s(" + std::to_string(n) + ") in " + f.name(u) + "]");
  tc.mod_gen.assign(J, std::vector<GenId>(K));
  for (int j = 0; j < J; ++j)
    for (int k = 0; k < K; ++k)
      tc.mod_gen[j][k] = p.add_gen("[m(U" + std::to_string(j) + ")=" + std::to_string(k) + "]");

  std::vector<int> irr = f.join_irreducibles();

  // (i): each coordinate carries the frame structure of f.
  for (int n = 0; n < K; ++n) {
    const auto& g = tc.slot_gen[n];
    p.relations.push_back(
        {RelKind::Eq, Expr::gen(g[f.top()]), Expr::top(), "(i) s(" + std::to_string(n) + ") top"});
    for (int u = 0; u < f.size(); ++u)
      for (int v = u + 1; v < f.size(); ++v)
        p.relations.push_back({RelKind::Eq, Expr::meet({g[u], g[v]}), Expr::gen(g[f.meet(u, v)]),
                               "(i) s(" + std::to_string(n) + ") meet " + f.name(u) + "," +
                                   f.name(v)});
    for (int u = 0; u < f.size(); ++u) {
      bool irreducible = false;
      for (int x : irr)
        if (x == u) irreducible = true;
      if (irreducible) continue;
      std::vector<GenId> parts;
      for (int x : irr)
        if (f.leq(x, u)) parts.push_back(g[x]);
      p.relations.push_back({RelKind::Leq, Expr::gen(g[u]), Expr::join_of_gens(parts),
                             "(i) s(" + std::to_string(n) + ") join " + f.name(u)});
    }
  }

  // (ii): left-totality per base index, truncated to modulus values < K.
  for (int j = 0; j < J; ++j) {
    std::vector<GenId> ks;
    for (int k = 0; k < K; ++k) ks.push_back(tc.mod_gen[j][k]);
    p.relations.push_back(
        {RelKind::Leq, Expr::top(), Expr::join_of_gens(ks), "(ii) U" + std::to_string(j)});
  }

  // (iii): Cauchyness for k <= n <= n' < K.
  for (int j = 0; j < J; ++j)
    for (int k = 0; k < K; ++k)
      for (int n = k; n < K; ++n)
        for (int np = n; np < K; ++np) {
          std::vector<std::vector<GenId>> terms;
          for (int u : tc.base.covers[j].members)
            terms.push_back({tc.slot_gen[n][u], tc.slot_gen[np][u]});
          p.relations.push_back({RelKind::Leq, Expr::gen(tc.mod_gen[j][k]),
                                 Expr::join_of_meets(std::move(terms)),
                                 "(iii) U" + std::to_string(j) + " k=" + std::to_string(k) +
                                     " n=" + std::to_string(n) + "," + std::to_string(np)});
        }
  return tc;
}

ModulatedSeq seq_const(const Rat& q) {
  ModulatedSeq s;
  s.name = "const:" + rat_display(q);
  s.term = [q](long) { return q; };
  s.modulus = [](int) { return std::vector<long>{0}; };
  s.cert = SeqCertificate{[](long) { return Rat(0); }, 0};
  return s;
}

ModulatedSeq seq_newton_sqrt(const Rat& q) {
  if (!(q > 0)) throw ValidationError("newton-sqrt needs a positive rational");
  auto cache = std::make_shared<std::vector<Rat>>(1, q);
  auto term = [cache, q](long n) {
    while (long(cache->size()) <= n) {
      const Rat& s = cache->back();
      cache->push_back((s + q / s) / 2);
    }
    return (*cache)[n];
  };
  // From n >= 1 on, s(n) >= sqrt(q) >= q/s(n), so s(n) - q/s(n) bounds
  // |s(n) - sqrt(q)| exactly and halves with every step.
  auto bound = [term, q](long n) {
    long m = std::max(n, 1l);
    Rat s = term(m);
    return Rat(2) * (s - q / s);
  };
  ModulatedSeq seq;
  seq.name = "newton-sqrt:" + rat_display(q);
  seq.term = term;
  seq.cert = SeqCertificate{bound, 1};
  seq.modulus = [bound](int j) {
    Rat target = pow2(-j - 2);
    long n = 1;
    while (!(bound(n) < target)) ++n;
    return std::vector<long>{n, n + 1};
  };
  return seq;
}

ModulatedSeq seq_exp_series(const Rat& q) {
  auto cache = std::make_shared<std::vector<Rat>>(1, Rat(1));       // partial sums
  auto pows = std::make_shared<std::vector<Rat>>(1, Rat(1));        // q^n / n!
  auto term = [cache, pows, q](long n) {
    while (long(cache->size()) <= n) {
      long i = long(pows->size());
      pows->push_back(pows->back() * q / Rat(i));
      cache->push_back(cache->back() + pows->back());
    }
    return (*cache)[n];
  };
  Rat aq = rabs(q);
  long vf = 0;
  while (!(Rat(vf + 2) > Rat(3) * aq / 2)) ++vf;
  // Tail |exp(q) - s(n)| <= |q|^{n+1}/(n+1)! * (n+2)/(n+2-|q|), geometric
  // comparison; the pair bound doubles it.
  auto bound = [aq, vf](long n) {
    long m = std::max(n, vf);
    Rat p(1);
    for (long i = 1; i <= m + 1; ++i) p = p * aq / Rat(i);
    return Rat(2) * p * Rat(m + 2) / (Rat(m + 2) - aq);
  };
  ModulatedSeq seq;
  seq.name = "exp-series:" + rat_display(q);
  seq.term = term;
  seq.cert = SeqCertificate{bound, vf};
  seq.modulus = [bound, vf](int j) {
    Rat target = pow2(-j - 2);
    long n = vf;
    while (!(bound(n) < target)) ++n;
    return std::vector<long>{n, n + 1};
  };
  return seq;
}

std::optional<ModulatedSeq> builtin_seq(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string name = spec.substr(0, colon);
  auto q = parse_rat(spec.substr(colon + 1));
  if (!q) return std::nullopt;
  if (name == "const") return seq_const(*q);
  if (name == "newton-sqrt") return *q > 0 ? std::optional<ModulatedSeq>(seq_newton_sqrt(*q))
                                           : std::nullopt;
  if (name == "exp-series") return seq_exp_series(*q);
  return std::nullopt;
}

SeqVerdict validate_modulated_seq(const ModulatedSeq& seq, int depth) {
  SeqVerdict v;
  v.depth = depth;

  for (int j = 0; j < depth; ++j) {
    std::vector<long> mods = seq.modulus(j);
    if (mods.empty()) throw ModulusUndefined("modulus empty at base index " + std::to_string(j));
    for (long k : mods)
      for (long n = k; n <= k + depth; ++n)
        for (long np = n; np <= k + depth; ++np)
          if (!grid_contains_pair(j, seq.term(n), seq.term(np))) {
            v.kind = SeqVerdictKind::Refuted;
            v.witness = "j=" + std::to_string(j) + " k=" + std::to_string(k) +
                        " (n,n')=(" + std::to_string(n) + "," + std::to_string(np) +
                        "): no member of U_j contains both terms";
            return v;
          }
  }

  if (seq.cert) {
    const auto& c = *seq.cert;
    bool certified = true;
    std::string note;
    for (int j = 0; j < depth && certified; ++j) {
      for (long k : seq.modulus(j)) {
        if (k < c.valid_from) {
          certified = false;
          note = "modulus value below the certificate's validity index";
          break;
        }
        // Two points at distance < (3/4) * mesh always share a grid member.
        if (!(c.pair_bound(k) < Rat(3) * grid_mesh(j) / 4)) {
          certified = false;
          note = "bound at j=" + std::to_string(j) + " too weak";
          break;
        }
      }
    }
    // Sampled honesty of the declared bound, and its monotone decrease.
    for (long m = c.valid_from; m < c.valid_from + depth && certified; ++m) {
      if (c.pair_bound(m + 1) > c.pair_bound(m)) {
        certified = false;
        note = "bound not decreasing at " + std::to_string(m);
      }
      for (long n = m; n <= m + depth && certified; ++n)
        if (rabs(seq.term(n) - seq.term(m)) > c.pair_bound(m)) {
          certified = false;
          note = "declared bound fails at (" + std::to_string(m) + "," + std::to_string(n) + ")";
        }
    }
    if (certified) {
      v.kind = SeqVerdictKind::Certified;
      return v;
    }
    v.witness = note;
  }
  v.kind = SeqVerdictKind::SampledOk;
  return v;
}

SeqVerdict validate_finite_seq(const FinitePointSeq& seq, const FiniteFrame& f,
                               const UniformityBase& base, int depth) {
  SeqVerdict v;
  v.depth = depth;
  for (std::size_t j = 0; j < base.covers.size(); ++j) {
    std::vector<long> mods = seq.modulus(int(j));
    if (mods.empty()) throw ModulusUndefined("modulus empty at base index " + std::to_string(j));
    for (long k : mods)
      for (long n = k; n <= k + depth; ++n)
        for (long np = n; np <= k + depth; ++np) {
          bool shares = false;
          for (int u : base.covers[j].members)
            if (f.leq(seq.atom(n), u) && f.leq(seq.atom(np), u)) {
              shares = true;
              break;
            }
          if (!shares) {
            v.kind = SeqVerdictKind::Refuted;
            v.witness = "j=" + std::to_string(j) + " (n,n')=(" + std::to_string(n) + "," +
                        std::to_string(np) + ")";
            return v;
          }
        }
  }
  if (seq.stabilizes) {
    bool ok = true;
    for (long n = *seq.stabilizes; n <= *seq.stabilizes + depth; ++n)
      if (seq.atom(n) != seq.atom(*seq.stabilizes)) ok = false;
    for (std::size_t j = 0; j < base.covers.size() && ok; ++j)
      for (long k : seq.modulus(int(j)))
        if (k < *seq.stabilizes) ok = false;
    if (ok) {
      v.kind = SeqVerdictKind::Certified;
      return v;
    }
  }
  v.kind = SeqVerdictKind::SampledOk;
  return v;
}

}  // namespace pfc
