// The locale of modulated Cauchy sequences: relation schemas over a finite
// instance, finite truncations, and point-level modulated sequences over
// the rational line with convergence certificates.
#ifndef PFC_CAUCHY_HPP
#define PFC_CAUCHY_HPP

#include <functional>
#include <optional>
#include <string>

#include "pfc/frame.hpp"
#include "pfc/line.hpp"
#include "pfc/presentation.hpp"
#include "pfc/uniform.hpp"

namespace pfc {

// Generator families [s(n) in u] and [m(U_j) = k] with the three relation
// families: coordinatewise frame structure, left-totality of the modulus,
// and Cauchyness. Instantiated per horizon by truncate_cauchy.
struct CauchySchema {
  FiniteFrame frame;
  UniformityBase base;
};

CauchySchema cauchy_presentation(const FiniteFrame& f, const UniformityBase& base);

struct TruncatedCauchy {
  int K = 0;
  FiniteFrame frame;
  UniformityBase base;
  Presentation pres;
  std::vector<std::vector<GenId>> slot_gen;  // [n][frame element]
  std::vector<std::vector<GenId>> mod_gen;   // [j][k]
};

// All natural parameters below K; left-totality truncates to the first K
// modulus values. The output is site-form after normalization.
TruncatedCauchy truncate_cauchy(const CauchySchema& schema, int K);

// --- point-level sequences over the rational line ---

// Pair bound schema: |s(n) - s(n')| <= pair_bound(min(n,n')) for
// min(n,n') >= valid_from, with pair_bound rational and decreasing.
struct SeqCertificate {
  std::function<Rat(long)> pair_bound;
  long valid_from = 0;
};

struct ModulatedSeq {
  std::string name;
  std::function<Rat(long)> term;
  std::function<std::vector<long>(int)> modulus;  // base index -> nonempty set
  std::optional<SeqCertificate> cert;
};

ModulatedSeq seq_const(const Rat& q);
ModulatedSeq seq_newton_sqrt(const Rat& q);  // q > 0
ModulatedSeq seq_exp_series(const Rat& q);
// "const:3/7", "newton-sqrt:2", "exp-series:1".
std::optional<ModulatedSeq> builtin_seq(const std::string& spec);

enum class SeqVerdictKind { Certified, SampledOk, Refuted };

struct SeqVerdict {
  SeqVerdictKind kind = SeqVerdictKind::SampledOk;
  int depth = 0;
  std::string witness;  // refutation witness or certification note
};

// Samples the Cauchy condition over the grid base for all base indices
// j < depth and windows [k, k+depth]; with a certificate, additionally
// verifies the bound implies the condition for all n,n' >= k (a pair at
// distance < 3/4 of the mesh always shares a grid member).
SeqVerdict validate_modulated_seq(const ModulatedSeq& seq, int depth);

// Point-level sequences in a finite instance (terms are atoms of the frame).
struct FinitePointSeq {
  std::function<int(long)> atom;  // index -> atom element of the frame
  std::function<std::vector<long>(int)> modulus;
  std::optional<long> stabilizes;  // declared stabilization index
};

SeqVerdict validate_finite_seq(const FinitePointSeq& seq, const FiniteFrame& f,
                               const UniformityBase& base, int depth);

}  // namespace pfc

#endif
