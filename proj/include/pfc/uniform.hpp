// Cover calculus on finite frames: stars, refinement, uniformity bases,
// the uniformly-below relation, uniform reflection, metric uniformities.
#ifndef PFC_UNIFORM_HPP
#define PFC_UNIFORM_HPP

#include <optional>
#include <vector>

#include "pfc/frame.hpp"
#include "pfc/rat.hpp"

namespace pfc {

struct Cover {
  std::vector<int> members;  // frame element ids
};

// An indexed family of strong covers with star-refinement witnesses.
// star_witness[j] = j' promises star_cover(U_{j'}) refines U_j.
struct UniformityBase {
  std::vector<Cover> covers;
  std::vector<int> star_witness;
};

// st(a,U): join of the members of U meeting a.
int star(const FiniteFrame& f, int a, const Cover& u);

// Cover of stars {st(u,U) : u in U}.
Cover star_cover(const FiniteFrame& f, const Cover& u);

// Refinement preorder: every member of c1 lies below some member of c2.
bool refines(const FiniteFrame& f, const Cover& c1, const Cover& c2);

// a is uniformly below b when st(a,U_j) <= b for some listed cover;
// returns the witnessing index.
std::optional<int> uniformly_below(const FiniteFrame& f, int a, int b, const UniformityBase& base);

struct UniformityVerdict {
  Report validity;   // strongness, directedness, star witnesses
  bool uniform = false;  // every u is the join of the opens uniformly below it
};

UniformityVerdict validate_uniformity(const FiniteFrame& f, const UniformityBase& base);

// The subframe of opens fixed by uniformly-below approximation.
struct Subframe {
  FiniteFrame frame;
  std::vector<int> parent_elem;  // subframe element -> ambient element
  Report closure_checks;         // closure under meets and joins
};

Subframe uniform_reflection(const FiniteFrame& f, const UniformityBase& base);

// Finite metric space: points with an exact rational distance table.
struct FiniteMetric {
  std::vector<std::string> points;
  std::vector<std::vector<Rat>> dist;  // symmetric, zero diagonal
};

struct MetricInstance {
  FiniteFrame frame;  // powerset of the points
  UniformityBase base;
};

// U_j = inclusion-maximal subsets of diameter < eps_j; witnesses computed.
// Throws EmptySpace when the point set is empty.
MetricInstance metric_uniformity(const FiniteMetric& m, const std::vector<Rat>& epsilons);

}  // namespace pfc

#endif
