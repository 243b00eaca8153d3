// The completion of a pre-uniform finite frame: presentation emission,
// exact computation through the site engine, and the completion unit.
#ifndef PFC_COMPLETION_HPP
#define PFC_COMPLETION_HPP

#include "pfc/presentation.hpp"
#include "pfc/site.hpp"
#include "pfc/uniform.hpp"

namespace pfc {

struct CompletionPresentation {
  Presentation pres;
  std::vector<GenId> gen_of_elem;  // frame element a -> generator [a in F]
};

// Generators [a in F] for every open, with filterhood, properness (only the
// a = 0 instance is nontrivial on a finite frame), the image covers, and
// regularity via the uniformly-below relation of the base.
CompletionPresentation completion_presentation(const FiniteFrame& f, const UniformityBase& base);

struct CompletionFrame {
  Site site;
  std::vector<Bits> ideals;   // frame element -> C-ideal of the site
  FiniteFrame frame;
  std::vector<int> gen_embed;  // frame element a -> element of `frame`
  UniformityBase inherited;    // covers {[u in F] : u in U_j}, same witnesses
};

CompletionFrame completion_frame(const FiniteFrame& f, const UniformityBase& base,
                                 const Budgets& budgets = {});

// gamma*: the frame hom sending [a in F] to the join of the opens uniformly
// below a. The map points into `comp`; keep it alive.
LatticeMap completion_unit_hom(const FiniteFrame& f, const UniformityBase& base,
                               const CompletionFrame& comp);

// Unit checks: the assignment satisfies the completion relations, is dense,
// the inherited base validates and is uniform, each image cover joins to
// top, and the image of gamma* equals the fixed subframe of the initial
// base (with bijectivity onto the uniform reflection in the uniform case).
Report check_completion_unit(const FiniteFrame& f, const UniformityBase& base,
                             const CompletionFrame& comp);

}  // namespace pfc

#endif
