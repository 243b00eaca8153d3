// Mechanical check of the frame/suplattice coverage correspondence on a
// finite site: hypothesis validation, both presented sides, and the
// generator-respecting order isomorphism.
#ifndef PFC_COVERAGE_HPP
#define PFC_COVERAGE_HPP

#include "pfc/report.hpp"
#include "pfc/site.hpp"

namespace pfc {

// The frame side is computed from the free distributive lattice on the
// site's elements by nucleus saturation (an independent route from the
// C-ideal engine); the suplattice side is the lattice of rule-closed
// downsets. Throws SizeBudgetExceeded when the site has more elements than
// budgets.max_free_gens.
Report coverage_iso_check(const Site& site, const Budgets& budgets = {});

}  // namespace pfc

#endif
