#pragma once

#include "germlab/icss.hpp"

namespace germlab {

/// Formal cochain complex with zero differentials and the given Betti
/// profile, doubled into two swapped copies carrying the S_2 action. This is
/// the canonical fiber model of D^2 for a hypersurface bi-germ whose Milnor
/// fiber has the stated profile.
EquivariantComplex two_copy_swap_complex(const std::vector<int>& betti);

/// Canonical two-point ICSS model of a hypersurface bi-germ: a single k = 2
/// column with the two-copy fiber, a contractible cone total, and identity
/// monodromy when requested.
ICSSModel bigerm_pair_model(const std::vector<int>& fiber_betti, bool with_monodromy);

/// Absolute-model counterpart at a fixed nonzero parameter: D^1 = two balls,
/// D^2 = two swapped copies of the Milnor fiber, with the two face-map
/// pullbacks.
AbsoluteIcssModel bigerm_absolute_model(const std::vector<int>& fiber_betti);

/// Absolute model of the transverse double point: two sheets through a line
/// of double points.
AbsoluteIcssModel transverse_double_point_absolute_model();

} // namespace germlab
