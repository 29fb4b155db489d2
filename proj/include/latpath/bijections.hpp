#ifndef LATPATH_BIJECTIONS_HPP
#define LATPATH_BIJECTIONS_HPP

#include "latpath/steps.hpp"

namespace latpath::bij {

/// Reverses the step order and exchanges R and U. The image starts at the
/// origin, so a path ending at (a,b) maps to one ending at (b,a). Applying it
/// twice gives back the original path.
UnitPath reverse_swap(const UnitPath& path);

/// Groups a generalized Dyck path at each down step: k up steps followed by
/// a down step become one step of rise k-1. The input must start at height
/// 0 on the x-axis, use rises +-1, never go below the axis, end with a down
/// step (or be empty) and contain no run of four up steps. Violations throw
/// std::invalid_argument naming the offending step index.
RisePath dyck_encode(const RisePath& path);

/// Inverse of dyck_encode. Rises must lie in {-1,0,1,2} and the path must
/// stay at height >= 0 starting from the origin.
RisePath dyck_decode(const RisePath& path);

}  // namespace latpath::bij

#endif  // LATPATH_BIJECTIONS_HPP
