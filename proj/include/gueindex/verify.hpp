#pragma once

#include "gueindex/report.hpp"
#include "gueindex/real.hpp"

namespace gueindex {

// Superset runner behind `verify`: executes every module's invariants at the
// requested scale. max_n bounds the recurrence/identity checks (and the
// Hankel determinants, so max_n <= 24 stays practical).
CheckReport verify_all(int max_n, const PrecisionContext& ctx);

} // namespace gueindex
