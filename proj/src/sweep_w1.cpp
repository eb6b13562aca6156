#include "sweep_core.hpp"

namespace kripkit::detail {

ValidityResult sweep_validity_w1(const SweepPlan& plan) { return sweep_validity<1>(plan); }

}  // namespace kripkit::detail
