// Four-word sweep blocks, compiled with -mavx2 so the per-lane loops emit
// 256-bit ops. Reached only through the runtime dispatch in valid_on_frame.

#include "sweep_core.hpp"

#if defined(__x86_64__) || defined(_M_X64)

namespace kripkit::detail {

namespace {
ValidityResult run(const SweepPlan& plan) { return sweep_validity<4>(plan); }
}  // namespace

SweepFn sweep_validity_w4() { return &run; }

}  // namespace kripkit::detail

#else

namespace kripkit::detail {
SweepFn sweep_validity_w4() { return nullptr; }
}  // namespace kripkit::detail

#endif
