#pragma once

namespace mdl {

// Routes GMP limb allocations of at most 64 bytes through per-thread free
// lists. Must run before the process allocates any GMP value; later calls are
// no-ops.
void install_gmp_pool();

}  // namespace mdl
