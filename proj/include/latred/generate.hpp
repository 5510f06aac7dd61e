#pragma once

#include "latred/group.hpp"
#include "latred/matrix.hpp"

namespace latred {

struct GenOptions {
  unsigned long long seed = 1;
  int word = 8;         ///< length of the integral scrambling word
  double spread = 0.75; ///< log-scale of the random torus part
};

/// H = t(g0) t(a0 n0) (a0 n0) g0 for a random torus element a0, a random
/// unipotent n0, and a random integral word g0 in the generators; compatible
/// with the group form by construction. Deterministic in the seed.
RealMatrix generate_compatible_gram(const GroupDescriptor& desc, const GenOptions& options = {});

}  // namespace latred
