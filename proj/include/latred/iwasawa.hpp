#pragma once

#include "latred/group.hpp"
#include "latred/matrix.hpp"

namespace latred {

struct NotPositiveDefinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompatibleGram : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IwasawaPair {
  RealVector a;  ///< positive diagonal torus part
  RealMatrix n;  ///< unit upper-triangular part
};

/// t(an)(an), the Gram matrix represented by the pair.
RealMatrix gram_of(const IwasawaPair& p);

/// Compatibility with the group's form: H S H = S up to `rel_tol` scaled by
/// the product magnitude (equivalent to H^{-1} t(S) = S^{-1} t(H) for
/// symmetric H, but conditioned like a residual). Vacuous for SL.
bool check_compatible(const GroupDescriptor& desc, const RealMatrix& H, double rel_tol = 1e-6);

/// Classical Gram-Schmidt: H = t(an)(an) with a = diag ||e_i*||_H and
/// n = (mu_ij). Throws NotPositiveDefinite when a squared norm falls below
/// `pd_eps`.
IwasawaPair iwasawa_decompose(const GroupDescriptor& desc, const RealMatrix& H,
                              double pd_eps = 1e-12);

/// Nearest structured point: recomputes (a, n) from the numerically
/// well-conditioned part of the Gram-Schmidt data and rebuilds both factors
/// from the group's own parameters, so the result is exactly a point of the
/// engine's symmetric space. Near-identity on inputs that already satisfy
/// the structure. Throws NotPositiveDefinite / IncompatibleGram.
IwasawaPair restore_compatible(const GroupDescriptor& desc, const RealMatrix& H,
                               double rel_tol = 1e-6);

/// J = -S^{-1} H for the symplectic engine; J^2 = -1 and t(J) S positive
/// definite. The inverse map is H = -S J.
RealMatrix sp_H_to_J(const GroupDescriptor& desc, const RealMatrix& H);

}  // namespace latred
