#pragma once

#include <vector>

#include "latred/group.hpp"
#include "latred/iwasawa.hpp"
#include "latred/matrix.hpp"

namespace latred {

struct IterationLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Kind of elementary move recorded in a reduction trace.
enum class StepKind { SizeReduce, Reflect, Recompute };

struct TraceStep {
  StepKind kind = StepKind::SizeReduce;
  int root = 0;        ///< index into desc.positive (SizeReduce) or Delta (Reflect)
  double value = 0.0;  ///< integer shift m, or the parameter t of the reflection
  double sigma_after = 0.0;
};

struct ReduceOptions {
  double delta = 0.75;
  long max_reflections = -1;  ///< -1: derived from sigma of the starting point
  int recompute_every = 32;   ///< refresh (a, n) from t(gamma) H gamma this often
  double tol = 1e-6;
  bool record_size_reduction = false;  ///< reflections are always recorded
  bool specialized_driver = false;     ///< per-group schedule instead of the generic sweep
};

struct ReduceResult {
  RationalMatrix gamma;  ///< exact integer matrix in G(Z)
  IwasawaPair point;     ///< coordinates of the reduced point
  RealMatrix restored_H; ///< the structured input the loop actually reduced
  long reflections = 0;
  std::vector<TraceStep> trace;
  double equivariance_error = 0.0;  ///< |t(an)(an) - t(g) H* g| relative
};

/// sigma(a): product over the positive roots of beta(a).
double sigma_eval(const GroupDescriptor& desc, const RealVector& a);

/// The Lovasz-style test of reducedness: n in omega and, for every simple
/// root, alpha(a)^2 <= (delta - p_alpha(n)^2)^{-1}.
bool is_reduced(const GroupDescriptor& desc, double delta, const RealVector& a,
                const RealMatrix& n);

/// Coordinates of x s_alpha: a' = alpha_check(sqrt(1 + t^2 alpha(a)^2)) s_alpha(a)
/// and n' = u_alpha(-t alpha(a)^2 / (1 + t^2 alpha(a)^2)) s^{-1} (u_alpha(-t) n) s
/// with t = p_alpha(n). Throws std::runtime_error if n' drifts off N.
IwasawaPair reflection_step(const GroupDescriptor& desc, int simple, const RealVector& a,
                            const RealMatrix& n, double drift_tol = 1e-6);

/// Full reduction: returns gamma in G(Z) with t(gamma) H gamma reduced,
/// together with the reduced point's coordinates. Throws IncompatibleGram,
/// NotPositiveDefinite, IterationLimit.
ReduceResult reduce(const GroupDescriptor& desc, const RealMatrix& H,
                    const ReduceOptions& options = {});

/// Textbook LLL on a Gram matrix, used as an independent cross-check for the
/// SL engine. Returns the unimodular column transform U; t(U) H U satisfies
/// the classic reducedness conditions.
RealMatrix classic_lll_reference(const RealMatrix& H, double delta);

/// The classic conditions themselves: |mu_ij| <= 1/2 and the Lovasz
/// inequality for consecutive Gram-Schmidt norms.
bool satisfies_classic_reduction(const RealMatrix& H, double delta, double tol = 1e-9);

}  // namespace latred
