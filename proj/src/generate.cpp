#include "latred/generate.hpp"

#include <cmath>
#include <random>

namespace latred {

namespace {

/// Deterministic uniform doubles; the standard library distributions are not
/// pinned down across implementations.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(unsigned long long seed) : eng(seed) {}
  double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  long long pick(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(eng() % static_cast<unsigned long long>(hi - lo + 1));
  }
};

RealVector random_torus(const GroupDescriptor& desc, Rng& rng, double spread) {
  RealVector a = RealVector::Ones(desc.dim);
  switch (desc.kind) {
    case GroupKind::SL: {
      double logsum = 0.0;
      for (int i = 0; i < desc.dim; ++i) {
        const double l = rng.uniform(-spread, spread);
        a[i] = std::exp(l);
        logsum += l;
      }
      a *= std::exp(-logsum / desc.dim);
      break;
    }
    case GroupKind::Sp:
    case GroupKind::SO: {
      for (int i = 0; i < desc.g; ++i) {
        a[i] = std::exp(rng.uniform(-spread, spread));
        a[desc.dim - 1 - i] = 1.0 / a[i];
      }
      break;
    }
    case GroupKind::G2: {
      const double s = std::exp(rng.uniform(-spread, spread));
      const double t = std::exp(rng.uniform(-spread, spread));
      a << s * t, s, t, 1.0, 1.0, 1.0 / t, 1.0 / s, 1.0 / (s * t);
      break;
    }
  }
  return a;
}

}  // namespace

RealMatrix generate_compatible_gram(const GroupDescriptor& desc, const GenOptions& options) {
  Rng rng(options.seed);
  const RealVector a0 = random_torus(desc, rng, options.spread);
  RealMatrix n0 = RealMatrix::Identity(desc.dim, desc.dim);
  for (int k = 0; k < desc.root_count(); ++k)
    n0 = n0 * root_group_element<double>(desc, k, rng.uniform(-2.0 * options.spread,
                                                              2.0 * options.spread));
  RealMatrix g0 = RealMatrix::Identity(desc.dim, desc.dim);
  for (int w = 0; w < options.word; ++w) {
    if (rng.pick(0, 1) == 0) {
      const int k = static_cast<int>(rng.pick(0, desc.root_count() - 1));
      const double m = static_cast<double>(rng.pick(-2, 2));
      g0 = g0 * root_group_element<double>(desc, k, m);
    } else {
      const int k = static_cast<int>(rng.pick(0, desc.rank - 1));
      g0 = g0 * desc.reflections_real[k];
    }
  }
  const RealMatrix an = a0.asDiagonal() * n0;
  const RealMatrix h1 = an.transpose() * an;
  return g0.transpose() * h1 * g0;
}

}  // namespace latred
