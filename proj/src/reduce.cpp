#include "latred/reduce.hpp"

#include <cmath>

#include "latred/size_reduce.hpp"

namespace latred {

namespace {

struct LoopState {
  const GroupDescriptor& desc;
  const ReduceOptions& opts;
  RealMatrix H;  // restored input
  RationalMatrix gamma;
  RealVector a;
  RealMatrix n;
  long reflections = 0;
  long cap = 0;
  int since_recompute = 0;
  std::vector<TraceStep> trace;

  void record(StepKind kind, int root, double value) {
    if (kind == StepKind::SizeReduce && !opts.record_size_reduction) return;
    trace.push_back({kind, root, value, sigma_eval(desc, a)});
  }

  // Normalize one root's marker coordinate into [-1/2, 1/2).
  void red(int root_index) {
    const double t = marker_coordinate(desc, root_index, n);
    const long long m = box_offset(t);
    if (m == 0) return;
    n = n * root_group_element<double>(desc, root_index, static_cast<double>(m));
    gamma = gamma * root_group_element<Rational>(desc, root_index, Rational(m));
    record(StepKind::SizeReduce, root_index, static_cast<double>(m));
  }

  void red_all() {
    for (int idx : desc.red_schedule) red(idx);
  }

  bool lovasz_fails(int simple) const {
    const double t = p_alpha(desc, simple, n);
    const double lhs = char_eval(desc, simple, a);
    return lhs * lhs > 1.0 / (opts.delta - t * t);
  }

  void reflect(int simple) {
    IwasawaPair next;
    try {
      next = reflection_step(desc, simple, a, n);
    } catch (const std::runtime_error&) {
      // incremental drift pushed n off the group; rebuild the state from the
      // exact conjugation and re-test before retrying
      refresh();
      record(StepKind::Recompute, 0, 0.0);
      if (!lovasz_fails(simple)) return;
      next = reflection_step(desc, simple, a, n);
    }
    const double t = p_alpha(desc, simple, n);
    a = next.a;
    n = next.n;
    gamma = gamma * simple_reflection(desc, simple);
    ++reflections;
    record(StepKind::Reflect, simple, t);
    if (reflections > cap)
      throw IterationLimit("reduce: reflection cap exceeded (" + std::to_string(cap) + ")");
    if (++since_recompute >= opts.recompute_every) {
      refresh();
      record(StepKind::Recompute, 0, 0.0);
    }
  }

  // Re-derive (a, n) from the exactly conjugated Gram matrix, killing the
  // error the incremental updates compound.
  void refresh() {
    const RealMatrix conj = exact_conjugate_form(gamma, H);
    const IwasawaPair fresh = restore_compatible(desc, conj, 1e-5);
    a = fresh.a;
    n = fresh.n;
    since_recompute = 0;
  }
};

// Generic sweep: size-reduce everything, then scan Delta in stored order and
// restart after any reflection.
void drive_generic(LoopState& st) {
  for (;;) {
    st.red_all();
    bool done = true;
    for (int k = 0; k < st.desc.rank; ++k) {
      if (st.lovasz_fails(k)) {
        st.reflect(k);
        done = false;
        break;
      }
    }
    if (done) return;
  }
}

// Chain driver shared by the symplectic and even orthogonal engines; follows
// the published step schedules, with the current unipotent everywhere.
void drive_chain(LoopState& st) {
  const GroupDescriptor& d = st.desc;
  const int g = d.g;
  const bool sp = d.kind == GroupKind::Sp;
  auto red_lab = [&](int i, int j) {
    if (j <= -1)
      st.red(d.find_root(RootLabel::difference(i, j)));
    else if (sp && i == -j)
      st.red(d.find_root(RootLabel::long_root(i)));
    else
      st.red(d.find_root(RootLabel::sum(i, -j)));
  };
  int k = -g;
  for (;;) {
    while (k < -1) {
      red_lab(k, k + 1);
      if (st.lovasz_fails(k + g)) {
        st.reflect(k + g);
        if (k > -g) --k;
      } else {
        for (int i = k - 1; i >= -g; --i) red_lab(i, k + 1);
        ++k;
      }
    }
    red_lab(sp ? -1 : -2, 1);
    if (st.lovasz_fails(g - 1)) {
      st.reflect(g - 1);
      k -= sp ? 1 : 2;  // rewind into the chain scan
      if (k < -g) k = -g;
      continue;
    }
    for (int i = sp ? -2 : -3; i >= -g; --i) red_lab(i, 1);
    for (int j = 2; j <= g; ++j)
      for (int i = sp ? -j : -j - 1; i >= -g; --i) red_lab(i, j);
    return;
  }
}

void drive_g2(LoopState& st) {
  for (;;) {
    st.red(0);
    if (st.lovasz_fails(0)) {
      st.reflect(0);
      continue;
    }
    st.red(1);
    if (st.lovasz_fails(1)) {
      st.reflect(1);
      continue;
    }
    for (int k = 2; k < 6; ++k) st.red(k);
    return;
  }
}

}  // namespace

double sigma_eval(const GroupDescriptor& desc, const RealVector& a) {
  double v = 1.0;
  for (int k = 0; k < desc.root_count(); ++k) v *= char_eval(desc, k, a);
  return v;
}

bool is_reduced(const GroupDescriptor& desc, double delta, const RealVector& a,
                const RealMatrix& n) {
  if (!(delta > 0.25 && delta < 1.0)) throw std::domain_error("delta must lie in (1/4, 1)");
  if (!in_omega(desc, n)) return false;
  for (int k = 0; k < desc.rank; ++k) {
    const double t = p_alpha(desc, k, n);
    const double lhs = char_eval(desc, k, a);
    if (lhs * lhs > 1.0 / (delta - t * t)) return false;
  }
  return true;
}

IwasawaPair reflection_step(const GroupDescriptor& desc, int simple, const RealVector& a,
                            const RealMatrix& n, double drift_tol) {
  const double t = p_alpha(desc, simple, n);
  const double al = char_eval(desc, simple, a);
  const double y2 = 1.0 + t * t * al * al;

  const RealMatrix m = root_group_element<double>(desc, simple, -t) * n;
  const RealMatrix& s = desc.reflections_real[simple];

  IwasawaPair next;
  next.a = coroot_apply(desc, simple, std::sqrt(y2)).cwiseProduct(reflect_torus(desc, simple, a));
  next.n = root_group_element<double>(desc, simple, -t * al * al / y2) *
           (s.transpose() * m * s);

  // Conjugation by the reflection moves only entries that vanish on N_alpha;
  // anything that lands below the diagonal is numerical residue.
  double dust = 0.0;
  for (int i = 0; i < desc.dim; ++i) {
    dust = std::max(dust, std::abs(next.n(i, i) - 1.0));
    next.n(i, i) = 1.0;
    for (int j = 0; j < i; ++j) {
      dust = std::max(dust, std::abs(next.n(i, j)));
      next.n(i, j) = 0.0;
    }
  }
  if (dust > drift_tol)
    throw std::runtime_error("reflection_step: unipotent part drifted off N (residue " +
                             std::to_string(dust) + ")");
  return next;
}

ReduceResult reduce(const GroupDescriptor& desc, const RealMatrix& H,
                    const ReduceOptions& options) {
  if (!(options.delta > 0.25 && options.delta < 1.0))
    throw std::domain_error("delta must lie in (1/4, 1)");
  if (!check_compatible(desc, H, options.tol))
    throw IncompatibleGram("reduce: input Gram matrix is not compatible with the group form");

  const IwasawaPair start = restore_compatible(desc, H, options.tol);

  LoopState st{desc, options, gram_of(start), rational_identity(desc.dim), start.a, start.n,
               0, 0, 0, {}};
  if (options.max_reflections >= 0) {
    st.cap = options.max_reflections;
  } else {
    const double s0 = sigma_eval(desc, st.a);
    const double steps = std::log(std::max(1.0, s0)) / std::log(1.0 / options.delta);
    st.cap = 10 * (1 + static_cast<long>(std::ceil(steps)));
  }

  const auto drive = [&] {
    if (options.specialized_driver && desc.kind != GroupKind::SL) {
      if (desc.kind == GroupKind::G2)
        drive_g2(st);
      else
        drive_chain(st);
    } else {
      drive_generic(st);
    }
  };

  // Drive to a reduced point, then re-derive the coordinates from the exact
  // conjugation; boundary jitter in the refreshed coordinates sends the loop
  // around again.
  for (int round = 0;; ++round) {
    drive();
    st.refresh();
    if (is_reduced(desc, options.delta, st.a, st.n)) break;
    if (round >= 8) throw IterationLimit("reduce: refreshed point keeps leaving the window");
  }

  ReduceResult out;
  out.gamma = std::move(st.gamma);
  out.point = {st.a, st.n};
  out.restored_H = st.H;
  out.reflections = st.reflections;
  out.trace = std::move(st.trace);
  const RealMatrix lhs = gram_of(out.point);
  const RealMatrix rhs = exact_conjugate_form(out.gamma, st.H);
  out.equivariance_error = max_abs(RealMatrix(lhs - rhs)) / std::max(1.0, max_abs(rhs));
  return out;
}

}  // namespace latred
