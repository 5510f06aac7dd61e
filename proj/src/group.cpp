#include "latred/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace latred {

namespace {

// label -g..-1, 1..g  ->  position 0..2g-1 in the printed basis order
int pos(int label, int g) {
  if (label == 0 || label < -g || label > g) throw std::invalid_argument("bad basis label");
  return label < 0 ? g + label : g + label - 1;
}

Eigen::VectorXi zeros(int n) { return Eigen::VectorXi::Zero(n); }

template <typename Scalar>
Scalar int_pow(const Scalar& base, int e) {
  Scalar r(1);
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

RootData make_root(RootLabel label, std::vector<PatternEntry> pattern, Eigen::VectorXi char_exp,
                   int marker_row, int marker_col, int marker_sign) {
  RootData r;
  r.label = label;
  r.pattern = std::move(pattern);
  r.char_exponents = std::move(char_exp);
  r.marker_row = marker_row;
  r.marker_col = marker_col;
  r.marker_sign = marker_sign;
  return r;
}

// s_alpha = u_alpha(1) u_{-alpha}(-1) u_alpha(1) with u_{-alpha}(t) = t(u_alpha(t)).
RationalMatrix canonical_reflection(const GroupDescriptor& desc, int root_index) {
  const RationalMatrix u1 = root_group_element<Rational>(desc, root_index, Rational(1));
  const RationalMatrix um =
      root_group_element<Rational>(desc, root_index, Rational(-1)).transpose();
  return u1 * um * u1;
}

void solve_simple_coordinates(GroupDescriptor& desc) {
  // Express each positive root in the simple-root basis by exact elimination
  // over the character exponents.
  const int r = desc.rank;
  RationalMatrix basis(desc.dim, r);
  for (int k = 0; k < r; ++k)
    for (int p = 0; p < desc.dim; ++p) basis(p, k) = Rational(desc.positive[k].char_exponents[p]);
  for (auto& root : desc.positive) {
    RationalMatrix rhs(desc.dim, 1);
    for (int p = 0; p < desc.dim; ++p) rhs(p, 0) = Rational(root.char_exponents[p]);
    // least-squares-free exact solve: pick r independent rows by elimination
    RationalMatrix a = basis, b = rhs;
    Eigen::VectorXi coords = zeros(r);
    std::vector<int> pivot_rows;
    int col = 0;
    for (int row = 0; row < desc.dim && col < r; ++row) {
      int pr = -1;
      for (int rr = row; rr < desc.dim; ++rr)
        if (a(rr, col) != 0) {
          pr = rr;
          break;
        }
      if (pr < 0) continue;
      a.row(pr).swap(a.row(row));
      b.row(pr).swap(b.row(row));
      const Rational p = a(row, col);
      for (int c = 0; c < r; ++c) a(row, c) /= p;
      b(row, 0) /= p;
      for (int rr = 0; rr < desc.dim; ++rr) {
        if (rr == row || a(rr, col) == 0) continue;
        const Rational f = a(rr, col);
        for (int c = 0; c < r; ++c) a(rr, c) -= f * a(row, c);
        b(rr, 0) -= f * b(row, 0);
      }
      pivot_rows.push_back(row);
      ++col;
    }
    if (col != r) throw std::logic_error("simple roots do not span");
    for (int k = 0; k < r; ++k) {
      const Rational v = b(pivot_rows[k], 0);
      if (!is_integer(v)) throw std::logic_error("non-integral simple-root coordinate");
      coords[k] = static_cast<int>(numerator(v).convert_to<long long>());
      if (coords[k] < 0) throw std::logic_error("negative simple-root coordinate");
    }
    // consistency of the remaining rows
    for (int row = 0; row < desc.dim; ++row) {
      Rational acc(0);
      for (int k = 0; k < r; ++k) acc += Rational(desc.positive[k].char_exponents[row]) * coords[k];
      if (acc != Rational(root.char_exponents[row]))
        throw std::logic_error("inconsistent root coordinates");
    }
    root.simple_coords = coords;
    root.height = coords.sum();
  }
}

void sort_by_height(GroupDescriptor& desc) {
  std::stable_sort(desc.positive.begin(), desc.positive.end(),
                   [](const RootData& a, const RootData& b) { return a.height < b.height; });
}

void validate(GroupDescriptor& desc);

GroupDescriptor build_sl(int g) {
  if (g < 2) throw std::invalid_argument("SL_g needs g >= 2");
  GroupDescriptor d;
  d.kind = GroupKind::SL;
  d.g = g;
  d.dim = g;
  d.rank = g - 1;

  for (int k = 0; k < d.rank; ++k) {
    const int i = k + 1, j = k + 2;
    Eigen::VectorXi ce = zeros(g);
    ce[i - 1] = 1;
    ce[j - 1] = -1;
    d.positive.push_back(
        make_root(RootLabel::difference(i, j), {{i - 1, j - 1, 1, 1}}, ce, i - 1, j - 1, 1));
    Eigen::VectorXi co = zeros(g);
    co[i - 1] = 1;
    co[j - 1] = -1;
    d.coroot_exponents.push_back(co);
  }
  for (int h = 2; h < g; ++h) {
    for (int i = 1; i + h <= g; ++i) {
      const int j = i + h;
      Eigen::VectorXi ce = zeros(g);
      ce[i - 1] = 1;
      ce[j - 1] = -1;
      d.positive.push_back(
          make_root(RootLabel::difference(i, j), {{i - 1, j - 1, 1, 1}}, ce, i - 1, j - 1, 1));
    }
  }
  // classic column order: j = 2..g, i = j-1 .. 1
  solve_simple_coordinates(d);
  sort_by_height(d);
  for (int j = 2; j <= g; ++j)
    for (int i = j - 1; i >= 1; --i) d.red_schedule.push_back(d.find_root(RootLabel::difference(i, j)));
  validate(d);
  return d;
}

GroupDescriptor build_classical(GroupKind kind, int g) {
  if (kind == GroupKind::Sp && g < 2) throw std::invalid_argument("Sp_2g needs g >= 2");
  if (kind == GroupKind::SO && g < 3) throw std::invalid_argument("SO_2g needs g >= 3");
  GroupDescriptor d;
  d.kind = kind;
  d.g = g;
  d.dim = 2 * g;
  d.rank = g;

  RationalMatrix s(d.dim, d.dim);
  s.setConstant(Rational(0));
  for (int k = 0; k < g; ++k) {
    s(k, d.dim - 1 - k) = Rational(1);
    s(d.dim - 1 - k, k) = kind == GroupKind::Sp ? Rational(-1) : Rational(1);
  }
  d.form_exact = s;
  d.form = to_real(s);

  auto char_of = [&](std::initializer_list<std::pair<int, int>> terms) {
    Eigen::VectorXi v = zeros(d.dim);
    for (auto [label, e] : terms) v[pos(label, g)] += e;
    return v;
  };
  auto diff_root = [&](int i, int j) {
    // eps_i - eps_j, i < j <= -1:  u(t) = 1 + t (E_{i,j} - E_{-j,-i})
    return make_root(RootLabel::difference(i, j),
                     {{pos(i, g), pos(j, g), 1, 1}, {pos(-j, g), pos(-i, g), -1, 1}},
                     char_of({{i, 1}, {j, -1}}), pos(i, g), pos(j, g), 1);
  };
  auto sum_root = [&](int i, int j) {
    // eps_i + eps_j, i < j <= -1
    if (kind == GroupKind::Sp)
      return make_root(RootLabel::sum(i, j),
                       {{pos(i, g), pos(-j, g), 1, 1}, {pos(j, g), pos(-i, g), 1, 1}},
                       char_of({{i, 1}, {j, 1}}), pos(i, g), pos(-j, g), 1);
    // SO sign choice matches the printed special reflection.
    return make_root(RootLabel::sum(i, j),
                     {{pos(j, g), pos(-i, g), 1, 1}, {pos(i, g), pos(-j, g), -1, 1}},
                     char_of({{i, 1}, {j, 1}}), pos(i, g), pos(-j, g), -1);
  };
  auto long_root = [&](int i) {
    // 2 eps_i:  u(t) = 1 + t E_{i,-i}
    return make_root(RootLabel::long_root(i), {{pos(i, g), pos(-i, g), 1, 1}},
                     char_of({{i, 2}}), pos(i, g), pos(-i, g), 1);
  };

  // simple roots in the stored Delta order -g..-1
  for (int i = -g; i <= -2; ++i) {
    d.positive.push_back(diff_root(i, i + 1));
    Eigen::VectorXi co = zeros(d.dim);
    co[pos(i, g)] = 1;
    co[pos(i + 1, g)] = -1;
    co[pos(-i, g)] = -1;
    co[pos(-(i + 1), g)] = 1;
    d.coroot_exponents.push_back(co);
  }
  if (kind == GroupKind::Sp) {
    d.positive.push_back(long_root(-1));
    Eigen::VectorXi co = zeros(d.dim);
    co[pos(-1, g)] = 1;
    co[pos(1, g)] = -1;
    d.coroot_exponents.push_back(co);
  } else {
    d.positive.push_back(sum_root(-2, -1));
    Eigen::VectorXi co = zeros(d.dim);
    co[pos(-2, g)] = 1;
    co[pos(-1, g)] = 1;
    co[pos(1, g)] = -1;
    co[pos(2, g)] = -1;
    d.coroot_exponents.push_back(co);
  }

  for (int i = -g; i <= -1; ++i) {
    for (int j = i + 2; j <= -1; ++j) d.positive.push_back(diff_root(i, j));
  }
  for (int i = -g; i <= -1; ++i) {
    if (kind == GroupKind::Sp && i != -1) d.positive.push_back(long_root(i));
    for (int j = i + 1; j <= -1; ++j) {
      if (kind == GroupKind::SO && i == -2 && j == -1) continue;  // simple, already stored
      d.positive.push_back(sum_root(i, j));
    }
  }

  solve_simple_coordinates(d);
  sort_by_height(d);

  // printed column-operation schedule
  for (int j = -g + 1; j <= -1; ++j)
    for (int i = j - 1; i >= -g; --i) d.red_schedule.push_back(d.find_root(RootLabel::difference(i, j)));
  for (int j = 1; j <= g; ++j) {
    const int top = kind == GroupKind::Sp ? -j : -j - 1;
    for (int i = top; i >= -g; --i) {
      if (i == -j)
        d.red_schedule.push_back(d.find_root(RootLabel::long_root(i)));
      else
        d.red_schedule.push_back(d.find_root(RootLabel::sum(i, -j)));
    }
  }
  validate(d);
  return d;
}

GroupDescriptor build_g2() {
  GroupDescriptor d;
  d.kind = GroupKind::G2;
  d.g = 0;
  d.dim = 8;
  d.rank = 2;

  RationalMatrix s(8, 8);
  s.setConstant(Rational(0));
  for (int k = 0; k < 8; ++k) s(k, 7 - k) = Rational(1);
  d.form_exact = s;
  d.form = to_real(s);

  // 1-based (row, col, coeff, degree) patterns of the printed generators.
  const std::vector<std::vector<PatternEntry>> patterns = {
      {{1, 2, 1, 1}, {3, 4, 1, 1}, {3, 5, -1, 1}, {3, 6, 1, 2}, {4, 6, 1, 1}, {5, 6, -1, 1}, {7, 8, -1, 1}},
      {{2, 3, 1, 1}, {6, 7, -1, 1}},
      {{1, 3, 1, 1}, {2, 4, -1, 1}, {2, 5, 1, 1}, {2, 7, 1, 2}, {4, 7, -1, 1}, {5, 7, 1, 1}, {6, 8, -1, 1}},
      {{1, 4, 1, 1}, {1, 5, -1, 1}, {1, 8, 1, 2}, {2, 6, -1, 1}, {3, 7, 1, 1}, {4, 8, 1, 1}, {5, 8, -1, 1}},
      {{1, 6, 1, 1}, {3, 8, -1, 1}},
      {{1, 7, 1, 1}, {2, 8, -1, 1}},
  };
  const int markers[6][2] = {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {1, 6}, {1, 7}};
  // torus diag(st, s, t, 1, 1, 1/t, 1/s, 1/(st)); characters written over the
  // free diagonal positions s (index 1) and t (index 2) so the exponent
  // vectors add like the characters themselves
  const int chars[6][8] = {
      {0, 0, 1, 0, 0, 0, 0, 0},   // alpha_1 = t
      {0, 1, -1, 0, 0, 0, 0, 0},  // alpha_2 = s/t
      {0, 1, 0, 0, 0, 0, 0, 0},   // s
      {0, 1, 1, 0, 0, 0, 0, 0},   // st
      {0, 1, 2, 0, 0, 0, 0, 0},   // st^2
      {0, 2, 1, 0, 0, 0, 0, 0},   // s^2 t
  };
  for (int k = 0; k < 6; ++k) {
    std::vector<PatternEntry> pat;
    for (const auto& e : patterns[k]) pat.push_back({e.row - 1, e.col - 1, e.coeff, e.degree});
    Eigen::VectorXi ce(8);
    for (int p = 0; p < 8; ++p) ce[p] = chars[k][p];
    d.positive.push_back(make_root(RootLabel::exceptional(k + 1), std::move(pat), ce,
                                   markers[k][0] - 1, markers[k][1] - 1, 1));
  }
  Eigen::VectorXi co1(8), co2(8);
  co1 << 1, -1, 2, 0, 0, -2, 1, -1;
  co2 << 0, 1, -1, 0, 0, 1, -1, 0;
  d.coroot_exponents = {co1, co2};

  solve_simple_coordinates(d);
  sort_by_height(d);
  for (int k = 0; k < 6; ++k) d.red_schedule.push_back(k);
  validate(d);
  return d;
}

void validate(GroupDescriptor& desc) {
  const int r = desc.root_count();
  // simple roots first, heights ascending
  for (int k = 0; k < desc.rank; ++k)
    if (desc.positive[k].height != 1) throw std::logic_error("simple roots must come first");
  for (int k = 1; k < r; ++k)
    if (desc.positive[k].height < desc.positive[k - 1].height)
      throw std::logic_error("ordering must respect height");

  // good ordering: alpha_k = c_i alpha_i + c_j alpha_j forces k > max(i, j)
  for (int k = 0; k < r; ++k) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        for (int ci = 1; ci <= 6; ++ci) {
          for (int cj = 1; cj <= 6; ++cj) {
            if (desc.positive[k].simple_coords ==
                ci * desc.positive[i].simple_coords + cj * desc.positive[j].simple_coords) {
              if (k <= std::max(i, j)) throw std::logic_error("stored ordering is not good");
            }
          }
        }
      }
    }
  }

  // marker probe: the marker coordinate of u_alpha(t) must be t
  for (int k = 0; k < r; ++k) {
    for (int t : {1, 2}) {
      const RationalMatrix u = root_group_element<Rational>(desc, k, Rational(t));
      if (marker_coordinate(desc, k, u) != Rational(t))
        throw std::logic_error("marker entry does not read the parameter");
    }
  }

  // generators preserve the form exactly for integer parameters
  if (desc.form_exact) {
    const RationalMatrix& s = *desc.form_exact;
    for (int k = 0; k < r; ++k) {
      const RationalMatrix u = root_group_element<Rational>(desc, k, Rational(3));
      if (RationalMatrix(u.transpose() * s * u) != s)
        throw std::logic_error("generator does not preserve the form");
    }
  }

  // coroot pairing <alpha, alpha_check> = 2, exactly on exponents
  for (int k = 0; k < desc.rank; ++k) {
    long pairing = 0;
    for (int p = 0; p < desc.dim; ++p)
      pairing += static_cast<long>(desc.positive[k].char_exponents[p]) *
                 desc.coroot_exponents[k][p];
    if (pairing != 2) throw std::logic_error("coroot pairing must equal 2");
  }

  // reflections: canonical product, orthogonal and form-preserving
  desc.reflections.clear();
  desc.reflections_real.clear();
  for (int k = 0; k < desc.rank; ++k) {
    RationalMatrix s = canonical_reflection(desc, k);
    const RationalMatrix id = rational_identity(desc.dim);
    if (RationalMatrix(s.transpose() * s) != id) throw std::logic_error("reflection not orthogonal");
    if (desc.form_exact &&
        RationalMatrix(s.transpose() * (*desc.form_exact) * s) != *desc.form_exact)
      throw std::logic_error("reflection does not preserve the form");
    desc.reflections_real.push_back(to_real(s));
    desc.reflections.push_back(std::move(s));
  }

  // schedule covers every root exactly once
  std::vector<int> seen(r, 0);
  for (int idx : desc.red_schedule) {
    if (idx < 0 || idx >= r || seen[idx]++) throw std::logic_error("bad size-reduction schedule");
  }
  if (static_cast<int>(desc.red_schedule.size()) != r)
    throw std::logic_error("size-reduction schedule must cover all roots");
}

}  // namespace

GroupKind parse_group_kind(const std::string& name) {
  if (name == "sl") return GroupKind::SL;
  if (name == "sp") return GroupKind::Sp;
  if (name == "so") return GroupKind::SO;
  if (name == "g2") return GroupKind::G2;
  throw std::invalid_argument("unknown group kind: " + name);
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::SL: return "sl";
    case GroupKind::Sp: return "sp";
    case GroupKind::SO: return "so";
    case GroupKind::G2: return "g2";
  }
  return "?";
}

std::string to_string(const RootLabel& label) {
  switch (label.type) {
    case RootLabel::Type::Difference:
      return "e(" + std::to_string(label.i) + ")-e(" + std::to_string(label.j) + ")";
    case RootLabel::Type::Sum:
      return "e(" + std::to_string(label.i) + ")+e(" + std::to_string(label.j) + ")";
    case RootLabel::Type::Long: return "2e(" + std::to_string(label.i) + ")";
    case RootLabel::Type::Exceptional: return "alpha" + std::to_string(label.i);
  }
  return "?";
}

int GroupDescriptor::find_root(const RootLabel& label) const {
  for (int k = 0; k < root_count(); ++k)
    if (positive[k].label == label) return k;
  return -1;
}

GroupDescriptor make_group_descriptor(GroupKind kind, int g) {
  switch (kind) {
    case GroupKind::SL: return build_sl(g);
    case GroupKind::Sp: return build_classical(GroupKind::Sp, g);
    case GroupKind::SO: return build_classical(GroupKind::SO, g);
    case GroupKind::G2: return build_g2();
  }
  throw std::invalid_argument("unknown group kind");
}

template <typename Scalar>
Matrix<Scalar> root_group_element(const GroupDescriptor& desc, int root_index, const Scalar& t) {
  if (root_index < 0 || root_index >= desc.root_count())
    throw std::out_of_range("root_group_element: unknown root");
  Matrix<Scalar> m(desc.dim, desc.dim);
  m.setConstant(Scalar(0));
  for (int i = 0; i < desc.dim; ++i) m(i, i) = Scalar(1);
  for (const auto& e : desc.positive[root_index].pattern)
    m(e.row, e.col) += Scalar(e.coeff) * int_pow(t, e.degree);
  return m;
}

template Matrix<double> root_group_element<double>(const GroupDescriptor&, int, const double&);
template Matrix<Rational> root_group_element<Rational>(const GroupDescriptor&, int,
                                                       const Rational&);

const RationalMatrix& simple_reflection(const GroupDescriptor& desc, int simple) {
  if (simple < 0 || simple >= desc.rank)
    throw std::out_of_range("simple_reflection: not a simple root");
  return desc.reflections[simple];
}

double char_eval(const GroupDescriptor& desc, int root_index, const RealVector& a) {
  const auto& e = desc.positive.at(root_index).char_exponents;
  double v = 1.0;
  for (int p = 0; p < desc.dim; ++p) {
    for (int k = 0; k < e[p]; ++k) v *= a[p];
    for (int k = 0; k < -e[p]; ++k) v /= a[p];
  }
  return v;
}

RealVector coroot_apply(const GroupDescriptor& desc, int simple, double z) {
  if (simple < 0 || simple >= desc.rank) throw std::out_of_range("coroot_apply: not simple");
  if (!(z > 0.0)) throw std::domain_error("coroot_apply: z must be positive");
  RealVector a = RealVector::Ones(desc.dim);
  const auto& c = desc.coroot_exponents[simple];
  for (int p = 0; p < desc.dim; ++p) a[p] = std::pow(z, c[p]);
  return a;
}

RealVector reflect_torus(const GroupDescriptor& desc, int simple, const RealVector& a) {
  const double z = char_eval(desc, simple, a);
  return a.cwiseQuotient(coroot_apply(desc, simple, z));
}

double marker_coordinate(const GroupDescriptor& desc, int root_index, const RealMatrix& n) {
  const auto& r = desc.positive.at(root_index);
  return r.marker_sign * n(r.marker_row, r.marker_col);
}

Rational marker_coordinate(const GroupDescriptor& desc, int root_index, const RationalMatrix& n) {
  const auto& r = desc.positive.at(root_index);
  return Rational(r.marker_sign) * n(r.marker_row, r.marker_col);
}

double p_alpha(const GroupDescriptor& desc, int simple, const RealMatrix& n) {
  if (simple < 0 || simple >= desc.rank) throw std::out_of_range("p_alpha: not a simple root");
  return marker_coordinate(desc, simple, n);
}

bool in_omega(const GroupDescriptor& desc, const RealMatrix& n) {
  for (int k = 0; k < desc.root_count(); ++k) {
    const double t = marker_coordinate(desc, k, n);
    if (!(t >= -0.5 && t < 0.5)) return false;
  }
  return true;
}

bool is_valid_torus(const GroupDescriptor& desc, const RealVector& a, double rel_tol) {
  if (a.size() != desc.dim) return false;
  for (int p = 0; p < desc.dim; ++p)
    if (!(a[p] > 0.0)) return false;
  switch (desc.kind) {
    case GroupKind::SL: {
      double prod = 1.0;
      for (int p = 0; p < desc.dim; ++p) prod *= a[p];
      return std::abs(prod - 1.0) <= rel_tol * desc.dim;
    }
    case GroupKind::Sp:
    case GroupKind::SO: {
      for (int p = 0; p < desc.g; ++p)
        if (std::abs(a[p] * a[desc.dim - 1 - p] - 1.0) > rel_tol) return false;
      return true;
    }
    case GroupKind::G2: {
      if (std::abs(a[3] - 1.0) > rel_tol || std::abs(a[4] - 1.0) > rel_tol) return false;
      for (int p = 0; p < 3; ++p)
        if (std::abs(a[p] * a[7 - p] - 1.0) > rel_tol) return false;
      return std::abs(a[0] - a[1] * a[2]) <= rel_tol * a[0];
    }
  }
  return false;
}

bool is_valid_unipotent(const GroupDescriptor& desc, const RealMatrix& n, double rel_tol) {
  if (n.rows() != desc.dim || n.cols() != desc.dim) return false;
  for (int i = 0; i < desc.dim; ++i) {
    if (std::abs(n(i, i) - 1.0) > rel_tol) return false;
    for (int j = 0; j < i; ++j)
      if (std::abs(n(i, j)) > rel_tol) return false;
  }
  if (desc.form) {
    const RealMatrix& s = *desc.form;
    const double resid = max_abs(RealMatrix(n.transpose() * s * n - s));
    const double scale = std::max(1.0, max_abs(n));
    if (resid > rel_tol * scale * scale) return false;
  }
  return true;
}

}  // namespace latred
