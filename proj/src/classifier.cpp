#include "lindeg/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lindeg/errors.hpp"

namespace lindeg {

namespace {

void check_shape(const RankSequence& r, const DimVector& d) {
  if (r.m() != d.m() || r.n() != d.n())
    throw ValidationError("rank sequence has (m, n) = (" + std::to_string(r.m()) + ", " +
                          std::to_string(r.n()) + ") but d has (" + std::to_string(d.m()) +
                          ", " + std::to_string(d.n()) + ")");
}

bool dominates(const RankSequence& r, const RankSequence& s) { return degenerates_to(r, s); }

std::vector<int> constant(int n, int m) { return std::vector<int>(static_cast<std::size_t>(n), m); }

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

long long grassmann_dim(const DimVector& d) {
  return euler_form(d.values(), minus(constant(d.n(), d.m()), d.values()));
}

}  // namespace

std::vector<Segment> split_product(const RankSequence& r, const DimVector& d) {
  check_shape(r, d);
  std::vector<Segment> out;
  int first = 1;
  for (int v = 1; v <= r.n(); ++v) {
    if (v < r.n() && r.map_rank(v) != 0) continue;
    const int len = v - first + 1;
    ExtendedRanks sub(len);
    for (int a = first; a <= v; ++a)
      for (int b = a; b <= v; ++b) sub.set(a - first + 1, b - first + 1, r.table()(a, b));
    std::vector<int> dv(d.values().begin() + (first - 1), d.values().begin() + v);
    out.push_back({first, v, DimVector(d.m(), std::move(dv)), RankSequence(r.m(), std::move(sub))});
    first = v + 1;
  }
  return out;
}

bool is_smooth(const RankSequence& r) {
  for (int i = 1; i < r.n(); ++i)
    if (r.map_rank(i) != 0 && r.map_rank(i) != r.m()) return false;
  return true;
}

bool is_irreducible(const RankSequence& r, const DimVector& d) {
  check_shape(r, d);
  for (int i = 1; i < r.n(); ++i)
    if (r.map_rank(i) != 0 && d.step(i) < r.m() - r.map_rank(i)) return false;
  return true;
}

FlatFlags flat_flags(const RankSequence& r, const DimVector& d) {
  check_shape(r, d);
  const Stratum own = stratum_of(r);
  const StratumTargets t = stratum_rank_targets(own, d);
  FlatFlags f;
  f.flat_in_stratum = dominates(r, t.flat);
  f.flat_irr_in_stratum = dominates(r, t.flat_irr);
  // r lies in closure(S_J) exactly when J is contained in its own stratum.
  const std::size_t k = own.arrows.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k) && !f.in_U_irr; ++mask) {
    Stratum j;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) j.arrows.push_back(own.arrows[b]);
    if (dominates(r, stratum_rank_targets(j, d).flat_irr)) f.in_U_irr = true;
  }
  return f;
}

long long dimension(const RankSequence& r, const DimVector& d) {
  if (!flat_flags(r, d).flat_in_stratum)
    throw NotFlat("dimension formula needs a tuple in the flat locus of its stratum");
  long long total = 0;
  for (const Segment& s : split_product(r, d)) total += grassmann_dim(s.d);
  return total;
}

bool is_well_behaved(const RankSequence& r, const DimVector& d) {
  check_shape(r, d);
  return r == RankSequence::of(well_behaved_rep(d));
}

bool is_well_behaved_matrices(const RepMatrices& rep, const DimVector& d) {
  if (rep.n() != d.n()) throw ValidationError("representation length differs from d");
  for (int v : rep.dims())
    if (v != d.m()) throw ValidationError("representation does not have constant vertex dimension m");
  long long kernel_total = 0;
  Subspace kernels = Subspace::zero(rep.field(), static_cast<std::size_t>(d.m()));
  for (int i = 1; i < rep.n(); ++i) {
    const Matrix& f = rep.arrow(i);
    if (static_cast<int>(rank(f)) != d.m() - d.step(i)) return false;
    const Subspace k = kernel(f);
    kernel_total += static_cast<long long>(k.dim());
    kernels = sum(kernels, k);
  }
  return static_cast<long long>(kernels.dim()) == kernel_total;
}

Decomposition mh_decomposition(int m, int n, int h) {
  if (h < 1 || h >= n) throw ValidationError("h must lie in 1..n-1");
  Decomposition dec(n);
  dec.add({1, n}, m - 1).add({1, h}).add({h + 1, n});
  return dec;
}

std::string to_string(SingularKind kind) {
  switch (kind) {
    case SingularKind::empty: return "empty";
    case SingularKind::exact: return "exact";
    case SingularKind::bounded: return "bounded";
  }
  return "";
}

SingularInfo singular_model_Mh(int m, const DimVector& d, int h) {
  if (d.m() != m) throw ValidationError("d is not a dimension vector for m");
  const int n = d.n();
  if (h < 1 || h >= n) throw ValidationError("h = " + std::to_string(h) + " outside 1..n-1");
  Decomposition mp(n);
  mp.add({1, n}, m - 1);
  if (h >= 2) mp.add({1, h - 1});
  if (h + 2 <= n) mp.add({h + 2, n});
  std::vector<int> dp = d.values();
  dp[static_cast<std::size_t>(h - 1)] -= 1;
  SingularInfo info;
  info.kind = SingularKind::exact;
  info.sing_dim = euler_form(dp, minus(mp.dims(), dp));
  info.sing_codim = 2LL * d.step(h) + 1;
  info.model = SingularModel{std::move(mp), std::move(dp)};
  if (*info.sing_dim + *info.sing_codim != grassmann_dim(d))
    throw std::logic_error("singular model dimension inconsistent with the Euler form");
  return info;
}

namespace {

struct SegmentSingular {
  bool smooth = false;
  long long lower = 0;
  long long upper = 0;
  std::optional<SingularModel> model;
};

SegmentSingular segment_singular(const Segment& s) {
  const RankSequence& r = s.ranks;
  const int m = r.m();
  const int n = r.n();
  SegmentSingular out;
  if (r == RankSequence::identity(m, n)) {
    out.smooth = true;
    return out;
  }
  for (int h = 1; h < n; ++h) {
    if (r == RankSequence::of(mh_decomposition(m, n, h))) {
      SingularInfo info = singular_model_Mh(m, s.d, h);
      out.lower = out.upper = *info.sing_codim;
      out.model = std::move(info.model);
      return out;
    }
  }
  bool unit_steps = true;
  int d_f = -1;
  for (int i = 1; i < n; ++i) {
    if (s.d.step(i) != 1) unit_steps = false;
    if (r.map_rank(i) < m && (d_f < 0 || s.d.step(i) < d_f)) d_f = s.d.step(i);
  }
  if (unit_steps) {
    out.lower = out.upper = 3;
    return out;
  }
  out.lower = 3;
  out.upper = 2LL * d_f + 1;
  return out;
}

}  // namespace

SingularInfo singular_summary(const RankSequence& r, const DimVector& d) {
  if (!flat_flags(r, d).in_U_irr)
    throw NotIrreducible("singular locus summary needs an irreducible degeneration");
  const std::vector<Segment> segments = split_product(r, d);
  std::optional<long long> lower, upper;
  std::optional<SingularModel> model;
  for (const Segment& s : segments) {
    SegmentSingular ss = segment_singular(s);
    if (ss.smooth) continue;
    lower = lower ? std::min(*lower, ss.lower) : ss.lower;
    upper = upper ? std::min(*upper, ss.upper) : ss.upper;
    if (segments.size() == 1) model = std::move(ss.model);
  }
  SingularInfo info;
  if (!lower) return info;
  if (*lower == *upper) {
    info.kind = SingularKind::exact;
    info.sing_codim = *lower;
    info.sing_dim = dimension(r, d) - *lower;
    info.model = std::move(model);
  } else {
    info.kind = SingularKind::bounded;
    info.codim_lower = *lower;
    info.codim_upper = *upper;
  }
  return info;
}

SubrepPoint CoordinatePoint::to_subrep(const Field& field, int m) const {
  SubrepPoint p;
  for (const auto& s : sets) p.spaces.push_back(Subspace::coordinate(field, static_cast<std::size_t>(m), s));
  return p;
}

CoordinatePoint construct_singular_witness(const ProjectionTuple& j, const DimVector& d) {
  const int m = j.m;
  const int n = j.n();
  if (d.m() != m || d.n() != n) throw ValidationError("projection tuple and d disagree on (m, n)");
  int h = 0;
  for (int i = 1; i < n; ++i) {
    const auto& zi = j.zero_sets[static_cast<std::size_t>(i - 1)];
    const int rk = m - static_cast<int>(zi.size());
    if (rk < m - d.step(i)) throw PreconditionError("projection tuple is not flat-irreducible");
    if (rk < m && h == 0) h = i;
  }
  if (h == 0) throw PreconditionError("every map has full rank; the degeneration is smooth");
  // Relabel so that the first killed index of f_h plays the role of v_1.
  std::vector<std::size_t> label(static_cast<std::size_t>(m) + 1);
  std::iota(label.begin(), label.end(), 0);
  std::swap(label[1], label[j.zero_sets[static_cast<std::size_t>(h - 1)].front()]);

  std::vector<std::size_t> b;
  for (int k = 1; k <= d.at(1); ++k) b.push_back(static_cast<std::size_t>(k));
  CoordinatePoint out;
  auto emit = [&] {
    std::vector<std::size_t> s;
    for (std::size_t k : b) s.push_back(label[k]);
    std::sort(s.begin(), s.end());
    out.sets.push_back(std::move(s));
  };
  emit();
  for (int i = 1; i < n; ++i) {
    for (int k = d.at(i) + 1; k <= d.at(i + 1); ++k) b.push_back(static_cast<std::size_t>(k));
    if (i == h) {
      b.erase(std::find(b.begin(), b.end(), std::size_t{1}));
      b.push_back(static_cast<std::size_t>(m));
    }
    emit();
  }
  return out;
}

namespace {

DegenerationReport build_report(const RankSequence& r, const DimVector& d, bool well_behaved) {
  check_shape(r, d);
  DegenerationReport rep{.ranks = r,
                         .d = d,
                         .stratum = stratum_of(r),
                         .decomposition = decompose_from_ranks(r.table()),
                         .segments = split_product(r, d),
                         .smooth = is_smooth(r),
                         .irreducible = is_irreducible(r, d),
                         .flat = flat_flags(r, d),
                         .well_behaved = well_behaved,
                         .normal = std::nullopt,
                         .regular_codim2 = std::nullopt,
                         .dimension = std::nullopt,
                         .singular = std::nullopt};
  if (rep.irreducible) {
    rep.normal = true;
    rep.regular_codim2 = true;
  }
  if (rep.flat.flat_in_stratum) rep.dimension = dimension(r, d);
  if (rep.flat.in_U_irr) rep.singular = singular_summary(r, d);
  return rep;
}

}  // namespace

DegenerationReport classify(const RankSequence& r, const DimVector& d) {
  if (!is_realizable(r)) throw NotRealizable("rank sequence is not realizable");
  return build_report(r, d, r.n() == d.n() && r.m() == d.m() && is_well_behaved(r, d));
}

DegenerationReport classify(const RepMatrices& rep, const DimVector& d) {
  const RankSequence r = RankSequence::of(rep);
  check_shape(r, d);
  return build_report(r, d, is_well_behaved_matrices(rep, d));
}

}  // namespace lindeg
