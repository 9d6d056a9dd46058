#include "lindeg/enumerator.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "lindeg/errors.hpp"

namespace lindeg {

namespace {

void check_enumerable(const RepMatrices& rep, std::span<const int> d) {
  if (!rep.field().is_prime()) throw ValidationError("enumeration needs a prime field");
  if (static_cast<int>(d.size()) != rep.n())
    throw ValidationError("dimension vector has length " + std::to_string(d.size()) +
                          ", representation has " + std::to_string(rep.n()) + " vertices");
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] < 0 || d[v] > rep.dims()[v])
      throw ValidationError("d_" + std::to_string(v + 1) + " = " + std::to_string(d[v]) +
                            " outside 0.." + std::to_string(rep.dims()[v]));
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

std::uint64_t enumeration_bound(const RepMatrices& rep, std::span<const int> d) {
  check_enumerable(rep, d);
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < d.size(); ++v)
    total = saturating_mul(total, gaussian_binomial(static_cast<std::size_t>(rep.dims()[v]),
                                                    static_cast<std::size_t>(d[v]),
                                                    rep.field().characteristic()));
  return total;
}

void for_each_subrep(const RepMatrices& rep, std::span<const int> d,
                     const std::function<void(const SubrepPoint&)>& visit, std::uint64_t limit) {
  const std::uint64_t bound = enumeration_bound(rep, d);
  if (bound > limit)
    throw GuardExceeded("enumeration bound " + std::to_string(bound) + " exceeds " +
                        std::to_string(limit));
  const int n = rep.n();
  std::vector<std::vector<Subspace>> candidates;
  for (int v = 0; v < n; ++v)
    candidates.push_back(all_subspaces(rep.field(), static_cast<std::size_t>(rep.dims()[v]),
                                       static_cast<std::size_t>(d[v])));
  SubrepPoint point;
  point.spaces.reserve(static_cast<std::size_t>(n));
  std::function<void(int)> descend = [&](int v) {
    if (v == n) {
      visit(point);
      return;
    }
    std::optional<Subspace> forced;
    if (v > 0) forced = map_subspace(rep.arrow(v), point.spaces.back());
    for (const Subspace& s : candidates[static_cast<std::size_t>(v)]) {
      if (forced && !contains(s, *forced)) continue;
      point.spaces.push_back(s);
      descend(v + 1);
      point.spaces.pop_back();
    }
  };
  descend(0);
}

std::vector<SubrepPoint> enumerate_subreps(const RepMatrices& rep, std::span<const int> d,
                                           std::uint64_t limit) {
  std::vector<SubrepPoint> out;
  for_each_subrep(rep, d, [&](const SubrepPoint& p) { out.push_back(p); }, limit);
  return out;
}

std::uint64_t count_subreps(const RepMatrices& rep, std::span<const int> d, std::uint64_t limit) {
  std::uint64_t count = 0;
  for_each_subrep(rep, d, [&](const SubrepPoint&) { ++count; }, limit);
  return count;
}

namespace {

void combinations(int m, int k, int start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= m; ++i) {
    cur.push_back(static_cast<std::size_t>(i));
    combinations(m, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CoordinatePoint> fixed_points(const ProjectionTuple& j, std::span<const int> d) {
  const int n = j.n();
  if (static_cast<int>(d.size()) != n) throw ValidationError("d has the wrong length for the tuple");
  std::vector<std::vector<std::vector<std::size_t>>> subsets(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (d[v] < 0 || d[v] > j.m) throw ValidationError("d entry outside 0..m");
    std::vector<std::size_t> cur;
    combinations(j.m, d[v], 1, cur, subsets[static_cast<std::size_t>(v)]);
  }
  std::vector<CoordinatePoint> out;
  CoordinatePoint point;
  std::function<void(int)> descend = [&](int v) {
    if (v == n) {
      out.push_back(point);
      return;
    }
    for (const auto& s : subsets[static_cast<std::size_t>(v)]) {
      if (v > 0) {
        const auto& prev = point.sets.back();
        const auto& killed = j.zero_sets[static_cast<std::size_t>(v - 1)];
        bool ok = true;
        for (std::size_t x : prev)
          if (!std::binary_search(killed.begin(), killed.end(), x) &&
              !std::binary_search(s.begin(), s.end(), x)) {
            ok = false;
            break;
          }
        if (!ok) continue;
      }
      point.sets.push_back(s);
      descend(v + 1);
      point.sets.pop_back();
    }
  };
  descend(0);
  return out;
}

PointAnalysis analyze_point(const RepMatrices& rep, const SubrepPoint& l) {
  PointAnalysis a{decompose_from_ranks(rank_profile(subrep(rep, l))),
                  decompose_from_ranks(rank_profile(quotient_rep(rep, l)))};
  a.hom = hom_dim(a.sub_decomp, a.quot_decomp);
  a.ext = ext_dim(a.sub_decomp, a.quot_decomp);
  a.tangent_dim = a.hom;
  std::vector<int> segment(static_cast<std::size_t>(rep.n()) + 1, 0);
  for (int v = 2; v <= rep.n(); ++v)
    segment[v] = segment[v - 1] + (rep.arrow(v - 1).is_zero() ? 1 : 0);
  for (const auto& [x, kx] : a.sub_decomp.summands())
    for (const auto& [y, ky] : a.quot_decomp.summands())
      if (segment[x.a] == segment[y.a]) a.segment_ext += static_cast<long long>(kx) * ky * ext_dim(x, y);
  a.singular = a.segment_ext > 0;
  return a;
}

Census singular_point_census(const RepMatrices& rep, const DimVector& d, std::uint64_t limit) {
  const RankSequence r = RankSequence::of(rep);
  if (r.m() != d.m() || r.n() != d.n()) throw ValidationError("representation and d disagree on (m, n)");
  if (!is_irreducible(r, d)) throw NotIrreducible("census needs an irreducible degeneration");
  Census c;
  for_each_subrep(rep, d.values(), [&](const SubrepPoint& p) {
    ++c.total;
    if (analyze_point(rep, p).singular) ++c.singular;
  }, limit);
  return c;
}

RepMatrices mh_prime_matrices(const Field& field, int m, int n, int h) {
  if (h < 1 || h >= n) throw ValidationError("h must lie in 1..n-1");
  const auto um = static_cast<std::size_t>(m);
  Matrix drop(field, um - 1, um);
  Matrix include(field, um, um - 1);
  for (std::size_t i = 0; i + 1 < um; ++i) {
    drop.set(i, i + 1, 1);
    include.set(i + 1, i, 1);
  }
  std::vector<int> dims(static_cast<std::size_t>(n), m);
  dims[static_cast<std::size_t>(h - 1)] = m - 1;
  dims[static_cast<std::size_t>(h)] = m - 1;
  std::vector<Matrix> maps;
  for (int i = 1; i < n; ++i) {
    if (i == h - 1) maps.push_back(drop);
    else if (i == h) maps.push_back(Matrix::identity(field, um - 1));
    else if (i == h + 1) maps.push_back(include);
    else maps.push_back(Matrix::identity(field, um));
  }
  return RepMatrices(field, std::move(dims), std::move(maps));
}

namespace {

std::string describe(const SubrepPoint& p) {
  std::string s = "(";
  for (std::size_t v = 0; v < p.spaces.size(); ++v) {
    const Matrix& b = p.spaces[v].basis();
    s += v ? ", [" : "[";
    for (std::size_t r = 0; r < b.rows(); ++r) {
      s += r ? " " : "";
      for (std::size_t c = 0; c < b.cols(); ++c) s += b.entry_string(r, c);
    }
    s += "]";
  }
  return s + ")";
}

}  // namespace

SigmaCheck sigma_bijection_check(int m, const DimVector& d, int h, std::uint32_t p) {
  if (d.m() != m) throw ValidationError("d is not a dimension vector for m");
  const int n = d.n();
  if (h < 1 || h >= n) throw ValidationError("h must lie in 1..n-1");
  const Field field = Field::prime(p);
  const auto um = static_cast<std::size_t>(m);

  ProjectionTuple mh{m, std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(n - 1))};
  mh.zero_sets[static_cast<std::size_t>(h - 1)] = {1};
  const RepMatrices rep = mh.matrices(field);
  const RepMatrices prime = mh_prime_matrices(field, m, n, h);
  std::vector<int> dp = d.values();
  dp[static_cast<std::size_t>(h - 1)] -= 1;

  Matrix drop(field, um - 1, um);
  Matrix include(field, um, um - 1);
  for (std::size_t i = 0; i + 1 < um; ++i) {
    drop.set(i, i + 1, 1);
    include.set(i + 1, i, 1);
  }
  const std::size_t e1[] = {1};
  const Subspace v1 = Subspace::coordinate(field, um, e1);

  auto sigma = [&](const SubrepPoint& q) {
    SubrepPoint out;
    for (int v = 1; v <= n; ++v) {
      const Subspace& s = q.spaces[static_cast<std::size_t>(v - 1)];
      if (v == h) out.spaces.push_back(sum(map_subspace(include, s), v1));
      else if (v == h + 1) out.spaces.push_back(map_subspace(include, s));
      else out.spaces.push_back(s);
    }
    return out;
  };
  auto sigma_back = [&](const SubrepPoint& q) {
    SubrepPoint out;
    for (int v = 1; v <= n; ++v) {
      const Subspace& s = q.spaces[static_cast<std::size_t>(v - 1)];
      if (v == h || v == h + 1) out.spaces.push_back(map_subspace(drop, s));
      else out.spaces.push_back(s);
    }
    return out;
  };

  SigmaCheck check;
  std::set<SubrepPoint> singular;
  for_each_subrep(rep, d.values(), [&](const SubrepPoint& q) {
    ++check.total_points;
    if (analyze_point(rep, q).singular) singular.insert(q);
  });
  check.singular_points = singular.size();

  std::set<SubrepPoint> images;
  for_each_subrep(prime, dp, [&](const SubrepPoint& q) {
    ++check.model_points;
    if (!check.counterexample.empty()) return;
    const SubrepPoint s = sigma(q);
    if (s.dims() != d.values() || !is_subrep(rep, s)) {
      check.counterexample = "Sigma" + describe(q) + " is not a point of Gr_d(M^h)";
    } else if (!singular.contains(s)) {
      check.counterexample = "Sigma" + describe(q) + " = " + describe(s) + " is not singular";
    } else if (sigma_back(s) != q) {
      check.counterexample = "Sigma' o Sigma differs from the identity at " + describe(q);
    } else if (!images.insert(s).second) {
      check.counterexample = "Sigma is not injective at " + describe(q);
    }
  });
  if (check.counterexample.empty() && images.size() != singular.size()) {
    for (const SubrepPoint& s : singular)
      if (!images.contains(s)) {
        check.counterexample = "singular point " + describe(s) + " is not in the image of Sigma";
        break;
      }
  }
  check.ok = check.counterexample.empty();
  return check;
}

}  // namespace lindeg
