#include "lindeg/orbits.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "lindeg/errors.hpp"

namespace lindeg {

RankSequence::RankSequence(int m, ExtendedRanks ranks) : m_(m), ranks_(std::move(ranks)) {
  if (m < 0) throw ValidationError("ambient dimension must be nonnegative");
  for (int a = 1; a <= ranks_.n(); ++a)
    if (ranks_(a, a) != m)
      throw ValidationError("rank sequence diagonal must equal m = " + std::to_string(m));
}

RankSequence RankSequence::identity(int m, int n) {
  ExtendedRanks r(n);
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b) r.set(a, b, m);
  return RankSequence(m, std::move(r));
}

RankSequence RankSequence::zero(int m, int n) {
  ExtendedRanks r(n);
  for (int a = 1; a <= n; ++a) r.set(a, a, m);
  return RankSequence(m, std::move(r));
}

RankSequence RankSequence::of(const Decomposition& dec) {
  const int m = dec.dims().front();
  for (int d : dec.dims())
    if (d != m) throw ValidationError("representation does not have constant vertex dimension");
  return RankSequence(m, ranks_from_decomposition(dec));
}

RankSequence RankSequence::of(const RepMatrices& rep) {
  const int m = rep.dims().front();
  for (int d : rep.dims())
    if (d != m) throw ValidationError("representation does not have constant vertex dimension");
  return RankSequence(m, rank_profile(rep));
}

std::vector<int> RankSequence::map_ranks() const {
  std::vector<int> out;
  for (int i = 1; i < n(); ++i) out.push_back(map_rank(i));
  return out;
}

RepMatrices ProjectionTuple::matrices(const Field& field) const {
  std::vector<Matrix> maps;
  for (const auto& j : zero_sets)
    maps.push_back(Matrix::projection(field, static_cast<std::size_t>(m), j));
  if (maps.empty())
    return RepMatrices(field, {m}, {});
  return RepMatrices::from_maps(std::move(maps));
}

bool Stratum::contains(int arrow) const {
  return std::binary_search(arrows.begin(), arrows.end(), arrow);
}

std::string Stratum::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < arrows.size(); ++i) os << (i ? "," : "") << arrows[i];
  os << "}";
  return os.str();
}

bool is_realizable(const RankSequence& r) {
  for (const auto& [iv, k] : raw_multiplicities(r.table()))
    if (k < 0) return false;
  return true;
}

bool degenerates_to(const RankSequence& r, const RankSequence& s) {
  if (r.m() != s.m() || r.n() != s.n())
    throw ValidationError("rank sequences of different shape");
  for (int a = 1; a <= r.n(); ++a)
    for (int b = a + 1; b <= r.n(); ++b)
      if (s.table()(a, b) > r.table()(a, b)) return false;
  return true;
}

namespace {

struct OrbitWalker {
  int m;
  int n;
  std::size_t limit;
  Decomposition current;
  std::vector<RankSequence> out;

  // Live strands reaching vertex v from intervals started earlier.
  int live(int v) const {
    int s = 0;
    for (const auto& [iv, k] : current.summands())
      if (iv.a < v && iv.b >= v) s += k;
    return s;
  }

  void at_vertex(int v) {
    if (v > n) {
      if (out.size() >= limit)
        throw GuardExceeded("more than " + std::to_string(limit) + " orbits for m = " +
                            std::to_string(m) + ", n = " + std::to_string(n));
      out.emplace_back(RankSequence::of(current));
      return;
    }
    distribute(v, v, m - live(v));
  }

  // Split `need` new strands starting at v among ends b..n.
  void distribute(int v, int b, int need) {
    if (b == n) {
      const Decomposition saved = current;
      current.add({v, b}, need);
      at_vertex(v + 1);
      current = saved;
      return;
    }
    for (int k = need; k >= 0; --k) {
      const Decomposition saved = current;
      current.add({v, b}, k);
      distribute(v, b + 1, need - k);
      current = saved;
    }
  }
};

}  // namespace

std::vector<RankSequence> enumerate_orbits(int m, int n, std::size_t limit) {
  if (m < 0 || n < 1) throw ValidationError("enumerate_orbits needs m >= 0 and n >= 1");
  OrbitWalker w{m, n, limit, Decomposition(n), {}};
  w.at_vertex(1);
  std::sort(w.out.begin(), w.out.end(), [](const RankSequence& x, const RankSequence& y) {
    return x.table().flattened() > y.table().flattened();
  });
  return w.out;
}

ProjectionTuple representative(const RankSequence& r) {
  const Decomposition dec = decompose_from_ranks(r.table());
  const int n = r.n();
  ProjectionTuple out{r.m(), std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(n - 1))};
  std::set<std::size_t> free_idx;
  for (int i = 1; i <= r.m(); ++i) free_idx.insert(static_cast<std::size_t>(i));
  std::vector<std::pair<Interval, std::size_t>> live;  // interval, basis index
  for (int v = 1; v <= n; ++v) {
    // summands() is ordered by (a, b), so starters come out shortest first
    for (const auto& [iv, k] : dec.summands()) {
      if (iv.a != v) continue;
      for (int c = 0; c < k; ++c) {
        const std::size_t idx = *free_idx.begin();
        free_idx.erase(free_idx.begin());
        live.emplace_back(iv, idx);
      }
    }
    if (v == n) break;
    auto& zero_set = out.zero_sets[static_cast<std::size_t>(v - 1)];
    std::vector<std::pair<Interval, std::size_t>> still;
    for (const auto& [iv, idx] : live) {
      if (iv.b == v) {
        zero_set.push_back(idx);
        free_idx.insert(idx);
      } else {
        still.emplace_back(iv, idx);
      }
    }
    std::sort(zero_set.begin(), zero_set.end());
    live = std::move(still);
  }
  return out;
}

Stratum stratum_of(const RankSequence& r) {
  Stratum s;
  for (int i = 1; i < r.n(); ++i)
    if (r.map_rank(i) == 0) s.arrows.push_back(i);
  return s;
}

std::vector<Stratum> all_strata(int n) {
  const int arrows = n - 1;
  std::vector<Stratum> out;
  for (std::uint32_t mask = 0; mask < (1u << arrows); ++mask) {
    Stratum s;
    for (int i = 0; i < arrows; ++i)
      if (mask & (1u << i)) s.arrows.push_back(i + 1);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const Stratum& x, const Stratum& y) {
    if (x.arrows.size() != y.arrows.size()) return x.arrows.size() < y.arrows.size();
    return x.arrows < y.arrows;
  });
  return out;
}

StratumTargets stratum_rank_targets(const Stratum& stratum, const DimVector& d) {
  const int n = d.n();
  const int m = d.m();
  for (int i : stratum.arrows)
    if (i < 1 || i >= n) throw ValidationError("stratum arrow outside 1..n-1");
  std::vector<int> segment(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 2; v <= n; ++v) segment[v] = segment[v - 1] + (stratum.contains(v - 1) ? 1 : 0);
  ExtendedRanks r1(n), r2(n);
  for (int a = 1; a <= n; ++a) {
    r1.set(a, a, m);
    r2.set(a, a, m);
    for (int b = a + 1; b <= n; ++b) {
      if (segment[a] != segment[b]) continue;
      r1.set(a, b, m - d.at(b) + d.at(a));
      r2.set(a, b, m - d.at(b) + d.at(a) - 1);
    }
  }
  return {RankSequence(m, std::move(r1)), RankSequence(m, std::move(r2))};
}

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(
    std::size_t count, const std::function<bool(std::size_t, std::size_t)>& leq) {
  const std::size_t words = (count + 63) / 64;
  // below[i] = { j : j < i },  above[j] = { k : j < k }
  std::vector<std::vector<std::uint64_t>> below(count, std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<std::uint64_t>> above(count, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (i != j && leq(j, i) && !leq(i, j)) {
        below[i][j / 64] |= std::uint64_t{1} << (j % 64);
        above[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (!(below[i][j / 64] >> (j % 64) & 1)) continue;
      bool covered = true;
      for (std::size_t w = 0; w < words && covered; ++w)
        if (below[i][w] & above[j][w]) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

std::string dot_node_name(const RankSequence& r) {
  std::string s = "r";
  for (int x : r.table().flattened()) s += "_" + std::to_string(x);
  return s;
}

std::string hasse_dot(const std::vector<RankSequence>& orbits,
                      const std::function<std::string(const RankSequence&)>& annotate) {
  for (const RankSequence& r : orbits)
    if (r.m() != orbits.front().m() || r.n() != orbits.front().n())
      throw ValidationError("hasse_dot needs orbits of one shape");
  std::ostringstream os;
  os << "digraph orbits {\n";
  os << "  node [shape=box];\n";
  for (const RankSequence& r : orbits) {
    os << "  " << dot_node_name(r) << " [label=\"ranks";
    for (int x : r.map_ranks()) os << " " << x;
    if (annotate) {
      const std::string extra = annotate(r);
      if (!extra.empty()) os << "\\n" << extra;
    }
    os << "\"];\n";
  }
  const auto edges = covering_pairs(orbits.size(), [&](std::size_t i, std::size_t j) {
    return degenerates_to(orbits[j], orbits[i]);
  });
  for (const auto& [hi, lo] : edges)
    os << "  " << dot_node_name(orbits[hi]) << " -> " << dot_node_name(orbits[lo]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string strata_dot(int n) {
  if (n < 1) throw ValidationError("strata_dot needs n >= 1");
  const std::vector<Stratum> strata = all_strata(n);
  auto name = [](const Stratum& s) {
    std::string out = "S";
    for (int i : s.arrows) out += "_" + std::to_string(i);
    return out;
  };
  std::ostringstream os;
  os << "digraph strata {\n";
  for (const Stratum& s : strata) os << "  " << name(s) << " [label=\"S" << s.to_string() << "\"];\n";
  // S_I lies in the closure of S_J iff J is a subset of I; J sits above I.
  const auto edges = covering_pairs(strata.size(), [&](std::size_t i, std::size_t j) {
    return std::includes(strata[i].arrows.begin(), strata[i].arrows.end(),
                         strata[j].arrows.begin(), strata[j].arrows.end());
  });
  for (const auto& [hi, lo] : edges) os << "  " << name(strata[hi]) << " -> " << name(strata[lo]) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace lindeg
