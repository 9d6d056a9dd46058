#pragma once

// G-orbits in End(k^m)^{n-1}, parametrized by rank sequences.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lindeg/quiver.hpp"

namespace lindeg {

/// Rank data of an (n-1)-tuple of endomorphisms of k^m: an ExtendedRanks table
/// with every diagonal entry equal to m.
class RankSequence {
 public:
  /// Throws ValidationError when a diagonal entry differs from m.
  RankSequence(int m, ExtendedRanks ranks);

  static RankSequence identity(int m, int n);
  static RankSequence zero(int m, int n);
  /// Throws ValidationError unless every vertex has dimension m.
  static RankSequence of(const Decomposition& dec);
  static RankSequence of(const RepMatrices& rep);

  int m() const noexcept { return m_; }
  int n() const noexcept { return ranks_.n(); }
  const ExtendedRanks& table() const noexcept { return ranks_; }
  /// r_i = rk f_i for a 1-based arrow i.
  int map_rank(int i) const { return ranks_(i, i + 1); }
  /// r_{i,j} = rk(f_j o ... o f_i), i <= j.
  int composite_rank(int i, int j) const { return ranks_(i, j + 1); }
  std::vector<int> map_ranks() const;

  friend bool operator==(const RankSequence&, const RankSequence&) = default;

 private:
  int m_;
  ExtendedRanks ranks_;
};

/// (pi_{J_1}, ..., pi_{J_{n-1}}) with each J_i a sorted subset of {1..m}.
struct ProjectionTuple {
  int m = 0;
  std::vector<std::vector<std::size_t>> zero_sets;

  int n() const noexcept { return static_cast<int>(zero_sets.size()) + 1; }
  RepMatrices matrices(const Field& field) const;
};

/// Set I of arrows that are zero; S_I = { f : f_i = 0 iff i in I }.
struct Stratum {
  std::vector<int> arrows;  // sorted, 1-based

  bool contains(int arrow) const;
  /// "{}" or "{1,3}".
  std::string to_string() const;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// True iff the inversion multiplicities are all nonnegative.
bool is_realizable(const RankSequence& r);

/// True iff the orbit of r degenerates to the orbit of s, i.e. s <= r entrywise.
/// Throws ValidationError when (m, n) differ.
bool degenerates_to(const RankSequence& r, const RankSequence& s);

inline constexpr std::size_t kOrbitLimit = 1'000'000;

/// All realizable rank sequences, by iterating multiplicity tables with every
/// vertex sum equal to m. Sorted by flattened rank table, descending (the
/// identity orbit first, the zero orbit last). Throws GuardExceeded past limit.
std::vector<RankSequence> enumerate_orbits(int m, int n, std::size_t limit = kOrbitLimit);

/// Coordinate-projection representative of the orbit, built by greedy interval
/// colouring: vertex by vertex, intervals starting there (shortest first) take
/// the smallest free basis indices, and J_i collects the indices whose interval
/// ends at vertex i. Throws NotRealizable.
ProjectionTuple representative(const RankSequence& r);

Stratum stratum_of(const RankSequence& r);
std::vector<Stratum> all_strata(int n);

/// Threshold sequences of the flat-irreducible (r^{1,I}) and flat (r^{2,I})
/// loci inside the closure of S_I. Entries across a zero arrow are 0.
struct StratumTargets {
  RankSequence flat_irr;
  RankSequence flat;
};
StratumTargets stratum_rank_targets(const Stratum& stratum, const DimVector& d);

/// Pairs (upper, lower) of the covering relation of a partial order, where
/// leq(i, j) means element i <= element j.
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(
    std::size_t count, const std::function<bool(std::size_t, std::size_t)>& leq);

/// "r_" followed by the flattened rank table joined by underscores.
std::string dot_node_name(const RankSequence& r);

/// DOT digraph of the covering relation of degenerates_to; an edge points from
/// an orbit to each orbit it covers. `annotate` adds a second label line.
std::string hasse_dot(const std::vector<RankSequence>& orbits,
                      const std::function<std::string(const RankSequence&)>& annotate = {});

/// DOT digraph of the strata of End(k^m)^{n-1} under closure inclusion
/// (reverse Boolean lattice on n-1 elements).
std::string strata_dot(int n);

}  // namespace lindeg
