#pragma once

// Brute-force enumeration of quiver Grassmannians over small prime fields.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lindeg/classifier.hpp"

namespace lindeg {

inline constexpr std::uint64_t kPointLimit = 10'000'000;

/// prod_i [dim M_i choose d_i]_p, saturating. Requires a prime field.
std::uint64_t enumeration_bound(const RepMatrices& rep, std::span<const int> d);

/// Visits every subrepresentation L of M with dim L = d, each once, ordered
/// lexicographically by (L_1, ..., L_n) in the all_subspaces order. The entries
/// of d may be 0 and need only satisfy 0 <= d_i <= dim M_i. Throws
/// ValidationError over Q or on bad d, GuardExceeded when enumeration_bound
/// exceeds limit.
void for_each_subrep(const RepMatrices& rep, std::span<const int> d,
                     const std::function<void(const SubrepPoint&)>& visit,
                     std::uint64_t limit = kPointLimit);
std::vector<SubrepPoint> enumerate_subreps(const RepMatrices& rep, std::span<const int> d,
                                           std::uint64_t limit = kPointLimit);
std::uint64_t count_subreps(const RepMatrices& rep, std::span<const int> d,
                            std::uint64_t limit = kPointLimit);

/// Coordinate points of Gr_d for the projection tuple J: subsets S_i with
/// |S_i| = d_i and S_i \ J_i contained in S_{i+1}, in lexicographic order.
std::vector<CoordinatePoint> fixed_points(const ProjectionTuple& j, std::span<const int> d);

struct PointAnalysis {
  Decomposition sub_decomp;   // L
  Decomposition quot_decomp;  // M / L
  long long hom = 0;          // dim Hom(L, M/L)
  long long ext = 0;          // dim Ext^1(L, M/L)
  long long tangent_dim = 0;  // = hom
  /// Ext^1 between summands of L and M/L lying in the same factor of the
  /// splitting of M at its zero maps. Equals ext when M has no zero map.
  long long segment_ext = 0;
  bool singular = false;      // segment_ext > 0
};

/// Throws ValidationError when L is not a subrepresentation of M.
PointAnalysis analyze_point(const RepMatrices& rep, const SubrepPoint& l);

struct Census {
  std::uint64_t total = 0;
  std::uint64_t singular = 0;
};
/// Throws NotIrreducible when the orbit of M is not irreducible for d.
Census singular_point_census(const RepMatrices& rep, const DimVector& d,
                             std::uint64_t limit = kPointLimit);

/// M' of the singular model of Gr_d(M^h), on coordinates 2..m at vertices h and
/// h+1: arrow h-1 drops the first coordinate, arrow h+1 includes k^{m-1} as the
/// last m-1 coordinates, every other arrow is the identity.
RepMatrices mh_prime_matrices(const Field& field, int m, int n, int h);

struct SigmaCheck {
  bool ok = false;
  std::uint64_t total_points = 0;     // |Gr_d(M^h)|
  std::uint64_t singular_points = 0;  // Ext-singular points of Gr_d(M^h)
  std::uint64_t model_points = 0;     // |Gr_{d'}(M')|
  std::string counterexample;         // first failure, empty when ok
};

/// Compares Sigma: Gr_{d'}(M') -> Gr_d(M^h), Sigma(N)_h = N_h + Span(v_1), with
/// the Ext-singular census of Gr_d(M^h): every image point must be singular,
/// Sigma' o Sigma = id, and the images must exhaust the census.
SigmaCheck sigma_bijection_check(int m, const DimVector& d, int h, std::uint32_t p);

}  // namespace lindeg
