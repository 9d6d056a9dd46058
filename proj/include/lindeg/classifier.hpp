#pragma once

// Geometric classification of linear degenerations Fl_d^f(k^m) = Gr_d(M_f)
// from the rank sequence of f.

#include <optional>
#include <string>
#include <vector>

#include "lindeg/orbits.hpp"

namespace lindeg {

/// One factor of the product splitting at the zero maps: vertices first..last.
struct Segment {
  int first = 1;
  int last = 1;
  DimVector d;
  RankSequence ranks;
};

/// Cuts at every zero arrow. A tuple without zero maps gives one segment.
/// Throws ValidationError when r and d disagree on (m, n).
std::vector<Segment> split_product(const RankSequence& r, const DimVector& d);

bool is_smooth(const RankSequence& r);
/// For every arrow: r_i = 0 or d_{i+1} - d_i >= m - r_i.
bool is_irreducible(const RankSequence& r, const DimVector& d);

struct FlatFlags {
  bool flat_in_stratum = false;      // r >= r^{2,I}, I = stratum_of(r)
  bool flat_irr_in_stratum = false;  // r >= r^{1,I}
  bool in_U_irr = false;             // r in the union over J of the flat-irreducible loci of closure(S_J)
};
FlatFlags flat_flags(const RankSequence& r, const DimVector& d);

/// Sum over segments of <d^j, m - d^j>. Throws NotFlat unless r is in the flat
/// locus of its stratum.
long long dimension(const RankSequence& r, const DimVector& d);

/// r = r^1.
bool is_well_behaved(const RankSequence& r, const DimVector& d);
/// rk f_i = m - (d_{i+1} - d_i) for all i, and the kernels are independent.
bool is_well_behaved_matrices(const RepMatrices& rep, const DimVector& d);

/// M^h = U[1,n]^{m-1} + U[1,h] + U[h+1,n].
Decomposition mh_decomposition(int m, int n, int h);

enum class SingularKind { empty, exact, bounded };
std::string to_string(SingularKind kind);

/// Sing(X) = Gr_{d'}(M').
struct SingularModel {
  Decomposition module;
  std::vector<int> d;  // may contain zeros
};

struct SingularInfo {
  SingularKind kind = SingularKind::empty;
  std::optional<SingularModel> model;  // exact only, when known
  std::optional<long long> sing_dim;   // exact only
  std::optional<long long> sing_codim; // exact only
  std::optional<long long> codim_lower;  // bounded only
  std::optional<long long> codim_upper;  // bounded only
};

/// Singular locus of Gr_d(M^h): model M' = U[1,n]^{m-1} + U[1,h-1] + U[h+2,n],
/// d' = d - e_h, codimension 2(d_{h+1} - d_h) + 1. Throws ValidationError for h
/// outside 1..n-1.
SingularInfo singular_model_Mh(int m, const DimVector& d, int h);

/// Per segment: smooth, the M^h orbit (exact via the model), unit steps (exact
/// codimension 3), or bounded in [3, 2 D_f + 1]. Segments combine by taking the
/// minimum codimension. Throws NotIrreducible outside U_irr.
SingularInfo singular_summary(const RankSequence& r, const DimVector& d);

/// A tuple of coordinate subsets S_i of {1..m}, one per vertex (1-based indices,
/// sorted).
struct CoordinatePoint {
  std::vector<std::vector<std::size_t>> sets;

  SubrepPoint to_subrep(const Field& field, int m) const;
  friend auto operator<=>(const CoordinatePoint&, const CoordinatePoint&) = default;
  friend bool operator==(const CoordinatePoint&, const CoordinatePoint&) = default;
};

/// The coordinate subrepresentation L with Ext^1(L, M/L) != 0 for a non-smooth
/// flat-irreducible projection tuple: B_1 = {v_1..v_{d_1}}, B_{i+1} adds
/// v_{d_i+1}..v_{d_{i+1}}, and at i = h (smallest arrow with r_h < m) also
/// trades v_1 for v_m. When 1 is not in J_h the labels 1 and min J_h are
/// swapped. Throws PreconditionError when J is not flat-irreducible or has no
/// arrow of rank below m.
CoordinatePoint construct_singular_witness(const ProjectionTuple& j, const DimVector& d);

struct DegenerationReport {
  RankSequence ranks;
  DimVector d;
  Stratum stratum;
  Decomposition decomposition;
  std::vector<Segment> segments;
  bool smooth = false;
  bool irreducible = false;
  FlatFlags flat;
  bool well_behaved = false;
  std::optional<bool> normal;          // by theorem, irreducible only
  std::optional<bool> regular_codim2;  // by theorem, irreducible only
  std::optional<long long> dimension;
  std::optional<SingularInfo> singular;
};

/// Throws NotRealizable for an unrealizable r, ValidationError on shape mismatch.
DegenerationReport classify(const RankSequence& r, const DimVector& d);
/// As above; well_behaved uses the matrix-level kernel test.
DegenerationReport classify(const RepMatrices& rep, const DimVector& d);

/// Reference values for m = 6, d = (1,4): the dimension of the singular locus
/// of the rank 5, 4 and 3 classes. Recorded, not computed.
struct ReferenceSingularDim {
  int rank;
  long long sing_dim;
};
inline constexpr ReferenceSingularDim kExampleSingularDims[] = {{5, 4}, {4, 6}, {3, 8}};

}  // namespace lindeg
