#pragma once

// Representations of the equioriented quiver A_n: 1 -> 2 -> ... -> n.
//
// Vertices and arrows are 1-based in every interface that names them: arrow i
// goes from vertex i to vertex i + 1, and interval modules U[a,b] satisfy
// 1 <= a <= b <= n. Plain std::vector payloads are 0-based.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lindeg/linalg.hpp"

namespace lindeg {

/// The indecomposable U[a,b], supported on vertices a..b with identity maps.
struct Interval {
  int a = 1;
  int b = 1;

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Dimension vector d_1 < ... < d_n of a partial flag variety in k^m, with
/// 0 < d_1 and d_n < m.
class DimVector {
 public:
  /// Throws ValidationError unless 0 < d_1 < ... < d_n < m and n >= 1.
  DimVector(int m, std::vector<int> d);

  int m() const noexcept { return m_; }
  int n() const noexcept { return static_cast<int>(d_.size()); }
  const std::vector<int>& values() const noexcept { return d_; }
  /// d_v for a 1-based vertex v.
  int at(int vertex) const { return d_.at(static_cast<std::size_t>(vertex - 1)); }
  /// d_{i+1} - d_i for a 1-based arrow i.
  int step(int arrow) const { return at(arrow + 1) - at(arrow); }

  friend bool operator==(const DimVector&, const DimVector&) = default;

 private:
  int m_;
  std::vector<int> d_;
};

/// Isomorphism class of a representation: interval summands with multiplicity.
class Decomposition {
 public:
  explicit Decomposition(int n);

  /// Adds mult copies of U[a,b]; mult 0 is a no-op.
  Decomposition& add(Interval iv, int mult = 1);

  int n() const noexcept { return n_; }
  const std::map<Interval, int>& summands() const noexcept { return mult_; }
  int multiplicity(Interval iv) const;
  /// Per-vertex dimensions (0-based vector of length n).
  const std::vector<int>& dims() const noexcept { return dims_; }
  bool empty() const noexcept { return mult_.empty(); }
  /// "U[1,1] + U[1,2]^2 + U[2,2]", or "0".
  std::string to_string() const;

  friend bool operator==(const Decomposition& x, const Decomposition& y) {
    return x.n_ == y.n_ && x.mult_ == y.mult_;
  }

 private:
  int n_;
  std::map<Interval, int> mult_;
  std::vector<int> dims_;
};

/// Triangular table R(a,b), 1 <= a <= b <= n: the rank of the composite map
/// from vertex a to vertex b, with R(a,a) the dimension at vertex a. Reads
/// outside that range (a = 0 or b = n + 1) return 0. The rank of arrow i is
/// R(i, i+1); the rank of f_j o ... o f_i is R(i, j+1).
class ExtendedRanks {
 public:
  explicit ExtendedRanks(int n);

  int n() const noexcept { return n_; }
  int operator()(int a, int b) const;
  void set(int a, int b, int value);
  /// Row-major over a <= b: R(1,1), R(1,2), ..., R(1,n), R(2,2), ..., R(n,n).
  std::vector<int> flattened() const;

  friend bool operator==(const ExtendedRanks&, const ExtendedRanks&) = default;

 private:
  int n_;
  std::vector<int> table_;
};

/// Explicit representation: per-vertex dimensions and one matrix per arrow,
/// maps()[i - 1] : vertex i -> vertex i + 1 with shape dims[i] x dims[i - 1].
class RepMatrices {
 public:
  /// Throws ValidationError on shape or field mismatch.
  RepMatrices(Field field, std::vector<int> dims, std::vector<Matrix> maps);
  /// n = maps.size() + 1 vertices, dimensions read off the shapes; requires at
  /// least one map.
  static RepMatrices from_maps(std::vector<Matrix> maps);

  const Field& field() const noexcept { return field_; }
  int n() const noexcept { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const noexcept { return dims_; }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }
  const Matrix& arrow(int i) const { return maps_.at(static_cast<std::size_t>(i - 1)); }

 private:
  Field field_;
  std::vector<int> dims_;
  std::vector<Matrix> maps_;
};

/// A tuple of subspaces (L_1, ..., L_n), one per vertex.
struct SubrepPoint {
  std::vector<Subspace> spaces;

  std::vector<int> dims() const;
  friend auto operator<=>(const SubrepPoint&, const SubrepPoint&) = default;
  friend bool operator==(const SubrepPoint&, const SubrepPoint&) = default;
};

// --- forms and tables -------------------------------------------------------

/// <d,e> = sum_i d_i e_i - sum_i d_i e_{i+1}. Throws ValidationError on length mismatch.
long long euler_form(std::span<const int> d, std::span<const int> e);

int hom_dim(Interval x, Interval y);
int ext_dim(Interval x, Interval y);
/// Bilinear extensions over direct sums. Throws ValidationError when n differs.
long long hom_dim(const Decomposition& x, const Decomposition& y);
long long ext_dim(const Decomposition& x, const Decomposition& y);

// --- ranks and decompositions -----------------------------------------------

/// Ranks of all composite maps, by iterated exact composition.
ExtendedRanks rank_profile(const RepMatrices& rep);

/// Inverts the rank table by the second difference
///   mult(a,b) = R(a,b) - R(a-1,b) - R(a,b+1) + R(a-1,b+1).
/// Throws NotRealizable when some multiplicity is negative.
Decomposition decompose_from_ranks(const ExtendedRanks& ranks);
/// The multiplicities from the second difference, negative ones included.
std::map<Interval, int> raw_multiplicities(const ExtendedRanks& ranks);

/// R(a,b) = sum of mult(a',b') over a' <= a and b' >= b.
ExtendedRanks ranks_from_decomposition(const Decomposition& dec);

/// Ambient module P + I of a well-behaved degeneration of Fl_d(k^m).
Decomposition well_behaved_rep(const DimVector& d);

/// 0 -> Q -> P -> M -> 0 with P = sum P_i^{hom(M,S_i)}, Q = sum P_i^{ext(M,S_i)},
/// where P_i = U[i,n] and S_i = U[i,i].
struct ProjectiveResolution {
  Decomposition projective;  // P
  Decomposition syzygy;      // Q
};
ProjectiveResolution minimal_projective_resolution(const Decomposition& dec);

/// True iff the distinct summands are totally ordered componentwise, i.e. lie
/// on one oriented path of the Auslander-Reiten quiver.
bool is_catenoid(const Decomposition& dec);

struct SchubertTarget {
  std::vector<int> ambient;      // dim P
  std::vector<int> target_dims;  // d + dim Q
};
/// Target Fl_{d + dim Q}(P) of the closed embedding Gr_d(M) -> Fl(P).
SchubertTarget schubert_embedding_target(const Decomposition& dec, std::span<const int> d);

// --- explicit representations -----------------------------------------------

/// Coordinate realization: each summand copy owns one basis vector per vertex
/// of its support; arrows send it to the next one.
RepMatrices realize(const Decomposition& dec, const Field& field);

/// Dimension of the space of morphisms M -> N, as the nullity of the linear
/// system psi_{i+1} f_i = g_i psi_i.
long long intertwiner_space_dim(const RepMatrices& m, const RepMatrices& n);

/// True iff every arrow maps L_i into L_{i+1}.
bool is_subrep(const RepMatrices& rep, const SubrepPoint& sub);
/// The restriction of M to L, in the echelon bases of the L_i.
RepMatrices subrep(const RepMatrices& rep, const SubrepPoint& sub);
/// M / L on the complement spanned by the non-pivot standard basis vectors of
/// each L_i, in increasing index order. Throws ValidationError when L is not a
/// subrepresentation.
RepMatrices quotient_rep(const RepMatrices& rep, const SubrepPoint& sub);

}  // namespace lindeg
