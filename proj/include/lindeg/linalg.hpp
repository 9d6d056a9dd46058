#pragma once

// Exact dense linear algebra over the rationals and prime fields.
//
// Vectors are rows. A Matrix of shape (t x s) represents a map from an
// s-dimensional space to a t-dimensional one acting on column vectors, so the
// image of a subspace with basis rows V is spanned by the rows of V * A^T.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lindeg {

/// The base field: exact rationals or F_p for a prime p < 2^16.
class Field {
 public:
  enum class Kind { rational, prime };

  static Field rationals() noexcept { return Field{}; }
  /// Throws ValidationError unless p is a prime in [2, 65536).
  static Field prime(std::uint32_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  /// "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Kind kind_ = Kind::rational;
  std::uint32_t p_ = 0;
};

/// Dense matrix with exact entries in a Field.
class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  /// Zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// The coordinate projection pi_J on field^m: e_j -> 0 for j in J, e_j -> e_j
  /// otherwise. Indices are 1-based.
  static Matrix projection(Field field, std::size_t m,
                           std::span<const std::size_t> zero_indices);
  static Matrix from_integers(Field field, std::size_t rows, std::size_t cols,
                              std::span<const long long> row_major);
  /// Entries such as "3", "-3/7". Over F_p the denominator must be a unit.
  static Matrix from_strings(Field field, std::size_t rows, std::size_t cols,
                             std::span<const std::string> row_major);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  /// Over F_p the canonical residue in [0, p).
  mpq_class at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const mpq_class& value);
  void set(std::size_t r, std::size_t c, long long value) { set(r, c, mpq_class(static_cast<long>(value))); }
  bool is_zero_at(std::size_t r, std::size_t c) const;
  bool is_zero() const;
  std::string entry_string(std::size_t r, std::size_t c) const;

  Matrix transposed() const;
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  friend struct MatrixAccess;

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> rational_;      // used over Q
  std::vector<std::uint32_t> residue_;  // used over F_p
};

/// Reduced row-echelon form. Pivot search is leftmost column, topmost row.
struct Echelon {
  Matrix reduced;                   // same shape as the input; zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(const Matrix& a);
std::size_t rank(const Matrix& a);
/// a o b, i.e. the product a * b. Throws ValidationError on shape or field mismatch.
Matrix compose(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// Throws PreconditionError when a is not invertible.
Matrix inverse(const Matrix& a);
/// Some X with a * X = b, or nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// A linear subspace stored by its canonical reduced echelon basis: two
/// Subspace values are equal iff they are the same subspace.
class Subspace {
 public:
  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace whole(Field field, std::size_t ambient_dim);
  /// Span of the rows of a spanning matrix.
  static Subspace span(const Matrix& rows);
  /// Span of the standard basis vectors e_i, i in indices (1-based).
  static Subspace coordinate(Field field, std::size_t ambient_dim,
                             std::span<const std::size_t> indices);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Field& field() const noexcept { return basis_.field(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Subtracts from each row its component along the basis pivots. The result
  /// is zero exactly on rows lying in the subspace; otherwise it vanishes on
  /// every pivot column.
  Matrix reduce(const Matrix& rows) const;
  bool contains_rows(const Matrix& rows) const;

  /// Order by dimension, then pivot columns, then entries row-major.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Echelon e);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace image(const Matrix& a);
Subspace kernel(const Matrix& a);
/// True iff w is a subspace of v.
bool contains(const Subspace& v, const Subspace& w);
Subspace map_subspace(const Matrix& a, const Subspace& v);
Subspace sum(const Subspace& v, const Subspace& w);

/// Every k-dimensional subspace of F_p^m, ordered by pivot columns
/// (lexicographically) and then by free entries. Requires a prime field.
std::vector<Subspace> all_subspaces(const Field& field, std::size_t m, std::size_t k);

/// Number of k-dimensional subspaces of F_q^m, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t m, std::size_t k, std::uint64_t q);

}  // namespace lindeg
