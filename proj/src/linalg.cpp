#include "lindeg/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "lindeg/errors.hpp"

namespace lindeg {

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

struct RationalArith {
  using value_type = mpq_class;

  static bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
  static mpq_class inv(const mpq_class& x) { return mpq_class(1) / x; }
  static mpq_class mul(const mpq_class& a, const mpq_class& b) { return a * b; }
  static mpq_class add(const mpq_class& a, const mpq_class& b) { return a + b; }
  // dst -= f * src
  static void sub_mul(mpq_class& dst, const mpq_class& f, const mpq_class& src) { dst -= f * src; }
  static mpq_class neg(const mpq_class& x) { return -x; }
  static int cmp(const mpq_class& a, const mpq_class& b) { return ::cmp(a, b); }
};

struct PrimeArith {
  using value_type = std::uint32_t;
  std::uint32_t p;

  static bool is_zero(std::uint32_t x) { return x == 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p);
  }
  std::uint32_t neg(std::uint32_t x) const { return x == 0 ? 0 : p - x; }
  void sub_mul(std::uint32_t& dst, std::uint32_t f, std::uint32_t src) const {
    dst = add(dst, neg(mul(f, src)));
  }
  std::uint32_t inv(std::uint32_t x) const {
    // Fermat: x^(p-2)
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
  }
  static int cmp(std::uint32_t a, std::uint32_t b) { return a < b ? -1 : (a > b ? 1 : 0); }
};

template <class Arith>
std::vector<std::size_t> rref_in_place(std::vector<typename Arith::value_type>& d, std::size_t rows,
                                       std::size_t cols, const Arith& ar) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!ar.is_zero(d[i * cols + c])) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(d[sel * cols + j], d[r * cols + j]);
    const auto inv = ar.inv(d[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) d[r * cols + j] = ar.mul(d[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || ar.is_zero(d[i * cols + c])) continue;
      const auto f = d[i * cols + c];
      for (std::size_t j = c; j < cols; ++j) ar.sub_mul(d[i * cols + j], f, d[r * cols + j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// Gives the algorithms below typed access to the active storage vector.
struct MatrixAccess {
  template <class Fn>
  static decltype(auto) visit(Matrix& m, Fn&& fn) {
    if (m.field_.is_prime()) return fn(m.residue_, PrimeArith{m.field_.characteristic()});
    return fn(m.rational_, RationalArith{});
  }
  template <class Fn>
  static decltype(auto) visit(const Matrix& m, Fn&& fn) {
    if (m.field_.is_prime()) return fn(m.residue_, PrimeArith{m.field_.characteristic()});
    return fn(m.rational_, RationalArith{});
  }
  // Both operands must share the field.
  template <class Fn>
  static decltype(auto) visit2(const Matrix& a, const Matrix& b, Matrix& out, Fn&& fn) {
    if (a.field_.is_prime())
      return fn(a.residue_, b.residue_, out.residue_, PrimeArith{a.field_.characteristic()});
    return fn(a.rational_, b.rational_, out.rational_, RationalArith{});
  }
};

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 16) || !is_prime_number(p))
    throw ValidationError("field characteristic must be a prime below 65536, got " +
                          std::to_string(p));
  Field f;
  f.kind_ = Kind::prime;
  f.p_ = p;
  return f;
}

std::string Field::name() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : std::string("Q");
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_prime())
    residue_.assign(rows * cols, 0);
  else
    rational_.assign(rows * cols, mpq_class(0));
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::projection(Field field, std::size_t m, std::span<const std::size_t> zero_indices) {
  Matrix out = identity(field, m);
  for (std::size_t j : zero_indices) {
    if (j < 1 || j > m)
      throw ValidationError("projection index " + std::to_string(j) + " outside 1.." +
                            std::to_string(m));
    out.set(j - 1, j - 1, 0);
  }
  return out;
}

Matrix Matrix::from_integers(Field field, std::size_t rows, std::size_t cols,
                             std::span<const long long> row_major) {
  if (row_major.size() != rows * cols)
    throw ValidationError("matrix entry count does not match its shape");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < row_major.size(); ++i) m.set(i / cols, i % cols, row_major[i]);
  return m;
}

Matrix Matrix::from_strings(Field field, std::size_t rows, std::size_t cols,
                            std::span<const std::string> row_major) {
  if (row_major.size() != rows * cols)
    throw ValidationError("matrix entry count does not match its shape");
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < row_major.size(); ++i) {
    const std::string& s = row_major[i];
    if (s.empty() || s.find_first_not_of("+-0123456789/") != std::string::npos)
      throw ValidationError("malformed exact entry \"" + s + "\"");
    mpq_class q;
    try {
      mpz_class num, den(1);
      const auto slash = s.find('/');
      num = mpz_class(s.substr(0, slash), 10);
      if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
      if (den == 0) throw ValidationError("zero denominator in entry \"" + s + "\"");
      q = mpq_class(num, den);
      q.canonicalize();
    } catch (const std::invalid_argument&) {
      throw ValidationError("malformed exact entry \"" + s + "\"");
    }
    m.set(i / cols, i % cols, q);
  }
  return m;
}

mpq_class Matrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return mpq_class(residue_[r * cols_ + c]);
  return rational_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, const mpq_class& value) {
  if (!field_.is_prime()) {
    rational_[r * cols_ + c] = value;
    return;
  }
  const unsigned long p = field_.characteristic();
  mpz_class num = value.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value.get_den() % p;
  if (den == 0)
    throw ValidationError("denominator is not invertible in " + field_.name());
  PrimeArith ar{field_.characteristic()};
  residue_[r * cols_ + c] = ar.mul(static_cast<std::uint32_t>(num.get_ui()),
                                   ar.inv(static_cast<std::uint32_t>(den.get_ui())));
}

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return residue_[r * cols_ + c] == 0;
  return sgn(rational_[r * cols_ + c]) == 0;
}

bool Matrix::is_zero() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!is_zero_at(r, c)) return false;
  return true;
}

std::string Matrix::entry_string(std::size_t r, std::size_t c) const {
  if (field_.is_prime()) return std::to_string(residue_[r * cols_ + c]);
  return rational_[r * cols_ + c].get_str();
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  MatrixAccess::visit(*this, [&](const auto& src, auto) {
    MatrixAccess::visit(t, [&](auto& dst, auto) {
      if constexpr (std::is_same_v<std::decay_t<decltype(src)>, std::decay_t<decltype(dst)>>) {
        for (std::size_t r = 0; r < rows_; ++r)
          for (std::size_t c = 0; c < cols_; ++c) dst[c * rows_ + r] = src[r * cols_ + c];
      }
    });
  });
  return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("row_block outside matrix");
  Matrix out(field_, count, cols_);
  MatrixAccess::visit(*this, [&](const auto& src, auto) {
    MatrixAccess::visit(out, [&](auto& dst, auto) {
      if constexpr (std::is_same_v<std::decay_t<decltype(src)>, std::decay_t<decltype(dst)>>)
        std::copy(src.begin() + static_cast<std::ptrdiff_t>(first * cols_),
                  src.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), dst.begin());
    });
  });
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw ValidationError("field mismatch in matrix product");
  if (a.cols() != b.rows())
    throw ValidationError("dimension mismatch in matrix product: " + std::to_string(a.rows()) +
                          "x" + std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                          "x" + std::to_string(b.cols()));
  Matrix out(a.field(), a.rows(), b.cols());
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  MatrixAccess::visit2(a, b, out, [&](const auto& x, const auto& y, auto& z, const auto& ar) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        const auto& f = x[i * k + l];
        if (ar.is_zero(f)) continue;
        for (std::size_t j = 0; j < m; ++j) z[i * m + j] = ar.add(z[i * m + j], ar.mul(f, y[l * m + j]));
      }
  });
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.rational_ == b.rational_ && a.residue_ == b.residue_;
}

Echelon row_reduce(const Matrix& a) {
  Echelon e{a, {}};
  MatrixAccess::visit(e.reduced, [&](auto& d, const auto& ar) {
    e.pivots = rref_in_place(d, a.rows(), a.cols(), ar);
  });
  return e;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

Matrix compose(const Matrix& a, const Matrix& b) { return a * b; }

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (!(top.field() == bottom.field())) throw ValidationError("field mismatch in vstack");
  if (top.cols() != bottom.cols()) throw ValidationError("column mismatch in vstack");
  Matrix out(top.field(), top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out.set(r, c, top.at(r, c));
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) out.set(top.rows() + r, c, bottom.at(r, c));
  return out;
}

namespace {

Matrix hstack(const Matrix& left, const Matrix& right) {
  return vstack(left.transposed(), right.transposed()).transposed();
}

}  // namespace

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("row mismatch in solve");
  const Echelon e = row_reduce(hstack(a, b));
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t c = e.pivots[r];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(c, j, e.reduced.at(r, a.cols() + j));
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols() || rank(a) != a.rows())
    throw PreconditionError("matrix is not invertible");
  return *solve(a, Matrix::identity(a.field(), a.rows()));
}

Subspace::Subspace(Echelon e)
    : basis_(e.reduced.row_block(0, e.pivots.size())), pivots_(std::move(e.pivots)) {}

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
  return Subspace(Echelon{Matrix(field, 0, ambient_dim), {}});
}

Subspace Subspace::whole(Field field, std::size_t ambient_dim) {
  return span(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::span(const Matrix& rows) { return Subspace(row_reduce(rows)); }

Subspace Subspace::coordinate(Field field, std::size_t ambient_dim,
                              std::span<const std::size_t> indices) {
  Matrix m(field, indices.size(), ambient_dim);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] < 1 || indices[r] > ambient_dim)
      throw ValidationError("coordinate index outside 1.." + std::to_string(ambient_dim));
    m.set(r, indices[r] - 1, 1);
  }
  return span(m);
}

Matrix Subspace::reduce(const Matrix& rows) const {
  if (rows.cols() != ambient_dim() || !(rows.field() == field()))
    throw ValidationError("vector does not live in the subspace's ambient space");
  Matrix out = rows;
  MatrixAccess::visit(out, [&](auto& d, const auto& ar) {
    MatrixAccess::visit(basis_, [&](const auto& b, auto) {
      if constexpr (std::is_same_v<std::decay_t<decltype(d)>, std::decay_t<decltype(b)>>) {
        const std::size_t n = ambient_dim();
        for (std::size_t i = 0; i < out.rows(); ++i)
          for (std::size_t k = 0; k < pivots_.size(); ++k) {
            const auto f = d[i * n + pivots_[k]];
            if (ar.is_zero(f)) continue;
            for (std::size_t j = 0; j < n; ++j) ar.sub_mul(d[i * n + j], f, b[k * n + j]);
          }
      }
    });
  });
  return out;
}

bool Subspace::contains_rows(const Matrix& rows) const { return reduce(rows).is_zero(); }

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  int result = 0;
  MatrixAccess::visit(a.basis_, [&](const auto& x, const auto& ar) {
    MatrixAccess::visit(b.basis_, [&](const auto& y, auto) {
      if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::decay_t<decltype(y)>>) {
        for (std::size_t i = 0; i < x.size() && result == 0; ++i) result = ar.cmp(x[i], y[i]);
      }
    });
  });
  return result < 0 ? std::strong_ordering::less
                    : (result > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.basis_ == b.basis_;
}

Subspace image(const Matrix& a) { return Subspace::span(a.transposed()); }

Subspace kernel(const Matrix& a) {
  const Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(a.field(), free_cols.size(), a.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    k.set(i, free_cols[i], 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k.set(i, e.pivots[r], -e.reduced.at(r, free_cols[i]));
  }
  return Subspace::span(k);
}

bool contains(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim() || !(v.field() == w.field()))
    throw ValidationError("subspaces live in different ambient spaces");
  if (w.dim() > v.dim()) return false;
  return v.contains_rows(w.basis());
}

Subspace map_subspace(const Matrix& a, const Subspace& v) {
  if (a.cols() != v.ambient_dim() || !(a.field() == v.field()))
    throw ValidationError("map source does not match subspace ambient space");
  return Subspace::span(v.basis() * a.transposed());
}

Subspace sum(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim() || !(v.field() == w.field()))
    throw ValidationError("subspaces live in different ambient spaces");
  return Subspace::span(vstack(v.basis(), w.basis()));
}

std::vector<Subspace> all_subspaces(const Field& field, std::size_t m, std::size_t k) {
  if (!field.is_prime()) throw ValidationError("subspace enumeration needs a prime field");
  if (k > m) return {};
  const std::uint32_t p = field.characteristic();
  std::vector<Subspace> out;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<bool> is_pivot(m, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < m; ++c)
        if (!is_pivot[c]) free_pos.emplace_back(r, c);
    std::vector<std::uint32_t> digits(free_pos.size(), 0);
    while (true) {
      Matrix b(field, k, m);
      for (std::size_t r = 0; r < k; ++r) b.set(r, piv[r], 1);
      for (std::size_t i = 0; i < free_pos.size(); ++i)
        b.set(free_pos[i].first, free_pos[i].second, static_cast<long long>(digits[i]));
      out.push_back(Subspace::span(b));
      // odometer, last position fastest
      std::size_t i = free_pos.size();
      while (i > 0 && digits[i - 1] + 1 == p) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
    // next pivot combination
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::uint64_t gaussian_binomial(std::size_t m, std::size_t k, std::uint64_t q) {
  if (k > m) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    return (a != 0 && b > kMax / a) ? kMax : a * b;
  };
  // g[j] holds [i choose j]_q for the current i.
  std::vector<std::uint64_t> g(k + 1, 0);
  g[0] = 1;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = std::min(i, k); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (std::size_t t = 0; t < j; ++t) qj = sat_mul(qj, q);
      g[j] = sat_add(g[j - 1], sat_mul(qj, g[j]));
    }
  return g[k];
}

}  // namespace lindeg
