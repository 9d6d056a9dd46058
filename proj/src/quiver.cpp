#include "lindeg/quiver.hpp"

#include <algorithm>
#include <sstream>

#include "lindeg/errors.hpp"

namespace lindeg {

DimVector::DimVector(int m, std::vector<int> d) : m_(m), d_(std::move(d)) {
  if (d_.empty()) throw ValidationError("dimension vector must be nonempty");
  if (d_.front() <= 0) throw ValidationError("dimension vector entries must be positive");
  for (std::size_t i = 1; i < d_.size(); ++i)
    if (d_[i] <= d_[i - 1])
      throw ValidationError("dimension vector must be strictly increasing");
  if (d_.back() >= m_)
    throw ValidationError("largest dimension " + std::to_string(d_.back()) +
                          " must be below m = " + std::to_string(m_));
}

Decomposition::Decomposition(int n) : n_(n), dims_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 1) throw ValidationError("quiver length must be at least 1");
}

Decomposition& Decomposition::add(Interval iv, int mult) {
  if (iv.a < 1 || iv.a > iv.b || iv.b > n_)
    throw ValidationError("interval U[" + std::to_string(iv.a) + "," + std::to_string(iv.b) +
                          "] outside 1.." + std::to_string(n_));
  if (mult < 0) throw ValidationError("negative multiplicity");
  if (mult == 0) return *this;
  mult_[iv] += mult;
  for (int v = iv.a; v <= iv.b; ++v) dims_[static_cast<std::size_t>(v - 1)] += mult;
  return *this;
}

int Decomposition::multiplicity(Interval iv) const {
  auto it = mult_.find(iv);
  return it == mult_.end() ? 0 : it->second;
}

std::string Decomposition::to_string() const {
  if (mult_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [iv, k] : mult_) {
    if (!first) os << " + ";
    first = false;
    os << "U[" << iv.a << "," << iv.b << "]";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

ExtendedRanks::ExtendedRanks(int n) : n_(n), table_(static_cast<std::size_t>(n * n), 0) {
  if (n < 1) throw ValidationError("quiver length must be at least 1");
}

int ExtendedRanks::operator()(int a, int b) const {
  if (a < 1 || b > n_ || a > b) return 0;
  return table_[static_cast<std::size_t>((a - 1) * n_ + (b - 1))];
}

void ExtendedRanks::set(int a, int b, int value) {
  if (a < 1 || b > n_ || a > b) throw ValidationError("rank table index outside 1 <= a <= b <= n");
  table_[static_cast<std::size_t>((a - 1) * n_ + (b - 1))] = value;
}

std::vector<int> ExtendedRanks::flattened() const {
  std::vector<int> out;
  for (int a = 1; a <= n_; ++a)
    for (int b = a; b <= n_; ++b) out.push_back((*this)(a, b));
  return out;
}

RepMatrices::RepMatrices(Field field, std::vector<int> dims, std::vector<Matrix> maps)
    : field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.empty()) throw ValidationError("representation needs at least one vertex");
  if (maps_.size() + 1 != dims_.size())
    throw ValidationError("representation with " + std::to_string(dims_.size()) +
                          " vertices needs " + std::to_string(dims_.size() - 1) + " maps");
  for (int d : dims_)
    if (d < 0) throw ValidationError("negative vertex dimension");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const Matrix& f = maps_[i];
    if (!(f.field() == field_)) throw ValidationError("map field differs from representation field");
    if (f.rows() != static_cast<std::size_t>(dims_[i + 1]) ||
        f.cols() != static_cast<std::size_t>(dims_[i]))
      throw ValidationError("map " + std::to_string(i + 1) + " has shape " +
                            std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                            ", expected " + std::to_string(dims_[i + 1]) + "x" +
                            std::to_string(dims_[i]));
  }
}

RepMatrices RepMatrices::from_maps(std::vector<Matrix> maps) {
  if (maps.empty()) throw ValidationError("from_maps needs at least one map");
  std::vector<int> dims{static_cast<int>(maps.front().cols())};
  for (const Matrix& f : maps) dims.push_back(static_cast<int>(f.rows()));
  const Field field = maps.front().field();
  return RepMatrices(field, std::move(dims), std::move(maps));
}

std::vector<int> SubrepPoint::dims() const {
  std::vector<int> out;
  out.reserve(spaces.size());
  for (const Subspace& s : spaces) out.push_back(static_cast<int>(s.dim()));
  return out;
}

long long euler_form(std::span<const int> d, std::span<const int> e) {
  if (d.size() != e.size()) throw ValidationError("Euler form of vectors of different lengths");
  long long s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += static_cast<long long>(d[i]) * e[i];
  for (std::size_t i = 0; i + 1 < d.size(); ++i) s -= static_cast<long long>(d[i]) * e[i + 1];
  return s;
}

int hom_dim(Interval x, Interval y) {
  // Hom(U[i,j], U[h,k]) = 1 iff h <= i <= k <= j
  return (y.a <= x.a && x.a <= y.b && y.b <= x.b) ? 1 : 0;
}

int ext_dim(Interval x, Interval y) {
  // Ext^1(U[i,j], U[h,k]) = 1 iff i+1 <= h <= j+1 <= k
  return (x.a + 1 <= y.a && y.a <= x.b + 1 && x.b + 1 <= y.b) ? 1 : 0;
}

namespace {

template <class Table>
long long bilinear(const Decomposition& x, const Decomposition& y, Table table) {
  if (x.n() != y.n()) throw ValidationError("decompositions over quivers of different length");
  long long s = 0;
  for (const auto& [ix, mx] : x.summands())
    for (const auto& [iy, my] : y.summands()) s += static_cast<long long>(mx) * my * table(ix, iy);
  return s;
}

}  // namespace

long long hom_dim(const Decomposition& x, const Decomposition& y) {
  return bilinear(x, y, [](Interval a, Interval b) { return hom_dim(a, b); });
}

long long ext_dim(const Decomposition& x, const Decomposition& y) {
  return bilinear(x, y, [](Interval a, Interval b) { return ext_dim(a, b); });
}

ExtendedRanks rank_profile(const RepMatrices& rep) {
  const int n = rep.n();
  ExtendedRanks r(n);
  for (int a = 1; a <= n; ++a) {
    r.set(a, a, rep.dims()[static_cast<std::size_t>(a - 1)]);
    Matrix composite = Matrix::identity(rep.field(), static_cast<std::size_t>(rep.dims()[a - 1]));
    for (int b = a + 1; b <= n; ++b) {
      composite = rep.arrow(b - 1) * composite;
      r.set(a, b, static_cast<int>(rank(composite)));
    }
  }
  return r;
}

std::map<Interval, int> raw_multiplicities(const ExtendedRanks& r) {
  std::map<Interval, int> out;
  for (int a = 1; a <= r.n(); ++a)
    for (int b = a; b <= r.n(); ++b)
      out[{a, b}] = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
  return out;
}

Decomposition decompose_from_ranks(const ExtendedRanks& r) {
  Decomposition dec(r.n());
  for (const auto& [iv, k] : raw_multiplicities(r)) {
    if (k < 0)
      throw NotRealizable("rank table is not realizable: multiplicity of U[" +
                          std::to_string(iv.a) + "," + std::to_string(iv.b) + "] would be " +
                          std::to_string(k));
    dec.add(iv, k);
  }
  return dec;
}

ExtendedRanks ranks_from_decomposition(const Decomposition& dec) {
  ExtendedRanks r(dec.n());
  for (int a = 1; a <= dec.n(); ++a)
    for (int b = a; b <= dec.n(); ++b) {
      int s = 0;
      for (const auto& [iv, k] : dec.summands())
        if (iv.a <= a && iv.b >= b) s += k;
      r.set(a, b, s);
    }
  return r;
}

Decomposition well_behaved_rep(const DimVector& d) {
  const int n = d.n();
  Decomposition dec(n);
  for (int i = 1; i < n; ++i) {
    dec.add({1, i}, d.step(i));
    dec.add({i + 1, n}, d.step(i));
  }
  dec.add({1, n}, d.m() - d.at(n) + d.at(1));
  return dec;
}

ProjectiveResolution minimal_projective_resolution(const Decomposition& dec) {
  const int n = dec.n();
  ProjectiveResolution res{Decomposition(n), Decomposition(n)};
  for (int i = 1; i <= n; ++i) {
    const Decomposition simple = Decomposition(n).add({i, i});
    res.projective.add({i, n}, static_cast<int>(hom_dim(dec, simple)));
    res.syzygy.add({i, n}, static_cast<int>(ext_dim(dec, simple)));
  }
  return res;
}

bool is_catenoid(const Decomposition& dec) {
  std::vector<Interval> ivs;
  for (const auto& [iv, k] : dec.summands()) ivs.push_back(iv);
  for (std::size_t i = 0; i < ivs.size(); ++i)
    for (std::size_t j = i + 1; j < ivs.size(); ++j) {
      const Interval& x = ivs[i];
      const Interval& y = ivs[j];
      const bool le = x.a <= y.a && x.b <= y.b;
      const bool ge = y.a <= x.a && y.b <= x.b;
      if (!le && !ge) return false;
    }
  return true;
}

SchubertTarget schubert_embedding_target(const Decomposition& dec, std::span<const int> d) {
  if (static_cast<int>(d.size()) != dec.n())
    throw ValidationError("dimension vector length differs from quiver length");
  const ProjectiveResolution res = minimal_projective_resolution(dec);
  SchubertTarget t{res.projective.dims(), {}};
  for (std::size_t i = 0; i < d.size(); ++i) t.target_dims.push_back(d[i] + res.syzygy.dims()[i]);
  return t;
}

RepMatrices realize(const Decomposition& dec, const Field& field) {
  const int n = dec.n();
  std::vector<Matrix> maps;
  for (int i = 1; i < n; ++i)
    maps.emplace_back(field, static_cast<std::size_t>(dec.dims()[i]),
                      static_cast<std::size_t>(dec.dims()[i - 1]));
  std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
  for (const auto& [iv, k] : dec.summands())
    for (int copy = 0; copy < k; ++copy) {
      std::size_t prev = 0;
      for (int v = iv.a; v <= iv.b; ++v) {
        const std::size_t idx = next[static_cast<std::size_t>(v - 1)]++;
        if (v > iv.a) maps[static_cast<std::size_t>(v - 2)].set(idx, prev, 1);
        prev = idx;
      }
    }
  return RepMatrices(field, dec.dims(), std::move(maps));
}

long long intertwiner_space_dim(const RepMatrices& m, const RepMatrices& n) {
  if (m.n() != n.n()) throw ValidationError("representations over quivers of different length");
  if (!(m.field() == n.field())) throw ValidationError("representations over different fields");
  const int len = m.n();
  // Unknown psi_v is a dims_n[v] x dims_m[v] block, stored row-major.
  std::vector<std::size_t> offset(static_cast<std::size_t>(len) + 1, 0);
  for (int v = 0; v < len; ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dims()[v]) * m.dims()[v];
  std::size_t eqs = 0;
  for (int v = 0; v + 1 < len; ++v) eqs += static_cast<std::size_t>(n.dims()[v + 1]) * m.dims()[v];
  Matrix sys(m.field(), eqs, offset.back());
  std::size_t row = 0;
  for (int v = 0; v + 1 < len; ++v) {
    const Matrix& f = m.maps()[v];  // dims_m[v+1] x dims_m[v]
    const Matrix& g = n.maps()[v];  // dims_n[v+1] x dims_n[v]
    const std::size_t mv = m.dims()[v], mv1 = m.dims()[v + 1];
    const std::size_t nv = n.dims()[v], nv1 = n.dims()[v + 1];
    for (std::size_t i = 0; i < nv1; ++i)
      for (std::size_t j = 0; j < mv; ++j, ++row) {
        // (psi_{v+1} f)_{ij} = sum_k psi_{v+1}[i,k] f[k,j]
        for (std::size_t k = 0; k < mv1; ++k)
          if (!f.is_zero_at(k, j)) sys.set(row, offset[v + 1] + i * mv1 + k, f.at(k, j));
        // -(g psi_v)_{ij} = -sum_k g[i,k] psi_v[k,j]
        for (std::size_t k = 0; k < nv; ++k)
          if (!g.is_zero_at(i, k))
            sys.set(row, offset[v] + k * mv + j, sys.at(row, offset[v] + k * mv + j) - g.at(i, k));
      }
  }
  return static_cast<long long>(offset.back()) - static_cast<long long>(rank(sys));
}

namespace {

void check_shape(const RepMatrices& rep, const SubrepPoint& sub) {
  if (static_cast<int>(sub.spaces.size()) != rep.n())
    throw ValidationError("subrepresentation has the wrong number of vertices");
  for (int v = 0; v < rep.n(); ++v) {
    const Subspace& s = sub.spaces[static_cast<std::size_t>(v)];
    if (s.ambient_dim() != static_cast<std::size_t>(rep.dims()[v]) || !(s.field() == rep.field()))
      throw ValidationError("subspace at vertex " + std::to_string(v + 1) +
                            " does not live in the representation");
  }
}

}  // namespace

bool is_subrep(const RepMatrices& rep, const SubrepPoint& sub) {
  check_shape(rep, sub);
  for (int i = 1; i < rep.n(); ++i) {
    const Subspace& src = sub.spaces[static_cast<std::size_t>(i - 1)];
    const Subspace& dst = sub.spaces[static_cast<std::size_t>(i)];
    if (!dst.contains_rows(src.basis() * rep.arrow(i).transposed())) return false;
  }
  return true;
}

RepMatrices subrep(const RepMatrices& rep, const SubrepPoint& sub) {
  if (!is_subrep(rep, sub)) throw ValidationError("not a subrepresentation");
  std::vector<Matrix> maps;
  for (int i = 1; i < rep.n(); ++i) {
    const Subspace& src = sub.spaces[static_cast<std::size_t>(i - 1)];
    const Subspace& dst = sub.spaces[static_cast<std::size_t>(i)];
    const Matrix images = src.basis() * rep.arrow(i).transposed();  // one row per source basis vector
    Matrix f(rep.field(), dst.dim(), src.dim());
    // In echelon coordinates the coefficient on basis row r is the pivot entry.
    for (std::size_t k = 0; k < src.dim(); ++k)
      for (std::size_t r = 0; r < dst.dim(); ++r) f.set(r, k, images.at(k, dst.pivots()[r]));
    maps.push_back(std::move(f));
  }
  return RepMatrices(rep.field(), sub.dims(), std::move(maps));
}

RepMatrices quotient_rep(const RepMatrices& rep, const SubrepPoint& sub) {
  if (!is_subrep(rep, sub)) throw ValidationError("not a subrepresentation");
  const int n = rep.n();
  std::vector<std::vector<std::size_t>> complement(static_cast<std::size_t>(n));
  std::vector<int> dims;
  for (int v = 0; v < n; ++v) {
    const Subspace& s = sub.spaces[static_cast<std::size_t>(v)];
    std::vector<bool> pivot(static_cast<std::size_t>(rep.dims()[v]), false);
    for (std::size_t c : s.pivots()) pivot[c] = true;
    for (std::size_t c = 0; c < pivot.size(); ++c)
      if (!pivot[c]) complement[static_cast<std::size_t>(v)].push_back(c);
    dims.push_back(static_cast<int>(complement[static_cast<std::size_t>(v)].size()));
  }
  std::vector<Matrix> maps;
  for (int i = 1; i < n; ++i) {
    const auto& src = complement[static_cast<std::size_t>(i - 1)];
    const auto& dst = complement[static_cast<std::size_t>(i)];
    const Matrix ft = rep.arrow(i).transposed();  // row c is the image of e_c
    Matrix images(rep.field(), src.size(), ft.cols());
    for (std::size_t k = 0; k < src.size(); ++k)
      for (std::size_t j = 0; j < ft.cols(); ++j) images.set(k, j, ft.at(src[k], j));
    const Matrix reduced = sub.spaces[static_cast<std::size_t>(i)].reduce(images);
    Matrix f(rep.field(), dst.size(), src.size());
    for (std::size_t k = 0; k < src.size(); ++k)
      for (std::size_t r = 0; r < dst.size(); ++r) f.set(r, k, reduced.at(k, dst[r]));
    maps.push_back(std::move(f));
  }
  return RepMatrices(rep.field(), std::move(dims), std::move(maps));
}

}  // namespace lindeg
