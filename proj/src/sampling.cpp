#include "lindeg/sampling.hpp"

#include <algorithm>
#include <vector>

namespace lindeg {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix a(field, rows, cols);
  const int hi = field.is_prime() ? static_cast<int>(field.characteristic()) - 1 : 9;
  const int lo = field.is_prime() ? 0 : -9;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a.set(r, c, static_cast<long long>(uniform(rng, lo, hi)));
  return a;
}

Matrix random_invertible(const Field& field, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix a = random_matrix(field, n, n, rng);
    if (rank(a) == n) return a;
  }
}

Matrix random_low_rank(const Field& field, std::size_t rows, std::size_t cols, std::size_t r, Rng& rng) {
  return random_matrix(field, rows, r, rng) * random_matrix(field, r, cols, rng);
}

Decomposition random_decomposition(int n, int max_dim, Rng& rng) {
  std::vector<int> room(static_cast<std::size_t>(n), max_dim);
  Decomposition dec(n);
  const int attempts = uniform(rng, 0, n * (n + 1));
  for (int t = 0; t < attempts; ++t) {
    const int a = uniform(rng, 1, n);
    const int b = uniform(rng, a, n);
    int cap = max_dim;
    for (int v = a; v <= b; ++v) cap = std::min(cap, room[static_cast<std::size_t>(v - 1)]);
    if (cap == 0) continue;
    const int k = uniform(rng, 1, std::min(cap, 2));
    dec.add({a, b}, k);
    for (int v = a; v <= b; ++v) room[static_cast<std::size_t>(v - 1)] -= k;
  }
  return dec;
}

RepMatrices random_base_change(const RepMatrices& rep, Rng& rng) {
  std::vector<Matrix> p, p_inv;
  for (int d : rep.dims()) {
    p.push_back(random_invertible(rep.field(), static_cast<std::size_t>(d), rng));
    p_inv.push_back(inverse(p.back()));
  }
  std::vector<Matrix> maps;
  for (int i = 1; i < rep.n(); ++i)
    maps.push_back(p[static_cast<std::size_t>(i)] * rep.arrow(i) * p_inv[static_cast<std::size_t>(i - 1)]);
  return RepMatrices(rep.field(), rep.dims(), std::move(maps));
}

}  // namespace lindeg
