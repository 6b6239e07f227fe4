#include "stockpoly/exact.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace stockpoly::exact {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in exact arithmetic");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in exact arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in exact arithmetic");
  return r;
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

void normalize(IntVector& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x);
  if (g > 1)
    for (std::int64_t& x : v) x /= g;
}

IntVector EchelonBasis::reduce(IntVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t col = pivots_[r];
    if (v[col] == 0) continue;
    const std::int64_t a = rows_[r][col];
    const std::int64_t c = v[col];
    for (std::size_t j = 0; j < width_; ++j) v[j] = checked_sub(checked_mul(v[j], a), checked_mul(c, rows_[r][j]));
    normalize(v);
  }
  return v;
}

bool EchelonBasis::insert(IntVector v) {
  v = reduce(std::move(v));
  for (std::size_t j = 0; j < width_; ++j) {
    if (v[j] != 0) {
      rows_.push_back(std::move(v));
      pivots_.push_back(j);
      return true;
    }
  }
  return false;
}

bool EchelonBasis::spans(IntVector v) const {
  v = reduce(std::move(v));
  for (std::int64_t x : v)
    if (x != 0) return false;
  return true;
}

std::size_t rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  for (const auto& row : rows) {
    std::vector<Rational> v(row.begin(), row.end());
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const std::size_t col = pivots[r];
      if (v[col] == 0) continue;
      const Rational factor = v[col] / basis[r][col];
      for (std::size_t j = 0; j < width; ++j) v[j] -= factor * basis[r][j];
    }
    for (std::size_t j = 0; j < width; ++j) {
      if (v[j] != 0) {
        basis.push_back(std::move(v));
        pivots.push_back(j);
        break;
      }
    }
    if (basis.size() == width) break;
  }
  return basis.size();
}

std::vector<Rational> solve(const std::vector<IntVector>& a, const IntVector& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(m[pivot], m[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational factor = m[i][col] / m[col][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] -= factor * m[col][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace stockpoly::exact
