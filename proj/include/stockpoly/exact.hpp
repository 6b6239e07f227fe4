#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stockpoly::exact {

using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<std::int64_t>;

/// Overflow-checked int64 helpers; throw std::overflow_error.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Divides by the gcd of the entries (no sign change). Zero vectors are left alone.
void normalize(IntVector& v);

/// Rank over Q.
std::size_t rank(const std::vector<IntVector>& rows);

/// Incremental row-echelon basis over Q with integer rows.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_{width} {}

  /// Reduces `v`; when independent, stores it and returns true.
  bool insert(IntVector v);
  /// True when `v` lies in the span.
  bool spans(IntVector v) const;
  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  IntVector reduce(IntVector v) const;

  std::size_t width_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Solves the square system A x = b exactly; empty result when singular.
std::vector<Rational> solve(const std::vector<IntVector>& a, const IntVector& b);

}  // namespace stockpoly::exact
