#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace stockpoly {

/// Subset of the ground set {1..n}, n <= 63, stored as a bitmask (bit i-1 <-> element i).
class Subset {
 public:
  static constexpr int kMaxGround = 63;

  constexpr Subset() = default;
  Subset(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  static constexpr Subset from_bits(std::uint64_t bits) noexcept {
    Subset s;
    s.bits_ = bits;
    return s;
  }

  static Subset from_elements(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s.insert(e);
    return s;
  }

  /// Full ground set {1..n}.
  static constexpr Subset full(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  /// Cyclic interval [a..b] of {1..n}; b may exceed n and wraps. Requires a <= b.
  static Subset cyclic_interval(int a, int b, int n) {
    if (b - a + 1 >= n) return full(n);
    Subset s;
    for (int x = a; x <= b; ++x) s.insert((x - 1) % n + 1);
    return s;
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(int e) const noexcept { return e >= 1 && e <= 64 && ((bits_ >> (e - 1)) & 1U); }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }

  void insert(int e) {
    if (e < 1 || e > kMaxGround) throw std::out_of_range("subset element out of range");
    bits_ |= std::uint64_t{1} << (e - 1);
  }
  void erase(int e) {
    if (e >= 1 && e <= kMaxGround) bits_ &= ~(std::uint64_t{1} << (e - 1));
  }
  Subset with(int e) const { Subset s = *this; s.insert(e); return s; }
  Subset without(int e) const { Subset s = *this; s.erase(e); return s; }

  constexpr bool is_subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  /// Elements in ascending order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  constexpr Subset operator&(Subset o) const noexcept { return from_bits(bits_ & o.bits_); }
  constexpr Subset operator|(Subset o) const noexcept { return from_bits(bits_ | o.bits_); }
  constexpr Subset operator-(Subset o) const noexcept { return from_bits(bits_ & ~o.bits_); }

  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending element lists ({1,3} < {1,4} < {2,3}).
bool lex_less(Subset a, Subset b);

/// "{1,3}" style rendering.
std::string to_string(Subset s);

/// Calls fn(Subset) for every k-subset of {1..n} in increasing bitmask order.
template <class Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Subset{});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  while (v < limit) {
    fn(Subset::from_bits(v));
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
}

}  // namespace stockpoly
