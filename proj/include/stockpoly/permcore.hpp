#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stockpoly {

/// Permutation of {1..n} in one-line notation, 1-based: images()[i-1] = pi(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `images` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_fixed(int i) const { return (*this)(i) == i; }
  std::vector<int> fixed_points() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// "{2,4,1,3}"
std::string to_string(const Permutation& p);

/// Adjacent transposition s_p on n points.
Permutation adjacent_transposition(int n, int p);

/// Orientation of a fixed-point cord: RIGHT (price up or flat) or LEFT (price down).
enum class Orientation { Right, Left };

const char* to_string(Orientation o) noexcept;

/// Permutation whose fixed points each carry an orientation.
class DecoratedPermutation {
 public:
  DecoratedPermutation() = default;
  /// `colors` must have size n; entries at fixed points are required, all others must be empty.
  DecoratedPermutation(Permutation perm, std::vector<std::optional<Orientation>> colors);
  /// Every fixed point gets `fixed`.
  static DecoratedPermutation uniform(Permutation perm, Orientation fixed = Orientation::Right);

  const Permutation& perm() const noexcept { return perm_; }
  int size() const noexcept { return perm_.size(); }
  int operator()(int i) const { return perm_(i); }
  /// Orientation of fixed point i; throws if i is not fixed.
  Orientation color(int i) const;
  const std::vector<std::optional<Orientation>>& colors() const noexcept { return colors_; }

  friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;

 private:
  Permutation perm_;
  std::vector<std::optional<Orientation>> colors_;
};

/// "{1R,3,2,4L}" style rendering.
std::string to_string(const DecoratedPermutation& dp);

/// Time-ordered adjacent transpositions; letter p swaps the wires at positions p and p+1.
struct WiringWord {
  int n = 0;
  std::vector<int> letters;

  WiringWord() = default;
  /// Throws std::invalid_argument when a letter is outside 1..n-1.
  WiringWord(int n, std::vector<int> letters);

  std::size_t length() const noexcept { return letters.size(); }
  WiringWord prefix(std::size_t len) const;

  friend bool operator==(const WiringWord&, const WiringWord&) = default;
};

/// "(s2,s3,s1)"
std::string to_string(const WiringWord& w);

/// Bounded affine permutation: i <= f(i) <= i+n, f(i) mod n a bijection.
class BoundedAffinePermutation {
 public:
  BoundedAffinePermutation() = default;
  /// Throws std::invalid_argument on a bound or bijectivity violation.
  BoundedAffinePermutation(int n, std::vector<int> values);

  int size() const noexcept { return n_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& values() const noexcept { return values_; }
  /// Number of i with f(i) > n.
  int k() const noexcept;

  friend bool operator==(const BoundedAffinePermutation&, const BoundedAffinePermutation&) = default;

 private:
  int n_ = 0;
  std::vector<int> values_;
};

/// Rank map of the wiring diagram's right edge: the wire entering at position i leaves at position pi(i).
Permutation word_to_permutation(const WiringWord& word);

int inversions(const Permutation& p);

/// True iff inversions(word_to_permutation(word)) == word.length().
bool is_reduced(const WiringWord& word);

/// #{i : pi(i) < i} + #{LEFT fixed points}.
int anti_exceedance_count(const DecoratedPermutation& dp);

BoundedAffinePermutation affine_lift(const DecoratedPermutation& dp);
DecoratedPermutation decorated_from_affine(const BoundedAffinePermutation& f);

/// Deletes letters[index]; throws std::out_of_range on a bad index or empty word.
WiringWord remove_letter(const WiringWord& word, std::size_t index);

/// Conjugation by the cycle i -> i+1 (mod n), carrying decorations along.
DecoratedPermutation cyclic_shift(const DecoratedPermutation& dp);

/// Every permutation of {1..n} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Every decorated permutation of {1..n}: all permutations x all fixed-point colorings.
std::vector<DecoratedPermutation> all_decorated_permutations(int n);

}  // namespace stockpoly
