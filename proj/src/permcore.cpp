#include "stockpoly/permcore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stockpoly {

Permutation::Permutation(std::vector<int> images) : images_{std::move(images)} {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation of {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation{std::move(v)};
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation{std::move(inv)};
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 1; i <= size(); ++i)
    if (is_fixed(i)) out.push_back(i);
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> v(a.images_.size());
  for (int i = 1; i <= a.size(); ++i) v[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation{std::move(v)};
}

std::string to_string(const Permutation& p) {
  std::string out = "{";
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out + "}";
}

Permutation adjacent_transposition(int n, int p) {
  if (p < 1 || p >= n) throw std::invalid_argument("adjacent transposition out of range");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::swap(v[static_cast<std::size_t>(p - 1)], v[static_cast<std::size_t>(p)]);
  return Permutation{std::move(v)};
}

const char* to_string(Orientation o) noexcept { return o == Orientation::Right ? "RIGHT" : "LEFT"; }

DecoratedPermutation::DecoratedPermutation(Permutation perm, std::vector<std::optional<Orientation>> colors)
    : perm_{std::move(perm)}, colors_{std::move(colors)} {
  if (static_cast<int>(colors_.size()) != perm_.size())
    throw std::invalid_argument("decoration size mismatch");
  for (int i = 1; i <= perm_.size(); ++i) {
    const bool has = colors_[static_cast<std::size_t>(i - 1)].has_value();
    if (has != perm_.is_fixed(i))
      throw std::invalid_argument("decorations must cover exactly the fixed points (point " + std::to_string(i) + ")");
  }
}

DecoratedPermutation DecoratedPermutation::uniform(Permutation perm, Orientation fixed) {
  std::vector<std::optional<Orientation>> colors(static_cast<std::size_t>(perm.size()));
  for (int i : perm.fixed_points()) colors[static_cast<std::size_t>(i - 1)] = fixed;
  return DecoratedPermutation{std::move(perm), std::move(colors)};
}

Orientation DecoratedPermutation::color(int i) const {
  const auto& c = colors_.at(static_cast<std::size_t>(i - 1));
  if (!c) throw std::invalid_argument("point " + std::to_string(i) + " is not a fixed point");
  return *c;
}

std::string to_string(const DecoratedPermutation& dp) {
  std::string out = "{";
  for (int i = 1; i <= dp.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(dp(i));
    if (dp.perm().is_fixed(i)) out += dp.color(i) == Orientation::Right ? "R" : "L";
  }
  return out + "}";
}

WiringWord::WiringWord(int n_, std::vector<int> letters_) : n{n_}, letters{std::move(letters_)} {
  if (n < 0) throw std::invalid_argument("negative wire count");
  for (int p : letters)
    if (p < 1 || p >= n) throw std::invalid_argument("letter s" + std::to_string(p) + " out of range for n=" + std::to_string(n));
}

WiringWord WiringWord::prefix(std::size_t len) const {
  if (len > letters.size()) throw std::out_of_range("prefix longer than word");
  return WiringWord{n, std::vector<int>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(len))};
}

std::string to_string(const WiringWord& w) {
  std::string out = "(";
  for (std::size_t t = 0; t < w.letters.size(); ++t) {
    if (t > 0) out += ',';
    out += 's' + std::to_string(w.letters[t]);
  }
  return out + ")";
}

BoundedAffinePermutation::BoundedAffinePermutation(int n, std::vector<int> values) : n_{n}, values_{std::move(values)} {
  if (static_cast<int>(values_.size()) != n_) throw std::invalid_argument("affine permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int i = 1; i <= n_; ++i) {
    const int v = values_[static_cast<std::size_t>(i - 1)];
    if (v < i || v > i + n_) throw std::invalid_argument("bound i <= f(i) <= i+n violated at " + std::to_string(i));
    const auto r = static_cast<std::size_t>((v - 1) % n_);
    if (seen[r]) throw std::invalid_argument("f mod n is not a bijection");
    seen[r] = true;
  }
}

int BoundedAffinePermutation::k() const noexcept {
  return static_cast<int>(std::count_if(values_.begin(), values_.end(), [this](int v) { return v > n_; }));
}

Permutation word_to_permutation(const WiringWord& word) {
  // wire_at[p] = starting position of the wire currently at position p+1
  std::vector<int> wire_at(static_cast<std::size_t>(word.n));
  std::iota(wire_at.begin(), wire_at.end(), 1);
  for (int p : word.letters) std::swap(wire_at[static_cast<std::size_t>(p - 1)], wire_at[static_cast<std::size_t>(p)]);
  return Permutation{std::move(wire_at)}.inverse();
}

int inversions(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) ++count;
  return count;
}

bool is_reduced(const WiringWord& word) {
  return static_cast<std::size_t>(inversions(word_to_permutation(word))) == word.length();
}

int anti_exceedance_count(const DecoratedPermutation& dp) {
  int k = 0;
  for (int i = 1; i <= dp.size(); ++i) {
    if (dp(i) < i) ++k;
    else if (dp(i) == i && dp.color(i) == Orientation::Left) ++k;
  }
  return k;
}

BoundedAffinePermutation affine_lift(const DecoratedPermutation& dp) {
  const int n = dp.size();
  std::vector<int> f(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int v = dp(i);
    int lifted = v;
    if (v < i) lifted = v + n;
    else if (v == i && dp.color(i) == Orientation::Left) lifted = i + n;
    f[static_cast<std::size_t>(i - 1)] = lifted;
  }
  return BoundedAffinePermutation{n, std::move(f)};
}

DecoratedPermutation decorated_from_affine(const BoundedAffinePermutation& f) {
  const int n = f.size();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<std::optional<Orientation>> colors(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int v = f(i);
    images[static_cast<std::size_t>(i - 1)] = (v - 1) % n + 1;
    if (v == i) colors[static_cast<std::size_t>(i - 1)] = Orientation::Right;
    else if (v == i + n) colors[static_cast<std::size_t>(i - 1)] = Orientation::Left;
  }
  return DecoratedPermutation{Permutation{std::move(images)}, std::move(colors)};
}

WiringWord remove_letter(const WiringWord& word, std::size_t index) {
  if (word.letters.empty()) throw std::out_of_range("cannot remove a letter from an empty word");
  if (index >= word.letters.size()) throw std::out_of_range("letter index out of range");
  WiringWord out = word;
  out.letters.erase(out.letters.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

DecoratedPermutation cyclic_shift(const DecoratedPermutation& dp) {
  const int n = dp.size();
  auto next = [n](int i) { return i % n + 1; };
  std::vector<int> images(static_cast<std::size_t>(n));
  std::vector<std::optional<Orientation>> colors(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    images[static_cast<std::size_t>(next(i) - 1)] = next(dp(i));
    colors[static_cast<std::size_t>(next(i) - 1)] = dp.colors()[static_cast<std::size_t>(i - 1)];
  }
  return DecoratedPermutation{Permutation{std::move(images)}, std::move(colors)};
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<DecoratedPermutation> all_decorated_permutations(int n) {
  std::vector<DecoratedPermutation> out;
  for (const auto& p : all_permutations(n)) {
    const auto fixed = p.fixed_points();
    const std::size_t combos = std::size_t{1} << fixed.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      std::vector<std::optional<Orientation>> colors(static_cast<std::size_t>(n));
      for (std::size_t j = 0; j < fixed.size(); ++j)
        colors[static_cast<std::size_t>(fixed[j] - 1)] = ((mask >> j) & 1U) ? Orientation::Left : Orientation::Right;
      out.emplace_back(p, std::move(colors));
    }
  }
  return out;
}

}  // namespace stockpoly
