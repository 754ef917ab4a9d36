#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fgb/budget.hpp"
#include "fgb/rational.hpp"
#include "fgb/rng.hpp"

namespace fgb {

/// Number of free generators. Rank 1 is excluded (the boundary action is
/// elementary there); ranks above 26 have no letter serialization.
class Rank {
 public:
  explicit Rank(int r);
  int value() const noexcept { return r_; }
  int alphabet_size() const noexcept { return 2 * r_; }       // |S| = 2r
  int branching() const noexcept { return 2 * r_ - 1; }       // 2r - 1
  double growth_log() const;                                  // v = log(2r-1)

  friend bool operator==(Rank a, Rank b) { return a.r_ == b.r_; }

 private:
  int r_;
};

/// Generator letter, encoded as an index in [0, 2r). Index 2i is s_{i+1} and
/// index 2i+1 is its inverse, so inversion is XOR with 1.
using Letter = std::uint8_t;

inline Letter letter_inverse(Letter x) noexcept { return x ^ 1; }

char letter_to_char(Letter x);
Letter letter_from_char(char c, Rank rank);

/// A free-group element in reduced form: no adjacent (x, x^{-1}) pair.
/// The empty sequence is the identity. Doubles as a cylinder label.
class ReducedWord {
 public:
  ReducedWord() = default;

  /// Validates reducedness and letter range.
  ReducedWord(std::vector<Letter> letters, Rank rank);

  /// Parses the a/A serialization; "" and "e" denote the identity.
  static ReducedWord parse(std::string_view text, Rank rank);

  /// Prints in the a/A serialization; the identity prints as "e".
  std::string str() const;

  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_.at(i); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  Letter first() const { return letters_.front(); }
  Letter last() const { return letters_.back(); }

  /// First n letters (n <= length).
  ReducedWord prefix(std::size_t n) const;

  /// True if this word is a prefix of w.
  bool is_prefix_of(const ReducedWord& w) const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  /// Shortlex on letter indices: by length, then lexicographic.
  friend std::strong_ordering operator<=>(const ReducedWord& a,
                                          const ReducedWord& b);

 private:
  struct Unchecked {};
  ReducedWord(std::vector<Letter> letters, Unchecked) noexcept
      : letters_(std::move(letters)) {}
  friend ReducedWord reduce_concat(const ReducedWord&, const ReducedWord&);
  friend ReducedWord inverse(const ReducedWord&);
  friend class SphereIter;

  std::vector<Letter> letters_;
};

/// Reduced form of the concatenation x*y.
ReducedWord reduce_concat(const ReducedWord& x, const ReducedWord& y);

/// x^{-1}: letters reversed, each inverted.
ReducedWord inverse(const ReducedWord& x);

/// Length of the common prefix of x and y.
std::size_t common_prefix_length(const ReducedWord& x, const ReducedWord& y);

/// Left-invariant word metric d(g,h) = |g^{-1}h|. On the Cayley tree this is
/// |g| + |h| - 2 * common_prefix_length(g,h).
std::int64_t word_distance(const ReducedWord& g, const ReducedWord& h);

/// Gromov product (x|y)_z = (d(x,z) + d(y,z) - d(x,y)) / 2, a half-integer.
Rational gromov_product_points(const ReducedWord& x, const ReducedWord& y,
                               const ReducedWord& z);

/// |{g : |g| = m}| = 2r (2r-1)^{m-1} for m >= 1, and 1 for m = 0.
BigInt sphere_count(Rank rank, int m);

/// Visits every reduced word of length m exactly once, in lexicographic order
/// of letter indices. Charges one budget unit per visited word.
void sphere_iter(Rank rank, int m, Budget& budget,
                 const std::function<void(const ReducedWord&)>& visit);

/// All reduced words of length <= radius, in shortlex order.
std::vector<ReducedWord> ball(Rank rank, int radius, Budget& budget);

/// Least delta such that the four-point condition holds over all quadruples
/// in the ball of the given radius; exactly 0 on trees. Charges one budget
/// unit per scanned quadruple (with the x<->y symmetry halving).
Rational hyperbolicity_defect(Rank rank, int radius, Budget& budget);

/// Uniformly random reduced word of the given length (seeded, reproducible).
ReducedWord random_reduced_word(Rank rank, std::size_t length, SplitMix64& rng);

}  // namespace fgb
