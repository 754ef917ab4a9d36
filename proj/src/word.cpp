#include "fgb/word.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "fgb/errors.hpp"

namespace fgb {

Rank::Rank(int r) : r_(r) {
  if (r < 2) throw ValidationError("rank must be >= 2, got " + std::to_string(r));
  if (r > 26) throw ValidationError("rank must be <= 26 (letter serialization), got " + std::to_string(r));
}

double Rank::growth_log() const { return std::log(double(branching())); }

char letter_to_char(Letter x) {
  const int gen = x / 2;
  return static_cast<char>((x % 2 == 0 ? 'a' : 'A') + gen);
}

Letter letter_from_char(char c, Rank rank) {
  int gen, upper;
  if (c >= 'a' && c <= 'z') {
    gen = c - 'a';
    upper = 0;
  } else if (c >= 'A' && c <= 'Z') {
    gen = c - 'A';
    upper = 1;
  } else {
    throw ValidationError(std::string("invalid letter '") + c + "'");
  }
  if (gen >= rank.value()) {
    throw ValidationError(std::string("letter '") + c + "' is outside rank " +
                          std::to_string(rank.value()));
  }
  return static_cast<Letter>(2 * gen + upper);
}

ReducedWord::ReducedWord(std::vector<Letter> letters, Rank rank)
    : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] >= rank.alphabet_size()) {
      throw ValidationError("letter index " + std::to_string(letters_[i]) +
                            " outside alphabet of rank " +
                            std::to_string(rank.value()));
    }
    if (i > 0 && letters_[i] == letter_inverse(letters_[i - 1])) {
      throw ValidationError("word is not reduced at position " +
                            std::to_string(i));
    }
  }
}

ReducedWord ReducedWord::parse(std::string_view text, Rank rank) {
  if (text.empty() || text == "e") return ReducedWord();
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(letter_from_char(c, rank));
  return ReducedWord(std::move(letters), rank);
}

std::string ReducedWord::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(letter_to_char(x));
  return out;
}

ReducedWord ReducedWord::prefix(std::size_t n) const {
  if (n > letters_.size()) {
    throw ValidationError("prefix length " + std::to_string(n) +
                          " exceeds word length " +
                          std::to_string(letters_.size()));
  }
  return ReducedWord(std::vector<Letter>(letters_.begin(), letters_.begin() + n),
                     Unchecked{});
}

bool ReducedWord::is_prefix_of(const ReducedWord& w) const {
  return letters_.size() <= w.letters_.size() &&
         std::equal(letters_.begin(), letters_.end(), w.letters_.begin());
}

std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b) {
  if (a.letters_.size() != b.letters_.size())
    return a.letters_.size() <=> b.letters_.size();
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    if (a.letters_[i] != b.letters_[i]) return a.letters_[i] <=> b.letters_[i];
  }
  return std::strong_ordering::equal;
}

ReducedWord reduce_concat(const ReducedWord& x, const ReducedWord& y) {
  std::vector<Letter> out = x.letters_;
  for (Letter c : y.letters_) {
    if (!out.empty() && out.back() == letter_inverse(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return ReducedWord(std::move(out), ReducedWord::Unchecked{});
}

ReducedWord inverse(const ReducedWord& x) {
  std::vector<Letter> out(x.letters_.rbegin(), x.letters_.rend());
  for (Letter& c : out) c = letter_inverse(c);
  return ReducedWord(std::move(out), ReducedWord::Unchecked{});
}

std::size_t common_prefix_length(const ReducedWord& x, const ReducedWord& y) {
  const std::size_t n = std::min(x.length(), y.length());
  std::size_t k = 0;
  while (k < n && x.at(k) == y.at(k)) ++k;
  return k;
}

std::int64_t word_distance(const ReducedWord& g, const ReducedWord& h) {
  return static_cast<std::int64_t>(g.length() + h.length()) -
         2 * static_cast<std::int64_t>(common_prefix_length(g, h));
}

Rational gromov_product_points(const ReducedWord& x, const ReducedWord& y,
                               const ReducedWord& z) {
  const std::int64_t twice =
      word_distance(x, z) + word_distance(y, z) - word_distance(x, y);
  return Rational(twice, 2);
}

BigInt sphere_count(Rank rank, int m) {
  if (m < 0) throw ValidationError("sphere radius must be >= 0");
  if (m == 0) return 1;
  return BigInt(rank.alphabet_size()) * int_pow(rank.branching(), m - 1);
}

namespace {

void sphere_iter_rec(Rank rank, int remaining, std::vector<Letter>& stack,
                     Budget& budget,
                     const std::function<void(const ReducedWord&)>& visit) {
  if (remaining == 0) {
    budget.charge();
    // Stack contents are reduced by construction.
    visit(ReducedWord(stack, rank));
    return;
  }
  for (Letter c = 0; c < rank.alphabet_size(); ++c) {
    if (!stack.empty() && c == letter_inverse(stack.back())) continue;
    stack.push_back(c);
    sphere_iter_rec(rank, remaining - 1, stack, budget, visit);
    stack.pop_back();
  }
}

}  // namespace

void sphere_iter(Rank rank, int m, Budget& budget,
                 const std::function<void(const ReducedWord&)>& visit) {
  if (m < 0) throw ValidationError("sphere radius must be >= 0");
  std::vector<Letter> stack;
  stack.reserve(m);
  sphere_iter_rec(rank, m, stack, budget, visit);
}

std::vector<ReducedWord> ball(Rank rank, int radius, Budget& budget) {
  if (radius < 0) throw ValidationError("ball radius must be >= 0");
  std::vector<ReducedWord> out;
  for (int m = 0; m <= radius; ++m) {
    sphere_iter(rank, m, budget, [&](const ReducedWord& w) { out.push_back(w); });
  }
  return out;
}

Rational hyperbolicity_defect(Rank rank, int radius, Budget& budget) {
  if (radius < 1) throw ValidationError("radius must be >= 1");
  const std::vector<ReducedWord> pts = ball(rank, radius, budget);
  const std::size_t n = pts.size();

  // Quadruple scan cost, with the x<=y symmetry. Charged up front so that an
  // oversized radius fails before any work is done.
  const std::uint64_t pair_count = static_cast<std::uint64_t>(n) * (n + 1) / 2;
  budget.charge(pair_count * n * n);

  std::vector<int> dist(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      dist[i * n + j] = static_cast<int>(word_distance(pts[i], pts[j]));

  // max over (x,y,z,w) of min{(x|z)_w,(y|z)_w} - (x|y)_w, in half-units.
  auto scan_w_range = [&](std::size_t w_begin, std::size_t w_end) {
    int local = 0;
    std::vector<int> twice_gp(n * n);
    for (std::size_t w = w_begin; w < w_end; ++w) {
      const int* dw = dist.data() + w * n;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          twice_gp[x * n + y] = dw[x] + dw[y] - dist[x * n + y];
      for (std::size_t x = 0; x < n; ++x) {
        const int* gx = twice_gp.data() + x * n;
        for (std::size_t y = x; y < n; ++y) {
          const int* gy = twice_gp.data() + y * n;
          const int gxy = gx[y];
          for (std::size_t z = 0; z < n; ++z) {
            const int m = std::min(gx[z], gy[z]) - gxy;
            if (m > local) local = m;
          }
        }
      }
    }
    return local;
  };

  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
  std::vector<std::future<int>> futures;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t b = 0; b < n; b += chunk) {
    futures.push_back(std::async(std::launch::async, scan_w_range, b,
                                 std::min(n, b + chunk)));
  }
  int twice_defect = 0;
  for (auto& f : futures) twice_defect = std::max(twice_defect, f.get());
  return Rational(twice_defect, 2);
}

ReducedWord random_reduced_word(Rank rank, std::size_t length, SplitMix64& rng) {
  std::vector<Letter> letters;
  letters.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (letters.empty()) {
      letters.push_back(static_cast<Letter>(rng.below(rank.alphabet_size())));
    } else {
      const Letter forbidden = letter_inverse(letters.back());
      Letter pick = static_cast<Letter>(rng.below(rank.alphabet_size() - 1));
      if (pick >= forbidden) ++pick;
      letters.push_back(pick);
    }
  }
  return ReducedWord(std::move(letters), rank);
}

}  // namespace fgb
