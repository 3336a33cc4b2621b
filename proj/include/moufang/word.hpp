#pragma once

// Reduced words of the free group on {x, y}.
//
// Text syntax: letters `x`, `y`, `e` (empty word), `^` with a signed integer
// exponent, juxtaposition for product, parentheses for grouping, e.g.
// `x^2y^-1x` or `(xy)^2`. Whitespace is ignored.

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moufang {

enum class Letter : unsigned char { x, y };

inline Letter other(Letter a) { return a == Letter::x ? Letter::y : Letter::x; }

struct Syllable {
  Letter letter;
  int exponent;
  bool operator==(const Syllable&) const = default;
};

// Number of syllables and total absolute exponent, compared lexicographically.
struct Complexity {
  int r = 0;
  int s = 0;
  auto operator<=>(const Complexity&) const = default;
};

class WordSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Word {
 public:
  Word() = default;

  // Merges adjacent equal letters and drops zero exponents until fixpoint.
  static Word reduce(std::span<const Syllable> raw);
  static Word reduce(std::initializer_list<Syllable> raw) {
    return reduce(std::span<const Syllable>(raw.begin(), raw.size()));
  }
  static Word letter(Letter a, int exponent = 1) { return reduce({{a, exponent}}); }
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }
  const Syllable& operator[](std::size_t i) const { return syllables_[i]; }

  Complexity complexity() const;
  Word inverse() const;
  Word pow(int k) const;
  std::string str() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Syllable> syllables_;
};

// Concatenation followed by reduction.
Word operator*(const Word& a, const Word& b);

// `;`-separated list of relators. An item `lhs=rhs` becomes lhs * rhs^-1.
std::vector<Word> parse_relators(std::string_view text);

inline Word X(int k = 1) { return Word::letter(Letter::x, k); }
inline Word Y(int k = 1) { return Word::letter(Letter::y, k); }

}  // namespace moufang
