#include "moufang/word.hpp"

#include <cctype>
#include <cstdlib>

namespace moufang {

Word Word::reduce(std::span<const Syllable> raw) {
  // Stack-based free reduction: merging with the top either extends it or
  // cancels it, exposing the previous syllable for further merging.
  Word w;
  auto& out = w.syllables_;
  for (const Syllable& s : raw) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().letter == s.letter) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return w;
}

Complexity Word::complexity() const {
  Complexity c{static_cast<int>(syllables_.size()), 0};
  for (const auto& s : syllables_) c.s += std::abs(s.exponent);
  return c;
}

Word Word::inverse() const {
  Word w;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    w.syllables_.push_back({it->letter, -it->exponent});
  }
  return w;
}

Word Word::pow(int k) const {
  const Word base = k < 0 ? inverse() : *this;
  std::vector<Syllable> raw;
  for (int i = 0; i < std::abs(k); ++i) {
    raw.insert(raw.end(), base.syllables_.begin(), base.syllables_.end());
  }
  return reduce(raw);
}

std::string Word::str() const {
  if (syllables_.empty()) return "e";
  std::string out;
  for (const auto& s : syllables_) {
    out += s.letter == Letter::x ? 'x' : 'y';
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> raw(a.syllables());
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return Word::reduce(raw);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) src_ += c;
  }

  Word parse_all() {
    Word w = product();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return w;
  }

 private:
  Word product() {
    Word w;
    while (pos_ < src_.size() && src_[pos_] != ')') w = w * factor();
    return w;
  }

  Word factor() {
    Word base;
    const char c = src_[pos_];
    if (c == 'x' || c == 'y') {
      base = Word::letter(c == 'x' ? Letter::x : Letter::y);
      ++pos_;
    } else if (c == 'e' || c == '1') {
      ++pos_;
    } else if (c == '(') {
      ++pos_;
      base = product();
      if (pos_ >= src_.size() || src_[pos_] != ')') fail("missing ')'");
      ++pos_;
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (pos_ < src_.size() && src_[pos_] == '^') {
      ++pos_;
      base = base.pow(integer());
    }
    return base;
  }

  int integer() {
    std::size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == digits) fail("exponent expected");
    if (pos_ - digits > 6) fail("exponent too large");
    return std::stoi(src_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw WordSyntaxError("word '" + src_ + "' at " + std::to_string(pos_) + ": " + msg);
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

Word Word::parse(std::string_view text) { return Parser(text).parse_all(); }

std::vector<Word> parse_relators(std::string_view text) {
  std::vector<Word> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    bool blank = true;
    for (char c : item) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        out.push_back(Word::parse(item));
      } else {
        out.push_back(Word::parse(item.substr(0, eq)) * Word::parse(item.substr(eq + 1)).inverse());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace moufang
