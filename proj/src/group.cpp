#include "moufang/group.hpp"

#include <deque>

namespace moufang {

Group::Group(Loop loop, Element x, Element y) : loop_(std::move(loop)), x_(x), y_(y) {
  const auto n = static_cast<Element>(loop_.order());
  if (x_ < 0 || x_ >= n || y_ < 0 || y_ >= n) throw StructureError("generator index out of range");
  if (loop_.neutral() != 0) throw StructureError("group identity must be element 0");
  if (auto assoc = is_associative(loop_); !assoc.holds) {
    throw StructureError("table is not associative");
  }
  const Element gens[] = {x_, y_};
  if (generate_subloop(loop_, gens).size() != loop_.order()) {
    throw StructureError("generators do not generate the group");
  }
  inverse_.resize(loop_.order());
  for (Element a = 0; a < n; ++a) inverse_[static_cast<std::size_t>(a)] = inverse(loop_, a);
  commutative_ = is_commutative(loop_.magma());
}

Element Group::pow(Element a, int k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = identity();
  while (k > 0) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

Element evaluate_word(const Loop& l, Element x, Element y, const Word& w) {
  Element acc = l.neutral();
  for (const auto& s : w.syllables()) {
    Element base = s.letter == Letter::x ? x : y;
    if (s.exponent < 0) base = inverse(l, base);
    for (int i = 0; i < std::abs(s.exponent); ++i) acc = l.mul(acc, base);
  }
  return acc;
}

Element evaluate_word(const Group& g, const Word& w) {
  Element acc = g.identity();
  for (const auto& s : w.syllables()) {
    acc = g.mul(acc, g.pow(s.letter == Letter::x ? g.gen_x() : g.gen_y(), s.exponent));
  }
  return acc;
}

bool check_relations(const Group& g, std::span<const Word> relators) {
  for (const auto& r : relators)
    if (evaluate_word(g, r) != g.identity()) return false;
  return true;
}

Group group_from_loop(Loop loop) {
  if (!is_associative(loop).holds) throw StructureError("table is not associative");
  const auto n = static_cast<Element>(loop.order());
  for (Element a = 0; a < n; ++a) {
    const Element one[] = {a};
    if (generate_subloop(loop, one).size() == loop.order()) return Group(std::move(loop), a, loop.neutral());
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      const Element two[] = {a, b};
      if (generate_subloop(loop, two).size() == loop.order()) return Group(std::move(loop), a, b);
    }
  }
  throw StructureError("group is not two-generated");
}

std::vector<std::string> word_names(const Loop& l, Element x, Element y) {
  std::vector<std::string> names(l.order());
  std::vector<char> seen(l.order(), 0);
  std::deque<std::pair<Element, Word>> queue{{l.neutral(), Word{}}};
  seen[static_cast<std::size_t>(l.neutral())] = 1;
  while (!queue.empty()) {
    auto [a, w] = queue.front();
    queue.pop_front();
    names[static_cast<std::size_t>(a)] = w.str();
    for (Letter letter : {Letter::x, Letter::y}) {
      Element b = l.mul(a, letter == Letter::x ? x : y);
      if (!seen[static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(b)] = 1;
        queue.emplace_back(b, w * Word::letter(letter));
      }
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) names[i] = "g" + std::to_string(i);
  }
  return names;
}

}  // namespace moufang
