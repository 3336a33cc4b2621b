#pragma once

// Finite groups with a designated generator pair (x, y), and evaluation of
// free-group words in them.

#include <span>
#include <string>
#include <vector>

#include "moufang/loop.hpp"
#include "moufang/word.hpp"

namespace moufang {

class Group {
 public:
  Group() = default;
  // Throws StructureError unless `loop` is associative with neutral 0 and
  // <x, y> is the whole group. A cyclic group may pass y = e.
  Group(Loop loop, Element x, Element y);

  const Loop& loop() const { return loop_; }
  std::size_t order() const { return loop_.order(); }
  Element identity() const { return loop_.neutral(); }
  Element gen_x() const { return x_; }
  Element gen_y() const { return y_; }
  Element mul(Element a, Element b) const { return loop_.mul(a, b); }
  Element inv(Element a) const { return inverse_[static_cast<std::size_t>(a)]; }
  Element pow(Element a, int k) const;
  const std::string& name(Element a) const { return loop_.name(a); }
  bool commutative() const { return commutative_; }

 private:
  Loop loop_;
  Element x_ = 0;
  Element y_ = 0;
  std::vector<Element> inverse_;
  bool commutative_ = true;
};

// Left-to-right product of generator powers in an arbitrary loop, with
// negative powers taken through two-sided inverses.
Element evaluate_word(const Loop& l, Element x, Element y, const Word& w);
Element evaluate_word(const Group& g, const Word& w);

// True iff every relator evaluates to the identity.
bool check_relations(const Group& g, std::span<const Word> relators);

// Picks the lexicographically first generating pair of an associative loop,
// or (generator, e) when the group is cyclic. Used for groups read from files.
Group group_from_loop(Loop loop);

// Shortest positive words in x, y naming each element (breadth-first over
// right multiplication by x then y). Index 0 is named "e".
std::vector<std::string> word_names(const Loop& l, Element x, Element y);

}  // namespace moufang
