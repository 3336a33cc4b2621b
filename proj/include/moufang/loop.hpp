#pragma once

// Finite magmas, quasigroups and loops given by Cayley tables.
//
// Elements are dense indices 0..n-1. Every structure built by this library
// puts its neutral element at index 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moufang {

using Element = std::int32_t;

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Triple {
  Element a = 0;
  Element b = 0;
  Element c = 0;
  bool operator==(const Triple&) const = default;
};

// An n x n multiplication table with display names. No axioms beyond
// closure are assumed.
class Magma {
 public:
  Magma() = default;
  // Throws StructureError if an entry is out of range, the table has the
  // wrong size, or names repeat. Empty `names` means "0", "1", ...
  Magma(std::size_t order, std::vector<Element> table,
        std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * order_ + static_cast<std::size_t>(b)];
  }
  std::span<const Element> row(Element a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  const std::vector<Element>& cells() const { return table_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element a) const { return names_[static_cast<std::size_t>(a)]; }
  std::optional<Element> find_name(std::string_view name) const;

  bool operator==(const Magma&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<std::string> names_;
};

// A Latin-square magma with a verified two-sided neutral element.
class Loop {
 public:
  Loop() = default;
  // Throws StructureError unless the table is a Latin square and `neutral`
  // is a two-sided identity.
  Loop(Magma magma, Element neutral);

  const Magma& magma() const { return magma_; }
  std::size_t order() const { return magma_.order(); }
  Element neutral() const { return neutral_; }
  Element mul(Element a, Element b) const { return magma_.mul(a, b); }
  const std::string& name(Element a) const { return magma_.name(a); }
  const std::vector<std::string>& names() const { return magma_.names(); }

  // Left and right division: the unique z with a*z = b, resp. z*a = b.
  Element left_div(Element a, Element b) const;
  Element right_div(Element b, Element a) const;

  bool operator==(const Loop&) const = default;

 private:
  Magma magma_;
  Element neutral_ = 0;
};

bool is_quasigroup(const Magma& m);

// The unique two-sided neutral element, if any.
std::optional<Element> find_neutral(const Magma& m);

bool is_commutative(const Magma& m);

// Outcome of a universally quantified identity scan. `witness` is the first
// failing triple in lexicographic index order.
struct IdentityCheck {
  bool holds = true;
  std::optional<Triple> witness;
  explicit operator bool() const { return holds; }
};

// Moufang identities, numbered as usually listed:
//   1: (xy)(zx) = x((yz)x)
//   2: x(y(xz)) = ((xy)x)z
//   3: x(y(zy)) = ((xy)z)y
// The scan does not use a neutral element, so it applies to bare magmas.
IdentityCheck moufang_check(const Magma& m, int variant);
inline IdentityCheck moufang_check(const Loop& l, int variant) {
  return moufang_check(l.magma(), variant);
}
bool is_moufang(const Magma& m);

IdentityCheck is_associative(const Magma& m);
inline IdentityCheck is_associative(const Loop& l) { return is_associative(l.magma()); }

// Two-sided inverse. Throws StructureError("no two-sided inverse") when the
// left and right inverses differ.
Element inverse(const Loop& l, Element a);

// Smallest k >= 1 with the left-associated power (((a a) a) ... a) = e, or 0
// if no such k <= n exists. For diassociative loops this is the element order.
int element_order(const Loop& l, Element a);

// Left-associated power a^k for k >= 0.
Element power(const Loop& l, Element a, int k);

// Closure of seeds and e under the product, sorted by index.
std::vector<Element> generate_subloop(const Loop& l, std::span<const Element> seeds);

// The subloop on `elements` (which must be closed), reindexed so that the
// neutral comes first and the rest keep their relative order.
Loop restrict_to(const Loop& l, std::span<const Element> elements);

bool is_diassociative(const Loop& l);

// Applies an index permutation: element a of `l` becomes perm[a].
Loop relabel(const Loop& l, std::span<const Element> perm);

}  // namespace moufang
