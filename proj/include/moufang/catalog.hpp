#pragma once

// Small groups by name, with fixed generator conventions:
//
//   cyclic:n            C_n, order n        x = generator, y = e
//   dihedral:n          D_n, order 2n       x = reflection, y = rotation
//   dicyclic:n          Dic_n, order 4n     x = a (order 2n), y = b, b^2 = a^n
//   alternating4        A_4, order 12       x = (0 1)(2 3), y = (0 1 2)
//   symmetric3          S_3, order 6        x = (0 1), y = (0 1 2)
//   direct_product:m,k  C_m x C_k           x = (1, 0), y = (0, 1)
//
// Permutations act on the right: in a product pq, p is applied first.
// Orders are limited to 32.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moufang/group.hpp"
#include "moufang/word.hpp"

namespace moufang {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxCatalogOrder = 32;

Group catalog(std::string_view name, int parameter = 0, int parameter2 = 0);

// Accepts the selector forms listed above, plus short names such as "S3",
// "D4", "Q8", "Dic3", "A4", "C6", "C2xC4".
Group parse_group_selector(std::string_view selector);

// Canonical selector and short display name for a selector string.
std::string canonical_selector(std::string_view selector);
std::string display_name(std::string_view selector);

// Every catalog selector whose group has order <= max_order, in a fixed order.
std::vector<std::string> catalog_selectors(std::size_t max_order);

// The documented presentation of a catalog group on its generator pair.
std::vector<Word> standard_relators(std::string_view selector);

}  // namespace moufang
