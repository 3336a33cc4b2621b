#pragma once

// Census of non-associative loops M_2n(G, 2) built from catalog groups,
// deduplicated up to isomorphism.

#include <string>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

// The catalog lists every nonabelian group of order <= 15, so the census is
// complete for loop orders up to 31.
inline constexpr std::size_t kMaxCensusOrder = 31;

struct CensusEntry {
  std::string selector;            // first catalog group giving this loop
  std::string name;                // e.g. "M12(S3,2)"
  std::size_t order = 0;
  std::vector<std::string> aliases;  // other selectors giving isomorphic loops
};

// Throws std::invalid_argument when max_order exceeds kMaxCensusOrder.
std::vector<CensusEntry> sigma_census(std::size_t max_order);

}  // namespace moufang
