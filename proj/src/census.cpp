#include "moufang/census.hpp"

#include <algorithm>
#include <stdexcept>

#include "moufang/catalog.hpp"
#include "moufang/chein.hpp"
#include "moufang/isomorphism.hpp"

namespace moufang {

std::vector<CensusEntry> sigma_census(std::size_t max_order) {
  if (max_order > kMaxCensusOrder) {
    throw std::invalid_argument("census bound " + std::to_string(max_order) + " exceeds " +
                                std::to_string(kMaxCensusOrder));
  }
  std::vector<CensusEntry> entries;
  std::vector<Loop> loops;
  for (const auto& sel : catalog_selectors(max_order / 2)) {
    const Group g = parse_group_selector(sel);
    if (g.commutative()) continue;
    Loop m = chein_construct(g);
    if (is_associative(m).holds) throw std::logic_error("Chein loop of a nonabelian group is associative");
    auto dup = std::find_if(loops.begin(), loops.end(), [&m](const Loop& other) {
      return find_isomorphism(m, other).has_value();
    });
    if (dup != loops.end()) {
      entries[static_cast<std::size_t>(dup - loops.begin())].aliases.push_back(sel);
      continue;
    }
    entries.push_back({sel, "M" + std::to_string(m.order()) + "(" + display_name(sel) + ",2)", m.order(), {}});
    loops.push_back(std::move(m));
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const CensusEntry& a, const CensusEntry& b) { return a.order < b.order; });
  return entries;
}

}  // namespace moufang
