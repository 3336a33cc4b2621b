#include "moufang/kunen.hpp"

#include <cstdlib>
#include <string>

namespace moufang {

namespace {

struct LatinFiller {
  int n;
  std::vector<Element> cells;
  std::vector<std::uint32_t> row_used, col_used;  // bitmask of symbols
  const std::function<void(const Magma&)>& visit;

  void fill(int pos) {
    if (pos == n * n) {
      visit(Magma(static_cast<std::size_t>(n), cells));
      return;
    }
    const int r = pos / n, c = pos % n;
    for (int s = 0; s < n; ++s) {
      const std::uint32_t bit = 1u << s;
      if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
      row_used[r] |= bit;
      col_used[c] |= bit;
      cells[static_cast<std::size_t>(pos)] = s;
      fill(pos + 1);
      row_used[r] &= ~bit;
      col_used[c] &= ~bit;
    }
  }
};

}  // namespace

void for_each_latin_square(int n, const std::function<void(const Magma&)>& visit) {
  if (n < 1 || n > 8) throw std::invalid_argument("Latin square order must be in 1..8");
  LatinFiller filler{n, std::vector<Element>(static_cast<std::size_t>(n * n)),
                     std::vector<std::uint32_t>(static_cast<std::size_t>(n)),
                     std::vector<std::uint32_t>(static_cast<std::size_t>(n)), visit};
  filler.fill(0);
}

std::vector<KunenOrderResult> kunen_check(int max_order) {
  std::vector<KunenOrderResult> results;
  for (int n = 1; n <= max_order; ++n) {
    KunenOrderResult r{n};
    for_each_latin_square(n, [&r](const Magma& m) {
      ++r.latin_squares;
      if (moufang_check(m, 1).holds) {
        ++r.moufang;
        if (find_neutral(m)) ++r.moufang_with_neutral;
      }
    });
    results.push_back(r);
  }
  return results;
}

int kunen_max_order_from_env() {
  const char* raw = std::getenv("MOUFANG_KUNEN_MAX");
  if (!raw || !*raw) return 4;
  try {
    int v = std::stoi(raw);
    if (v < 1 || v > 5) throw std::out_of_range("MOUFANG_KUNEN_MAX");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("MOUFANG_KUNEN_MAX must be an integer in 1..5, got '") + raw + "'");
  }
}

}  // namespace moufang
