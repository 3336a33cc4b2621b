#pragma once

// Test-only reference computations, independent of the library's catalog and
// Chein code: groups as explicit permutation lists, the doubled product from
// the four-case rules written directly on permutations.

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "moufang/loop.hpp"

namespace oracle {

using Perm = std::vector<int>;

inline Perm compose(const Perm& p, const Perm& q) {  // p first
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

inline Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

struct DoubledElement {
  Perm g;
  int flag;
  bool operator<(const DoubledElement& o) const { return std::tie(flag, g) < std::tie(o.flag, o.g); }
  bool operator==(const DoubledElement& o) const = default;
};

inline DoubledElement doubled_mul(const DoubledElement& a, const DoubledElement& b) {
  if (!a.flag && !b.flag) return {compose(a.g, b.g), 0};
  if (a.flag && !b.flag) return {compose(a.g, invert(b.g)), 1};
  if (!a.flag && b.flag) return {compose(b.g, a.g), 1};
  return {compose(invert(b.g), a.g), 0};
}

// Visual labels x0..x8, y, y^-1 as elements of the doubled S3, written out
// from the labeling with x = (0 1), y = (0 1 2).
inline std::map<std::string, DoubledElement> visual_labels_s3() {
  const Perm e{0, 1, 2}, x{1, 0, 2}, y{1, 2, 0};
  const Perm xy = compose(x, y), yx = compose(y, x), yi = invert(y);
  return {{"x0", {x, 0}},  {"x3", {xy, 0}}, {"x6", {yx, 0}}, {"x1", {e, 1}},  {"x8", {x, 1}},
          {"x7", {y, 1}},  {"x5", {xy, 1}}, {"x2", {yx, 1}}, {"x4", {yi, 1}}, {"y", {y, 0}},
          {"y^-1", {yi, 0}}, {"e", {e, 0}}};
}

// All elements of a permutation group generated by gens, sorted.
inline std::vector<Perm> closure(const std::vector<Perm>& gens) {
  Perm id(gens[0].size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::vector<Perm> all{id};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& g : gens) {
      Perm p = compose(all[i], g);
      if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

// Number of involutions of the doubled group, counted from the four cases.
inline int doubled_involutions(const std::vector<Perm>& group) {
  int count = 0;
  const Perm& id = *std::min_element(group.begin(), group.end());
  for (int flag = 0; flag < 2; ++flag) {
    for (const auto& g : group) {
      DoubledElement a{g, flag};
      DoubledElement sq = doubled_mul(a, a);
      if (!(a.g == id && flag == 0) && sq.flag == 0 && sq.g == id) ++count;
    }
  }
  return count;
}

// Random intercalate swaps avoiding row/column `keep`: picks rows a, b and
// columns c, d with T[a][c] = T[b][d], T[a][d] = T[b][c], and swaps.
inline bool swap_random_intercalate(std::vector<moufang::Element>& t, std::size_t n, moufang::Element keep,
                                    std::mt19937& rng) {
  std::vector<std::array<std::size_t, 4>> found;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          if (a == static_cast<std::size_t>(keep) || b == static_cast<std::size_t>(keep) ||
              c == static_cast<std::size_t>(keep) || d == static_cast<std::size_t>(keep))
            continue;
          if (t[a * n + c] == t[b * n + d] && t[a * n + d] == t[b * n + c]) found.push_back({a, b, c, d});
        }
  if (found.empty()) return false;
  const auto [a, b, c, d] = found[std::uniform_int_distribution<std::size_t>(0, found.size() - 1)(rng)];
  std::swap(t[a * n + c], t[a * n + d]);
  std::swap(t[b * n + c], t[b * n + d]);
  return true;
}

// First intercalate avoiding `keep`, swapped in place.
inline bool swap_first_intercalate(std::vector<moufang::Element>& t, std::size_t n, moufang::Element keep) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          if (a == static_cast<std::size_t>(keep) || b == static_cast<std::size_t>(keep) ||
              c == static_cast<std::size_t>(keep) || d == static_cast<std::size_t>(keep))
            continue;
          if (t[a * n + c] == t[b * n + d] && t[a * n + d] == t[b * n + c]) {
            std::swap(t[a * n + c], t[a * n + d]);
            std::swap(t[b * n + c], t[b * n + d]);
            return true;
          }
        }
  return false;
}

}  // namespace oracle
