#include "moufang/chein.hpp"

#include <stdexcept>

namespace moufang {

namespace {

// a^((-1)^k)
Element signed_power(const Group& g, Element a, int k) { return k % 2 == 0 ? a : g.inv(a); }

}  // namespace

CheinElement chein_mul(const Group& g, CheinElement a, CheinElement b) {
  const int alpha = a.flag, beta = b.flag;
  const Element inner = g.mul(signed_power(g, a.g, beta), signed_power(g, b.g, alpha + beta));
  return {signed_power(g, inner, beta), (alpha + beta) % 2};
}

CheinElement chein_mul_cases(const Group& g, CheinElement a, CheinElement b) {
  if (a.flag == 0 && b.flag == 0) return {g.mul(a.g, b.g), 0};
  if (a.flag == 1 && b.flag == 0) return {g.mul(a.g, g.inv(b.g)), 1};
  if (a.flag == 0 && b.flag == 1) return {g.mul(b.g, a.g), 1};
  return {g.mul(g.inv(b.g), a.g), 0};
}

Element chein_index(const Group& g, CheinElement a) {
  return a.g + static_cast<Element>(g.order()) * a.flag;
}

CheinElement chein_element(const Group& g, Element index) {
  const auto n = static_cast<Element>(g.order());
  return {index % n, index / n};
}

Loop chein_construct(const Group& g) {
  const std::size_t n = 2 * g.order();
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CheinElement a = chein_element(g, static_cast<Element>(i));
    const std::string& base = g.name(a.g);
    names[i] = a.flag == 0 ? base : (a.g == g.identity() ? "u" : base + "u");
    for (std::size_t j = 0; j < n; ++j) {
      const CheinElement b = chein_element(g, static_cast<Element>(j));
      const CheinElement p = chein_mul(g, a, b);
      if (p != chein_mul_cases(g, a, b)) {
        throw std::logic_error("closed Chein formula disagrees with case form at (" +
                               std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      table[i * n + j] = chein_index(g, p);
    }
  }
  return Loop(Magma(n, std::move(table), std::move(names)), 0);
}

bool case_identities_check(const Group& g, const Loop& m) {
  const auto n = static_cast<Element>(g.order());
  if (m.order() != 2 * g.order()) return false;
  const Element u = chein_index(g, {g.identity(), 1});
  auto in_m = [&](Element a) { return chein_index(g, {a, 0}); };
  for (Element a = 0; a < n; ++a) {
    const Element au = m.mul(in_m(a), u);
    for (Element b = 0; b < n; ++b) {
      const Element bu = m.mul(in_m(b), u);
      const bool plain = m.mul(in_m(a), in_m(b)) == in_m(g.mul(a, b));
      const bool left_u = m.mul(au, in_m(b)) == m.mul(in_m(g.mul(a, g.inv(b))), u);
      const bool right_u = m.mul(in_m(a), bu) == m.mul(in_m(g.mul(b, a)), u);
      const bool both_u = m.mul(au, bu) == in_m(g.mul(g.inv(b), a));
      if (!(plain && left_u && right_u && both_u)) return false;
    }
  }
  return true;
}

bool case_identities_check(const Group& g) { return case_identities_check(g, chein_construct(g)); }

bool short_presentation_check(const Group& g, const Loop& m) {
  if (m.order() != 2 * g.order()) return false;
  const Element u = chein_index(g, {g.identity(), 1});
  if (m.mul(u, u) != m.neutral()) return false;
  for (Element a = 0; a < static_cast<Element>(g.order()); ++a) {
    if (m.mul(chein_index(g, {a, 0}), u) != m.mul(u, chein_index(g, {g.inv(a), 0}))) return false;
  }
  return true;
}

bool short_presentation_check(const Group& g) { return short_presentation_check(g, chein_construct(g)); }

bool subgroup_embedding_check(const Group& g, const Loop& m) {
  if (m.order() != 2 * g.order()) return false;
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (m.mul(a, b) != g.mul(a, b)) return false;
  return true;
}

bool subgroup_embedding_check(const Group& g) { return subgroup_embedding_check(g, chein_construct(g)); }

}  // namespace moufang
