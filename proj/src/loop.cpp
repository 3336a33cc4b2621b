#include "moufang/loop.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace moufang {

Magma::Magma(std::size_t order, std::vector<Element> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order_ == 0) throw StructureError("magma order must be positive");
  if (table_.size() != order_ * order_) {
    throw StructureError("table has " + std::to_string(table_.size()) +
                         " cells, expected " + std::to_string(order_ * order_));
  }
  const auto n = static_cast<Element>(order_);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] < 0 || table_[i] >= n) {
      throw StructureError("table entry out of range at row " + std::to_string(i / order_) +
                           ", column " + std::to_string(i % order_));
    }
  }
  if (names_.empty()) {
    for (std::size_t i = 0; i < order_; ++i) names_.push_back(std::to_string(i));
  }
  if (names_.size() != order_) throw StructureError("expected one name per element");
  std::set<std::string_view> seen;
  for (const auto& s : names_) {
    if (!seen.insert(s).second) throw StructureError("duplicate element name '" + s + "'");
  }
}

std::optional<Element> Magma::find_name(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

Loop::Loop(Magma magma, Element neutral) : magma_(std::move(magma)), neutral_(neutral) {
  if (!is_quasigroup(magma_)) throw StructureError("table is not a Latin square");
  const auto n = static_cast<Element>(magma_.order());
  if (neutral_ < 0 || neutral_ >= n) throw StructureError("neutral index out of range");
  for (Element a = 0; a < n; ++a) {
    if (magma_.mul(neutral_, a) != a || magma_.mul(a, neutral_) != a) {
      throw StructureError("element " + magma_.name(neutral_) + " is not neutral");
    }
  }
}

Element Loop::left_div(Element a, Element b) const {
  auto r = magma_.row(a);
  return static_cast<Element>(std::find(r.begin(), r.end(), b) - r.begin());
}

Element Loop::right_div(Element b, Element a) const {
  const auto n = static_cast<Element>(order());
  for (Element z = 0; z < n; ++z) {
    if (mul(z, a) == b) return z;
  }
  return n;
}

bool is_quasigroup(const Magma& m) {
  const auto n = m.order();
  std::vector<char> row_seen(n), col_seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(row_seen.begin(), row_seen.end(), 0);
    std::fill(col_seen.begin(), col_seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      auto r = static_cast<std::size_t>(m.mul(static_cast<Element>(i), static_cast<Element>(j)));
      auto c = static_cast<std::size_t>(m.mul(static_cast<Element>(j), static_cast<Element>(i)));
      if (row_seen[r]++ || col_seen[c]++) return false;
    }
  }
  return true;
}

std::optional<Element> find_neutral(const Magma& m) {
  const auto n = static_cast<Element>(m.order());
  for (Element e = 0; e < n; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = m.mul(e, a) == a && m.mul(a, e) == a;
    if (ok) return e;  // a two-sided neutral is unique
  }
  return std::nullopt;
}

bool is_commutative(const Magma& m) {
  const auto n = static_cast<Element>(m.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (m.mul(a, b) != m.mul(b, a)) return false;
  return true;
}

namespace {

template <typename Identity>
IdentityCheck scan_triples(const Magma& m, Identity&& holds) {
  const auto n = static_cast<Element>(m.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (!holds(a, b, c)) return {false, Triple{a, b, c}};
  return {};
}

}  // namespace

IdentityCheck moufang_check(const Magma& m, int variant) {
  auto mul = [&m](Element a, Element b) { return m.mul(a, b); };
  switch (variant) {
    case 1:
      return scan_triples(m, [&](Element x, Element y, Element z) {
        return mul(mul(x, y), mul(z, x)) == mul(x, mul(mul(y, z), x));
      });
    case 2:
      return scan_triples(m, [&](Element x, Element y, Element z) {
        return mul(x, mul(y, mul(x, z))) == mul(mul(mul(x, y), x), z);
      });
    case 3:
      return scan_triples(m, [&](Element x, Element y, Element z) {
        return mul(x, mul(y, mul(z, y))) == mul(mul(mul(x, y), z), y);
      });
    default:
      throw std::invalid_argument("Moufang variant must be 1, 2 or 3");
  }
}

bool is_moufang(const Magma& m) {
  return moufang_check(m, 1).holds && moufang_check(m, 2).holds && moufang_check(m, 3).holds;
}

IdentityCheck is_associative(const Magma& m) {
  return scan_triples(m, [&m](Element a, Element b, Element c) {
    return m.mul(m.mul(a, b), c) == m.mul(a, m.mul(b, c));
  });
}

Element inverse(const Loop& l, Element a) {
  const Element left = l.right_div(l.neutral(), a);  // left * a = e
  const Element right = l.left_div(a, l.neutral());  // a * right = e
  if (left != right) throw StructureError("no two-sided inverse for " + l.name(a));
  return right;
}

int element_order(const Loop& l, Element a) {
  const auto n = static_cast<int>(l.order());
  Element p = a;
  for (int k = 1; k <= n; ++k) {
    if (p == l.neutral()) return k;
    p = l.mul(p, a);
  }
  return 0;
}

Element power(const Loop& l, Element a, int k) {
  if (k < 0) throw std::invalid_argument("power exponent must be non-negative");
  Element p = l.neutral();
  for (int i = 0; i < k; ++i) p = l.mul(p, a);
  return p;
}

std::vector<Element> generate_subloop(const Loop& l, std::span<const Element> seeds) {
  std::vector<char> in(l.order(), 0);
  std::vector<Element> members;
  auto add = [&](Element a) {
    if (!in[static_cast<std::size_t>(a)]) {
      in[static_cast<std::size_t>(a)] = 1;
      members.push_back(a);
    }
  };
  add(l.neutral());
  for (Element s : seeds) add(s);
  // Every new member is multiplied against all earlier ones on both sides.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(l.mul(members[i], members[j]));
      add(l.mul(members[j], members[i]));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Loop restrict_to(const Loop& l, std::span<const Element> elements) {
  std::vector<Element> order;
  order.push_back(l.neutral());
  for (Element a : elements)
    if (a != l.neutral()) order.push_back(a);
  if (order.size() != elements.size()) throw StructureError("subset must contain the neutral");

  std::vector<Element> local(l.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) local[static_cast<std::size_t>(order[i])] = static_cast<Element>(i);

  const std::size_t k = order.size();
  std::vector<Element> table(k * k);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(l.name(order[i]));
    for (std::size_t j = 0; j < k; ++j) {
      Element p = local[static_cast<std::size_t>(l.mul(order[i], order[j]))];
      if (p < 0) throw StructureError("subset is not closed under the product");
      table[i * k + j] = p;
    }
  }
  return Loop(Magma(k, std::move(table), std::move(names)), 0);
}

bool is_diassociative(const Loop& l) {
  const auto n = static_cast<Element>(l.order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      const Element seeds[] = {a, b};
      auto sub = generate_subloop(l, seeds);
      if (!is_associative(restrict_to(l, sub)).holds) return false;
    }
  }
  return true;
}

Loop relabel(const Loop& l, std::span<const Element> perm) {
  const std::size_t n = l.order();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<Element> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto pa = static_cast<std::size_t>(perm[a]);
    names[pa] = l.name(static_cast<Element>(a));
    for (std::size_t b = 0; b < n; ++b) {
      table[pa * n + static_cast<std::size_t>(perm[b])] =
          perm[static_cast<std::size_t>(l.mul(static_cast<Element>(a), static_cast<Element>(b)))];
    }
  }
  return Loop(Magma(n, std::move(table), std::move(names)), perm[static_cast<std::size_t>(l.neutral())]);
}

}  // namespace moufang
