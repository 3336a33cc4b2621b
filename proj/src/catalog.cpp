#include "moufang/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

namespace moufang {

namespace {

struct Selector {
  std::string family;  // cyclic, dihedral, dicyclic, alternating4, symmetric3, direct_product
  int p = 0;
  int q = 0;
};

int to_int(std::string_view s, std::string_view selector) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CatalogError("bad group parameter in '" + std::string(selector) + "'");
  }
  return v;
}

Selector parse_selector(std::string_view text) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view tail = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

  if (colon != std::string_view::npos) {
    if (head == "direct_product") {
      auto comma = tail.find(',');
      if (comma == std::string_view::npos) throw CatalogError("direct_product needs 'm,k'");
      return {"direct_product", to_int(tail.substr(0, comma), text), to_int(tail.substr(comma + 1), text)};
    }
    if (head == "cyclic" || head == "dihedral" || head == "dicyclic") {
      return {std::string(head), to_int(tail, text)};
    }
    throw CatalogError("unknown group '" + std::string(text) + "'");
  }
  if (text == "alternating4" || text == "A4") return {"alternating4"};
  if (text == "symmetric3" || text == "S3") return {"symmetric3"};
  if (text == "Q8") return {"dicyclic", 2};
  if (auto xpos = text.find("xC"); text.starts_with("C") && xpos != std::string_view::npos) {
    return {"direct_product", to_int(text.substr(1, xpos - 1), text), to_int(text.substr(xpos + 2), text)};
  }
  if (text.starts_with("Dic")) return {"dicyclic", to_int(text.substr(3), text)};
  if (text.starts_with("C")) return {"cyclic", to_int(text.substr(1), text)};
  if (text.starts_with("D")) return {"dihedral", to_int(text.substr(1), text)};
  throw CatalogError("unknown group '" + std::string(text) + "'");
}

void check_order(long order, const std::string& what) {
  if (order < 1 || order > static_cast<long>(kMaxCatalogOrder)) {
    throw CatalogError(what + " has order outside 1.." + std::to_string(kMaxCatalogOrder));
  }
}

// Builds a group from a multiplication rule on indices 0..n-1 where 0 is the
// identity, then names elements by shortest generator words.
Group from_rule(std::size_t n, Element x, Element y, const std::function<Element(Element, Element)>& mul) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = mul(static_cast<Element>(a), static_cast<Element>(b));
  Loop unnamed(Magma(n, table), 0);
  auto names = word_names(unnamed, x, y);
  return Group(Loop(Magma(n, std::move(table), std::move(names)), 0), x, y);
}

using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q) {  // p first, then q
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

Group from_permutations(const Perm& gx, const Perm& gy) {
  Perm id(gx.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::vector<Perm> elems{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const Perm* g : {&gx, &gy}) {
      Perm p = compose(elems[i], *g);
      if (!index.count(p)) {
        index.emplace(p, static_cast<Element>(elems.size()));
        elems.push_back(p);
      }
    }
  }
  return from_rule(elems.size(), index.at(gx), index.at(gy), [&](Element a, Element b) {
    return index.at(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  });
}

Group build(const Selector& s) {
  const auto mod = [](int a, int m) { return ((a % m) + m) % m; };
  if (s.family == "cyclic") {
    const int n = s.p;
    check_order(n, "cyclic:" + std::to_string(n));
    return from_rule(static_cast<std::size_t>(n), n > 1 ? 1 : 0, 0,
                     [n](Element a, Element b) { return (a + b) % n; });
  }
  if (s.family == "dihedral") {
    // Index k + n*f stands for r^k s^f; (r^a s^f)(r^b s^g) = r^(a + (-1)^f b) s^(f+g).
    const int n = s.p;
    if (n < 1) throw CatalogError("dihedral parameter must be positive");
    check_order(2L * n, "dihedral:" + std::to_string(n));
    return from_rule(static_cast<std::size_t>(2 * n), n, n > 1 ? 1 : 0, [n, mod](Element i, Element j) {
      const int a = i % n, f = i / n, b = j % n, g = j / n;
      return mod(a + (f ? -b : b), n) + n * ((f + g) % 2);
    });
  }
  if (s.family == "dicyclic") {
    // Index k + 2n*f stands for a^k b^f with b a = a^-1 b and b^2 = a^n.
    const int n = s.p;
    if (n < 2) throw CatalogError("dicyclic parameter must be at least 2");
    check_order(4L * n, "dicyclic:" + std::to_string(n));
    const int m = 2 * n;
    return from_rule(static_cast<std::size_t>(2 * m), 1, m, [n, m, mod](Element i, Element j) {
      const int a = i % m, f = i / m, b = j % m, g = j / m;
      int k = a + (f ? -b : b);
      if (f && g) k += n;
      return mod(k, m) + m * ((f + g) % 2);
    });
  }
  if (s.family == "alternating4") return from_permutations({1, 0, 3, 2}, {1, 2, 0, 3});
  if (s.family == "symmetric3") return from_permutations({1, 0, 2}, {1, 2, 0});
  if (s.family == "direct_product") {
    const int m = s.p, k = s.q;
    if (m < 1 || k < 1) throw CatalogError("direct_product factors must be positive");
    check_order(static_cast<long>(m) * k, "direct_product:" + std::to_string(m) + "," + std::to_string(k));
    return from_rule(static_cast<std::size_t>(m * k), m > 1 ? 1 : 0, k > 1 ? m : 0, [m, k](Element i, Element j) {
      return (i % m + j % m) % m + m * ((i / m + j / m) % k);
    });
  }
  throw CatalogError("unknown group family '" + s.family + "'");
}

std::string canonical(const Selector& s) {
  if (s.family == "direct_product") return "direct_product:" + std::to_string(s.p) + "," + std::to_string(s.q);
  if (s.family == "alternating4" || s.family == "symmetric3") return s.family;
  return s.family + ":" + std::to_string(s.p);
}

}  // namespace

Group catalog(std::string_view name, int parameter, int parameter2) {
  return build(Selector{std::string(name), parameter, parameter2});
}

Group parse_group_selector(std::string_view selector) { return build(parse_selector(selector)); }

std::string canonical_selector(std::string_view selector) { return canonical(parse_selector(selector)); }

std::string display_name(std::string_view selector) {
  const Selector s = parse_selector(selector);
  if (s.family == "cyclic") return "C" + std::to_string(s.p);
  if (s.family == "dihedral") return "D" + std::to_string(s.p);
  if (s.family == "dicyclic") return s.p == 2 ? "Q8" : "Dic" + std::to_string(s.p);
  if (s.family == "alternating4") return "A4";
  if (s.family == "symmetric3") return "S3";
  return "C" + std::to_string(s.p) + "xC" + std::to_string(s.q);
}

std::vector<std::string> catalog_selectors(std::size_t max_order) {
  const int cap = static_cast<int>(std::min(max_order, kMaxCatalogOrder));
  std::vector<std::string> out;
  if (cap >= 6) out.push_back("symmetric3");
  for (int n = 1; 2 * n <= cap; ++n) out.push_back("dihedral:" + std::to_string(n));
  for (int n = 2; 4 * n <= cap; ++n) out.push_back("dicyclic:" + std::to_string(n));
  if (cap >= 12) out.push_back("alternating4");
  for (int n = 1; n <= cap; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int m = 2; m <= cap; ++m)
    for (int k = m; m * k <= cap; ++k) out.push_back("direct_product:" + std::to_string(m) + "," + std::to_string(k));
  return out;
}

std::vector<Word> standard_relators(std::string_view selector) {
  const Selector s = parse_selector(selector);
  if (s.family == "cyclic") return {X(s.p), Y()};
  if (s.family == "dihedral") return {X(2), Y(s.p), (X() * Y()).pow(2)};
  if (s.family == "dicyclic") return {X(2 * s.p), Y(2) * X(-s.p), Y(-1) * X() * Y() * X()};
  if (s.family == "alternating4") return {X(2), Y(3), (X() * Y()).pow(3)};
  if (s.family == "symmetric3") return {X(2), Y(3), (X() * Y()).pow(2)};
  return {X(s.p), Y(s.q), X() * Y() * X(-1) * Y(-1)};
}

}  // namespace moufang
