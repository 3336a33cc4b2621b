#include "moufang/visual.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "moufang/catalog.hpp"
#include "moufang/chein.hpp"
#include "moufang/isomorphism.hpp"

namespace moufang {

namespace {

int mod9(int i) { return ((i % 9) + 9) % 9; }

std::vector<std::string> visual_names() {
  std::vector<std::string> names{"e"};
  for (int i = 0; i < kInvolutions; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("y");
  names.push_back("y^-1");
  return names;
}

bool is_involution_label(Element a) { return a >= 1 && a <= kInvolutions; }
int label_of(Element a) { return a - 1; }

}  // namespace

void validate_spec(const VisualSpec& spec) {
  if (spec.triangles.size() != 9) {
    throw VisualError("expected 9 triangles, got " + std::to_string(spec.triangles.size()));
  }
  std::map<std::pair<int, int>, int> cover;
  for (const auto& t : spec.triangles) {
    for (int a = 0; a < 3; ++a) {
      if (t[a] < 0 || t[a] >= kInvolutions) throw VisualError("triangle vertex out of range");
      for (int b = a + 1; b < 3; ++b) {
        const int i = std::min(t[a], t[b]), j = std::max(t[a], t[b]);
        if (i == j || (j - i) % 3 == 0) {
          throw VisualError("triangle contains the pair {" + std::to_string(i) + ", " + std::to_string(j) +
                            "} with equal residues mod 3");
        }
        ++cover[{i, j}];
      }
    }
  }
  for (int i = 0; i < kInvolutions; ++i) {
    for (int j = i + 1; j < kInvolutions; ++j) {
      if ((j - i) % 3 == 0) continue;
      auto it = cover.find({i, j});
      if (it == cover.end() || it->second != 1) {
        throw VisualError("pair {" + std::to_string(i) + ", " + std::to_string(j) +
                          "} is not in exactly one triangle");
      }
    }
  }
}

std::array<Element, 12> visual_labeling() {
  const Group s3 = catalog("symmetric3");
  const Element x = s3.gen_x(), y = s3.gen_y(), e = s3.identity();
  const Element xy = s3.mul(x, y), yx = s3.mul(y, x), yi = s3.inv(y);
  auto at = [&s3](Element g, int flag) { return chein_index(s3, {g, flag}); };
  std::array<Element, 12> lab{};
  lab[static_cast<std::size_t>(kVisualE)] = at(e, 0);
  const std::array<Element, 9> xs{at(x, 0), at(e, 1), at(yx, 1), at(xy, 0), at(yi, 1),
                                  at(xy, 1), at(yx, 0), at(y, 1), at(x, 1)};
  for (int i = 0; i < kInvolutions; ++i) lab[static_cast<std::size_t>(visual_x(i))] = xs[static_cast<std::size_t>(i)];
  lab[static_cast<std::size_t>(kVisualY)] = at(y, 0);
  lab[static_cast<std::size_t>(kVisualYInv)] = at(yi, 0);
  return lab;
}

Loop relabeled_chein_m12() {
  const Loop m = chein_construct(catalog("symmetric3"));
  const auto lab = visual_labeling();
  std::vector<Element> perm(12);  // Chein index -> visual index
  for (std::size_t v = 0; v < lab.size(); ++v) perm[static_cast<std::size_t>(lab[v])] = static_cast<Element>(v);
  const Loop moved = relabel(m, perm);
  return Loop(Magma(12, moved.magma().cells(), visual_names()), kVisualE);
}

VisualSpec derive_triangles() {
  const Loop l = relabeled_chein_m12();
  std::set<Triangle> found;
  for (int i = 0; i < kInvolutions; ++i) {
    for (int j = i + 1; j < kInvolutions; ++j) {
      if ((j - i) % 3 == 0) continue;
      const Element p = l.mul(visual_x(i), visual_x(j));
      if (!is_involution_label(p)) {
        throw VisualError("x" + std::to_string(i) + " x" + std::to_string(j) + " is not an involution");
      }
      Triangle t{i, j, label_of(p)};
      std::sort(t.begin(), t.end());
      found.insert(t);
    }
  }
  VisualSpec spec{{found.begin(), found.end()}};
  validate_spec(spec);
  return spec;
}

std::vector<CellAssignment> visual_rules(const VisualSpec& spec) {
  std::vector<CellAssignment> rules;
  const Element n = 12;
  for (Element a = 0; a < n; ++a) {
    rules.push_back({kVisualE, a, a, "neutral"});
    if (a != kVisualE) rules.push_back({a, kVisualE, a, "neutral"});
  }
  for (int i = 0; i < kInvolutions; ++i) rules.push_back({visual_x(i), visual_x(i), kVisualE, "involution"});
  rules.push_back({kVisualY, kVisualY, kVisualYInv, "order 3"});
  rules.push_back({kVisualY, kVisualYInv, kVisualE, "order 3"});
  rules.push_back({kVisualYInv, kVisualY, kVisualE, "order 3"});
  rules.push_back({kVisualYInv, kVisualYInv, kVisualY, "order 3"});
  for (const auto& t : spec.triangles) {
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (a != b) rules.push_back({visual_x(t[a]), visual_x(t[b]), visual_x(t[3 - a - b]), "triangle"});
  }
  for (int i = 0; i < kInvolutions; ++i) {
    rules.push_back({visual_x(i), visual_x(i + 3), kVisualY, "dotted"});
    rules.push_back({visual_x(i), visual_x(i - 3), kVisualYInv, "dotted"});
  }
  for (int i = 0; i < kInvolutions; ++i) {
    rules.push_back({visual_x(i), kVisualY, visual_x(i + 3), "x_i y = x_(i+3)"});
    rules.push_back({kVisualYInv, visual_x(i), visual_x(i + 3), "y^-1 x_i = x_(i+3)"});
    rules.push_back({kVisualY, visual_x(i), visual_x(i - 3), "y x_i = x_(i-3)"});
    rules.push_back({visual_x(i), kVisualYInv, visual_x(i - 3), "x_i y^-1 = x_(i-3)"});
  }
  return rules;
}

Loop build_visual_loop(const VisualSpec& spec, std::span<const std::size_t> order) {
  validate_spec(spec);
  const auto rules = visual_rules(spec);
  if (order.empty()) return fill_visual_table(rules);
  if (order.size() != rules.size()) throw std::invalid_argument("rule order has wrong length");
  std::vector<CellAssignment> permuted;
  permuted.reserve(rules.size());
  for (std::size_t k : order) permuted.push_back(rules.at(k));
  return fill_visual_table(permuted);
}

Loop fill_visual_table(std::span<const CellAssignment> rules) {
  const auto names = visual_names();
  std::vector<std::optional<Element>> cells(144);
  for (const auto& r : rules) {
    if (r.row < 0 || r.row >= 12 || r.col < 0 || r.col >= 12 || r.value < 0 || r.value >= 12)
      throw VisualError("rule cell out of range");
    auto& cell = cells[static_cast<std::size_t>(r.row * 12 + r.col)];
    if (cell && *cell != r.value) {
      throw VisualError("rule conflict at " + names[static_cast<std::size_t>(r.row)] + " * " +
                        names[static_cast<std::size_t>(r.col)] + ": " + names[static_cast<std::size_t>(*cell)] +
                        " vs " + names[static_cast<std::size_t>(r.value)] + " (" + r.rule + ")");
    }
    cell = r.value;
  }
  std::vector<Element> table;
  std::string missing;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!cells[c]) {
      missing += " " + names[c / 12] + "*" + names[c % 12];
      continue;
    }
    table.push_back(*cells[c]);
  }
  if (!missing.empty()) throw VisualError("incomplete table:" + missing);
  return Loop(Magma(12, std::move(table), names), kVisualE);
}

bool VisualReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.pass; });
}

std::string VisualReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : claims) out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  return out.str();
}

namespace {

ClaimResult witness_claim(const Loop& l) {
  const Element x0 = visual_x(0), x1 = visual_x(1), x3 = visual_x(3);
  const Element left = l.mul(l.mul(x0, x1), x3);
  const Element right = l.mul(x0, l.mul(x1, x3));
  std::ostringstream d;
  d << "(x0 x1) x3 = " << l.name(left) << ", x0 (x1 x3) = " << l.name(right);
  return {"non-associativity witness", left == visual_x(7) && right == visual_x(4), d.str()};
}

ClaimResult case_claim(const Loop& l) {
  const std::vector<Element> g{kVisualE, visual_x(0), kVisualY, visual_x(3), visual_x(6), kVisualYInv};
  const Element u = visual_x(1);
  const auto sub = generate_subloop(l, std::vector<Element>{visual_x(0), kVisualY});
  if (sub != std::vector<Element>{0, 1, 4, 7, 10, 11}) return {"case identities", false, "<x0, y> is not {e, x0, x3, x6, y, y^-1}"};
  for (Element a : g) {
    for (Element b : g) {
      const Element ib = inverse(l, b);
      const Element au = l.mul(a, u), bu = l.mul(b, u);
      const bool ok = l.mul(au, b) == l.mul(l.mul(a, ib), u) && l.mul(a, bu) == l.mul(l.mul(b, a), u) &&
                      l.mul(au, bu) == l.mul(ib, a);
      if (!ok) return {"case identities", false, "fails at g = " + l.name(a) + ", h = " + l.name(b)};
    }
  }
  return {"case identities", true, "G = <x0, y>, u = x1: all 36 pairs"};
}

ClaimResult iso_claim(const Loop& l) {
  const Loop m = chein_construct(catalog("symmetric3"));
  auto w = find_isomorphism(l, m);
  if (!w) return {"isomorphic to M12(S3,2)", false, "no isomorphism found"};
  return {"isomorphic to M12(S3,2)", is_isomorphism(l, m, *w), "witness verified on all 144 products"};
}

ClaimResult subloop_claim(const Loop& l) {
  const Loop s3 = catalog("symmetric3").loop();
  int s3_pairs = 0, v4_pairs = 0;
  for (int i = 0; i < kInvolutions; ++i) {
    for (int j = 0; j < kInvolutions; ++j) {
      if (i == j) continue;
      const auto sub = generate_subloop(l, std::vector<Element>{visual_x(i), visual_x(j)});
      const Loop s = restrict_to(l, sub);
      const bool is_s3 = sub.size() == 6 && find_isomorphism(s, s3).has_value();
      const bool is_v4 = sub.size() == 4 && std::all_of(sub.begin(), sub.end(), [&](Element a) {
                           return a == l.neutral() || l.mul(a, a) == l.neutral();
                         });
      const bool expect_s3 = (j - i) % 3 == 0;
      if (expect_s3 ? !is_s3 : !is_v4) {
        return {"subloop profile", false,
                "<x" + std::to_string(i) + ", x" + std::to_string(j) + "> has " + std::to_string(sub.size()) + " elements"};
      }
      (expect_s3 ? s3_pairs : v4_pairs) += 1;
    }
  }
  return {"subloop profile", true,
          std::to_string(s3_pairs / 2) + " pairs give S3, " + std::to_string(v4_pairs / 2) + " pairs give V4"};
}

ClaimResult census_claim(const Loop& l) {
  std::map<int, int> by_order;
  for (Element a = 0; a < static_cast<Element>(l.order()); ++a) ++by_order[element_order(l, a)];
  std::ostringstream d;
  for (auto [k, c] : by_order) d << c << " of order " << k << "; ";
  const bool ok = by_order.size() == 3 && by_order[1] == 1 && by_order[2] == 9 && by_order[3] == 2;
  return {"order census", ok, d.str()};
}

}  // namespace

VisualReport verify_visual_claims(const Loop& l) {
  VisualReport r;
  if (l.order() != 12) {
    r.claims.push_back({"order", false, "expected 12 elements"});
    return r;
  }
  r.claims.push_back({"loop", is_quasigroup(l.magma()) && find_neutral(l.magma()) == kVisualE, "Latin square with neutral e"});
  r.claims.push_back(witness_claim(l));
  r.claims.push_back(case_claim(l));
  r.claims.push_back(iso_claim(l));
  r.claims.push_back(subloop_claim(l));
  r.claims.push_back(census_claim(l));
  return r;
}

std::vector<std::vector<Triangle>> group_triangles(const VisualSpec& spec) {
  std::vector<std::vector<Triangle>> groups;
  std::vector<std::set<int>> used;
  for (const auto& t : spec.triangles) {
    auto overlap = [&t](const std::set<int>& s) {
      return static_cast<int>(s.count(t[0]) + s.count(t[1]) + s.count(t[2]));
    };
    std::size_t target = groups.size();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (overlap(used[g]) == 0) {
        target = g;
        break;
      }
    }
    if (target == groups.size() && groups.size() == 3) {
      target = 0;
      for (std::size_t g = 1; g < groups.size(); ++g)
        if (overlap(used[g]) < overlap(used[target])) target = g;
    }
    if (target == groups.size()) {
      groups.emplace_back();
      used.emplace_back();
    }
    groups[target].push_back(t);
    used[target].insert(t.begin(), t.end());
  }
  return groups;
}

std::string emit_diagram(const VisualSpec& spec) {
  static const char* kRoman[] = {"I", "II", "IV"};
  std::ostringstream out;
  out << "graph M12 {\n  node [shape=circle];\n";
  for (int i = 0; i < kInvolutions; ++i) out << "  x" << i << ";\n";
  const auto groups = group_triangles(spec);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    out << "  subgraph cluster_" << kRoman[g] << " {\n    label=\"" << kRoman[g] << "\";\n";
    for (const auto& t : groups[g]) {
      out << "    x" << t[0] << " -- x" << t[1] << ";\n";
      out << "    x" << t[1] << " -- x" << t[2] << ";\n";
      out << "    x" << t[0] << " -- x" << t[2] << ";\n";
    }
    out << "  }\n";
  }
  out << "  subgraph cluster_III {\n    label=\"III\";\n";
  for (int i = 0; i < kInvolutions; ++i) {
    out << "    x" << i << " -- x" << mod9(i + 3) << " [style=dotted];\n";
  }
  out << "  }\n}\n";
  return out.str();
}

}  // namespace moufang
