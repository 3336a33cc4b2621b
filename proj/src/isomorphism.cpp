#include "moufang/isomorphism.hpp"

#include <algorithm>

namespace moufang {

namespace {

// Cheap per-element invariant used to prune candidate images.
struct ElementSignature {
  int order = 0;
  int square_order = 0;
  bool operator==(const ElementSignature&) const = default;
};

std::vector<ElementSignature> signatures(const Loop& l) {
  std::vector<ElementSignature> sig(l.order());
  for (Element a = 0; a < static_cast<Element>(l.order()); ++a) {
    sig[static_cast<std::size_t>(a)] = {element_order(l, a), element_order(l, l.mul(a, a))};
  }
  return sig;
}

struct RecipeEntry {
  Element product;
  Element left;
  Element right;
};

// For each generator, the elements it adds to the subloop generated by the
// previous ones, each expressed as a product of two earlier elements.
struct GenerationPlan {
  std::vector<Element> generators;
  std::vector<std::vector<RecipeEntry>> segments;
};

GenerationPlan build_plan(const Loop& l) {
  GenerationPlan plan;
  plan.generators = greedy_generators(l);
  std::vector<char> reached(l.order(), 0);
  std::vector<Element> members{l.neutral()};
  reached[static_cast<std::size_t>(l.neutral())] = 1;
  std::size_t closed = 1;  // members[0..closed) are closed pairwise
  for (Element g : plan.generators) {
    std::vector<RecipeEntry> segment;
    if (!reached[static_cast<std::size_t>(g)]) {
      reached[static_cast<std::size_t>(g)] = 1;
      members.push_back(g);
    }
    auto add = [&](Element a, Element b) {
      Element c = l.mul(a, b);
      if (!reached[static_cast<std::size_t>(c)]) {
        reached[static_cast<std::size_t>(c)] = 1;
        members.push_back(c);
        segment.push_back({c, a, b});
      }
    };
    for (std::size_t i = closed; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        add(members[i], members[j]);
        add(members[j], members[i]);
      }
    }
    closed = members.size();
    plan.segments.push_back(std::move(segment));
  }
  return plan;
}

class Search {
 public:
  Search(const Loop& a, const Loop& b)
      : a_(a), b_(b), sig_a_(signatures(a)), sig_b_(signatures(b)),
        plan_(build_plan(a)), map_(a.order(), -1), used_(b.order(), 0) {}

  IsoWitness run() {
    assign(a_.neutral(), b_.neutral());
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool compatible(Element x, Element y) const {
    return !used_[static_cast<std::size_t>(y)] &&
           sig_a_[static_cast<std::size_t>(x)] == sig_b_[static_cast<std::size_t>(y)];
  }
  void assign(Element x, Element y) {
    map_[static_cast<std::size_t>(x)] = y;
    used_[static_cast<std::size_t>(y)] = 1;
  }
  void unassign(Element x) {
    used_[static_cast<std::size_t>(map_[static_cast<std::size_t>(x)])] = 0;
    map_[static_cast<std::size_t>(x)] = -1;
  }
  Element image(Element x) const { return map_[static_cast<std::size_t>(x)]; }

  bool extend(std::size_t level) {
    if (level == plan_.generators.size()) return is_isomorphism(a_, b_, map_);
    const Element g = plan_.generators[level];
    const auto& segment = plan_.segments[level];
    for (Element t = 0; t < static_cast<Element>(b_.order()); ++t) {
      if (!compatible(g, t)) continue;
      assign(g, t);
      std::size_t done = 0;
      bool ok = true;
      for (; done < segment.size(); ++done) {
        const auto& r = segment[done];
        Element img = b_.mul(image(r.left), image(r.right));
        if (!compatible(r.product, img)) {
          ok = false;
          break;
        }
        assign(r.product, img);
      }
      if (ok && extend(level + 1)) return true;
      while (done > 0) unassign(segment[--done].product);
      unassign(g);
    }
    return false;
  }

  const Loop& a_;
  const Loop& b_;
  std::vector<ElementSignature> sig_a_, sig_b_;
  GenerationPlan plan_;
  std::vector<Element> map_;
  std::vector<char> used_;
};

}  // namespace

std::vector<Element> greedy_generators(const Loop& l) {
  std::vector<Element> gens;
  std::vector<Element> sub = generate_subloop(l, gens);
  std::vector<int> orders(l.order());
  for (Element a = 0; a < static_cast<Element>(l.order()); ++a) orders[static_cast<std::size_t>(a)] = element_order(l, a);
  while (sub.size() < l.order()) {
    Element best = -1;
    for (Element a = 0; a < static_cast<Element>(l.order()); ++a) {
      if (std::binary_search(sub.begin(), sub.end(), a)) continue;
      if (best < 0 || orders[static_cast<std::size_t>(a)] > orders[static_cast<std::size_t>(best)]) best = a;
    }
    gens.push_back(best);
    sub = generate_subloop(l, gens);
  }
  return gens;
}

std::vector<int> order_profile(const Loop& l) {
  std::vector<int> p;
  for (Element a = 0; a < static_cast<Element>(l.order()); ++a) p.push_back(element_order(l, a));
  std::sort(p.begin(), p.end());
  return p;
}

bool is_isomorphism(const Loop& a, const Loop& b, std::span<const Element> mapping) {
  const std::size_t n = a.order();
  if (b.order() != n || mapping.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Element m : mapping) {
    if (m < 0 || static_cast<std::size_t>(m) >= n || hit[static_cast<std::size_t>(m)]++) return false;
  }
  if (mapping[static_cast<std::size_t>(a.neutral())] != b.neutral()) return false;
  for (Element x = 0; x < static_cast<Element>(n); ++x)
    for (Element y = 0; y < static_cast<Element>(n); ++y)
      if (mapping[static_cast<std::size_t>(a.mul(x, y))] !=
          b.mul(mapping[static_cast<std::size_t>(x)], mapping[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

IsoWitness find_isomorphism(const Loop& a, const Loop& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  if (is_commutative(a.magma()) != is_commutative(b.magma())) return std::nullopt;
  return Search(a, b).run();
}

}  // namespace moufang
