#include "moufang/presentation.hpp"

#include <functional>
#include <sstream>

#include "moufang/chein.hpp"

namespace moufang {

const char* to_string(PlanRule r) {
  switch (r) {
    case PlanRule::BaseWord: return "base";
    case PlanRule::LetterPower: return "letter-power";
    case PlanRule::ShortWord: return "short-word";
    case PlanRule::TwoSyllable: return "two-syllable";
    case PlanRule::Normalize: return "normalize";
    case PlanRule::OddSplit: return "odd-split";
    case PlanRule::EvenSplit: return "even-split";
    case PlanRule::Helper: return "helper";
  }
  return "?";
}

namespace {

PlanNode node(StepKind kind, PlanRule rule, Word word, std::vector<PlanNode> children, int exponent = 0) {
  return PlanNode{kind, rule, std::move(word), exponent, false, std::move(children)};
}

PlanNode make_power(PlanNode base, int k, PlanRule rule) {
  Word w = base.word.pow(k);
  return node(StepKind::Power, rule, std::move(w), {std::move(base)}, k);
}

PlanNode make_inverse(PlanNode base, PlanRule rule) {
  Word w = base.word.inverse();
  return node(StepKind::Inverse, rule, std::move(w), {std::move(base)});
}

// gh from g, h and hg.
PlanNode make_swap(PlanNode g, PlanNode h, PlanNode hg, PlanRule rule) {
  Word w = g.word * h.word;
  return node(StepKind::Swap, rule, std::move(w), {std::move(g), std::move(h), std::move(hg)});
}

// khk from k and h.
PlanNode make_sandwich(PlanNode k, PlanNode h, PlanRule rule) {
  Word w = k.word * h.word * k.word;
  return node(StepKind::Sandwich, rule, std::move(w), {std::move(k), std::move(h)});
}

Word two(Letter a, int u, Letter b, int v) { return Word::reduce({{a, u}, {b, v}}); }

PlanNode plan(const Word& w);

// A plan for a strictly smaller word, justified by the induction hypothesis.
PlanNode by_induction(const Word& w) {
  PlanNode p = plan(w);
  p.induction = true;
  return p;
}

PlanNode single_letter(const Word& w) {
  const Letter a = w[0].letter;
  const int k = w[0].exponent;
  PlanNode base = node(StepKind::Base, PlanRule::BaseWord, Word::letter(a), {});
  if (k == 1) return base;
  if (k >= 2) return make_power(std::move(base), k, PlanRule::LetterPower);
  if (k == -1) return make_inverse(std::move(base), PlanRule::LetterPower);
  return make_inverse(make_power(std::move(base), -k, PlanRule::Helper), PlanRule::LetterPower);
}

// The eight words a^(+-1) b^(+-1), derived from x, y, xy alone.
PlanNode short_word(const Word& w) {
  const Word xy = X() * Y(), yx = Y() * X(), yxi = Y() * X(-1), xiy = X(-1) * Y();
  auto helper = [](const Word& v) { return short_word(v); };
  if (w == xy) return node(StepKind::Base, PlanRule::BaseWord, xy, {});
  if (w == xy.inverse()) return make_inverse(helper(xy), PlanRule::ShortWord);
  if (w == yx) return make_swap(by_induction(Y()), by_induction(X()), helper(xy), PlanRule::ShortWord);
  if (w == yx.inverse()) return make_inverse(helper(yx), PlanRule::ShortWord);
  if (w == yxi) return make_sandwich(by_induction(X(-1)), helper(xy), PlanRule::ShortWord);
  if (w == xiy) return make_swap(by_induction(X(-1)), by_induction(Y()), helper(yxi), PlanRule::ShortWord);
  if (w == yxi.inverse()) return make_inverse(helper(yxi), PlanRule::ShortWord);
  if (w == xiy.inverse()) return make_inverse(helper(xiy), PlanRule::ShortWord);
  throw std::logic_error("not a short two-syllable word: " + w.str());
}

// a^u b^v with u > 1 and |u| + |v| > 2:
//   a^(u-1) b^v a = a . a^(u-2) b^v . a   (sandwich)
//   a^u b^v a     = a . a^(u-1) b^v . a   (sandwich)
//   a^u b^v       = swap of a^u b^v a and a^-1, since a^-1 . a^u b^v a = a^(u-1) b^v a
PlanNode two_syllable_core(Letter a, int u, Letter b, int v) {
  PlanNode inner_low = make_sandwich(by_induction(Word::letter(a)), by_induction(two(a, u - 2, b, v)), PlanRule::Helper);
  PlanNode inner_high = make_sandwich(by_induction(Word::letter(a)), by_induction(two(a, u - 1, b, v)), PlanRule::Helper);
  return make_swap(std::move(inner_high), by_induction(Word::letter(a, -1)), std::move(inner_low),
                   PlanRule::TwoSyllable);
}

PlanNode two_syllable(const Word& w) {
  const Letter a = w[0].letter, b = w[1].letter;
  const int u = w[0].exponent, v = w[1].exponent;
  if (u > 1) return two_syllable_core(a, u, b, v);
  if (u < -1) {
    // a^u b^v = (b^-v a^-u)^-1 and b^-v a^-u is the swap of a^-u b^-v.
    PlanNode swapped = make_swap(by_induction(Word::letter(b, -v)), by_induction(Word::letter(a, -u)),
                                 two_syllable_core(a, -u, b, -v), PlanRule::Helper);
    return make_inverse(std::move(swapped), PlanRule::Normalize);
  }
  if (v > 1) {
    return make_swap(by_induction(Word::letter(a, u)), by_induction(Word::letter(b, v)),
                     two_syllable_core(b, v, a, u), PlanRule::Normalize);
  }
  return make_inverse(two_syllable_core(b, -v, a, -u), PlanRule::Normalize);
}

PlanNode split(const Word& w) {
  const auto& syl = w.syllables();
  const std::size_t r = syl.size();
  if (r % 2 == 1) {
    // g = k h k with k = a^e_r, h = a^(e_1 - e_r) b^e_2 ... b^e_(r-1)
    const Word k = Word::letter(syl[0].letter, syl[r - 1].exponent);
    std::vector<Syllable> h(syl.begin(), syl.end() - 1);
    h[0].exponent -= syl[r - 1].exponent;
    return make_sandwich(by_induction(k), by_induction(Word::reduce(h)), PlanRule::OddSplit);
  }
  // g = k h k with k = a^e_1 b^e_r, h = b^(e_2 - e_r) a^e_3 ... a^(e_(r-1) - e_1)
  const Word k = two(syl[0].letter, syl[0].exponent, syl[r - 1].letter, syl[r - 1].exponent);
  std::vector<Syllable> h(syl.begin() + 1, syl.end() - 1);
  h.front().exponent -= syl[r - 1].exponent;
  h.back().exponent -= syl[0].exponent;
  const Word hw = Word::reduce(h);
  if (hw.empty()) return make_power(by_induction(k), 2, PlanRule::EvenSplit);
  return make_sandwich(by_induction(k), by_induction(hw), PlanRule::EvenSplit);
}

PlanNode plan(const Word& w) {
  const Complexity c = w.complexity();
  if (c.r == 0) throw std::invalid_argument("cannot plan a derivation for the empty word");
  if (c.r == 1) return single_letter(w);
  if (c.r == 2) return c.s == 2 ? short_word(w) : two_syllable(w);
  return split(w);
}

}  // namespace

PlanNode plan_derivation(const Word& w) {
  PlanNode root = plan(w);
  root.induction = true;
  return root;
}

PlanCheck validate_plan(const Group& g, const PlanNode& root) {
  const Loop m = chein_construct(g);
  const Element u = chein_index(g, {g.identity(), 1});
  PlanCheck result;

  std::function<bool(const PlanNode&, const std::string&, Complexity)> visit =
      [&](const PlanNode& p, const std::string& path, Complexity bound) -> bool {
    auto fail = [&](std::string why) {
      result = {false, path, std::move(why)};
      return false;
    };
    const auto& ch = p.children;
    const std::size_t arity = p.kind == StepKind::Base ? 0
                              : p.kind == StepKind::Swap ? 3
                              : p.kind == StepKind::Sandwich ? 2 : 1;
    if (ch.size() != arity) return fail(std::string(to_string(p.kind)) + " node has " + std::to_string(ch.size()) + " premises");

    switch (p.kind) {
      case StepKind::Base:
        if (p.word != X() && p.word != Y() && p.word != X() * Y()) return fail("base word must be x, y or xy");
        break;
      case StepKind::Power:
        if (p.exponent < 2 || p.word != ch[0].word.pow(p.exponent)) return fail("power word mismatch");
        break;
      case StepKind::Inverse:
        if (p.word != ch[0].word.inverse()) return fail("inverse word mismatch");
        break;
      case StepKind::Swap:
        if (p.word != ch[0].word * ch[1].word) return fail("swap word is not gh");
        if (ch[2].word != ch[1].word * ch[0].word) return fail("swap premise is not hg");
        break;
      case StepKind::Sandwich:
        if (p.word != ch[0].word * ch[1].word * ch[0].word) return fail("sandwich word is not khk");
        break;
    }

    if (p.induction && &p != &root && !(p.word.complexity() < bound)) {
      return fail("induction node " + p.word.str() + " is not below its ancestor's complexity");
    }
    switch (p.rule) {
      case PlanRule::OddSplit:
      case PlanRule::EvenSplit:
        for (const auto& c : ch)
          if (!c.induction) return fail("split premises must be induction nodes");
        break;
      case PlanRule::TwoSyllable:
        if (p.kind != StepKind::Swap || ch[0].children.size() != 2 || ch[2].children.size() != 2 ||
            !ch[1].induction || !ch[0].children[1].induction || !ch[2].children[1].induction) {
          return fail("two-syllable step must rest on smaller words");
        }
        break;
      default:
        break;
    }

    const Element value = evaluate_word(g, p.word);
    if (m.mul(chein_index(g, {value, 0}), u) != m.mul(u, chein_index(g, {g.inv(value), 0}))) {
      return fail("g u != u g^-1 for " + p.word.str());
    }

    const Complexity next = p.induction ? p.word.complexity() : bound;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (!visit(ch[i], path + "/" + std::to_string(i), next)) return false;
    }
    return true;
  };

  visit(root, "root", root.word.complexity());
  return result;
}

std::string plan_to_text(const PlanNode& plan) {
  std::ostringstream out;
  std::function<void(const PlanNode&, int)> emit = [&](const PlanNode& p, int depth) {
    const Complexity c = p.word.complexity();
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(p.kind);
    if (p.kind == StepKind::Power) out << "^" << p.exponent;
    out << " " << p.word.str() << "  c=(" << c.r << "," << c.s << ") " << to_string(p.rule)
        << (p.induction ? " *" : "") << "\n";
    for (const auto& c2 : p.children) emit(c2, depth + 1);
  };
  emit(plan, 0);
  return out.str();
}

std::string plan_to_dot(const PlanNode& plan) {
  std::ostringstream out;
  out << "digraph plan {\n  node [shape=box];\n";
  int next = 0;
  std::function<int(const PlanNode&)> emit = [&](const PlanNode& p) {
    const int id = next++;
    out << "  n" << id << " [label=\"" << to_string(p.kind) << "\\n" << p.word.str() << "\""
        << (p.induction ? ", style=bold" : "") << "];\n";
    for (const auto& c : p.children) {
      const int child = emit(c);
      out << "  n" << id << " -> n" << child << ";\n";
    }
    return id;
  };
  emit(plan);
  out << "}\n";
  return out.str();
}

std::size_t plan_size(const PlanNode& plan) {
  std::size_t n = 1;
  for (const auto& c : plan.children) n += plan_size(c);
  return n;
}

}  // namespace moufang
