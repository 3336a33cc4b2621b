#include "moufang/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "moufang/chein.hpp"

namespace moufang {

bool PresentationReport::holds() const {
  return moufang && std::all_of(relators.begin(), relators.end(), [](const auto& r) { return r.holds; });
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::Base: return "Base";
    case StepKind::Power: return "Power";
    case StepKind::Inverse: return "Inverse";
    case StepKind::Swap: return "Swap";
    case StepKind::Sandwich: return "Sandwich";
  }
  return "?";
}

PresentationReport verify_presentation_relations(const Group& g, const PresentationSpec& spec) {
  for (const auto& r : spec.relators) {
    if (evaluate_word(g, r) != g.identity()) {
      throw RelationsFailInG("relations fail in G: " + r.str() + " evaluates to " +
                             g.name(evaluate_word(g, r)));
    }
  }
  const Loop m = chein_construct(g);
  PresentationReport report;
  report.moufang = is_moufang(m.magma());

  const Element x = chein_index(g, {g.gen_x(), 0});
  const Element y = chein_index(g, {g.gen_y(), 0});
  const Element u = chein_index(g, {g.identity(), 1});
  for (const auto& r : spec.relators) {
    report.relators.push_back({r.str(), evaluate_word(m, x, y, r) == m.neutral()});
  }
  auto square_is_neutral = [&m](Element a) { return m.mul(a, a) == m.neutral(); };
  report.relators.push_back({"u^2", square_is_neutral(u)});
  report.relators.push_back({"(xu)^2", square_is_neutral(m.mul(x, u))});
  report.relators.push_back({"(yu)^2", square_is_neutral(m.mul(y, u))});
  report.relators.push_back({"(xy.u)^2", square_is_neutral(m.mul(m.mul(x, y), u))});
  return report;
}

namespace {

class GoodnessModel {
 public:
  explicit GoodnessModel(const Group& g) : g_(g), m_(chein_construct(g)) {}
  bool is_good(Element a) const {
    const Element u = chein_index(g_, {g_.identity(), 1});
    return m_.mul(chein_index(g_, {a, 0}), u) == m_.mul(u, chein_index(g_, {g_.inv(a), 0}));
  }
  const Loop& loop() const { return m_; }

 private:
  const Group& g_;
  Loop m_;
};

}  // namespace

ClosureResult goodness_closure(const Group& g) {
  const std::size_t n = g.order();
  std::vector<std::optional<Word>> word_of(n);
  ClosureResult result;
  auto& steps = result.certificate.steps;

  auto add = [&](StepKind kind, std::vector<Word> inputs, Word output, int exponent = 0) {
    const auto e = static_cast<std::size_t>(evaluate_word(g, output));
    if (word_of[e]) return false;
    word_of[e] = output;
    steps.push_back({kind, std::move(inputs), std::move(output), exponent});
    return true;
  };

  add(StepKind::Base, {}, X());
  add(StepKind::Base, {}, Y());
  add(StepKind::Base, {}, X() * Y());

  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Element> snapshot;
    std::vector<char> in_snapshot(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (word_of[a]) {
        snapshot.push_back(static_cast<Element>(a));
        in_snapshot[a] = 1;
      }
    }
    auto word = [&](Element a) { return *word_of[static_cast<std::size_t>(a)]; };

    for (Element a : snapshot) {
      const Word w = word(a);
      const int order = element_order(g.loop(), a);
      for (int k = 2; k <= order; ++k) changed |= add(StepKind::Power, {w}, w.pow(k), k);
      changed |= add(StepKind::Inverse, {w}, w.inverse());
    }
    for (Element a : snapshot) {
      for (Element b : snapshot) {
        const Element ba = g.mul(b, a);
        if (in_snapshot[static_cast<std::size_t>(ba)]) {
          changed |= add(StepKind::Swap, {word(a), word(b), word(ba)}, word(a) * word(b));
        }
      }
    }
    for (Element a : snapshot) {
      for (Element b : snapshot) {
        changed |= add(StepKind::Sandwich, {word(a), word(b)}, word(a) * word(b) * word(a));
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    if (word_of[a]) result.good.push_back(static_cast<Element>(a));
  result.complete = result.good.size() == n;
  return result;
}

CertificateCheck replay_certificate(const Group& g, const DerivationCertificate& cert) {
  const GoodnessModel model(g);
  std::vector<char> known(g.order(), 0);
  auto fail = [](std::size_t i, std::string why) { return CertificateCheck{false, i, std::move(why)}; };

  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    const std::size_t arity = s.kind == StepKind::Base ? 0
                              : s.kind == StepKind::Swap ? 3
                              : s.kind == StepKind::Sandwich ? 2 : 1;
    if (s.inputs.size() != arity) return fail(i, std::string(to_string(s.kind)) + " step has wrong premise count");
    for (const auto& in : s.inputs) {
      if (!known[static_cast<std::size_t>(evaluate_word(g, in))]) {
        return fail(i, "premise " + in.str() + " is not yet good");
      }
    }
    switch (s.kind) {
      case StepKind::Base:
        if (s.output != X() && s.output != Y() && s.output != X() * Y()) return fail(i, "Base output must be x, y or xy");
        break;
      case StepKind::Power:
        if (s.exponent < 2 || s.output != s.inputs[0].pow(s.exponent)) return fail(i, "Power output mismatch");
        break;
      case StepKind::Inverse:
        if (s.output != s.inputs[0].inverse()) return fail(i, "Inverse output mismatch");
        break;
      case StepKind::Swap:
        if (s.output != s.inputs[0] * s.inputs[1]) return fail(i, "Swap output is not gh");
        if (evaluate_word(g, s.inputs[2]) != g.mul(evaluate_word(g, s.inputs[1]), evaluate_word(g, s.inputs[0]))) {
          return fail(i, "Swap premise is not hg");
        }
        break;
      case StepKind::Sandwich:
        if (s.output != s.inputs[0] * s.inputs[1] * s.inputs[0]) return fail(i, "Sandwich output is not ghg");
        break;
    }
    const Element out = evaluate_word(g, s.output);
    if (!model.is_good(out)) return fail(i, "g u != u g^-1 in the model for " + g.name(out));
    known[static_cast<std::size_t>(out)] = 1;
  }
  if (std::count(known.begin(), known.end(), 1) != static_cast<long>(g.order())) {
    return fail(cert.steps.size(), "certificate does not cover the group");
  }
  return {};
}

bool semantic_goodness_check(const Group& g) {
  const GoodnessModel model(g);
  for (Element a = 0; a < static_cast<Element>(g.order()); ++a)
    if (!model.is_good(a)) return false;
  return true;
}

bool case_products_check(const Group& g) {
  const Loop m = chein_construct(g);
  const Element u = chein_index(g, {g.identity(), 1});
  const auto n = static_cast<Element>(g.order());
  auto in_m = [&](Element a) { return chein_index(g, {a, 0}); };
  for (Element a = 0; a < n; ++a) {
    const Element au = m.mul(in_m(a), u);
    for (Element b = 0; b < n; ++b) {
      const Element bu = m.mul(in_m(b), u);
      if (m.mul(au, in_m(b)) != m.mul(in_m(g.mul(a, g.inv(b))), u)) return false;
      if (m.mul(in_m(a), bu) != m.mul(in_m(g.mul(b, a)), u)) return false;
      if (m.mul(au, bu) != in_m(g.mul(g.inv(b), a))) return false;
    }
  }
  return true;
}

std::string certificate_to_text(const Group& g, const DerivationCertificate& cert) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& s = cert.steps[i];
    out << (i + 1) << ". " << to_string(s.kind) << " " << s.output.str();
    if (s.kind == StepKind::Power) out << " = (" << s.inputs[0].str() << ")^" << s.exponent;
    if (!s.inputs.empty() && s.kind != StepKind::Power) {
      out << " from";
      for (std::size_t j = 0; j < s.inputs.size(); ++j) out << (j ? ", " : " ") << s.inputs[j].str();
    }
    out << "  [" << g.name(evaluate_word(g, s.output)) << "]\n";
  }
  return out.str();
}

}  // namespace moufang
