#pragma once

// Checked derivations for the Moufang-loop presentation
//
//   < x, y, u ; R, u^2 = (xu)^2 = (yu)^2 = (xy.u)^2 = e >
//
// of M_2n(G, 2), where R presents G on (x, y).
//
// An element g of G is "good" when g u = u g^-1 follows from the
// presentation. Every g in G being good is equivalent to the full Chein
// product. Goodness propagates by these rules:
//
//   Base      x, y and xy are good (read off the relators)
//   Power     g good  =>  g^k good
//   Inverse   g good  =>  g^-1 good
//   Swap      g, h, hg good  =>  gh good
//   Sandwich  g, h good  =>  ghg good
//
// The engine checks that the constructed loop satisfies the relators, then
// derives goodness of every element. It does not enumerate the free Moufang
// loop on the presentation; completeness rests on the rules above.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "moufang/group.hpp"
#include "moufang/word.hpp"

namespace moufang {

struct PresentationSpec {
  std::vector<Word> relators;  // R; the four u-relators are implicit
};

class RelationsFailInG : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RelatorResult {
  std::string relator;
  bool holds = false;
};

struct PresentationReport {
  bool moufang = false;                 // the model is checked first
  std::vector<RelatorResult> relators;  // R, then u^2, (xu)^2, (yu)^2, (xy.u)^2
  bool holds() const;
};

// Throws RelationsFailInG if some relator of R is not trivial in G itself.
PresentationReport verify_presentation_relations(const Group& g, const PresentationSpec& spec);

enum class StepKind { Base, Power, Inverse, Swap, Sandwich };
const char* to_string(StepKind k);

// Inputs by kind: Base none; Power/Inverse {g}; Swap {g, h, hg}; Sandwich
// {g, h}. Output is gh for Swap and ghg for Sandwich.
struct DerivationStep {
  StepKind kind = StepKind::Base;
  std::vector<Word> inputs;
  Word output;
  int exponent = 0;  // Power only
};

struct DerivationCertificate {
  std::vector<DerivationStep> steps;  // discovery order
};

struct ClosureResult {
  bool complete = false;
  DerivationCertificate certificate;
  std::vector<Element> good;  // sorted; all of G when complete
};

// Deterministic fixpoint: Base seeds, then rounds of Power/Inverse, Swap and
// Sandwich scans over the good set at round start, in index order.
ClosureResult goodness_closure(const Group& g);

struct CertificateCheck {
  bool ok = true;
  std::size_t failing_step = 0;
  std::string reason;
};

// Replays a certificate against a group: every input must evaluate to an
// element already shown good, the output word must follow from the inputs,
// each output must satisfy g u = u g^-1 in chein_construct(g), and the outputs
// must cover the group.
CertificateCheck replay_certificate(const Group& g, const DerivationCertificate& cert);

// g u = u g^-1 in chein_construct(g), for every g.
bool semantic_goodness_check(const Group& g);

// gu.h = gh^-1.u, g.hu = hg.u and gu.hu = h^-1 g in chein_construct(g) for all
// g, h, evaluated with the loop's own products.
bool case_products_check(const Group& g);

std::string certificate_to_text(const Group& g, const DerivationCertificate& cert);

// ---------------------------------------------------------------------------
// Word-level derivation plans following the induction on complexity.

enum class PlanRule {
  BaseWord,       // x, y or xy
  LetterPower,    // a^k from a
  ShortWord,      // explicit two-syllable words of exponent sum 2
  TwoSyllable,    // a^u b^v with u > 1: sandwich over a, then swap
  Normalize,      // routes other two-syllable words to the u > 1 form
  OddSplit,       // khk with k = a^e_r
  EvenSplit,      // khk with k = a^e_1 b^e_r
  Helper,         // intermediate node inside one of the above
};
const char* to_string(PlanRule r);

struct PlanNode {
  StepKind kind = StepKind::Base;
  PlanRule rule = PlanRule::BaseWord;
  Word word;
  int exponent = 0;  // Power only
  // Set where the argument relies on the induction hypothesis: the node's
  // complexity must be strictly below that of its nearest induction ancestor.
  bool induction = false;
  std::vector<PlanNode> children;
};

// Throws std::invalid_argument for the empty word.
PlanNode plan_derivation(const Word& w);

struct PlanCheck {
  bool ok = true;
  std::string path;  // child indices from the root, e.g. "root/0/2"
  std::string reason;
};

// Word algebra of every node, well-foundedness of the induction, and the
// semantic conclusion g u = u g^-1 of every node in chein_construct(g).
PlanCheck validate_plan(const Group& g, const PlanNode& plan);

std::string plan_to_text(const PlanNode& plan);
std::string plan_to_dot(const PlanNode& plan);
std::size_t plan_size(const PlanNode& plan);

}  // namespace moufang
