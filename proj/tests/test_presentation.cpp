#include "doctest.h"
#include "moufang/catalog.hpp"
#include "moufang/chein.hpp"
#include "moufang/presentation.hpp"

using namespace moufang;

TEST_CASE("presentation relations hold in the doubled loop") {
  for (const char* sel : {"symmetric3", "dihedral:4", "dicyclic:2", "alternating4", "cyclic:3"}) {
    CAPTURE(sel);
    const Group g = parse_group_selector(sel);
    const auto r = verify_presentation_relations(g, {standard_relators(sel)});
    CHECK(r.moufang);
    CHECK(r.holds());
    REQUIRE(r.relators.size() == standard_relators(sel).size() + 4);
    CHECK(r.relators.back().relator == "(xy.u)^2");
  }
}

TEST_CASE("a relator false in G is rejected up front") {
  const Group s3 = catalog("symmetric3");
  CHECK_THROWS_AS(verify_presentation_relations(s3, {parse_relators("x^2;y^2")}), RelationsFailInG);
}

TEST_CASE("goodness closure covers the group and replays") {
  for (const char* sel : {"symmetric3", "cyclic:6", "alternating4", "dicyclic:3", "dihedral:7"}) {
    CAPTURE(sel);
    const Group g = parse_group_selector(sel);
    const ClosureResult c = goodness_closure(g);
    CHECK(c.complete);
    CHECK(c.good.size() == g.order());
    REQUIRE(!c.certificate.steps.empty());
    CHECK(c.certificate.steps.front().kind == StepKind::Base);
    const CertificateCheck chk = replay_certificate(g, c.certificate);
    CHECK_MESSAGE(chk.ok, chk.reason);
    CHECK(!certificate_to_text(g, c.certificate).empty());
  }
}

TEST_CASE("every certified element satisfies g u = u g^-1") {
  const Group g = catalog("alternating4");
  const Loop m = chein_construct(g);
  const Element u = chein_index(g, {g.identity(), 1});
  const ClosureResult c = goodness_closure(g);
  for (const auto& step : c.certificate.steps) {
    const Element a = evaluate_word(g, step.output);
    CHECK(m.mul(a, u) == m.mul(u, g.inv(a)));
  }
}

TEST_CASE("tampered certificates are rejected") {
  const Group g = catalog("symmetric3");
  const ClosureResult c = goodness_closure(g);
  REQUIRE(c.certificate.steps.size() > 3);

  DerivationCertificate wrong_output = c.certificate;
  wrong_output.steps.back().output = wrong_output.steps.back().output * X();
  CHECK_FALSE(replay_certificate(g, wrong_output).ok);

  DerivationCertificate truncated = c.certificate;
  truncated.steps.pop_back();
  CHECK_FALSE(replay_certificate(g, truncated).ok);

  // Using a premise before it is derived.
  DerivationCertificate reordered = c.certificate;
  std::swap(reordered.steps[0], reordered.steps.back());
  const auto r = replay_certificate(g, reordered);
  CHECK_FALSE(r.ok);
  CHECK(r.failing_step == 0);
}

TEST_CASE("semantic checks") {
  for (const char* sel : {"symmetric3", "dihedral:5", "dicyclic:2", "direct_product:2,2"}) {
    const Group g = parse_group_selector(sel);
    CHECK(semantic_goodness_check(g));
    CHECK(case_products_check(g));
  }
}
