#pragma once

// Chein doubling M_2n(G, 2) = { g u^a : g in G, a in {0, 1} } of a finite
// group G of order n, with product
//
//   g u^a * h u^b = (g^((-1)^b) h^((-1)^(a+b)))^((-1)^b) u^(a+b).
//
// Element layout: (g, 0) has index g, (g, 1) has index n + g. Element 0 is
// (e, 0). Names are G's names, with suffix "u" for the u-flagged half ("u"
// alone for (e, 1)).

#include "moufang/group.hpp"
#include "moufang/loop.hpp"

namespace moufang {

struct CheinElement {
  Element g = 0;
  int flag = 0;
  bool operator==(const CheinElement&) const = default;
};

// Closed formula, with every sign applied as a group inversion.
CheinElement chein_mul(const Group& g, CheinElement a, CheinElement b);

// The four-case form:
//   g * h = gh,   gu * h = gh^-1 u,   g * hu = hg u,   gu * hu = h^-1 g.
CheinElement chein_mul_cases(const Group& g, CheinElement a, CheinElement b);

Element chein_index(const Group& g, CheinElement a);
CheinElement chein_element(const Group& g, Element index);

// Builds the table from chein_mul and cross-checks every entry against
// chein_mul_cases; a mismatch throws std::logic_error.
Loop chein_construct(const Group& g);

// The four case identities over all g, h in G, read from `doubled`.
bool case_identities_check(const Group& g, const Loop& doubled);
bool case_identities_check(const Group& g);

// u^2 = e and g u = u g^-1 for every g in G.
bool short_presentation_check(const Group& g, const Loop& doubled);
bool short_presentation_check(const Group& g);

// The flag-0 block of `doubled` equals G's own table.
bool subgroup_embedding_check(const Group& g, const Loop& doubled);
bool subgroup_embedding_check(const Group& g);

}  // namespace moufang
