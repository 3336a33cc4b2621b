#pragma once

// A twelve-element groupoid rebuilt from picture rules, and its comparison
// with M_12(S3, 2).
//
// Elements: e, nine involutions x0..x8 and y, y^-1 of order 3. Rules:
//   - solid lines: x_i x_j is the third vertex of the unique triangle on i, j
//     (defined for i != j mod 3);
//   - dotted lines: x_i x_(i+3) = y and x_i x_(i-3) = y^-1 (indices mod 9);
//   - x_i y = y^-1 x_i = x_(i+3) and y x_i = x_i y^-1 = x_(i-3);
//   - e is neutral, x_i^2 = e, and {e, y, y^-1} is cyclic of order 3.
//
// Visual loops use the index layout e = 0, x_i = 1 + i, y = 10, y^-1 = 11.

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

inline constexpr int kInvolutions = 9;
inline constexpr Element kVisualE = 0;
inline constexpr Element kVisualY = 10;
inline constexpr Element kVisualYInv = 11;
inline constexpr Element visual_x(int i) { return 1 + ((i % 9) + 9) % 9; }

using Triangle = std::array<int, 3>;  // sorted involution labels

struct VisualSpec {
  std::vector<Triangle> triangles;  // sorted lexicographically
};

class VisualError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws VisualError unless every pair i != j (mod 3) lies in exactly one
// triangle, no triangle holds a pair i == j (mod 3), and there are 9 triangles.
void validate_spec(const VisualSpec& spec);

// Index in chein_construct(symmetric3) of each visual element, under
//   x0 = x, x3 = xy, x6 = yx, x1 = u, x8 = xu, x7 = yu, x5 = xyu, x2 = yxu,
//   x4 = y^-1 u, y = y, y^-1 = y^-1.
std::array<Element, 12> visual_labeling();

// Triangles read off the Chein model: the third vertex of {i, j} is x_i x_j.
VisualSpec derive_triangles();

struct CellAssignment {
  Element row;
  Element col;
  Element value;
  const char* rule;
};

// Every cell the rules define, in a fixed order (144 assignments).
std::vector<CellAssignment> visual_rules(const VisualSpec& spec);

// Fills the table from the rules. `order` optionally permutes the rule list.
// Throws VisualError("rule conflict ...") on inconsistent cells and
// VisualError("incomplete table ...") when cells stay empty.
Loop build_visual_loop(const VisualSpec& spec, std::span<const std::size_t> order = {});

// Fills the table from an explicit rule list, with the same errors.
Loop fill_visual_table(std::span<const CellAssignment> rules);

// The Chein table for S3 rewritten in the visual layout.
Loop relabeled_chein_m12();

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VisualReport {
  std::vector<ClaimResult> claims;
  bool pass() const;
  std::string to_text() const;
};

// Non-associativity witness, the case identities for G = <x0, y>, u = x1,
// isomorphism with the Chein loop, the two-generated subloop profile and the
// element-order census.
VisualReport verify_visual_claims(const Loop& l);

// DOT graph: nine nodes, 27 solid triangle edges grouped into clusters, nine
// dotted {i, i+3} edges.
std::string emit_diagram(const VisualSpec& spec);

// Greedy grouping of triangles into at most three vertex-disjoint classes
// (overflow goes to the class it overlaps least).
std::vector<std::vector<Triangle>> group_triangles(const VisualSpec& spec);

}  // namespace moufang
