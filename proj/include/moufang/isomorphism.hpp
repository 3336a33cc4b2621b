#pragma once

// Loop isomorphism by backtracking over the images of a generating set.

#include <optional>
#include <span>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

// mapping[a] is the image of element a; nullopt means "no isomorphism".
using IsoWitness = std::optional<std::vector<Element>>;

// Deterministic for fixed inputs: generators of `a` are chosen greedily and
// candidate images are tried in index order.
IsoWitness find_isomorphism(const Loop& a, const Loop& b);

// Direct n^2 verification of a candidate mapping.
bool is_isomorphism(const Loop& a, const Loop& b, std::span<const Element> mapping);

// A small generating set: repeatedly adds the element of largest order (lowest
// index on ties) not yet generated.
std::vector<Element> greedy_generators(const Loop& l);

// Sorted element orders, as computed by element_order.
std::vector<int> order_profile(const Loop& l);

}  // namespace moufang
