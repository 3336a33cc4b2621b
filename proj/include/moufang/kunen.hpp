#pragma once

// Exhaustive small-order check that Moufang quasigroups have a neutral element.

#include <functional>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

// Calls `visit` on every Latin square of order n over {0..n-1}, in
// lexicographic order of the row-major cell sequence.
void for_each_latin_square(int n, const std::function<void(const Magma&)>& visit);

struct KunenOrderResult {
  int order = 0;
  long long latin_squares = 0;
  long long moufang = 0;          // satisfy identity 1 over all triples
  long long moufang_with_neutral = 0;
  bool holds() const { return moufang == moufang_with_neutral; }
};

// Orders 1..max_order.
std::vector<KunenOrderResult> kunen_check(int max_order);

// Order cap from MOUFANG_KUNEN_MAX, default 4.
int kunen_max_order_from_env();

}  // namespace moufang
