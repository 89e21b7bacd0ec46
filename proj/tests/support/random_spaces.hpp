#pragma once

// Random tensor spaces defined by index symmetries: symmetric blocks glued by
// tensor products and symmetric squares.

#include <random>

#include "symclass/isotypic.hpp"
#include "symclass/space_expr.hpp"

namespace symclass::testing {

// A space whose highest harmonic order is exactly `order` (>= 1).
inline SpaceExpr random_space_of_order(std::mt19937_64& rng, int order) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  if (order == 1)
    return pick(0, 1) == 0 ? SpaceExpr::vector() : SpaceExpr::sym_power(1);
  switch (pick(0, 2)) {
  case 0:
    return SpaceExpr::sym_power(order);
  case 1:
    if (order % 2 == 0)
      return SpaceExpr::sym_square(random_space_of_order(rng, order / 2));
    [[fallthrough]];
  default: {
    const int left = pick(1, order - 1);
    return SpaceExpr::tensor(random_space_of_order(rng, left), random_space_of_order(rng, order - left));
  }
  }
}

// Even order in 2..max_order.
inline SpaceExpr random_even_space(std::mt19937_64& rng, int max_order = 12) {
  const int n = std::uniform_int_distribution<int>(1, max_order / 2)(rng);
  return random_space_of_order(rng, 2 * n);
}

// Nonempty, orders up to max_order, multiplicities up to max_mult.
inline Isotypic random_isotypic(std::mt19937_64& rng, int max_order = 8, int max_mult = 4) {
  std::uniform_int_distribution<int> order(0, max_order), mult(0, max_mult), terms(1, 4);
  Isotypic out;
  const int count = terms(rng);
  for (int i = 0; i < count; ++i)
    out.add(order(rng), static_cast<Multiplicity>(mult(rng)));
  if (out.empty())
    out.add(order(rng), 1);
  return out;
}

} // namespace symclass::testing
