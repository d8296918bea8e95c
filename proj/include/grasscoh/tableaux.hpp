#pragma once

// Standard Young tableaux counts: the hook-length formula and an exhaustive
// enumeration oracle for it.

#include <stdexcept>
#include <vector>

#include "grasscoh/numeric.hpp"
#include "grasscoh/partition.hpp"

namespace grasscoh {

// f_lambda = n! / prod hooks.  The division is asserted exact; a remainder
// would mean a broken hook computation.
inline Int hook_length_f(const Partition& p) {
  const Partition conj = conjugate(p);
  Int hooks = 1;
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p.part(r); ++c)
      hooks *= (p.part(r) - c) + (conj.part(c) - r) - 1;
  return exact_div(factorial(p.weight()), hooks);
}

// Count standard tableaux by placing 1..n directly: entry t may start a new
// cell at the end of row r when row r is still shorter than the shape and
// strictly shorter than row r-1.  Explores exactly f_lambda branches.
inline Int brute_force_syt(const Partition& p, int weight_bound = 12) {
  if (p.weight() > weight_bound)
    throw std::invalid_argument("brute_force_syt: weight exceeds bound");
  std::vector<int> filled(static_cast<std::size_t>(p.length()), 0);
  Int count = 0;
  auto place = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      ++count;
      return;
    }
    for (int r = 0; r < p.length(); ++r) {
      if (filled[static_cast<std::size_t>(r)] >= p.part(r)) continue;
      if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <= filled[static_cast<std::size_t>(r)])
        continue;
      ++filled[static_cast<std::size_t>(r)];
      self(self, remaining - 1);
      --filled[static_cast<std::size_t>(r)];
    }
  };
  place(place, p.weight());
  return count;
}

}  // namespace grasscoh
