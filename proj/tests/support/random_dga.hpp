#pragma once

#include "ainf/dga.hpp"

#include <cstdint>

namespace ainf::testing {

struct RandomDgaOptions {
  int max_generators = 4;
  int max_generator_degree = 3;
  int min_cap = 5;
  int max_cap = 10;
};

/// Free graded-commutative DGA on at most four generators. Each generator's
/// differential is a random cocycle of the sub-algebra on the earlier
/// generators, so d^2 = 0 holds by construction.
DgaSpec random_dga_spec(std::uint64_t seed, const RandomDgaOptions& options = {});

}  // namespace ainf::testing
