#include "random_dga.hpp"

#include "ainf/dga_io.hpp"

#include <algorithm>
#include <random>

namespace ainf::testing {

DgaSpec random_dga_spec(std::uint64_t seed, const RandomDgaOptions& options) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

  DgaSpec spec;
  spec.degree_cap = pick(options.min_cap, options.max_cap);
  const int count = pick(std::min(2, options.max_generators), options.max_generators);
  std::vector<int> degrees;
  for (int g = 0; g < count; ++g) {
    // Odd generators are drawn twice as often; they carry most Massey products.
    int deg = pick(1, options.max_generator_degree);
    if (deg % 2 == 0 && rng() % 2 == 0) deg = std::max(1, deg - 1);
    degrees.push_back(deg);
  }
  std::sort(degrees.begin(), degrees.end());

  for (int g = 0; g < count; ++g) {
    const int target = degrees[g] + 1;
    // Sub-algebra on the earlier generators, large enough to know d out of `target`.
    DgaSpec sub = spec;
    sub.degree_cap = target + 1;
    Dga earlier = expand_free_gc(sub);
    Subspace cocycles = kernel(earlier.d(), target);
    Vec dg(earlier.dim(target));
    if (rng() % 8 != 0) {
      for (const auto& b : cocycles.basis()) axpy(dg, Rational(static_cast<long>(rng() % 5) - 2), b);
    }
    std::string name = "g" + std::to_string(g + 1);
    spec.generators.push_back({name, degrees[g]});
    if (!is_zero(dg)) spec.differential.push_back({name, formal_from_vector(earlier, target, dg)});
  }
  return spec;
}

}  // namespace ainf::testing
