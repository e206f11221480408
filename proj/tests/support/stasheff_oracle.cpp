#include "stasheff_oracle.hpp"

#include <optional>
#include <vector>

namespace ainf::testing {

namespace {

void enumerate(const GradedVectorSpace& space, int length, int max_total, Word& prefix, std::vector<Word>& out) {
  if (static_cast<int>(prefix.size()) == length) {
    out.push_back(prefix);
    return;
  }
  int used = 0;
  for (const auto& k : prefix) used += k.degree;
  for (int d = 0; d <= space.degree_cap() && used + d <= max_total; ++d) {
    for (std::size_t j = 0; j < space.dim(d); ++j) {
      prefix.push_back({d, j});
      enumerate(space, length, max_total, prefix, out);
      prefix.pop_back();
    }
  }
}

// Sum over all (r, s, t) with r + s + t = |w|; nullopt when a needed value is missing.
std::optional<Vec> identity_value(const AInfinityStructure& a, const Word& w) {
  const int i = static_cast<int>(w.size());
  int total = 0;
  for (const auto& k : w) total += k.degree;
  const int out_degree = total + 3 - i;
  Vec sum(a.space().dim(out_degree));
  const bool minimal = a.vanishes(1);
  for (int s = 1; s <= i; ++s) {
    if (minimal && (s == 1 || s == i)) continue;
    for (int r = 0; r + s <= i; ++r) {
      const int t = i - r - s;
      Word inner(w.begin() + r, w.begin() + r + s);
      if (s > a.arity_cap() && a.higher_vanish()) continue;
      std::optional<Vec> iv = a.value(inner);
      if (!iv) return std::nullopt;
      int inner_degree = 2 - s;
      for (const auto& k : inner) inner_degree += k.degree;
      int before = 0;
      for (int p = 0; p < r; ++p) before += w[p].degree;
      int exponent = r + s * t + (2 - s) * before;
      const Rational sign = exponent % 2 == 0 ? Rational(1) : Rational(-1);
      for (std::size_t b = 0; b < iv->size(); ++b) {
        if ((*iv)[b] == 0) continue;
        Word outer(w.begin(), w.begin() + r);
        outer.push_back({inner_degree, b});
        outer.insert(outer.end(), w.begin() + r + s, w.end());
        if (static_cast<int>(outer.size()) > a.arity_cap() && a.higher_vanish()) continue;
        std::optional<Vec> ov = a.value(outer);
        if (!ov) return std::nullopt;
        for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += sign * (*iv)[b] * (*ov)[c];
      }
    }
  }
  return sum;
}

}  // namespace

OracleVerdict naive_stasheff(const AInfinityStructure& a, int max_arity) {
  OracleVerdict verdict;
  const int top = a.top_degree();
  for (int i = 1; i <= max_arity; ++i) {
    std::vector<Word> words;
    Word prefix;
    enumerate(a.space(), i, top + i - 3, prefix, words);
    for (const auto& w : words) {
      std::optional<Vec> v = identity_value(a, w);
      if (!v) continue;
      ++verdict.evaluated;
      for (const auto& x : *v) {
        if (x != 0) {
          ++verdict.violated;
          break;
        }
      }
    }
  }
  return verdict;
}

}  // namespace ainf::testing
