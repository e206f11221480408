#pragma once

#include "ainf/contraction.hpp"
#include "ainf/dga.hpp"
#include "ainf/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ainf {

/// Triangular array {a_ij}, 0 <= i < j <= n, 1 <= j - i <= n - 1, with
/// d(a_ij) = sum_{i<k<j} abar_ik a_kj and a_{i-1,i} representing x_i. Entries
/// may depend polynomially on free parameters.
struct DefiningSystem {
  std::vector<HVec> classes;  // x_1..x_n in cohomology coordinates
  std::map<std::pair<int, int>, PolyVec> entries;
  std::vector<std::string> parameters;

  int size() const { return static_cast<int>(classes.size()); }
  /// |x_k| for 1 <= k <= n.
  int degree(int k) const { return classes.at(k - 1).degree; }
  /// |a_ij| = |x_{i+1}| + ... + |x_j| - (j - i - 1).
  int entry_degree(int i, int j) const;
  /// Degree of the value: sum |x_k| + 2 - n.
  int value_degree() const { return entry_degree(0, size()) + 1; }
  const PolyVec& a(int i, int j) const;
  bool concrete() const;
  Vec concrete_entry(int i, int j) const;
};

struct DefiningSystemFailure {
  int i = 0;
  int j = 0;
  std::string residual;
};

/// sum_{i<k<j} abar_ik a_kj, in degree entry_degree(i, j) + 1.
PolyVec defining_product(const Dga& dga, const DefiningSystem& ds, int i, int j);

/// Checks that each a_{i-1,i} is a cocycle representing x_i and that every
/// higher entry satisfies its equation identically in the parameters. Returns
/// the first failing (i, j) by increasing j - i.
std::optional<DefiningSystemFailure> check_defining_system(const Dga& dga, const Cohomology& h,
                                                           const DefiningSystem& ds);

/// sum_{0<k<n} abar_0k a_kn, a cocycle representing the Massey element.
PolyVec defining_system_value(const Dga& dga, const DefiningSystem& ds);

}  // namespace ainf
