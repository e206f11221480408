#pragma once

#include "ainf/ainfinity.hpp"
#include "ainf/contraction.hpp"
#include "ainf/defining_system.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace ainf {

/// Memoized lambda recursion on basis words of H:
///   K lambda_1 = -i,
///   lambda_k = m( sum_{s=1}^{k-1} (-1)^{s+1} K lambda_s (x) K lambda_{k-s} ),
/// with (f (x) g)(u (x) v) = (-1)^{|g||u|} f(u) g(v) and |K lambda_s| = 1 - s.
class LambdaCache {
 public:
  /// With `unit_shortcut`, K lambda_k (k >= 2) is taken to be zero on words
  /// containing the unit class instead of being recomputed.
  explicit LambdaCache(std::shared_ptr<const Contraction> c, bool unit_shortcut = true);

  const Contraction& contraction() const { return *c_; }
  /// lambda_k(w) in A of degree |w| + 2 - k, for k = |w| >= 2. Throws CapError
  /// when that degree exceeds the cap.
  const Vec& lambda(const Word& w);
  /// K lambda_k(w) in degree |w| + 1 - k; K lambda_1 = -i.
  const Vec& k_lambda(const Word& w);
  /// Multilinear extensions to arbitrary classes.
  HVec lambda(const std::vector<HVec>& args);
  HVec k_lambda(const std::vector<HVec>& args);

 private:
  bool vanishes_by_unit(const Word& w) const;
  template <class F>
  HVec extend(const std::vector<HVec>& args, int shift, F&& f);

  std::shared_ptr<const Contraction> c_;
  std::map<Word, Vec> lambda_;
  std::map<Word, Vec> k_lambda_;
  bool unit_shortcut_ = true;
};

/// Sign relating the morphism components to K lambda_k for k >= 2. With the
/// standard homotopy (id - iq = dK + Kd) and the recursion's Kl_1 = -i, the
/// family I_k = K lambda_k satisfies the morphism identity only with the
/// target's product negated; I_k = -K lambda_k satisfies it as stated, i.e.
/// I_k = -K lambda_k for every k >= 1.
inline constexpr int kMorphismComponentSign = -1;

struct TransferResult {
  std::shared_ptr<const Contraction> contraction;
  /// The minimal structure {m_k} on H with m_k = q lambda_k.
  std::shared_ptr<const AInfinityStructure> structure;
  /// A as an A-infinity algebra (d, product).
  std::shared_ptr<const AInfinityStructure> algebra;
  /// I: H -> A with I_1 = i and I_k = kMorphismComponentSign * K lambda_k.
  std::shared_ptr<const AInfinityMorphism> morphism;
  std::shared_ptr<LambdaCache> cache;
};

/// Transfers the product of A to H along c, up to arity `arity_cap`, on every
/// basis word whose output degree is below the cap.
TransferResult transfer_ainfinity(std::shared_ptr<const Contraction> c, int arity_cap);

/// Smallest degree cap under which m_k on inputs of total degree `total` is
/// known: the output degree total + 2 - k must lie below the cap.
int required_cap(int total_degree, int arity);

/// m_k(args) from a stored structure; throws CapError with the required cap
/// when the output degree is out of range.
HVec evaluate(const AInfinityStructure& a, const std::vector<HVec>& args);

/// Result of running Kadeishvili's induction along a concrete defining system
/// for x_1..x_n. Only the values on consecutive subwords (x_{i+1},...,x_j) are
/// fixed by the induction; everything else is taken from `fallback` (the
/// transfer along the canonical contraction) and is not canonical.
struct KadeishviliRecovery {
  int n = 0;
  /// m_{j-i}(x_{i+1},...,x_j) for 2 <= j - i <= n, keyed by (i, j).
  std::map<std::pair<int, int>, HVec> m;
  /// j_{j-i}(x_{i+1},...,x_j) in A for 1 <= j - i <= n.
  std::map<std::pair<int, int>, Vec> j;
  /// Signs s in j_p = s a_{i,i+p}: the proof's eps_p and the one forced by
  /// d j_p = -U_p (they differ where the stated sign is inconsistent).
  std::map<std::pair<int, int>, int> stated_signs;
  std::map<std::pair<int, int>, int> used_signs;
  /// U_p on each subword; m_p is its class.
  std::map<std::pair<int, int>, Vec> U;
  /// m_n(x_1..x_n).
  HVec value;
  /// (-1)^{1+|x_{n-1}|+|x_{n-3}|+...}.
  int epsilon = 1;
  /// The defining system's value x and the sign s with m_n = s x (0 when x = 0
  /// or m_n != +-x).
  HVec massey_value;
  int value_sign = 0;
  std::shared_ptr<const AInfinityStructure> fallback;
  bool pinned(int i, int j) const { return m.count({i, j}) > 0; }
};

/// Follows the induction with j_k(x_{i+1},...,x_{i+k}) = +-a_{i,i+k}, the sign
/// forced by d j_k = -U_k, and U_p from its explicit formula. Throws ValidationError when the defining
/// system is invalid, not concrete, or an intermediate step is inconsistent.
KadeishviliRecovery kadeishvili_recover(const Dga& dga, const DefiningSystem& ds, int arity_cap);

}  // namespace ainf
