#pragma once

#include "ainf/ainfinity.hpp"
#include "ainf/dga.hpp"

#include <map>
#include <memory>
#include <optional>

namespace ainf {

/// Truncated bar construction T(sA) of an A-infinity structure. A word
/// s a_1 (x) ... (x) s a_p is stored as the Word of its A-basis letters; the
/// suspended letter has degree |s a| = |a| + 1. Only parities enter the signs.
class BarSlice {
 public:
  using Chain = std::map<Word, Rational>;

  BarSlice(std::shared_ptr<const AInfinityStructure> a, int word_cap);

  const AInfinityStructure& structure() const { return *a_; }
  int word_cap() const { return word_cap_; }
  static int suspended_degree(const BasisKey& letter) { return letter.degree + 1; }

  /// g_k on basis words, with the output s b stored as the A-coordinates of b.
  const MultilinearFamily& g() const { return g_; }
  MultilinearFamily& g() { return g_; }

  /// delta = sum_k delta_k, each the coderivation extending g_k. nullopt when a
  /// needed g value is outside the stored range. When g_1 vanishes on every
  /// stored word it is taken to be zero, also above the top degree.
  std::optional<Chain> delta(const Word& w) const;
  std::optional<Chain> delta(const Chain& c) const;

 private:
  std::shared_ptr<const AInfinityStructure> a_;
  int word_cap_ = 0;
  MultilinearFamily g_;
};

/// g_k = (-1)^{k(k-1)/2} s m_k (s^{-1})^{(x)k} for k <= word_cap.
BarSlice build_bar(std::shared_ptr<const AInfinityStructure> a, int word_cap);

/// m_k = s^{-1} g_k s^{(x)k}, read back from the stored g_k.
AInfinityStructure structure_from_bar(const BarSlice& b);

/// delta^2 on every basis word of length <= max_length (default: as far as the
/// stored g_k determine it) whose image lands in range.
IdentityReport check_square_zero(const BarSlice& b, int max_length = -1);

/// The DGA as the A-infinity structure whose bar codifferential is
/// g_1(sa) = -s(da), g_2(sa (x) sb) = -(-1)^{|a|} s(ab): m_1 = -d, m_2 = -product.
AInfinityStructure bar_dga_structure(const Dga& dga);

}  // namespace ainf
