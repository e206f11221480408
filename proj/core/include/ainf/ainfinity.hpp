#pragma once

#include "ainf/dga.hpp"
#include "ainf/linalg.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ainf {

struct BasisKey {
  int degree = 0;
  std::size_t index = 0;

  auto operator<=>(const BasisKey&) const = default;
};

/// A tensor word of basis elements x_1 (x) ... (x) x_k.
using Word = std::vector<BasisKey>;

int word_degree(const Word& w);
int word_degree(std::span<const BasisKey> w);
/// "([a01], [a12])" using the space's basis names.
std::string to_string(const Word& w, const GradedVectorSpace& space);

/// Koszul sign of (f_1 (x) ... (x) f_r)(u_1 (x) ... (x) u_r) = (-1)^e f_1(u_1)...f_r(u_r),
/// e = sum_j |f_j| * (|u_1| + ... + |u_{j-1}|). Every sign computation that moves
/// maps past elements goes through here.
int koszul_sign(std::span<const int> map_degrees, std::span<const int> block_degrees);

/// Sign of the term m_{r+1+t}(1^r (x) m_s (x) 1^t) in the Stasheff identity,
/// combined with the Koszul rule above:
///  - RPlusST: (-1)^{r+st}, the sign also used on the source side of the morphism identity.
///  - KPlusNPlusKN: (-1)^{k+n+kn} with k = s, n = r.
/// The two differ by (-1)^{s*i} on identities of arity i, so they agree for even i.
/// Rescaling m_k by (-1)^{(k-1)(k+2)/2} converts a structure of one kind into the other.
enum class StasheffSign { RPlusST, KPlusNPlusKN };

/// The convention satisfied by structures produced by the lambda recursion
/// (Kl_1 = -i) under the Koszul rule above, determined empirically on random
/// algebras; KPlusNPlusKN fails on some of them.
inline constexpr StasheffSign kStasheffSign = StasheffSign::RPlusST;

/// Multilinear maps phi_k: V^{(x)k} -> W of degree base_shift - k, stored on
/// basis words. A value is known when its output degree is at most top_degree
/// and 1 <= k <= arity_cap; with `higher_vanish`, phi_k = 0 for k > arity_cap.
class MultilinearFamily {
 public:
  MultilinearFamily() = default;
  MultilinearFamily(GradedVectorSpace source, GradedVectorSpace target, int base_shift, int arity_cap,
                    int top_degree, bool higher_vanish = false);

  const GradedVectorSpace& source_space() const { return source_; }
  const GradedVectorSpace& target_space() const { return target_; }
  int arity_cap() const { return arity_cap_; }
  int top_degree() const { return top_degree_; }
  int base_shift() const { return base_shift_; }
  bool higher_vanish() const { return higher_vanish_; }
  int map_degree(int k) const { return base_shift_ - k; }
  int output_degree(const Word& w) const { return word_degree(w) + map_degree(static_cast<int>(w.size())); }

  bool known(const Word& w) const;
  /// Zero vector when nothing is stored; nullopt when the value is outside the
  /// stored range.
  std::optional<Vec> value(const Word& w) const;
  void set(const Word& w, Vec v);
  const std::map<Word, Vec>& entries(int k) const;
  /// True when phi_k has no nonzero stored value.
  bool vanishes(int k) const;

  /// Multilinear extension; nullopt when some needed value is unknown.
  std::optional<HVec> apply(const std::vector<HVec>& args) const;

  /// All basis words of arity k whose output degree is within range.
  std::vector<Word> words(int k) const;

 private:
  GradedVectorSpace source_;
  GradedVectorSpace target_;
  int base_shift_ = 2;
  int arity_cap_ = 0;
  int top_degree_ = -1;
  bool higher_vanish_ = false;
  std::vector<std::map<Word, Vec>> ops_;
};

/// A-infinity structure {m_k}, |m_k| = 2 - k.
class AInfinityStructure : public MultilinearFamily {
 public:
  AInfinityStructure() = default;
  AInfinityStructure(GradedVectorSpace space, int arity_cap, int top_degree, bool higher_vanish = false)
      : MultilinearFamily(space, space, 2, arity_cap, top_degree, higher_vanish) {}

  const GradedVectorSpace& space() const { return source_space(); }
  bool minimal() const { return vanishes(1); }
};

/// A-infinity morphism {f_k}, |f_k| = 1 - k.
class AInfinityMorphism : public MultilinearFamily {
 public:
  AInfinityMorphism() = default;
  AInfinityMorphism(std::shared_ptr<const AInfinityStructure> source, std::shared_ptr<const AInfinityStructure> target,
                    int arity_cap, int top_degree)
      : MultilinearFamily(source->space(), target->space(), 1, arity_cap, top_degree),
        source_(std::move(source)),
        target_(std::move(target)) {}

  const AInfinityStructure& source() const { return *source_; }
  const AInfinityStructure& target() const { return *target_; }
  std::shared_ptr<const AInfinityStructure> source_ptr() const { return source_; }
  std::shared_ptr<const AInfinityStructure> target_ptr() const { return target_; }

 private:
  std::shared_ptr<const AInfinityStructure> source_;
  std::shared_ptr<const AInfinityStructure> target_;
};

/// The DGA as an A-infinity algebra: m_1 = d, m_2 = product, m_k = 0 for k >= 3.
AInfinityStructure dga_as_ainfinity(const Dga& dga);

AInfinityMorphism identity_morphism(std::shared_ptr<const AInfinityStructure> a);

struct IdentityViolation {
  int arity = 0;
  Word word;
  std::string residual;
};

struct IdentityReport {
  std::vector<IdentityViolation> violations;
  std::size_t checked = 0;  // identity instances evaluated
  std::size_t skipped = 0;  // instances needing values outside the stored range
  bool ok() const { return violations.empty(); }
};

/// Evaluates the Stasheff identity of every arity i <= max_arity on every basis
/// word (default: as far as the stored operations determine it).
IdentityReport check_stasheff(const AInfinityStructure& a, int max_arity = -1,
                              StasheffSign convention = kStasheffSign);

/// Evaluates the morphism identity of every arity i <= max_arity:
/// sum (-1)^{r+st} f(1^r (x) m_s (x) 1^t) = sum (-1)^e m_q(f_{i_1} (x) ... (x) f_{i_q})
/// with e = sum_l l(i_{q-l} - 1).
IdentityReport check_morphism(const AInfinityMorphism& f, int max_arity = -1);

}  // namespace ainf
