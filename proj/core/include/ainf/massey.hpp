#pragma once

#include "ainf/contraction.hpp"
#include "ainf/defining_system.hpp"
#include "ainf/transfer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ainf {

struct MasseySigns {
  int n = 0;
  std::vector<int> degrees;
  /// (-1)^{1 + |x_{n-1}| + |x_{n-3}| + ...}, the sign for adapted contractions.
  int adapted = 1;
  /// (-1)^{sum_{j<n} (n-j)|x_j|}, the sign for arbitrary quasi-isomorphisms.
  int general = 1;
};

MasseySigns massey_signs(const std::vector<int>& degrees);

/// Product of classes in H through the canonical representatives.
HVec cup_product(const Dga& dga, const Cohomology& h, const HVec& x, const HVec& y);

/// x1 H^{|x2|+|x3|-1} + H^{|x1|+|x2|-1} x3 inside H^{|x1|+|x2|+|x3|-1}.
Subspace indeterminacy(const Dga& dga, const Cohomology& h, const HVec& x1, const HVec& x2, const HVec& x3);

enum class MasseyKind { Empty, Coset, PolynomialImage, Unresolved };
enum class Membership { No, Yes, Unknown };

/// A Massey product set inside H^{sum |x_i| + 2 - n}.
///  - Empty: no defining system exists; `reason` says where it breaks.
///  - Coset: base + directions (a single point when directions is zero).
///  - PolynomialImage: the image of `value`, class coordinates polynomial in `parameters`.
///  - Unresolved: the existence constraints are not affine; `reason` holds the obstruction.
struct MasseySetDescriptor {
  MasseyKind kind = MasseyKind::Empty;
  int degree = 0;
  Vec base;
  Subspace directions;
  PolyVec value;
  std::vector<std::string> parameters;
  std::string reason;
  /// Values found by sampled mode.
  std::vector<Vec> samples;
  /// The parameterized defining system behind a symbolic result.
  std::optional<DefiningSystem> system;

  bool single_point() const { return kind == MasseyKind::Coset && directions.dim() == 0; }
  Membership contains(const Vec& h) const;
};

std::string to_string(MasseyKind kind);

/// <x1,x2,x3> from particular solutions and the indeterminacy.
MasseySetDescriptor triple_massey(const Dga& dga, const Cohomology& h, const HVec& x1, const HVec& x2,
                                  const HVec& x3);

enum class MasseyMode { Symbolic, Canonical, Sampled };

struct MasseyOptions {
  MasseyMode mode = MasseyMode::Symbolic;
  std::uint64_t seed = 1;
  int samples = 8;
};

/// <x1,...,xn> for n >= 3 by building parameterized defining systems level by
/// level. Representatives are the canonical ones.
MasseySetDescriptor higher_massey(const Dga& dga, const Cohomology& h, const std::vector<HVec>& classes,
                                  const MasseyOptions& options = {});

/// Substitutes parameter values; parameters left unassigned stay symbolic.
DefiningSystem specialize(const DefiningSystem& ds, const std::map<std::string, Rational>& assignment);

struct CanonicalSystemResult {
  DefiningSystem system;
  std::optional<DefiningSystemFailure> failure;
  bool ok() const { return !failure; }
};

/// a_{i-1,i} = i(x_i) and a_ij = (-1)^{b_ij} K lambda_{j-i}(x_{i+1},...,x_j) for
/// 2 <= j - i <= n - 1, with b_ij = 1 + |x_{j-1}| + |x_{j-3}| + ... (indices > i).
/// Reports the first (i, j) where the equations fail.
CanonicalSystemResult defining_system_canonical(LambdaCache& cache, const std::vector<HVec>& classes);

struct AdaptedCheck {
  bool adapted = false;
  std::string witness;
};

/// Whether a_{j-1,j} = i(x_j) for every j and every higher a_ij lies in B = K d A.
AdaptedCheck is_adapted(const Contraction& c, const DefiningSystem& ds);

/// Decomposition with B containing the higher a_ij and C containing the
/// representatives, completed by the canonical rule. Throws ValidationError with
/// a dependence witness when that is impossible.
Decomposition adapted_decomposition(const Dga& dga, const DefiningSystem& ds);
Contraction build_adapted_contraction(const Dga& dga, const DefiningSystem& ds);

struct RecoveryVerdict {
  HVec mn;
  /// Signs s with s * m_n in the set.
  std::vector<int> signs;
  bool detects = false;
  /// Some s * m_n equals the given element (or the set is the single point s * m_n).
  bool recovers = false;
  /// Some s * m_n - x lies in the span of the values of m_2..m_{n-1}, x in the
  /// set; undecided (nullopt) for polynomial images and unresolved sets.
  std::optional<bool> gamma_check;
  /// Signs s that pass, with Gamma = s * m_n - base for each.
  std::vector<int> gamma_signs;
  std::vector<Vec> gammas;
  /// Membership of some s * m_n could not be decided.
  bool undecided = false;
};

RecoveryVerdict verify_recovery(const AInfinityStructure& a, const std::vector<HVec>& classes,
                                const MasseySetDescriptor& set, const std::optional<Vec>& element = std::nullopt);

/// Span of all values m_j(basis word), 2 <= j <= max_arity, in one degree.
Subspace lower_image_span(const AInfinityStructure& a, int max_arity, int degree);

/// True when m_2..m_upto vanish on every stored basis word.
bool check_vanishing_hypothesis(const AInfinityStructure& a, int upto);

}  // namespace ainf
