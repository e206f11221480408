#pragma once

#include "ainf/dga.hpp"
#include "ainf/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ainf {

/// Cohomology of a truncated DGA in degrees 0..cap-1, with one canonical
/// representative cocycle per basis class. The representatives span the
/// pivot-canonical complement of Im d inside Ker d.
class Cohomology {
 public:
  Cohomology() = default;
  explicit Cohomology(const Dga& dga);

  /// Basis names are "[rep]", e.g. "[a01*a14 + a02*a24]".
  const GradedVectorSpace& space() const { return space_; }
  int top_degree() const { return space_.degree_cap(); }
  std::size_t dim(int degree) const { return space_.dim(degree); }

  const std::vector<Vec>& representatives(int degree) const { return reps_.at(degree); }
  const Subspace& cocycles(int degree) const { return cocycles_.at(degree); }
  const Subspace& coboundaries(int degree) const { return coboundaries_.at(degree); }

  /// Class of a cocycle in the canonical basis; nullopt if v is not a cocycle.
  std::optional<Vec> class_of(int degree, const Vec& v) const;
  /// Canonical representative of a class.
  Vec representative(int degree, const Vec& h) const;
  HVec representative(const HVec& h) const { return HVec{h.degree, representative(h.degree, h.coeffs)}; }

 private:
  GradedVectorSpace space_;
  std::vector<std::vector<Vec>> reps_;
  std::vector<Subspace> cocycles_;
  std::vector<Subspace> coboundaries_;
  std::vector<Coordinates> class_coords_;  // over [reps ; coboundary basis]
};

/// A = B + dB + C per degree. B and C are known in degrees 0..cap-1 (where
/// Ker d is known); dB in degrees 0..cap.
struct Decomposition {
  std::vector<Subspace> B;
  std::vector<Subspace> dB;
  std::vector<Subspace> C;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Checks B cap Ker d = 0, C inside Ker d, dB = d(B) and B + dB + C = A in
/// every degree below the cap. Throws ValidationError naming the degree.
void validate_decomposition(const Dga& dga, const Decomposition& dec);

Decomposition canonical_decomposition(const Dga& dga);
Decomposition random_decomposition(const Dga& dga, std::uint64_t seed);

/// Which sign the homotopy carries: id - iq = dK + Kd (standard) or
/// iq - id = dK + Kd (opposite, which negates K).
enum class HomotopySign { Standard, Opposite };

/// Contraction of A onto its cohomology: q i = id, id - i q = dK + Kd,
/// K^2 = K i = q K = 0. i and q are known on degrees 0..cap-1; K also out of
/// degree cap, where it inverts d on dB and kills a canonical complement.
class Contraction {
 public:
  const Dga& dga() const { return dga_; }
  const Cohomology& cohomology() const { return cohomology_; }
  const GradedVectorSpace& H() const { return cohomology_.space(); }
  HomotopySign homotopy_sign() const { return sign_; }
  int top_degree() const { return dga_.degree_cap() - 1; }

  const GradedMap& i_map() const { return i_; }
  const GradedMap& q_map() const { return q_; }
  const GradedMap& K_map() const { return K_; }

  /// These throw CapError outside the known range.
  HVec i(const HVec& h) const;
  HVec q(const HVec& a) const;
  HVec K(const HVec& a) const;
  PolyVec i(int degree, const PolyVec& h) const;
  PolyVec q(int degree, const PolyVec& a) const;
  PolyVec K(int degree, const PolyVec& a) const;

 private:
  friend Contraction contraction_from_decomposition(const Dga&, const Decomposition&, HomotopySign);

  Dga dga_;
  Cohomology cohomology_;
  GradedMap i_;
  GradedMap q_;
  GradedMap K_;
  HomotopySign sign_ = HomotopySign::Standard;
};

/// i embeds C (each class goes to its unique C-representative), q projects
/// onto C along B + dB, K inverts d on dB and kills B and C.
Contraction contraction_from_decomposition(const Dga& dga, const Decomposition& dec,
                                           HomotopySign sign = HomotopySign::Standard);
/// B = K d A, C = Im i, dB = d B.
Decomposition contraction_to_decomposition(const Contraction& c);

struct ContractionCheck {
  std::string identity;  // "qi=id", "id-iq=dK+Kd", "K^2=0", "Ki=0", "qK=0", "di=0", "qd=0"
  std::string witness;
};

/// Exhaustive basis check of every contraction identity; empty when valid.
std::vector<ContractionCheck> validate_contraction(const Contraction& c);

}  // namespace ainf
