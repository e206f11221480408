#pragma once

#include "ainf/linalg.hpp"
#include "ainf/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ainf {

struct Generator {
  std::string name;
  int degree = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// One term of a polynomial in the generators, kept in the written factor
/// order (reordering odd generators would introduce signs).
struct FormalTerm {
  Rational coefficient = 1;
  std::vector<std::pair<std::string, unsigned>> factors;

  friend bool operator==(const FormalTerm&, const FormalTerm&) = default;
};

struct FormalPoly {
  std::vector<FormalTerm> terms;

  bool empty() const { return terms.empty(); }
  friend bool operator==(const FormalPoly&, const FormalPoly&) = default;
};

/// Presentation of a free graded-commutative DGA, optionally modulo an ideal.
struct DgaSpec {
  int degree_cap = 0;
  bool commutative = true;
  std::vector<Generator> generators;
  /// Differentials of generators in written order; absent generators are cocycles.
  std::vector<std::pair<std::string, FormalPoly>> differential;
  std::vector<FormalPoly> relations;

  const Generator* find_generator(const std::string& name) const;
  friend bool operator==(const DgaSpec&, const DgaSpec&) = default;
};

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Finite-dimensional-per-degree DGA truncated at a degree cap. Multiplication
/// is stored as structure constants on basis pairs whose degree sum is within
/// the cap; the differential is known out of every degree below the cap.
class Dga {
 public:
  const GradedVectorSpace& space() const { return space_; }
  int degree_cap() const { return space_.degree_cap(); }
  std::size_t dim(int degree) const { return space_.dim(degree); }
  bool commutative() const { return commutative_; }
  const std::vector<Generator>& generators() const { return generators_; }

  /// Structure constants of e_i * e_j for e_i in degree p and e_j in degree q.
  const SparseVec& product(int p, std::size_t i, int q, std::size_t j) const;
  HVec multiply(const HVec& a, const HVec& b) const;
  PolyVec multiply(int p, const PolyVec& a, int q, const PolyVec& b) const;

  const GradedMap& d() const { return d_; }
  /// Throws CapError when a.degree >= degree_cap (the target is truncated).
  HVec differential(const HVec& a) const;
  PolyVec differential(int degree, const PolyVec& a) const;

  HVec unit() const;
  HVec basis_element(int degree, std::size_t index) const;
  HVec generator(const std::string& name) const;
  /// Value of a homogeneous formal polynomial. An empty polynomial needs
  /// `degree_hint` to know where its zero lives.
  HVec evaluate(const FormalPoly& p, int degree_hint = -1) const;
  int formal_degree(const FormalTerm& t) const;

  /// "a02 + z1", "-2*a01*a12", "0".
  std::string describe(const HVec& v) const;
  std::string describe(int degree, const PolyVec& v) const;

 private:
  friend Dga expand_free_gc(const DgaSpec&, bool);
  friend Dga quotient_by_ideal(const Dga&, const std::vector<HVec>&);

  GradedVectorSpace space_;
  // table_[p][q][i][j], defined when p + q <= cap.
  std::vector<std::vector<std::vector<std::vector<SparseVec>>>> table_;
  GradedMap d_;
  std::vector<Generator> generators_;
  std::map<std::string, HVec> generator_elements_;
  bool commutative_ = true;
};

/// Builds the truncated free graded-commutative algebra on the generators
/// with the derivation extending the given differential, then divides by the
/// ideal generated by the relations (if any). With `validate`, d^2 != 0 is an
/// error naming a witness monomial.
Dga expand_free_gc(const DgaSpec& spec, bool validate = true);

/// Quotient by the two-sided ideal generated by `generators`. The ideal must be
/// closed under d within the cap; the basis of the quotient is the set of
/// surviving monomials (non-pivot columns of the ideal's echelon form).
Dga quotient_by_ideal(const Dga& dga, const std::vector<HVec>& generators);

/// Builds from a spec including its relations.
Dga build_dga(const DgaSpec& spec, bool validate = true);

struct AxiomViolation {
  std::string axiom;    // "d^2", "leibniz", "associativity", "unit", "commutativity"
  std::string witness;  // basis tuple and residual
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_dga(const Dga& dga);

/// (-1)^(|v|+1) v.
HVec bar_involution(const HVec& v);
PolyVec bar_involution(int degree, PolyVec v);

}  // namespace ainf
