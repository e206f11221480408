#pragma once

#include "ainf/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ainf {

/// A monomial in named parameters: (name, exponent) pairs sorted by name,
/// exponents strictly positive. The empty monomial is the constant 1.
using ParamMonomial = std::vector<std::pair<std::string, unsigned>>;

unsigned total_degree(const ParamMonomial& m);
ParamMonomial multiply(const ParamMonomial& a, const ParamMonomial& b);

/// Graded lexicographic order: total degree first, then the exponent of the
/// alphabetically first parameter where the two monomials differ.
struct GradedLexLess {
  bool operator()(const ParamMonomial& a, const ParamMonomial& b) const;
};

/// Multivariate polynomial with rational coefficients in named parameters.
/// No zero coefficient is ever stored, so equality is structural.
class PolyQ {
 public:
  using Terms = std::map<ParamMonomial, Rational, GradedLexLess>;

  PolyQ() = default;
  PolyQ(const Rational& constant);  // NOLINT(google-explicit-constructor)
  PolyQ(long constant) : PolyQ(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static PolyQ parameter(const std::string& name);
  static PolyQ term(const Rational& coefficient, ParamMonomial monomial);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (zero when absent).
  Rational constant_term() const;
  /// Highest total degree of a stored term; 0 for the zero polynomial.
  unsigned degree() const;
  /// Parameters occurring in the polynomial, sorted by name.
  std::vector<std::string> parameters() const;

  PolyQ& operator+=(const PolyQ& other);
  PolyQ& operator-=(const PolyQ& other);
  PolyQ& operator*=(const PolyQ& other);
  PolyQ& operator*=(const Rational& scalar);

  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
  friend PolyQ operator*(PolyQ a, const Rational& s) { return a *= s; }
  friend PolyQ operator*(const Rational& s, PolyQ a) { return a *= s; }
  PolyQ operator-() const;

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

 private:
  void add_term(const ParamMonomial& m, const Rational& c);

  Terms terms_;
};

/// Exact evaluation. Throws ainf::Error naming the first unassigned parameter.
Rational poly_substitute(const PolyQ& p, const std::map<std::string, Rational>& assignment);

/// Replaces the listed parameters by polynomials; others are kept.
PolyQ poly_compose(const PolyQ& p, const std::map<std::string, PolyQ>& replacement);

struct PolyDecomposition {
  Rational constant;
  std::map<std::string, Rational> linear;
  PolyQ higher;  // only terms of total degree >= 2
};

PolyDecomposition poly_decompose(const PolyQ& p);

/// Canonical text, terms in decreasing graded-lex order: "3/2*a1^2*b1 + -1".
std::string to_string(const PolyQ& p);

/// Inverse of to_string. Accepts the canonical form and, more loosely, any
/// '+'-separated list of '*'-products of rationals and name[^exp] factors.
PolyQ parse_polyq(std::string_view text);

}  // namespace ainf
