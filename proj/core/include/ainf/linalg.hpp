#pragma once

#include "ainf/polyq.hpp"
#include "ainf/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ainf {

using Vec = std::vector<Rational>;
using PolyVec = std::vector<PolyQ>;

bool is_zero(const Vec& v);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(const Rational& s, Vec v);
Vec& axpy(Vec& y, const Rational& a, const Vec& x);  // y += a*x
Vec unit_vector(std::size_t dim, std::size_t index);
std::string to_string(const Vec& v);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length rows).
  static Matrix from_columns(std::size_t rows, std::span<const Vec> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  Vec apply(const Vec& v) const;
  PolyVec apply(const PolyVec& v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Rational& s) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon form of a list of vectors; pivots are chosen at the
/// leftmost possible column, so the result is canonical for the span.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Echelon echelonize(std::vector<Vec> vectors, std::size_t dim);

/// Linear subspace of Q^n kept in reduced row-echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::vector<Vec> vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its combination of basis rows at the pivot columns.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Solves M x = b for many right-hand sides with one elimination.
/// Free coordinates of a solution are zero.
class LinearSolver {
 public:
  LinearSolver() = default;
  explicit LinearSolver(const Matrix& m);

  std::size_t rank() const { return pivots_.size(); }
  std::optional<Vec> solve(const Vec& rhs) const;

  /// Coefficient-wise solve for a polynomial right-hand side.
  struct PolySolution {
    std::optional<PolyVec> solution;
    std::vector<ParamMonomial> unsolvable;  // parameter monomials whose coefficient vector is not in the image
  };
  PolySolution solve(const PolyVec& rhs) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Matrix transform_;  // E with E*M in reduced row-echelon form
  std::vector<std::size_t> pivots_;
};

/// Coordinates with respect to a list of linearly independent vectors.
class Coordinates {
 public:
  Coordinates() = default;
  Coordinates(std::size_t ambient_dim, std::vector<Vec> basis);

  std::size_t size() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  /// nullopt when v is outside the span.
  std::optional<Vec> of(const Vec& v) const;

 private:
  std::vector<Vec> basis_;
  LinearSolver solver_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

/// Complement of sub inside `inside`: the rows of inside's echelon basis whose
/// coordinate positions are not pivots of sub (expressed in those coordinates).
/// Throws ValidationError when sub is not contained in inside.
Subspace choose_complement(const Subspace& sub, const Subspace& inside);

/// Split a polynomial vector by parameter monomial.
std::vector<std::pair<ParamMonomial, Vec>> split_by_monomial(const PolyVec& v);
PolyVec to_poly(const Vec& v);
bool is_zero(const PolyVec& v);
bool is_constant(const PolyVec& v);
Vec constant_part(const PolyVec& v);
PolyVec operator+(PolyVec a, const PolyVec& b);
PolyVec scale(const PolyQ& s, PolyVec v);

/// Graded vector space with named basis elements in degrees 0..degree_cap.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  explicit GradedVectorSpace(int degree_cap);

  int degree_cap() const { return degree_cap_; }
  bool in_range(int degree) const { return degree >= 0 && degree <= degree_cap_; }
  std::size_t dim(int degree) const;
  const std::vector<std::string>& names(int degree) const;
  void set_names(int degree, std::vector<std::string> names);
  std::optional<std::size_t> index_of(int degree, const std::string& name) const;

  friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;

 private:
  int degree_cap_ = -1;
  std::vector<std::vector<std::string>> basis_;
};

/// Homogeneous element: a degree plus coordinates in that degree's basis.
struct HVec {
  int degree = 0;
  Vec coeffs;

  friend bool operator==(const HVec&, const HVec&) = default;
};

HVec zero_hvec(const GradedVectorSpace& space, int degree);

/// Linear map raising degree by `shift`. matrices[n] maps source degree n to
/// target degree n + shift (a 0-row matrix when that degree is out of range).
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(GradedVectorSpace source, GradedVectorSpace target, int shift);

  const GradedVectorSpace& source() const { return source_; }
  const GradedVectorSpace& target() const { return target_; }
  int shift() const { return shift_; }
  const Matrix& matrix(int degree) const;
  void set_matrix(int degree, Matrix m);
  HVec apply(const HVec& v) const;

 private:
  GradedVectorSpace source_;
  GradedVectorSpace target_;
  int shift_ = 0;
  std::vector<Matrix> matrices_;
};

Subspace kernel(const GradedMap& f, int degree);
/// Image of source degree `degree`, living in target degree degree + shift.
Subspace image(const GradedMap& f, int degree);
std::optional<Vec> solve_preimage(const GradedMap& f, int degree, const Vec& target);

}  // namespace ainf
