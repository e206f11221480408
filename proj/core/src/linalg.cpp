#include "ainf/linalg.hpp"

#include "ainf/errors.hpp"

#include <algorithm>
#include <map>

namespace ainf {

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); });
}

Vec operator+(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch in +");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch in -");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec operator*(const Rational& s, Vec v) {
  for (auto& x : v) x *= s;
  return v;
}

Vec& axpy(Vec& y, const Rational& a, const Vec& x) {
  if (y.size() != x.size()) throw DimensionError("vector size mismatch in axpy");
  if (is_zero(a)) return y;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!is_zero(x[i])) y[i] += a * x[i];
  }
  return y;
}

Vec unit_vector(std::size_t dim, std::size_t index) {
  Vec v(dim);
  v.at(index) = 1;
  return v;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vec> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vec Matrix::row(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (ainf::is_zero(v[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = at(r, c);
      if (!ainf::is_zero(a)) out[r] += a * v[c];
    }
  }
  return out;
}

PolyVec Matrix::apply(const PolyVec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  PolyVec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = at(r, c);
      if (!ainf::is_zero(a)) out[r] += v[c] * a;
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionError("matrix product size mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (ainf::is_zero(a)) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        const Rational& b = other.at(k, c);
        if (!ainf::is_zero(b)) out.at(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum size mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + other.scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return ainf::is_zero(x); });
}

// ---------------------------------------------------------------------------
// Echelon forms

namespace {

// In-place RREF of `m`, pivoting only in columns [0, pivot_cols).
std::vector<std::size_t> rref_in_place(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t found = row;
    while (found < m.rows() && is_zero(m.at(found, col))) ++found;
    if (found == m.rows()) continue;
    if (found != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(found, c), m.at(row, c));
    }
    Rational inv = 1 / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m.at(r, col))) continue;
      Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!is_zero(m.at(row, c))) m.at(r, c) -= factor * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Echelon echelonize(std::vector<Vec> vectors, std::size_t dim) {
  Matrix m(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != dim) throw DimensionError("vector length mismatch in echelonize");
    for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = std::move(vectors[r][c]);
  }
  Echelon e;
  e.pivots = rref_in_place(m, dim);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) e.rows.push_back(m.row(r));
  return e;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::size_t ambient_dim, std::vector<Vec> vectors) {
  Subspace s(ambient_dim);
  Echelon e = echelonize(std::move(vectors), ambient_dim);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(unit_vector(ambient_dim, i));
  return span(ambient_dim, std::move(rows));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_dim_) throw DimensionError("vector length mismatch in reduce");
  Vec out = v;
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    Rational c = out[pivots_[t]];
    if (!ainf::is_zero(c)) axpy(out, -c, basis_[t]);
  }
  return out;
}

bool Subspace::contains(const Vec& v) const { return ainf::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) throw DimensionError("subspace sum of different ambients");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_dim_, std::move(all));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_dim_ != other.ambient_dim_) throw DimensionError("intersection of different ambients");
  // Solve sum a_i u_i - sum b_j w_j = 0 and map the a-part back.
  std::vector<Vec> columns = basis_;
  for (const auto& w : other.basis_) columns.push_back(Rational(-1) * w);
  Subspace relations = kernel(Matrix::from_columns(ambient_dim_, columns));
  std::vector<Vec> out;
  for (const auto& rel : relations.basis()) {
    Vec v(ambient_dim_);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(v, rel[i], basis_[i]);
    out.push_back(std::move(v));
  }
  return span(ambient_dim_, std::move(out));
}

// ---------------------------------------------------------------------------
// LinearSolver / Coordinates

LinearSolver::LinearSolver(const Matrix& m) : rows_(m.rows()), cols_(m.cols()) {
  Matrix aug(rows_, cols_ + rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, cols_ + r) = 1;
  }
  pivots_ = rref_in_place(aug, cols_);
  transform_ = Matrix(rows_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rows_; ++c) transform_.at(r, c) = aug.at(r, cols_ + c);
  }
}

std::optional<Vec> LinearSolver::solve(const Vec& rhs) const {
  if (rhs.size() != rows_) throw DimensionError("right-hand side length mismatch");
  Vec w = transform_.apply(rhs);
  for (std::size_t t = pivots_.size(); t < rows_; ++t) {
    if (!ainf::is_zero(w[t])) return std::nullopt;
  }
  Vec x(cols_);
  for (std::size_t t = 0; t < pivots_.size(); ++t) x[pivots_[t]] = w[t];
  return x;
}

LinearSolver::PolySolution LinearSolver::solve(const PolyVec& rhs) const {
  if (rhs.size() != rows_) throw DimensionError("right-hand side length mismatch");
  PolySolution out;
  PolyVec x(cols_);
  for (const auto& [monomial, coeffs] : split_by_monomial(rhs)) {
    auto part = solve(coeffs);
    if (!part) {
      out.unsolvable.push_back(monomial);
      continue;
    }
    PolyQ mono = PolyQ::term(Rational(1), monomial);
    for (std::size_t i = 0; i < cols_; ++i) {
      if (!ainf::is_zero((*part)[i])) x[i] += mono * (*part)[i];
    }
  }
  if (out.unsolvable.empty()) out.solution = std::move(x);
  return out;
}

Coordinates::Coordinates(std::size_t ambient_dim, std::vector<Vec> basis) : basis_(std::move(basis)) {
  solver_ = LinearSolver(Matrix::from_columns(ambient_dim, basis_));
  if (solver_.rank() != basis_.size()) throw ValidationError("coordinate basis is linearly dependent");
}

std::optional<Vec> Coordinates::of(const Vec& v) const { return solver_.solve(v); }

// ---------------------------------------------------------------------------

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref_in_place(r, r.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -r.at(t, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), std::move(basis));
}

Subspace image(const Matrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), std::move(cols));
}

Subspace choose_complement(const Subspace& sub, const Subspace& inside) {
  if (sub.ambient_dim() != inside.ambient_dim()) throw DimensionError("complement of different ambients");
  if (!inside.contains(sub)) throw ValidationError("complement: subspace is not contained in the enclosing space");
  // Echelon rows of `inside` are the identity at its pivot columns, so the
  // coordinates of v in that basis are v's entries at those pivots.
  std::vector<Vec> coords;
  for (const auto& v : sub.basis()) {
    Vec c(inside.dim());
    for (std::size_t t = 0; t < inside.dim(); ++t) c[t] = v[inside.pivots()[t]];
    coords.push_back(std::move(c));
  }
  Echelon e = echelonize(std::move(coords), inside.dim());
  std::vector<bool> taken(inside.dim(), false);
  for (auto p : e.pivots) taken[p] = true;
  std::vector<Vec> out;
  for (std::size_t t = 0; t < inside.dim(); ++t) {
    if (!taken[t]) out.push_back(inside.basis()[t]);
  }
  return Subspace::span(inside.ambient_dim(), std::move(out));
}

std::vector<std::pair<ParamMonomial, Vec>> split_by_monomial(const PolyVec& v) {
  std::map<ParamMonomial, Vec, GradedLexLess> parts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (const auto& [m, c] : v[i].terms()) {
      auto [it, inserted] = parts.try_emplace(m, Vec(v.size()));
      it->second[i] = c;
    }
  }
  return {parts.begin(), parts.end()};
}

PolyVec to_poly(const Vec& v) { return PolyVec(v.begin(), v.end()); }

bool is_zero(const PolyVec& v) {
  return std::all_of(v.begin(), v.end(), [](const PolyQ& p) { return p.is_zero(); });
}

bool is_constant(const PolyVec& v) {
  return std::all_of(v.begin(), v.end(), [](const PolyQ& p) { return p.is_constant(); });
}

Vec constant_part(const PolyVec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].constant_term();
  return out;
}

PolyVec operator+(PolyVec a, const PolyVec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch in +");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

PolyVec scale(const PolyQ& s, PolyVec v) {
  for (auto& x : v) x *= s;
  return v;
}

// ---------------------------------------------------------------------------
// Graded spaces and maps

GradedVectorSpace::GradedVectorSpace(int degree_cap) : degree_cap_(degree_cap), basis_(degree_cap + 1) {}

std::size_t GradedVectorSpace::dim(int degree) const { return in_range(degree) ? basis_[degree].size() : 0; }

const std::vector<std::string>& GradedVectorSpace::names(int degree) const {
  static const std::vector<std::string> empty;
  return in_range(degree) ? basis_[degree] : empty;
}

void GradedVectorSpace::set_names(int degree, std::vector<std::string> names) {
  if (!in_range(degree)) throw DimensionError("degree " + std::to_string(degree) + " outside [0, cap]");
  basis_[degree] = std::move(names);
}

std::optional<std::size_t> GradedVectorSpace::index_of(int degree, const std::string& name) const {
  const auto& n = names(degree);
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) return std::nullopt;
  return static_cast<std::size_t>(it - n.begin());
}

HVec zero_hvec(const GradedVectorSpace& space, int degree) { return HVec{degree, Vec(space.dim(degree))}; }

GradedMap::GradedMap(GradedVectorSpace source, GradedVectorSpace target, int shift)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift) {
  for (int n = 0; n <= source_.degree_cap(); ++n) {
    matrices_.emplace_back(target_.dim(n + shift_), source_.dim(n));
  }
}

const Matrix& GradedMap::matrix(int degree) const {
  if (!source_.in_range(degree)) throw DimensionError("degree " + std::to_string(degree) + " out of range");
  return matrices_[degree];
}

void GradedMap::set_matrix(int degree, Matrix m) {
  if (!source_.in_range(degree)) throw DimensionError("degree " + std::to_string(degree) + " out of range");
  if (m.rows() != target_.dim(degree + shift_) || m.cols() != source_.dim(degree)) {
    throw DimensionError("graded map matrix has wrong shape in degree " + std::to_string(degree));
  }
  matrices_[degree] = std::move(m);
}

HVec GradedMap::apply(const HVec& v) const { return HVec{v.degree + shift_, matrix(v.degree).apply(v.coeffs)}; }

Subspace kernel(const GradedMap& f, int degree) { return kernel(f.matrix(degree)); }

Subspace image(const GradedMap& f, int degree) { return image(f.matrix(degree)); }

std::optional<Vec> solve_preimage(const GradedMap& f, int degree, const Vec& target) {
  return LinearSolver(f.matrix(degree)).solve(target);
}

}  // namespace ainf
