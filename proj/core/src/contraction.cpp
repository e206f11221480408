#include "ainf/contraction.hpp"

#include "ainf/errors.hpp"

#include <random>

namespace ainf {

namespace {

std::vector<Vec> d_images(const Dga& dga, int degree, const std::vector<Vec>& vecs) {
  std::vector<Vec> out;
  for (const auto& v : vecs) out.push_back(dga.differential(HVec{degree, v}).coeffs);
  return out;
}

std::vector<Vec> concat(std::initializer_list<const std::vector<Vec>*> parts) {
  std::vector<Vec> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

Vec combine(std::size_t dim, const std::vector<Vec>& basis, const Vec& coeffs, std::size_t offset = 0) {
  Vec out(dim);
  for (std::size_t j = 0; j < basis.size(); ++j) axpy(out, coeffs[offset + j], basis[j]);
  return out;
}

void set_column(Matrix& m, std::size_t col, const Vec& v) {
  for (std::size_t r = 0; r < v.size(); ++r) m.at(r, col) = v[r];
}

}  // namespace

// ---------------------------------------------------------------------------

Cohomology::Cohomology(const Dga& dga) : space_(dga.degree_cap() - 1) {
  for (int n = 0; n < dga.degree_cap(); ++n) {
    Subspace z = kernel(dga.d(), n);
    Subspace b = n == 0 ? Subspace(dga.dim(0)) : image(dga.d(), n - 1);
    std::vector<Vec> reps = choose_complement(b, z).basis();
    std::vector<std::string> names;
    for (const auto& r : reps) names.push_back("[" + dga.describe(HVec{n, r}) + "]");
    space_.set_names(n, std::move(names));
    class_coords_.emplace_back(dga.dim(n), concat({&reps, &b.basis()}));
    reps_.push_back(std::move(reps));
    cocycles_.push_back(std::move(z));
    coboundaries_.push_back(std::move(b));
  }
}

std::optional<Vec> Cohomology::class_of(int degree, const Vec& v) const {
  if (degree < 0 || degree > top_degree()) {
    throw CapError("cohomology is only known below the degree cap", degree + 1);
  }
  auto coords = class_coords_[degree].of(v);
  if (!coords) return std::nullopt;
  coords->resize(reps_[degree].size());
  return coords;
}

Vec Cohomology::representative(int degree, const Vec& h) const {
  if (degree < 0 || degree > top_degree()) {
    throw CapError("cohomology is only known below the degree cap", degree + 1);
  }
  return combine(cocycles_[degree].ambient_dim(), reps_[degree], h);
}

// ---------------------------------------------------------------------------

void validate_decomposition(const Dga& dga, const Decomposition& dec) {
  const int cap = dga.degree_cap();
  if (dec.B.size() != static_cast<std::size_t>(cap) || dec.C.size() != static_cast<std::size_t>(cap) ||
      dec.dB.size() != static_cast<std::size_t>(cap + 1)) {
    throw ValidationError("decomposition does not cover degrees 0.." + std::to_string(cap - 1));
  }
  for (int n = 0; n <= cap; ++n) {
    Subspace expected = n == 0 ? Subspace(dga.dim(0))
                               : Subspace::span(dga.dim(n), d_images(dga, n - 1, dec.B[n - 1].basis()));
    if (!(dec.dB[n] == expected)) throw ValidationError("degree " + std::to_string(n) + ": dB is not d(B)");
  }
  for (int n = 0; n < cap; ++n) {
    const std::string where = "degree " + std::to_string(n) + ": ";
    for (const auto* part : {&dec.B[n], &dec.dB[n], &dec.C[n]}) {
      if (part->ambient_dim() != dga.dim(n)) throw ValidationError(where + "subspace has the wrong ambient dimension");
    }
    Subspace z = kernel(dga.d(), n);
    if (dec.B[n].intersect(z).dim() != 0) {
      throw ValidationError(where + "B meets Ker d in dimension " + std::to_string(dec.B[n].intersect(z).dim()));
    }
    for (const auto& c : dec.C[n].basis()) {
      if (!z.contains(c)) {
        throw ValidationError(where + "C contains the non-cocycle " + dga.describe(HVec{n, c}));
      }
    }
    std::size_t total = dec.B[n].dim() + dec.dB[n].dim() + dec.C[n].dim();
    std::size_t sum = (dec.B[n] + dec.dB[n] + dec.C[n]).dim();
    if (sum != dga.dim(n) || total != dga.dim(n)) {
      std::size_t defect = total > sum ? total - sum : dga.dim(n) - sum;
      throw ValidationError(where + "B + dB + C is not a direct sum decomposition of A (dimensions " +
                            std::to_string(dec.B[n].dim()) + "+" + std::to_string(dec.dB[n].dim()) + "+" +
                            std::to_string(dec.C[n].dim()) + " against " + std::to_string(dga.dim(n)) +
                            ", defect " + std::to_string(defect) + ")");
    }
  }
}

Decomposition canonical_decomposition(const Dga& dga) {
  const int cap = dga.degree_cap();
  Decomposition dec;
  for (int n = 0; n < cap; ++n) {
    dec.B.push_back(choose_complement(kernel(dga.d(), n), Subspace::full(dga.dim(n))));
  }
  dec.dB.emplace_back(dga.dim(0));
  for (int n = 0; n < cap; ++n) dec.dB.push_back(Subspace::span(dga.dim(n + 1), d_images(dga, n, dec.B[n].basis())));
  for (int n = 0; n < cap; ++n) dec.C.push_back(choose_complement(dec.dB[n], kernel(dga.d(), n)));
  return dec;
}

Decomposition random_decomposition(const Dga& dga, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto small = [&]() { return Rational(static_cast<long>(rng() % 5) - 2); };
  auto random_in = [&](const Subspace& s) {
    Vec v(s.ambient_dim());
    for (const auto& b : s.basis()) axpy(v, small(), b);
    return v;
  };
  Decomposition dec = canonical_decomposition(dga);
  const int cap = dga.degree_cap();
  for (int n = 0; n < cap; ++n) {
    Subspace z = kernel(dga.d(), n);
    std::vector<Vec> b;
    for (const auto& v : dec.B[n].basis()) b.push_back(v + random_in(z));
    dec.B[n] = Subspace::span(dga.dim(n), std::move(b));
    std::vector<Vec> c;
    for (const auto& v : dec.C[n].basis()) c.push_back(v + random_in(dec.dB[n]));
    dec.C[n] = Subspace::span(dga.dim(n), std::move(c));
  }
  // Shearing B by cocycles leaves d(B) unchanged, so dB stays as computed.
  return dec;
}

// ---------------------------------------------------------------------------

Contraction contraction_from_decomposition(const Dga& dga, const Decomposition& dec, HomotopySign sign) {
  validate_decomposition(dga, dec);
  const int cap = dga.degree_cap();
  Contraction c;
  c.dga_ = dga;
  c.cohomology_ = Cohomology(dga);
  c.sign_ = sign;
  const Cohomology& coh = c.cohomology_;
  const GradedVectorSpace& A = dga.space();
  c.i_ = GradedMap(coh.space(), A, 0);
  c.q_ = GradedMap(A, coh.space(), 0);
  c.K_ = GradedMap(A, A, -1);
  const Rational k_sign = sign == HomotopySign::Standard ? Rational(1) : Rational(-1);

  for (int n = 0; n <= cap; ++n) {
    const std::size_t dim = dga.dim(n);
    // Basis [B ; d(B^{n-1} basis) ; C], or [d(B^{cap-1}) ; rest] at the cap.
    const std::vector<Vec> empty;
    const std::vector<Vec>& pre = n > 0 ? dec.B[n - 1].basis() : empty;
    std::vector<Vec> dpre = n > 0 ? d_images(dga, n - 1, pre) : std::vector<Vec>{};
    std::vector<Vec> b = n < cap ? dec.B[n].basis() : std::vector<Vec>{};
    std::vector<Vec> cc = n < cap ? dec.C[n].basis()
                                  : choose_complement(dec.dB[n], Subspace::full(dim)).basis();
    Coordinates coords(dim, concat({&b, &dpre, &cc}));
    const std::size_t off_d = b.size();
    const std::size_t off_c = b.size() + dpre.size();

    Matrix K(n > 0 ? dga.dim(n - 1) : 0, dim);
    std::vector<Vec> columns;
    for (std::size_t k = 0; k < dim; ++k) columns.push_back(*coords.of(unit_vector(dim, k)));
    if (n > 0) {
      for (std::size_t k = 0; k < dim; ++k) {
        set_column(K, k, k_sign * combine(dga.dim(n - 1), pre, columns[k], off_d));
      }
    }
    c.K_.set_matrix(n, std::move(K));
    if (n == cap) break;

    // Classes of the C basis vectors form an invertible matrix Mc.
    const std::size_t h = coh.dim(n);
    std::vector<Vec> class_cols;
    for (const auto& v : cc) class_cols.push_back(*coh.class_of(n, v));
    Matrix Mc = Matrix::from_columns(h, class_cols);
    Matrix q(h, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      Vec cpart(cc.size());
      for (std::size_t j = 0; j < cc.size(); ++j) cpart[j] = columns[k][off_c + j];
      set_column(q, k, Mc.apply(cpart));
    }
    c.q_.set_matrix(n, std::move(q));
    Coordinates inverse(h, class_cols);
    Matrix i(dim, h);
    for (std::size_t t = 0; t < h; ++t) set_column(i, t, combine(dim, cc, *inverse.of(unit_vector(h, t))));
    c.i_.set_matrix(n, std::move(i));
  }
  return c;
}

Decomposition contraction_to_decomposition(const Contraction& c) {
  const Dga& dga = c.dga();
  const int cap = dga.degree_cap();
  Decomposition dec;
  for (int n = 0; n < cap; ++n) {
    std::vector<Vec> b;
    for (std::size_t k = 0; k < dga.dim(n); ++k) {
      b.push_back(c.K(dga.differential(dga.basis_element(n, k))).coeffs);
    }
    dec.B.push_back(Subspace::span(dga.dim(n), std::move(b)));
    std::vector<Vec> cc;
    for (std::size_t t = 0; t < c.cohomology().dim(n); ++t) {
      cc.push_back(c.i(HVec{n, unit_vector(c.cohomology().dim(n), t)}).coeffs);
    }
    dec.C.push_back(Subspace::span(dga.dim(n), std::move(cc)));
  }
  dec.dB.emplace_back(dga.dim(0));
  for (int n = 0; n < cap; ++n) dec.dB.push_back(Subspace::span(dga.dim(n + 1), d_images(dga, n, dec.B[n].basis())));
  return dec;
}

HVec Contraction::i(const HVec& h) const {
  if (h.degree < 0 || h.degree > top_degree()) throw CapError("i is only known below the degree cap", h.degree + 1);
  return i_.apply(h);
}

HVec Contraction::q(const HVec& a) const {
  if (a.degree < 0 || a.degree > top_degree()) throw CapError("q is only known below the degree cap", a.degree + 1);
  return q_.apply(a);
}

HVec Contraction::K(const HVec& a) const {
  if (a.degree < 0 || a.degree > dga_.degree_cap()) throw CapError("K is only known up to the degree cap", a.degree);
  return K_.apply(a);
}

PolyVec Contraction::i(int degree, const PolyVec& h) const {
  if (degree < 0 || degree > top_degree()) throw CapError("i is only known below the degree cap", degree + 1);
  return i_.matrix(degree).apply(h);
}

PolyVec Contraction::q(int degree, const PolyVec& a) const {
  if (degree < 0 || degree > top_degree()) throw CapError("q is only known below the degree cap", degree + 1);
  return q_.matrix(degree).apply(a);
}

PolyVec Contraction::K(int degree, const PolyVec& a) const {
  if (degree < 0 || degree > dga_.degree_cap()) throw CapError("K is only known up to the degree cap", degree);
  return K_.matrix(degree).apply(a);
}

std::vector<ContractionCheck> validate_contraction(const Contraction& c) {
  std::vector<ContractionCheck> out;
  const Dga& dga = c.dga();
  const int top = c.top_degree();
  const Rational s = c.homotopy_sign() == HomotopySign::Standard ? Rational(1) : Rational(-1);
  auto name = [&](int n, std::size_t k) { return dga.space().names(n)[k]; };
  for (int n = 0; n <= top; ++n) {
    for (std::size_t t = 0; t < c.cohomology().dim(n); ++t) {
      HVec h{n, unit_vector(c.cohomology().dim(n), t)};
      HVec ih = c.i(h);
      if (c.q(ih) != h) out.push_back({"qi=id", c.H().names(n)[t]});
      if (!is_zero(c.K(ih).coeffs)) out.push_back({"Ki=0", c.H().names(n)[t]});
      if (!is_zero(dga.differential(ih).coeffs)) out.push_back({"di=0", c.H().names(n)[t]});
    }
    for (std::size_t k = 0; k < dga.dim(n); ++k) {
      HVec a = dga.basis_element(n, k);
      HVec Ka = c.K(a);
      HVec da = dga.differential(a);
      if (n > 0 && !is_zero(c.K(Ka).coeffs)) out.push_back({"K^2=0", name(n, k)});
      if (n > 0 && !is_zero(c.q(Ka).coeffs)) out.push_back({"qK=0", name(n, k)});
      if (n + 1 <= top && !is_zero(c.q(da).coeffs)) out.push_back({"qd=0", name(n, k)});
      Vec lhs = a.coeffs - c.i(c.q(a)).coeffs;
      Vec rhs = c.K(da).coeffs;
      if (n > 0) rhs = rhs + dga.differential(Ka).coeffs;
      if (lhs != s * rhs) {
        out.push_back({"id-iq=dK+Kd", name(n, k) + ": residual " + dga.describe(HVec{n, lhs - s * rhs})});
      }
    }
  }
  return out;
}

}  // namespace ainf
