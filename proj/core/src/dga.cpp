#include "ainf/dga.hpp"

#include "ainf/errors.hpp"

#include <algorithm>
#include <functional>

namespace ainf {

const Generator* DgaSpec::find_generator(const std::string& name) const {
  auto it = std::find_if(generators.begin(), generators.end(), [&](const Generator& g) { return g.name == name; });
  return it == generators.end() ? nullptr : &*it;
}

// ---------------------------------------------------------------------------
// Dga accessors

const SparseVec& Dga::product(int p, std::size_t i, int q, std::size_t j) const {
  if (p < 0 || q < 0 || p + q > degree_cap()) {
    throw CapError("product of degrees " + std::to_string(p) + " and " + std::to_string(q) + " exceeds the cap",
                   p + q);
  }
  return table_[p][q][i][j];
}

HVec Dga::multiply(const HVec& a, const HVec& b) const {
  HVec out = zero_hvec(space_, a.degree + b.degree);
  if (a.degree + b.degree > degree_cap()) {
    throw CapError("product lands in degree " + std::to_string(a.degree + b.degree), a.degree + b.degree);
  }
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      if (is_zero(b.coeffs[j])) continue;
      Rational c = a.coeffs[i] * b.coeffs[j];
      for (const auto& [k, s] : table_[a.degree][b.degree][i][j]) out.coeffs[k] += c * s;
    }
  }
  return out;
}

PolyVec Dga::multiply(int p, const PolyVec& a, int q, const PolyVec& b) const {
  if (p + q > degree_cap()) throw CapError("product lands in degree " + std::to_string(p + q), p + q);
  PolyVec out(dim(p + q));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      const auto& prod = table_[p][q][i][j];
      if (prod.empty()) continue;
      PolyQ c = a[i] * b[j];
      for (const auto& [k, s] : prod) out[k] += c * s;
    }
  }
  return out;
}

HVec Dga::differential(const HVec& a) const {
  if (a.degree >= degree_cap()) {
    throw CapError("differential out of degree " + std::to_string(a.degree) + " is truncated", a.degree + 1);
  }
  return d_.apply(a);
}

PolyVec Dga::differential(int degree, const PolyVec& a) const {
  if (degree >= degree_cap()) {
    throw CapError("differential out of degree " + std::to_string(degree) + " is truncated", degree + 1);
  }
  return d_.matrix(degree).apply(a);
}

HVec Dga::unit() const { return basis_element(0, 0); }

HVec Dga::basis_element(int degree, std::size_t index) const {
  HVec v = zero_hvec(space_, degree);
  v.coeffs.at(index) = 1;
  return v;
}

HVec Dga::generator(const std::string& name) const {
  auto it = generator_elements_.find(name);
  if (it == generator_elements_.end()) throw Error("unknown generator '" + name + "'");
  return it->second;
}

int Dga::formal_degree(const FormalTerm& t) const {
  int deg = 0;
  for (const auto& [name, e] : t.factors) {
    auto it = std::find_if(generators_.begin(), generators_.end(), [&](const Generator& g) { return g.name == name; });
    if (it == generators_.end()) throw Error("unknown generator '" + name + "'");
    deg += it->degree * static_cast<int>(e);
  }
  return deg;
}

HVec Dga::evaluate(const FormalPoly& p, int degree_hint) const {
  if (p.terms.empty()) {
    if (degree_hint < 0) throw Error("cannot place the empty polynomial in a degree");
    return zero_hvec(space_, degree_hint);
  }
  int degree = formal_degree(p.terms.front());
  if (degree_hint >= 0 && degree != degree_hint) {
    throw ValidationError("polynomial has degree " + std::to_string(degree) + ", expected " +
                          std::to_string(degree_hint));
  }
  if (degree > degree_cap()) throw CapError("polynomial lives above the degree cap", degree);
  HVec out = zero_hvec(space_, degree);
  for (const auto& term : p.terms) {
    if (formal_degree(term) != degree) throw ValidationError("inhomogeneous polynomial");
    HVec value = unit();
    for (const auto& [name, e] : term.factors) {
      HVec g = generator(name);
      for (unsigned k = 0; k < e; ++k) value = multiply(value, g);
    }
    axpy(out.coeffs, term.coefficient, value.coeffs);
  }
  return out;
}

std::string Dga::describe(const HVec& v) const {
  std::string out;
  const auto& names = space_.names(v.degree);
  for (std::size_t i = 0; i < v.coeffs.size(); ++i) {
    Rational c = v.coeffs[i];
    if (is_zero(c)) continue;
    bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c == 1) {
      out += names[i];
    } else if (names[i] == "1") {
      out += to_string(c);
    } else {
      out += to_string(c) + "*" + names[i];
    }
  }
  return out.empty() ? "0" : out;
}

std::string Dga::describe(int degree, const PolyVec& v) const {
  std::string out;
  const auto& names = space_.names(degree);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (v[i] == PolyQ(1)) {
      out += names[i];
    } else {
      out += "(" + to_string(v[i]) + ")*" + names[i];
    }
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Free graded-commutative expansion

namespace {

using Exponents = std::vector<unsigned>;

std::string monomial_name(const std::vector<Generator>& gens, const Exponents& e) {
  std::string out;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (e[g] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens[g].name;
    if (e[g] > 1) out += "^" + std::to_string(e[g]);
  }
  return out.empty() ? "1" : out;
}

// Sign of reordering (m1 word)(m2 word) into canonical generator order, or 0
// when an odd generator would appear twice.
int product_sign(const std::vector<Generator>& gens, const Exponents& a, const Exponents& b) {
  int parity = 0;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    bool odd_g = gens[g].degree % 2 != 0;
    if (odd_g && a[g] + b[g] > 1) return 0;
    if (!odd_g || b[g] == 0) continue;
    for (std::size_t h = g + 1; h < gens.size(); ++h) {
      if (gens[h].degree % 2 != 0) parity += static_cast<int>(a[h] * b[g]);
    }
  }
  return parity % 2 == 0 ? 1 : -1;
}

}  // namespace

Dga expand_free_gc(const DgaSpec& spec, bool validate) {
  if (!spec.commutative) throw ValidationError("only graded-commutative presentations can be expanded");
  if (spec.degree_cap < 0) throw ValidationError("negative degree cap");
  for (const auto& g : spec.generators) {
    if (g.degree <= 0) throw ValidationError("generator '" + g.name + "' must have positive degree");
  }
  const int cap = spec.degree_cap;
  const auto& gens = spec.generators;

  // Enumerate monomials of degree <= cap.
  std::vector<std::vector<Exponents>> monomials(cap + 1);
  Exponents current(gens.size(), 0);
  std::function<void(std::size_t, int)> enumerate = [&](std::size_t g, int degree) {
    if (g == gens.size()) {
      monomials[degree].push_back(current);
      return;
    }
    unsigned max_e = gens[g].degree % 2 != 0 ? 1u : static_cast<unsigned>(cap);
    for (unsigned e = 0; e <= max_e && degree + static_cast<int>(e) * gens[g].degree <= cap; ++e) {
      current[g] = e;
      enumerate(g + 1, degree + static_cast<int>(e) * gens[g].degree);
    }
    current[g] = 0;
  };
  enumerate(0, 0);

  Dga dga;
  dga.commutative_ = true;
  dga.generators_ = gens;
  dga.space_ = GradedVectorSpace(cap);
  std::vector<std::map<Exponents, std::size_t>> index(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    std::sort(monomials[n].begin(), monomials[n].end(), std::greater<>());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < monomials[n].size(); ++i) {
      names.push_back(monomial_name(gens, monomials[n][i]));
      index[n][monomials[n][i]] = i;
    }
    dga.space_.set_names(n, std::move(names));
  }

  dga.table_.assign(cap + 1, {});
  for (int p = 0; p <= cap; ++p) {
    dga.table_[p].assign(cap + 1 - p, {});
    for (int q = 0; p + q <= cap; ++q) {
      auto& block = dga.table_[p][q];
      block.assign(monomials[p].size(), std::vector<SparseVec>(monomials[q].size()));
      for (std::size_t i = 0; i < monomials[p].size(); ++i) {
        for (std::size_t j = 0; j < monomials[q].size(); ++j) {
          int sign = product_sign(gens, monomials[p][i], monomials[q][j]);
          if (sign == 0) continue;
          Exponents sum = monomials[p][i];
          for (std::size_t g = 0; g < gens.size(); ++g) sum[g] += monomials[q][j][g];
          block[i][j].emplace_back(index[p + q].at(sum), Rational(sign));
        }
      }
    }
  }

  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (gens[g].degree > cap) continue;
    Exponents e(gens.size(), 0);
    e[g] = 1;
    dga.generator_elements_[gens[g].name] = dga.basis_element(gens[g].degree, index[gens[g].degree].at(e));
  }

  // Differential on generators.
  std::vector<std::optional<HVec>> dgen(gens.size());
  for (const auto& [name, poly] : spec.differential) {
    auto it = std::find_if(gens.begin(), gens.end(), [&](const Generator& g) { return g.name == name; });
    if (it == gens.end()) throw ValidationError("differential of unknown generator '" + name + "'");
    if (it->degree + 1 > cap) continue;
    dgen[it - gens.begin()] = dga.evaluate(poly, it->degree + 1);
  }

  // Extend as a derivation: d(g1...gk) = sum (-1)^{|g1..g_{i-1}|} g1..d(gi)..gk.
  dga.d_ = GradedMap(dga.space_, dga.space_, 1);
  for (int n = 0; n < cap; ++n) {
    Matrix m(dga.dim(n + 1), dga.dim(n));
    for (std::size_t col = 0; col < monomials[n].size(); ++col) {
      const Exponents& mono = monomials[n][col];
      std::vector<std::size_t> word;
      for (std::size_t g = 0; g < gens.size(); ++g) {
        for (unsigned k = 0; k < mono[g]; ++k) word.push_back(g);
      }
      HVec total = zero_hvec(dga.space_, n + 1);
      Exponents prefix(gens.size(), 0);
      int prefix_degree = 0;
      for (std::size_t pos = 0; pos < word.size(); ++pos) {
        std::size_t g = word[pos];
        if (dgen[g]) {
          Exponents suffix = mono;
          for (std::size_t h = 0; h < gens.size(); ++h) suffix[h] -= prefix[h];
          suffix[g] -= 1;
          int suffix_degree = n - prefix_degree - gens[g].degree;
          HVec left = dga.basis_element(prefix_degree, index[prefix_degree].at(prefix));
          HVec right = dga.basis_element(suffix_degree, index[suffix_degree].at(suffix));
          HVec term = dga.multiply(dga.multiply(left, *dgen[g]), right);
          axpy(total.coeffs, prefix_degree % 2 == 0 ? Rational(1) : Rational(-1), term.coeffs);
        }
        prefix[g] += 1;
        prefix_degree += gens[g].degree;
      }
      for (std::size_t r = 0; r < total.coeffs.size(); ++r) m.at(r, col) = total.coeffs[r];
    }
    dga.d_.set_matrix(n, std::move(m));
  }

  if (validate) {
    for (int n = 0; n + 2 <= cap; ++n) {
      Matrix dd = dga.d_.matrix(n + 1) * dga.d_.matrix(n);
      for (std::size_t col = 0; col < dd.cols(); ++col) {
        if (!is_zero(dd.column(col))) {
          throw ValidationError("d^2 != 0 on monomial " + dga.space_.names(n)[col] + ": d^2 = " +
                                dga.describe(HVec{n + 2, dd.column(col)}));
        }
      }
    }
  }
  return dga;
}

Dga build_dga(const DgaSpec& spec, bool validate) {
  Dga free = expand_free_gc(spec, validate);
  if (spec.relations.empty()) return free;
  std::vector<HVec> gens;
  for (const auto& rel : spec.relations) {
    if (rel.empty()) continue;
    gens.push_back(free.evaluate(rel));
  }
  return quotient_by_ideal(free, gens);
}

// ---------------------------------------------------------------------------
// Quotients

Dga quotient_by_ideal(const Dga& dga, const std::vector<HVec>& generators) {
  const int cap = dga.degree_cap();
  std::vector<std::vector<Vec>> spanning(cap + 1);
  for (const auto& g : generators) {
    if (g.degree == 0 && !is_zero(g.coeffs)) {
      throw ValidationError("ideal contains a nonzero scalar; the quotient would be the zero algebra");
    }
    for (int p = 0; p + g.degree <= cap; ++p) {
      for (int q = 0; p + g.degree + q <= cap; ++q) {
        for (std::size_t i = 0; i < dga.dim(p); ++i) {
          HVec left = dga.multiply(dga.basis_element(p, i), g);
          for (std::size_t j = 0; j < dga.dim(q); ++j) {
            HVec v = dga.multiply(left, dga.basis_element(q, j));
            if (!is_zero(v.coeffs)) spanning[v.degree].push_back(std::move(v.coeffs));
          }
        }
      }
    }
  }
  std::vector<Subspace> ideal(cap + 1);
  for (int n = 0; n <= cap; ++n) ideal[n] = Subspace::span(dga.dim(n), std::move(spanning[n]));
  for (int n = 0; n < cap; ++n) {
    for (const auto& v : ideal[n].basis()) {
      HVec dv = dga.differential(HVec{n, v});
      if (!ideal[n + 1].contains(dv.coeffs)) {
        throw ValidationError("ideal is not closed under d: in degree " + std::to_string(n) + ", d(" +
                              dga.describe(HVec{n, v}) + ") = " + dga.describe(dv) + " escapes the ideal");
      }
    }
  }

  // Survivors are the non-pivot monomials; projection reduces by the ideal.
  std::vector<std::vector<std::size_t>> survivors(cap + 1);
  Dga out;
  out.commutative_ = dga.commutative_;
  out.generators_ = dga.generators_;
  out.space_ = GradedVectorSpace(cap);
  for (int n = 0; n <= cap; ++n) {
    std::vector<bool> pivot(dga.dim(n), false);
    for (auto p : ideal[n].pivots()) pivot[p] = true;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < dga.dim(n); ++i) {
      if (!pivot[i]) {
        survivors[n].push_back(i);
        names.push_back(dga.space().names(n)[i]);
      }
    }
    out.space_.set_names(n, std::move(names));
  }
  auto project = [&](const HVec& v) {
    Vec reduced = ideal[v.degree].reduce(v.coeffs);
    HVec p = zero_hvec(out.space_, v.degree);
    for (std::size_t k = 0; k < survivors[v.degree].size(); ++k) p.coeffs[k] = reduced[survivors[v.degree][k]];
    return p;
  };
  auto lift = [&](int n, std::size_t k) { return dga.basis_element(n, survivors[n][k]); };

  out.table_.assign(cap + 1, {});
  for (int p = 0; p <= cap; ++p) {
    out.table_[p].assign(cap + 1 - p, {});
    for (int q = 0; p + q <= cap; ++q) {
      auto& block = out.table_[p][q];
      block.assign(out.dim(p), std::vector<SparseVec>(out.dim(q)));
      for (std::size_t i = 0; i < out.dim(p); ++i) {
        for (std::size_t j = 0; j < out.dim(q); ++j) {
          HVec prod = project(dga.multiply(lift(p, i), lift(q, j)));
          for (std::size_t k = 0; k < prod.coeffs.size(); ++k) {
            if (!is_zero(prod.coeffs[k])) block[i][j].emplace_back(k, prod.coeffs[k]);
          }
        }
      }
    }
  }
  out.d_ = GradedMap(out.space_, out.space_, 1);
  for (int n = 0; n < cap; ++n) {
    Matrix m(out.dim(n + 1), out.dim(n));
    for (std::size_t k = 0; k < out.dim(n); ++k) {
      HVec dv = project(dga.differential(lift(n, k)));
      for (std::size_t r = 0; r < dv.coeffs.size(); ++r) m.at(r, k) = dv.coeffs[r];
    }
    out.d_.set_matrix(n, std::move(m));
  }
  for (const auto& [name, v] : dga.generator_elements_) out.generator_elements_[name] = project(v);
  return out;
}

// ---------------------------------------------------------------------------
// Validation

ValidationReport validate_dga(const Dga& dga) {
  ValidationReport report;
  const int cap = dga.degree_cap();
  const auto& names = [&](int n, std::size_t i) { return dga.space().names(n)[i]; };

  for (int n = 0; n + 2 <= cap; ++n) {
    for (std::size_t i = 0; i < dga.dim(n); ++i) {
      HVec dd = dga.differential(dga.differential(dga.basis_element(n, i)));
      if (!is_zero(dd.coeffs)) report.violations.push_back({"d^2", "d^2(" + names(n, i) + ") = " + dga.describe(dd)});
    }
  }

  for (int p = 0; p <= cap; ++p) {
    for (int q = 0; p + q < cap; ++q) {
      for (std::size_t i = 0; i < dga.dim(p); ++i) {
        HVec a = dga.basis_element(p, i);
        HVec da = dga.differential(a);
        for (std::size_t j = 0; j < dga.dim(q); ++j) {
          HVec b = dga.basis_element(q, j);
          HVec lhs = dga.differential(dga.multiply(a, b));
          HVec rhs = dga.multiply(da, b);
          HVec adb = dga.multiply(a, dga.differential(b));
          axpy(rhs.coeffs, p % 2 == 0 ? Rational(1) : Rational(-1), adb.coeffs);
          if (lhs != rhs) {
            report.violations.push_back({"leibniz", "(" + names(p, i) + ", " + names(q, j) + "): residual " +
                                                        dga.describe(HVec{p + q + 1, lhs.coeffs - rhs.coeffs})});
          }
        }
      }
    }
  }

  for (int p = 0; p <= cap; ++p) {
    for (int q = 0; p + q <= cap; ++q) {
      for (int r = 0; p + q + r <= cap; ++r) {
        for (std::size_t i = 0; i < dga.dim(p); ++i) {
          for (std::size_t j = 0; j < dga.dim(q); ++j) {
            HVec ab = dga.multiply(dga.basis_element(p, i), dga.basis_element(q, j));
            for (std::size_t k = 0; k < dga.dim(r); ++k) {
              HVec c = dga.basis_element(r, k);
              HVec left = dga.multiply(ab, c);
              HVec right = dga.multiply(dga.basis_element(p, i), dga.multiply(dga.basis_element(q, j), c));
              if (left != right) {
                report.violations.push_back(
                    {"associativity", "(" + names(p, i) + ", " + names(q, j) + ", " + names(r, k) + ")"});
              }
            }
          }
        }
      }
    }
  }

  if (dga.dim(0) != 1) {
    report.violations.push_back({"unit", "degree 0 has dimension " + std::to_string(dga.dim(0))});
  } else {
    HVec one = dga.unit();
    for (int n = 0; n <= cap; ++n) {
      for (std::size_t i = 0; i < dga.dim(n); ++i) {
        HVec a = dga.basis_element(n, i);
        if (dga.multiply(one, a) != a || dga.multiply(a, one) != a) {
          report.violations.push_back({"unit", "1 * " + names(n, i)});
        }
      }
    }
  }

  if (dga.commutative()) {
    for (int p = 0; p <= cap; ++p) {
      for (int q = p; p + q <= cap; ++q) {
        for (std::size_t i = 0; i < dga.dim(p); ++i) {
          for (std::size_t j = 0; j < dga.dim(q); ++j) {
            HVec ab = dga.multiply(dga.basis_element(p, i), dga.basis_element(q, j));
            HVec ba = dga.multiply(dga.basis_element(q, j), dga.basis_element(p, i));
            if ((p * q) % 2 != 0) ba.coeffs = Rational(-1) * ba.coeffs;
            if (ab != ba) {
              report.violations.push_back({"commutativity", "(" + names(p, i) + ", " + names(q, j) + ")"});
            }
          }
        }
      }
    }
  }
  return report;
}

HVec bar_involution(const HVec& v) {
  if (v.degree % 2 != 0) return v;
  return HVec{v.degree, Rational(-1) * v.coeffs};
}

PolyVec bar_involution(int degree, PolyVec v) {
  if (degree % 2 != 0) return v;
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace ainf
