#include "ainf/massey.hpp"

#include "ainf/errors.hpp"

#include <algorithm>
#include <random>

namespace ainf {

// ---------------------------------------------------------------------------
// Defining systems

int DefiningSystem::entry_degree(int i, int j) const {
  int d = 0;
  for (int k = i + 1; k <= j; ++k) d += degree(k);
  return d - (j - i - 1);
}

const PolyVec& DefiningSystem::a(int i, int j) const {
  auto it = entries.find({i, j});
  if (it == entries.end()) {
    throw Error("defining system has no entry a_" + std::to_string(i) + std::to_string(j));
  }
  return it->second;
}

bool DefiningSystem::concrete() const {
  for (const auto& [key, v] : entries) {
    if (!is_constant(v)) return false;
  }
  return true;
}

Vec DefiningSystem::concrete_entry(int i, int j) const {
  const PolyVec& v = a(i, j);
  if (!is_constant(v)) throw Error("entry a_" + std::to_string(i) + std::to_string(j) + " depends on parameters");
  return constant_part(v);
}

PolyVec defining_product(const Dga& dga, const DefiningSystem& ds, int i, int j) {
  const int degree = ds.entry_degree(i, j) + 1;
  PolyVec out(dga.dim(degree));
  for (int k = i + 1; k < j; ++k) {
    const int p = ds.entry_degree(i, k);
    const int q = ds.entry_degree(k, j);
    out = out + dga.multiply(p, bar_involution(p, ds.a(i, k)), q, ds.a(k, j));
  }
  return out;
}

std::optional<DefiningSystemFailure> check_defining_system(const Dga& dga, const Cohomology& h,
                                                           const DefiningSystem& ds) {
  const int n = ds.size();
  for (int i = 0; i < n; ++i) {
    const int deg = ds.degree(i + 1);
    const PolyVec& a = ds.a(i, i + 1);
    if (!is_constant(a)) return DefiningSystemFailure{i, i + 1, "representative depends on parameters"};
    Vec v = constant_part(a);
    auto cls = h.class_of(deg, v);
    if (!cls) return DefiningSystemFailure{i, i + 1, "not a cocycle: d = " + dga.describe(dga.differential(HVec{deg, v}))};
    if (*cls != ds.classes[i].coeffs) {
      return DefiningSystemFailure{i, i + 1, "represents " + to_string(*cls) + " instead of x_" + std::to_string(i + 1)};
    }
  }
  for (int len = 2; len < n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      const int deg = ds.entry_degree(i, j);
      PolyVec lhs = dga.differential(deg, ds.a(i, j));
      PolyVec rhs = defining_product(dga, ds, i, j);
      PolyVec diff = lhs + scale(PolyQ(-1), rhs);
      if (!is_zero(diff)) return DefiningSystemFailure{i, j, "d(a_ij) - sum = " + dga.describe(deg + 1, diff)};
    }
  }
  return std::nullopt;
}

PolyVec defining_system_value(const Dga& dga, const DefiningSystem& ds) {
  return defining_product(dga, ds, 0, ds.size());
}


// ---------------------------------------------------------------------------
// Signs, cup products and indeterminacy

MasseySigns massey_signs(const std::vector<int>& degrees) {
  MasseySigns s;
  s.n = static_cast<int>(degrees.size());
  s.degrees = degrees;
  long adapted = 1;
  for (int t = s.n - 1; t >= 1; t -= 2) adapted += degrees[t - 1];
  long general = 0;
  for (int j = 1; j < s.n; ++j) general += static_cast<long>(s.n - j) * degrees[j - 1];
  s.adapted = adapted % 2 == 0 ? 1 : -1;
  s.general = general % 2 == 0 ? 1 : -1;
  return s;
}

namespace {

void require_class_degree(const Cohomology& h, int degree, const char* what) {
  if (degree > h.top_degree()) {
    throw CapError(std::string(what) + " lands in degree " + std::to_string(degree), degree + 1);
  }
}

}  // namespace

HVec cup_product(const Dga& dga, const Cohomology& h, const HVec& x, const HVec& y) {
  const int degree = x.degree + y.degree;
  if (degree < 0) return HVec{degree, {}};
  require_class_degree(h, degree, "cup product");
  HVec prod = dga.multiply(h.representative(x), h.representative(y));
  return HVec{degree, *h.class_of(degree, prod.coeffs)};
}

Subspace indeterminacy(const Dga& dga, const Cohomology& h, const HVec& x1, const HVec& x2, const HVec& x3) {
  const int degree = x1.degree + x2.degree + x3.degree - 1;
  require_class_degree(h, degree, "indeterminacy");
  std::vector<Vec> span;
  auto add = [&](int mid, bool left) {
    if (mid < 0) return;
    for (std::size_t t = 0; t < h.dim(mid); ++t) {
      HVec e{mid, unit_vector(h.dim(mid), t)};
      span.push_back((left ? cup_product(dga, h, x1, e) : cup_product(dga, h, e, x3)).coeffs);
    }
  };
  add(x2.degree + x3.degree - 1, true);
  add(x1.degree + x2.degree - 1, false);
  return Subspace::span(h.dim(degree), std::move(span));
}

// ---------------------------------------------------------------------------
// Set descriptors

std::string to_string(MasseyKind kind) {
  switch (kind) {
    case MasseyKind::Empty: return "empty";
    case MasseyKind::Coset: return "coset";
    case MasseyKind::PolynomialImage: return "polynomial-image";
    case MasseyKind::Unresolved: return "unresolved";
  }
  return "?";
}

Membership MasseySetDescriptor::contains(const Vec& h) const {
  switch (kind) {
    case MasseyKind::Empty:
      return Membership::No;
    case MasseyKind::Coset:
      return directions.contains(h - base) ? Membership::Yes : Membership::No;
    case MasseyKind::PolynomialImage: {
      // Relax every nonconstant parameter monomial to an independent unknown:
      // infeasibility of the relaxation proves h is not in the image.
      std::vector<ParamMonomial> monomials;
      for (const PolyQ& p : value) {
        for (const auto& [m, c] : p.terms()) {
          if (!m.empty() && std::find(monomials.begin(), monomials.end(), m) == monomials.end()) monomials.push_back(m);
        }
      }
      std::vector<Vec> columns;
      for (const auto& m : monomials) {
        Vec col(value.size());
        for (std::size_t r = 0; r < value.size(); ++r) {
          auto it = value[r].terms().find(m);
          if (it != value[r].terms().end()) col[r] = it->second;
        }
        columns.push_back(col);
      }
      Vec target = h;
      for (std::size_t r = 0; r < value.size(); ++r) target[r] -= value[r].constant_term();
      if (!Subspace::span(value.size(), columns).contains(target)) return Membership::No;
      for (const Vec& s : samples) {
        if (s == h) return Membership::Yes;
      }
      return Membership::Unknown;
    }
    case MasseyKind::Unresolved:
      for (const Vec& s : samples) {
        if (s == h) return Membership::Yes;
      }
      return Membership::Unknown;
  }
  return Membership::Unknown;
}

MasseySetDescriptor triple_massey(const Dga& dga, const Cohomology& h, const HVec& x1, const HVec& x2,
                                  const HVec& x3) {
  MasseySetDescriptor out;
  out.degree = x1.degree + x2.degree + x3.degree - 1;
  require_class_degree(h, out.degree, "triple Massey product");
  if (!is_zero(cup_product(dga, h, x1, x2).coeffs)) {
    out.reason = "x1 x2 != 0";
    return out;
  }
  if (!is_zero(cup_product(dga, h, x2, x3).coeffs)) {
    out.reason = "x2 x3 != 0";
    return out;
  }
  const HVec a01 = h.representative(x1);
  const HVec a12 = h.representative(x2);
  const HVec a23 = h.representative(x3);
  auto preimage = [&](const HVec& target) {
    auto v = solve_preimage(dga.d(), target.degree - 1, target.coeffs);
    return HVec{target.degree - 1, *v};
  };
  const HVec a02 = preimage(dga.multiply(bar_involution(a01), a12));
  const HVec a13 = preimage(dga.multiply(bar_involution(a12), a23));
  const Vec value = dga.multiply(bar_involution(a01), a13).coeffs + dga.multiply(bar_involution(a02), a23).coeffs;
  out.kind = MasseyKind::Coset;
  out.base = *h.class_of(out.degree, value);
  out.directions = indeterminacy(dga, h, x1, x2, x3);
  return out;
}


// ---------------------------------------------------------------------------
// Higher Massey products

namespace {

std::string param_name(int i, int j, std::size_t t) {
  return "p_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t + 1);
}

PolyVec substitute(const PolyVec& v, const std::map<std::string, PolyQ>& replacement) {
  PolyVec out;
  out.reserve(v.size());
  for (const PolyQ& p : v) out.push_back(poly_compose(p, replacement));
  return out;
}

// Class coordinates of a cocycle with polynomial coefficients.
PolyVec class_of_poly(const Cohomology& h, int degree, const PolyVec& v) {
  PolyVec out(h.dim(degree));
  for (const auto& [mono, vec] : split_by_monomial(v)) {
    auto cls = h.class_of(degree, vec);
    if (!cls) throw Error("Massey value is not a cocycle in degree " + std::to_string(degree));
    for (std::size_t c = 0; c < out.size(); ++c) {
      if ((*cls)[c] != 0) out[c] += PolyQ::term((*cls)[c], mono);
    }
  }
  return out;
}

void check_entry_degree(const Dga& dga, const Cohomology& h, int degree, int i, int j) {
  if (degree > h.top_degree() || degree >= dga.degree_cap()) {
    throw CapError("defining system entry a_" + std::to_string(i) + "_" + std::to_string(j) + " has degree " +
                       std::to_string(degree),
                   degree + 1);
  }
}

struct Builder {
  const Dga& dga;
  const Cohomology& h;
  DefiningSystem ds;

  enum class Step { Ok, Empty, Unresolved };
  std::string reason;

  // Restricts the parameters so that rhs becomes exact; rhs lives in `degree`.
  Step restrict_to_exact(int i, int j, int degree, const PolyVec& rhs) {
    const Subspace exact = image(dga.d(), degree - 1);
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < ds.parameters.size(); ++k) index[ds.parameters[k]] = k;
    const std::size_t width = ds.parameters.size() + 1;
    std::vector<Vec> rows(rhs.size(), Vec(width));
    PolyVec obstruction(rhs.size());
    bool any = false;
    for (const auto& [mono, vec] : split_by_monomial(rhs)) {
      Vec r = exact.reduce(vec);
      if (is_zero(r)) continue;
      any = true;
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (r[c] != 0) obstruction[c] += PolyQ::term(r[c], mono);
      }
      if (total_degree(mono) >= 2) continue;
      const std::size_t col = mono.empty() ? width - 1 : index.at(mono.front().first);
      for (std::size_t c = 0; c < r.size(); ++c) rows[c][col] += r[c];
    }
    if (!any) return Step::Ok;
    const std::string where = "a_" + std::to_string(i) + "_" + std::to_string(j);
    for (const PolyQ& p : obstruction) {
      if (p.degree() >= 2) {
        reason = "nonlinear obstruction for " + where + ": " + dga.describe(degree, obstruction) + " modulo exact";
        return Step::Unresolved;
      }
    }
    Echelon e = echelonize(rows, width);
    std::map<std::string, PolyQ> replacement;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (e.pivots[r] == width - 1) {
        reason = "no defining system: " + where + " has no solution";
        return Step::Empty;
      }
      PolyQ value = PolyQ(-e.rows[r][width - 1]);
      for (std::size_t c = e.pivots[r] + 1; c + 1 < width; ++c) {
        if (e.rows[r][c] != 0) value -= e.rows[r][c] * PolyQ::parameter(ds.parameters[c]);
      }
      replacement[ds.parameters[e.pivots[r]]] = value;
    }
    for (auto& [key, v] : ds.entries) v = substitute(v, replacement);
    std::vector<std::string> kept;
    for (const auto& p : ds.parameters) {
      if (!replacement.count(p)) kept.push_back(p);
    }
    ds.parameters = std::move(kept);
    return Step::Ok;
  }

  Step extend(int i, int j, bool with_parameters) {
    const int degree = ds.entry_degree(i, j);
    check_entry_degree(dga, h, degree, i, j);
    PolyVec rhs = defining_product(dga, ds, i, j);
    Step step = restrict_to_exact(i, j, degree + 1, rhs);
    if (step != Step::Ok) return step;
    rhs = defining_product(dga, ds, i, j);
    auto solved = LinearSolver(dga.d().matrix(degree)).solve(rhs);
    if (!solved.solution) throw Error("internal: exact right-hand side without preimage");
    PolyVec a = *solved.solution;
    if (with_parameters) {
      const auto& z = h.cocycles(degree).basis();
      for (std::size_t t = 0; t < z.size(); ++t) {
        const std::string name = param_name(i, j, t);
        ds.parameters.push_back(name);
        a = a + scale(PolyQ::parameter(name), to_poly(z[t]));
      }
    }
    ds.entries[{i, j}] = std::move(a);
    return Step::Ok;
  }

  Step run(bool with_parameters) {
    const int n = ds.size();
    for (int len = 2; len < n; ++len) {
      for (int i = 0; i + len <= n; ++i) {
        Step step = extend(i, i + len, with_parameters);
        if (step != Step::Ok) return step;
      }
    }
    // The value must be a cocycle class; its obstruction to existence is none.
    return Step::Ok;
  }
};

DefiningSystem initial_system(const Cohomology& h, const std::vector<HVec>& classes) {
  DefiningSystem ds;
  ds.classes = classes;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    ds.entries[{static_cast<int>(k), static_cast<int>(k) + 1}] = to_poly(h.representative(classes[k]).coeffs);
  }
  return ds;
}

// Classifies the value family: constant or affine values give a coset.
void classify(MasseySetDescriptor& out) {
  bool affine = true;
  for (const PolyQ& p : out.value) affine = affine && p.degree() <= 1;
  out.parameters = out.system->parameters;
  if (!affine) {
    out.kind = MasseyKind::PolynomialImage;
    return;
  }
  out.kind = MasseyKind::Coset;
  out.base = Vec(out.value.size());
  std::map<std::string, Vec> directions;
  for (std::size_t c = 0; c < out.value.size(); ++c) {
    PolyDecomposition d = poly_decompose(out.value[c]);
    out.base[c] = d.constant;
    for (const auto& [name, coeff] : d.linear) {
      auto [it, fresh] = directions.try_emplace(name, Vec(out.value.size()));
      it->second[c] = coeff;
    }
  }
  std::vector<Vec> span;
  for (auto& [name, v] : directions) span.push_back(std::move(v));
  out.directions = Subspace::span(out.value.size(), std::move(span));
}

Vec value_at(const Dga& dga, const Cohomology& h, const DefiningSystem& ds, int degree) {
  return constant_part(class_of_poly(h, degree, defining_system_value(dga, ds)));
}

}  // namespace


DefiningSystem specialize(const DefiningSystem& ds, const std::map<std::string, Rational>& assignment) {
  std::map<std::string, PolyQ> replacement;
  for (const auto& [name, value] : assignment) replacement[name] = PolyQ(value);
  DefiningSystem out = ds;
  for (auto& [key, v] : out.entries) v = substitute(v, replacement);
  out.parameters.clear();
  for (const auto& p : ds.parameters) {
    if (!assignment.count(p)) out.parameters.push_back(p);
  }
  return out;
}

MasseySetDescriptor higher_massey(const Dga& dga, const Cohomology& h, const std::vector<HVec>& classes,
                                  const MasseyOptions& options) {
  const int n = static_cast<int>(classes.size());
  if (n < 3) throw ValidationError("Massey products need at least three classes");
  MasseySetDescriptor out;
  out.degree = 2 - n;
  for (const HVec& x : classes) out.degree += x.degree;
  require_class_degree(h, out.degree, "Massey product");

  Builder builder{dga, h, initial_system(h, classes), {}};
  const Builder::Step step = builder.run(true);
  if (step == Builder::Step::Empty) {
    out.kind = MasseyKind::Empty;
    out.reason = builder.reason;
    return out;
  }
  std::mt19937_64 rng(options.seed);
  auto small = [&]() { return Rational(static_cast<long>(rng() % 7) - 3); };

  if (step == Builder::Step::Unresolved) {
    out.kind = MasseyKind::Unresolved;
    out.reason = builder.reason;
    if (options.mode != MasseyMode::Sampled) return out;
    // Random search over concrete systems: pick random cocycle shifts level by level.
    for (int attempt = 0; attempt < 4 * options.samples; ++attempt) {
      Builder concrete{dga, h, initial_system(h, classes), {}};
      bool ok = true;
      for (int len = 2; len < n && ok; ++len) {
        for (int i = 0; i + len <= n && ok; ++i) {
          ok = concrete.extend(i, i + len, false) == Builder::Step::Ok;
          if (!ok) break;
          const int degree = concrete.ds.entry_degree(i, i + len);
          Vec shift(dga.dim(degree));
          for (const auto& z : h.cocycles(degree).basis()) axpy(shift, small(), z);
          concrete.ds.entries[{i, i + len}] = concrete.ds.entries[{i, i + len}] + to_poly(shift);
        }
      }
      if (!ok) continue;
      Vec v = value_at(dga, h, concrete.ds, out.degree);
      if (std::find(out.samples.begin(), out.samples.end(), v) == out.samples.end()) out.samples.push_back(v);
    }
    return out;
  }

  out.system = builder.ds;
  out.value = class_of_poly(h, out.degree, defining_system_value(dga, builder.ds));
  if (options.mode == MasseyMode::Canonical) {
    std::map<std::string, Rational> zeros;
    for (const auto& p : builder.ds.parameters) zeros[p] = 0;
    out.system = specialize(builder.ds, zeros);
    out.value = to_poly(value_at(dga, h, *out.system, out.degree));
  }
  classify(out);
  if (options.mode == MasseyMode::Sampled) {
    for (int k = 0; k < options.samples; ++k) {
      std::map<std::string, Rational> assignment;
      for (const auto& p : out.parameters) assignment[p] = small();
      Vec v(out.value.size());
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = poly_substitute(out.value[c], assignment);
      if (std::find(out.samples.begin(), out.samples.end(), v) == out.samples.end()) out.samples.push_back(v);
    }
  }
  return out;
}


// ---------------------------------------------------------------------------
// Contractions and defining systems

CanonicalSystemResult defining_system_canonical(LambdaCache& cache, const std::vector<HVec>& classes) {
  const Contraction& c = cache.contraction();
  const int n = static_cast<int>(classes.size());
  CanonicalSystemResult out;
  out.system.classes = classes;
  for (int k = 0; k < n; ++k) out.system.entries[{k, k + 1}] = to_poly(c.i(classes[k]).coeffs);
  for (int len = 2; len < n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      const int j = i + len;
      long b = 1;
      for (int t = j - 1; t > i; t -= 2) b += classes[t - 1].degree;
      std::vector<HVec> args(classes.begin() + i, classes.begin() + j);
      HVec v = cache.k_lambda(args);
      out.system.entries[{i, j}] = to_poly(b % 2 == 0 ? v.coeffs : Rational(-1) * v.coeffs);
    }
  }
  out.failure = check_defining_system(c.dga(), c.cohomology(), out.system);
  return out;
}

AdaptedCheck is_adapted(const Contraction& c, const DefiningSystem& ds) {
  const Decomposition dec = contraction_to_decomposition(c);
  const int n = ds.size();
  for (int j = 1; j <= n; ++j) {
    if (ds.concrete_entry(j - 1, j) != c.i(ds.classes[j - 1]).coeffs) {
      return {false, "a_" + std::to_string(j - 1) + "_" + std::to_string(j) + " != i(x_" + std::to_string(j) + ")"};
    }
  }
  for (int len = 2; len < n; ++len) {
    for (int i = 0; i + len <= n; ++i) {
      const int degree = ds.entry_degree(i, i + len);
      if (degree >= static_cast<int>(dec.B.size())) throw CapError("entry beyond the decomposition", degree + 1);
      if (!dec.B[degree].contains(ds.concrete_entry(i, i + len))) {
        return {false, "a_" + std::to_string(i) + "_" + std::to_string(i + len) + " not in B^" + std::to_string(degree)};
      }
    }
  }
  return {true, {}};
}

Decomposition adapted_decomposition(const Dga& dga, const DefiningSystem& ds) {
  const int cap = dga.degree_cap();
  const int n = ds.size();
  std::map<int, std::vector<Vec>> higher;
  std::map<int, std::vector<Vec>> reps;
  std::map<int, std::vector<std::string>> higher_names;
  std::map<int, std::vector<std::string>> rep_names;
  for (const auto& [key, v] : ds.entries) {
    const auto [i, j] = key;
    const int degree = ds.entry_degree(i, j);
    if (degree >= cap) throw CapError("defining system entry beyond the degree cap", degree + 1);
    const std::string name = "a_" + std::to_string(i) + "_" + std::to_string(j);
    if (j - i == 1) {
      reps[degree].push_back(ds.concrete_entry(i, j));
      rep_names[degree].push_back(name);
    } else if (j - i < n) {
      higher[degree].push_back(ds.concrete_entry(i, j));
      higher_names[degree].push_back(name);
    }
  }
  auto join = [](const std::vector<std::string>& names) {
    std::string out;
    for (const auto& s : names) out += (out.empty() ? "" : ", ") + s;
    return out;
  };
  auto combine = [](const Subspace& a, const Subspace& b) {
    std::vector<Vec> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), std::move(all));
  };

  Decomposition dec;
  for (int d = 0; d < cap; ++d) {
    const Subspace cocycles = kernel(dga.d(), d);
    const std::vector<Vec>& h = higher[d];
    const Subspace s = Subspace::span(dga.dim(d), h);
    if ((cocycles + s).dim() != cocycles.dim() + s.dim()) {
      throw ValidationError("entries " + join(higher_names[d]) + " span a subspace meeting the cocycles in degree " +
                            std::to_string(d));
    }
    dec.B.push_back(combine(s, choose_complement(cocycles + s, Subspace::full(dga.dim(d)))));
  }
  dec.dB.emplace_back(dga.dim(0));
  for (int d = 0; d < cap; ++d) {
    std::vector<Vec> images;
    for (const Vec& b : dec.B[d].basis()) images.push_back(dga.d().matrix(d).apply(b));
    dec.dB.push_back(Subspace::span(dga.dim(d + 1), std::move(images)));
  }
  for (int d = 0; d < cap; ++d) {
    const Subspace cocycles = kernel(dga.d(), d);
    const std::vector<Vec>& r = reps[d];
    const Subspace s = Subspace::span(dga.dim(d), r);
    if ((dec.dB[d] + s).dim() != dec.dB[d].dim() + s.dim()) {
      throw ValidationError("representatives " + join(rep_names[d]) + " span a subspace meeting the coboundaries in degree " +
                            std::to_string(d));
    }
    dec.C.push_back(combine(s, choose_complement(dec.dB[d] + s, cocycles)));
  }
  return dec;
}

Contraction build_adapted_contraction(const Dga& dga, const DefiningSystem& ds) {
  return contraction_from_decomposition(dga, adapted_decomposition(dga, ds));
}

// ---------------------------------------------------------------------------
// Recovery

Subspace lower_image_span(const AInfinityStructure& a, int max_arity, int degree) {
  std::vector<Vec> values;
  for (int k = 2; k <= std::min(max_arity, a.arity_cap()); ++k) {
    for (const auto& [w, v] : a.entries(k)) {
      if (a.output_degree(w) == degree) values.push_back(v);
    }
  }
  return Subspace::span(a.space().dim(degree), std::move(values));
}

bool check_vanishing_hypothesis(const AInfinityStructure& a, int upto) {
  if (upto > a.arity_cap()) throw Error("structure is only known up to arity " + std::to_string(a.arity_cap()));
  for (int k = 2; k <= upto; ++k) {
    if (!a.vanishes(k)) return false;
  }
  return true;
}

RecoveryVerdict verify_recovery(const AInfinityStructure& a, const std::vector<HVec>& classes,
                                const MasseySetDescriptor& set, const std::optional<Vec>& element) {
  RecoveryVerdict out;
  const int n = static_cast<int>(classes.size());
  out.mn = evaluate(a, classes);
  for (int sign : {1, -1}) {
    const Vec v = Rational(sign) * out.mn.coeffs;
    const Membership m = set.contains(v);
    if (m == Membership::Yes) out.signs.push_back(sign);
    if (m == Membership::Unknown) out.undecided = true;
    if (element && v == *element) out.recovers = true;
  }
  out.detects = !out.signs.empty();
  if (!element) out.recovers = out.detects && set.single_point();

  switch (set.kind) {
    case MasseyKind::Empty:
      out.gamma_check = false;
      break;
    case MasseyKind::Coset: {
      const Subspace allowed = lower_image_span(a, n - 1, set.degree) + set.directions;
      for (int sign : {1, -1}) {
        Vec gamma = Rational(sign) * out.mn.coeffs - set.base;
        if (allowed.contains(gamma)) {
          out.gamma_signs.push_back(sign);
          out.gammas.push_back(std::move(gamma));
        }
      }
      out.gamma_check = !out.gamma_signs.empty();
      break;
    }
    case MasseyKind::PolynomialImage:
    case MasseyKind::Unresolved:
      break;
  }
  return out;
}

}  // namespace ainf
