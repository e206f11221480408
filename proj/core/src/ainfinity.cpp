#include "ainf/ainfinity.hpp"

#include "ainf/errors.hpp"

#include <functional>
#include <numeric>

namespace ainf {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

std::string describe(const GradedVectorSpace& space, int degree, const Vec& v) {
  std::string out;
  const auto& names = space.names(degree);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    if (!out.empty()) out += " + ";
    out += (v[k] == 1 ? std::string() : to_string(v[k]) + "*") + (k < names.size() ? names[k] : "e" + std::to_string(k));
  }
  return out.empty() ? "0" : out;
}

// Sign of the term m_{r+1+t}(1^r (x) m_s (x) 1^t) in the structure identity.
int structure_sign(StasheffSign c, int r, int s, int t) {
  if (c == StasheffSign::RPlusST) return parity_sign(r + s * t);
  return parity_sign(s + r + s * r);
}

// Sign of m_q(f_{i_1} (x) ... (x) f_{i_q}) in the morphism identity.
int composition_sign(const std::vector<int>& parts) {
  long e = 0;
  const int q = static_cast<int>(parts.size());
  for (int j = 0; j < q; ++j) e += static_cast<long>(q - 1 - j) * (parts[j] - 1);
  return parity_sign(e);
}

void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      fn(parts);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p);
      parts.pop_back();
    }
  };
  rec(n);
}

// Accumulates sign * phi(prefix, v, suffix) into acc by linearity in the middle
// slot. Returns false when a needed value is unknown.
bool accumulate_slot(const MultilinearFamily& phi, const Word& prefix, const HVec& v, const Word& suffix, int sign,
                     Vec& acc) {
  Word w = prefix;
  w.push_back({v.degree, 0});
  w.insert(w.end(), suffix.begin(), suffix.end());
  const std::size_t slot = prefix.size();
  for (std::size_t j = 0; j < v.coeffs.size(); ++j) {
    if (is_zero(v.coeffs[j])) continue;
    w[slot].index = j;
    auto val = phi.value(w);
    if (!val) return false;
    if (val->size() != acc.size()) return false;
    axpy(acc, sign * v.coeffs[j], *val);
  }
  return true;
}

}  // namespace

int word_degree(std::span<const BasisKey> w) {
  int d = 0;
  for (const auto& k : w) d += k.degree;
  return d;
}

int word_degree(const Word& w) { return word_degree(std::span<const BasisKey>(w)); }

std::string to_string(const Word& w, const GradedVectorSpace& space) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ", ";
    const auto& names = space.names(w[k].degree);
    out += w[k].index < names.size() ? names[w[k].index] : "?";
  }
  return out + ")";
}

int koszul_sign(std::span<const int> map_degrees, std::span<const int> block_degrees) {
  if (map_degrees.size() != block_degrees.size()) throw DimensionError("koszul_sign: size mismatch");
  long e = 0;
  long before = 0;
  for (std::size_t j = 0; j < map_degrees.size(); ++j) {
    e += static_cast<long>(map_degrees[j]) * before;
    before += block_degrees[j];
  }
  return parity_sign(e < 0 ? -e : e);
}

// ---------------------------------------------------------------------------

MultilinearFamily::MultilinearFamily(GradedVectorSpace source, GradedVectorSpace target, int base_shift, int arity_cap,
                                     int top_degree, bool higher_vanish)
    : source_(std::move(source)),
      target_(std::move(target)),
      base_shift_(base_shift),
      arity_cap_(arity_cap),
      top_degree_(top_degree),
      higher_vanish_(higher_vanish),
      ops_(static_cast<std::size_t>(std::max(arity_cap, 0)) + 1) {}

bool MultilinearFamily::known(const Word& w) const {
  const int k = static_cast<int>(w.size());
  if (k < 1) return false;
  for (const auto& key : w) {
    if (!source_.in_range(key.degree) || key.index >= source_.dim(key.degree)) return false;
  }
  if (k > arity_cap_) return higher_vanish_;
  return output_degree(w) <= top_degree_;
}

std::optional<Vec> MultilinearFamily::value(const Word& w) const {
  if (!known(w)) return std::nullopt;
  const int out = output_degree(w);
  const int k = static_cast<int>(w.size());
  if (k <= arity_cap_) {
    auto it = ops_[k].find(w);
    if (it != ops_[k].end()) return it->second;
  }
  return Vec(target_.dim(out));
}

void MultilinearFamily::set(const Word& w, Vec v) {
  const int k = static_cast<int>(w.size());
  if (k < 1 || k > arity_cap_) throw DimensionError("arity " + std::to_string(k) + " outside the stored range");
  const int out = output_degree(w);
  if (v.size() != target_.dim(out)) throw DimensionError("value has the wrong dimension for degree " + std::to_string(out));
  if (is_zero(v)) {
    ops_[k].erase(w);
  } else {
    ops_[k][w] = std::move(v);
  }
}

const std::map<Word, Vec>& MultilinearFamily::entries(int k) const {
  static const std::map<Word, Vec> empty;
  if (k < 1 || k > arity_cap_) return empty;
  return ops_[k];
}

bool MultilinearFamily::vanishes(int k) const {
  if (k > arity_cap_) return higher_vanish_;
  return k < 1 || ops_[k].empty();
}

std::optional<HVec> MultilinearFamily::apply(const std::vector<HVec>& args) const {
  const int k = static_cast<int>(args.size());
  if (k < 1) throw DimensionError("cannot apply a map to zero arguments");
  int in = 0;
  for (const auto& a : args) in += a.degree;
  const int out = in + map_degree(k);
  if (k > arity_cap_ ? !higher_vanish_ : out > top_degree_) return std::nullopt;
  HVec result{out, Vec(target_.dim(out))};
  Word w(k);
  std::function<bool(int, Rational)> rec = [&](int pos, Rational coeff) -> bool {
    if (pos == k) {
      auto v = value(w);
      if (!v) return false;
      axpy(result.coeffs, coeff, *v);
      return true;
    }
    for (std::size_t j = 0; j < args[pos].coeffs.size(); ++j) {
      if (is_zero(args[pos].coeffs[j])) continue;
      w[pos] = {args[pos].degree, j};
      if (!rec(pos + 1, coeff * args[pos].coeffs[j])) return false;
    }
    return true;
  };
  if (!rec(0, Rational(1))) return std::nullopt;
  return result;
}

std::vector<Word> MultilinearFamily::words(int k) const {
  std::vector<Word> out;
  if (k < 1) return out;
  // output degree = total + base_shift - k <= top  <=>  total <= top + k - base_shift
  const int budget = top_degree_ + k - base_shift_;
  if (budget < 0) return out;
  Word w;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(w.size()) == k) {
      out.push_back(w);
      return;
    }
    for (int deg = 0; deg <= std::min(left, source_.degree_cap()); ++deg) {
      for (std::size_t j = 0; j < source_.dim(deg); ++j) {
        w.push_back({deg, j});
        rec(left - deg);
        w.pop_back();
      }
    }
  };
  rec(budget);
  return out;
}

// ---------------------------------------------------------------------------

AInfinityStructure dga_as_ainfinity(const Dga& dga) {
  const int cap = dga.degree_cap();
  AInfinityStructure a(dga.space(), 2, cap, true);
  for (int n = 0; n < cap; ++n) {
    for (std::size_t i = 0; i < dga.dim(n); ++i) {
      a.set({{n, i}}, dga.differential(dga.basis_element(n, i)).coeffs);
    }
  }
  for (int p = 0; p <= cap; ++p) {
    for (int q = 0; p + q <= cap; ++q) {
      for (std::size_t i = 0; i < dga.dim(p); ++i) {
        for (std::size_t j = 0; j < dga.dim(q); ++j) {
          Vec v(dga.dim(p + q));
          for (const auto& [k, c] : dga.product(p, i, q, j)) v[k] = c;
          a.set({{p, i}, {q, j}}, std::move(v));
        }
      }
    }
  }
  return a;
}

AInfinityMorphism identity_morphism(std::shared_ptr<const AInfinityStructure> a) {
  const int arity = a->arity_cap();
  const int top = a->top_degree();
  const GradedVectorSpace& space = a->space();
  AInfinityMorphism f(a, a, arity, top);
  for (int n = 0; n <= std::min(top, space.degree_cap()); ++n) {
    for (std::size_t i = 0; i < space.dim(n); ++i) f.set({{n, i}}, unit_vector(space.dim(n), i));
  }
  return f;
}

// ---------------------------------------------------------------------------

IdentityReport check_stasheff(const AInfinityStructure& a, int max_arity, StasheffSign convention) {
  IdentityReport report;
  const bool minimal = a.minimal();
  if (max_arity < 0) max_arity = (minimal || a.higher_vanish()) ? a.arity_cap() + 1 : a.arity_cap();
  const GradedVectorSpace& space = a.space();

  for (int i = 1; i <= max_arity; ++i) {
    // Enumerate words whose identity lands in range: degree = total + 3 - i.
    AInfinityStructure shape(space, i, a.top_degree() - 1);
    for (const Word& w : shape.words(i)) {
      const int D = word_degree(w) + 3 - i;
      if (D < 0) continue;
      Vec residual(space.dim(D));
      bool ok = true;
      std::vector<int> prefix_degree(i + 1, 0);
      for (int v = 0; v < i; ++v) prefix_degree[v + 1] = prefix_degree[v] + w[v].degree;
      for (int s = 1; s <= i && ok; ++s) {
        for (int r = 0; r + s <= i && ok; ++r) {
          const int t = i - s - r;
          if (minimal && (s == 1 || r + 1 + t == 1)) continue;
          Word inner(w.begin() + r, w.begin() + r + s);
          auto val = a.value(inner);
          if (!val) {
            ok = false;
            break;
          }
          if (is_zero(*val)) continue;
          int sign = structure_sign(convention, r, s, t) * parity_sign(static_cast<long>(2 - s) * prefix_degree[r]);
          if (sign == 0) continue;
          Word prefix(w.begin(), w.begin() + r);
          Word suffix(w.begin() + r + s, w.end());
          ok = accumulate_slot(a, prefix, HVec{a.output_degree(inner), *val}, suffix, sign, residual);
        }
      }
      if (!ok) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      if (!is_zero(residual)) report.violations.push_back({i, w, describe(space, D, residual)});
    }
  }
  return report;
}

IdentityReport check_morphism(const AInfinityMorphism& f, int max_arity) {
  IdentityReport report;
  const AInfinityStructure& src = f.source();
  const AInfinityStructure& dst = f.target();
  if (max_arity < 0) max_arity = f.arity_cap();
  const bool src_minimal = src.minimal();
  const int top = std::min(dst.top_degree(), f.top_degree() + 1);

  for (int i = 1; i <= max_arity; ++i) {
    AInfinityStructure shape(src.space(), i, top);
    for (const Word& w : shape.words(i)) {
      const int D = word_degree(w) + 2 - i;
      if (D < 0) continue;
      Vec residual(dst.space().dim(D));
      bool ok = true;
      std::vector<int> prefix_degree(i + 1, 0);
      for (int v = 0; v < i; ++v) prefix_degree[v + 1] = prefix_degree[v] + w[v].degree;

      // f_{r+1+t}(1^r (x) m_s (x) 1^t)
      for (int s = 1; s <= i && ok; ++s) {
        if (src_minimal && s == 1) continue;
        for (int r = 0; r + s <= i && ok; ++r) {
          const int t = i - s - r;
          Word inner(w.begin() + r, w.begin() + r + s);
          auto val = src.value(inner);
          if (!val) {
            ok = false;
            break;
          }
          if (is_zero(*val)) continue;
          int sign = parity_sign(r + s * t) * parity_sign(static_cast<long>(2 - s) * prefix_degree[r]);
          Word prefix(w.begin(), w.begin() + r);
          Word suffix(w.begin() + r + s, w.end());
          ok = accumulate_slot(f, prefix, HVec{src.output_degree(inner), *val}, suffix, sign, residual);
        }
      }

      // - m_q(f_{i_1} (x) ... (x) f_{i_q})
      if (ok) {
        for_each_composition(i, [&](const std::vector<int>& parts) {
          if (!ok) return;
          const int q = static_cast<int>(parts.size());
          if (dst.vanishes(q)) return;
          std::vector<HVec> args;
          std::vector<int> map_degrees;
          std::vector<int> block_degrees;
          bool zero = false;
          bool unknown = false;
          int start = 0;
          for (int u = 0; u < q; ++u) {
            Word block(w.begin() + start, w.begin() + start + parts[u]);
            start += parts[u];
            auto val = f.value(block);
            map_degrees.push_back(1 - parts[u]);
            block_degrees.push_back(word_degree(block));
            if (!val) {
              unknown = true;
              continue;
            }
            if (is_zero(*val)) zero = true;
            args.push_back(HVec{f.output_degree(block), *val});
          }
          if (zero) return;
          if (unknown) {
            ok = false;
            return;
          }
          auto out = dst.apply(args);
          if (!out || out->coeffs.size() != residual.size()) {
            ok = false;
            return;
          }
          int sign = composition_sign(parts) * koszul_sign(map_degrees, block_degrees);
          axpy(residual, Rational(-sign), out->coeffs);
        });
      }
      if (!ok) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      if (!is_zero(residual)) report.violations.push_back({i, w, describe(dst.space(), D, residual)});
    }
  }
  return report;
}

}  // namespace ainf
