#include "ainf/bar.hpp"

#include "ainf/errors.hpp"

namespace ainf {

namespace {

int parity_sign(long e) { return e % 2 == 0 ? 1 : -1; }

// Koszul sign of applying (s^{shift})^{(x)k} to a word whose letters have the given degrees.
int suspension_sign(int map_degree, const std::vector<int>& letter_degrees) {
  std::vector<int> maps(letter_degrees.size(), map_degree);
  return koszul_sign(maps, letter_degrees);
}

std::vector<int> degrees_of(const Word& w, int offset) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& k : w) out.push_back(k.degree + offset);
  return out;
}

int triangular_sign(int k) { return parity_sign(static_cast<long>(k) * (k - 1) / 2); }

std::string describe_chain(const BarSlice::Chain& c, const GradedVectorSpace& space) {
  std::string out;
  int shown = 0;
  for (const auto& [w, coeff] : c) {
    if (coeff == 0) continue;
    if (shown == 4) {
      out += " + ...";
      break;
    }
    out += (out.empty() ? "" : " + ") + to_string(coeff) + "*" + to_string(w, space);
    ++shown;
  }
  return out;
}

}  // namespace

BarSlice::BarSlice(std::shared_ptr<const AInfinityStructure> a, int word_cap)
    : a_(std::move(a)),
      word_cap_(word_cap),
      g_(a_->space(), a_->space(), 2, word_cap, a_->top_degree(), a_->higher_vanish() && word_cap >= a_->arity_cap()) {
  if (word_cap < 1) throw Error("word cap must be positive");
  if (word_cap > a_->arity_cap() && !a_->higher_vanish()) {
    throw Error("word cap " + std::to_string(word_cap) + " exceeds the arity cap " + std::to_string(a_->arity_cap()));
  }
}

std::optional<BarSlice::Chain> BarSlice::delta(const Word& w) const {
  Chain out;
  const int p = static_cast<int>(w.size());
  int prefix = 0;  // suspended degree of w[0..i)
  const bool minimal = g_.vanishes(1);
  for (int i = 0; i < p; ++i) {
    for (int k = 1; i + k <= p; ++k) {
      if (!g_.higher_vanish() && k > word_cap_) return std::nullopt;
      if (k > word_cap_) break;
      if (k == 1 && minimal) continue;
      Word inner(w.begin() + i, w.begin() + i + k);
      auto val = g_.value(inner);
      if (!val) return std::nullopt;
      if (is_zero(*val)) continue;
      const int sign = parity_sign(prefix);  // g_k is odd
      Word out_word(w.begin(), w.begin() + i);
      out_word.push_back({g_.output_degree(inner), 0});
      out_word.insert(out_word.end(), w.begin() + i + k, w.end());
      for (std::size_t j = 0; j < val->size(); ++j) {
        if ((*val)[j] == 0) continue;
        out_word[i].index = j;
        Rational& slot = out[out_word];
        slot += sign * (*val)[j];
        if (slot == 0) out.erase(out_word);
      }
    }
    prefix += suspended_degree(w[i]);
  }
  return out;
}

std::optional<BarSlice::Chain> BarSlice::delta(const Chain& c) const {
  Chain out;
  for (const auto& [w, coeff] : c) {
    auto d = delta(w);
    if (!d) return std::nullopt;
    for (const auto& [v, x] : *d) {
      Rational& slot = out[v];
      slot += coeff * x;
      if (slot == 0) out.erase(v);
    }
  }
  return out;
}

BarSlice build_bar(std::shared_ptr<const AInfinityStructure> a, int word_cap) {
  BarSlice b(a, word_cap);
  for (int k = 1; k <= std::min(word_cap, a->arity_cap()); ++k) {
    for (const auto& [w, v] : a->entries(k)) {
      // (s^{-1})^{(x)k} on suspended letters, then m_k, then s.
      const int sign = triangular_sign(k) * suspension_sign(-1, degrees_of(w, 1));
      b.g().set(w, Rational(sign) * v);
    }
  }
  return b;
}

AInfinityStructure structure_from_bar(const BarSlice& b) {
  const AInfinityStructure& a = b.structure();
  AInfinityStructure out(a.space(), b.word_cap(), a.top_degree(), b.g().higher_vanish());
  for (int k = 1; k <= b.word_cap(); ++k) {
    for (const auto& [w, v] : b.g().entries(k)) {
      // s^{(x)k} on unsuspended letters, then g_k, then s^{-1}.
      const int sign = suspension_sign(1, degrees_of(w, 0));
      out.set(w, Rational(sign) * v);
    }
  }
  return out;
}

IdentityReport check_square_zero(const BarSlice& b, int max_length) {
  IdentityReport report;
  const AInfinityStructure& a = b.structure();
  if (max_length < 0) max_length = b.word_cap();
  for (int p = 1; p <= max_length; ++p) {
    AInfinityStructure shape(a.space(), p, a.top_degree() - 1);
    for (const Word& w : shape.words(p)) {
      auto once = b.delta(w);
      std::optional<BarSlice::Chain> twice;
      if (once) twice = b.delta(*once);
      if (!twice) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      if (!twice->empty()) report.violations.push_back({p, w, describe_chain(*twice, a.space())});
    }
  }
  return report;
}

AInfinityStructure bar_dga_structure(const Dga& dga) {
  AInfinityStructure plain = dga_as_ainfinity(dga);
  AInfinityStructure out(plain.space(), plain.arity_cap(), plain.top_degree(), plain.higher_vanish());
  for (int k = 1; k <= plain.arity_cap(); ++k) {
    for (const auto& [w, v] : plain.entries(k)) out.set(w, Rational(-1) * v);
  }
  return out;
}

}  // namespace ainf
