#include "ainf/polyq.hpp"

#include "ainf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ainf {

unsigned total_degree(const ParamMonomial& m) {
  unsigned d = 0;
  for (const auto& [name, e] : m) d += e;
  return d;
}

ParamMonomial multiply(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool GradedLexLess::operator()(const ParamMonomial& a, const ParamMonomial& b) const {
  unsigned da = total_degree(a);
  unsigned db = total_degree(b);
  if (da != db) return da < db;
  auto i = a.begin();
  auto j = b.begin();
  for (; i != a.end() && j != b.end(); ++i, ++j) {
    if (i->first != j->first) {
      // The side holding the alphabetically smaller name has a positive
      // exponent where the other has zero.
      return i->first > j->first;
    }
    if (i->second != j->second) return i->second < j->second;
  }
  return false;  // equal degree and equal prefix means equal monomials
}

PolyQ::PolyQ(const Rational& constant) {
  if (!ainf::is_zero(constant)) terms_.emplace(ParamMonomial{}, constant);
}

PolyQ PolyQ::parameter(const std::string& name) { return term(Rational(1), {{name, 1u}}); }

PolyQ PolyQ::term(const Rational& coefficient, ParamMonomial monomial) {
  std::sort(monomial.begin(), monomial.end());
  ParamMonomial merged;
  for (auto& [name, e] : monomial) {
    if (e == 0) continue;
    if (!merged.empty() && merged.back().first == name) {
      merged.back().second += e;
    } else {
      merged.emplace_back(name, e);
    }
  }
  PolyQ p;
  p.add_term(merged, coefficient);
  return p;
}

bool PolyQ::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational PolyQ::constant_term() const {
  auto it = terms_.find(ParamMonomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned PolyQ::degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

std::vector<std::string> PolyQ::parameters() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& [name, e] : m) names.insert(name);
  }
  return {names.begin(), names.end()};
}

void PolyQ::add_term(const ParamMonomial& m, const Rational& c) {
  if (ainf::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (ainf::is_zero(it->second)) terms_.erase(it);
  }
}

PolyQ& PolyQ::operator+=(const PolyQ& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& other) {
  PolyQ out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) out.add_term(multiply(ma, mb), ca * cb);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& scalar) {
  if (ainf::is_zero(scalar)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

PolyQ PolyQ::operator-() const {
  PolyQ out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Rational poly_substitute(const PolyQ& p, const std::map<std::string, Rational>& assignment) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational value = c;
    for (const auto& [name, e] : m) {
      auto it = assignment.find(name);
      if (it == assignment.end()) throw Error("no value assigned to parameter '" + name + "'");
      for (unsigned k = 0; k < e; ++k) value *= it->second;
    }
    total += value;
  }
  return total;
}

PolyQ poly_compose(const PolyQ& p, const std::map<std::string, PolyQ>& replacement) {
  PolyQ total;
  for (const auto& [m, c] : p.terms()) {
    PolyQ value(c);
    ParamMonomial kept;
    for (const auto& [name, e] : m) {
      auto it = replacement.find(name);
      if (it == replacement.end()) {
        kept.emplace_back(name, e);
        continue;
      }
      for (unsigned k = 0; k < e; ++k) value *= it->second;
    }
    value *= PolyQ::term(Rational(1), kept);
    total += value;
  }
  return total;
}

PolyDecomposition poly_decompose(const PolyQ& p) {
  PolyDecomposition out;
  out.constant = 0;
  for (const auto& [m, c] : p.terms()) {
    unsigned d = total_degree(m);
    if (d == 0) {
      out.constant = c;
    } else if (d == 1) {
      out.linear[m.front().first] = c;
    } else {
      out.higher += PolyQ::term(c, m);
    }
  }
  return out;
}

std::string to_string(const PolyQ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    std::string factors;
    for (const auto& [name, e] : m) {
      if (!factors.empty()) factors += "*";
      factors += name;
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += factors;
    } else if (c == -1) {
      out += "-" + factors;
    } else {
      out += to_string(c) + "*" + factors;
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_')) return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

PolyQ parse_term(std::string_view text) {
  text = trim(text);
  Rational coefficient = 1;
  if (!text.empty() && text.front() == '-' && text.size() > 1 &&
      !std::isdigit(static_cast<unsigned char>(text[1]))) {
    coefficient = -1;
    text.remove_prefix(1);
  }
  if (text.empty()) throw Error("empty polynomial term");
  ParamMonomial monomial;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    std::string_view factor = trim(text.substr(start, star == std::string_view::npos ? star : star - start));
    auto caret = factor.find('^');
    std::string_view base = trim(factor.substr(0, caret));
    if (is_name(base)) {
      unsigned exponent = 1;
      if (caret != std::string_view::npos) {
        std::string_view e = trim(factor.substr(caret + 1));
        if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          throw Error("malformed exponent in '" + std::string(factor) + "'");
        }
        exponent = static_cast<unsigned>(std::stoul(std::string(e)));
      }
      monomial.emplace_back(std::string(base), exponent);
    } else {
      if (caret != std::string_view::npos) throw Error("exponent on a number in '" + std::string(factor) + "'");
      coefficient *= parse_rational(base);
    }
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return PolyQ::term(coefficient, std::move(monomial));
}

}  // namespace

PolyQ parse_polyq(std::string_view text) {
  PolyQ out;
  std::size_t start = 0;
  while (true) {
    std::size_t plus = text.find('+', start);
    std::string_view piece = text.substr(start, plus == std::string_view::npos ? plus : plus - start);
    out += parse_term(piece);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

}  // namespace ainf
