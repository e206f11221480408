#include "ainf/dga_io.hpp"

#include "ainf/errors.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace ainf {

namespace {

constexpr int kMaxDegreeCap = 256;
constexpr long kMaxDegree = 1000;
constexpr long kMaxExponent = 1000;

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t pos = 0;
  auto advance = [&]() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  };
  while (pos < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') advance();
      continue;
    }
    if (std::isspace(c)) {
      advance();
      continue;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (std::isalpha(c) || c == '_') {
      tok.kind = Tok::Ident;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        tok.text += text[pos];
        advance();
      }
    } else if (std::isdigit(c)) {
      tok.kind = Tok::Number;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        tok.text += text[pos];
        advance();
      }
    } else if (std::string_view("{}:;=*+-^/,").find(static_cast<char>(c)) != std::string_view::npos) {
      tok.kind = Tok::Punct;
      tok.text = std::string(1, static_cast<char>(c));
      advance();
    } else {
      std::ostringstream msg;
      if (c >= 0x20 && c < 0x7f) {
        msg << "unexpected character '" << static_cast<char>(c) << "'";
      } else {
        msg << "unexpected byte 0x" << std::hex << static_cast<int>(c);
      }
      throw ParseError(msg.str(), line, col);
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

struct Located {
  FormalPoly poly;
  std::vector<std::pair<std::string, Token>> names;  // every generator reference with its position
  Token start;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  SourceFile parse_file() {
    SourceFile file;
    bool have_dga = false;
    while (peek().kind != Tok::End) {
      Token head = expect_ident();
      if (head.text == "dga") {
        if (have_dga) fail("duplicate dga block", head);
        parse_dga_block(file.spec);
        have_dga = true;
      } else if (head.text == "decomposition") {
        if (file.decomposition) fail("duplicate decomposition block", head);
        file.decomposition = parse_decomposition_block();
      } else {
        fail("expected 'dga' or 'decomposition', found '" + head.text + "'", head);
      }
      accept(";");
    }
    if (!have_dga) fail("missing dga block", peek());
    check_semantics(file);
    return file;
  }

  FormalPoly parse_standalone_poly() {
    Located p = parse_poly();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "' after polynomial", peek());
    return p.poly;
  }

  // Parses a file that may hold only a decomposition block.
  DecompositionTable parse_decomposition_only() {
    std::optional<DecompositionTable> table;
    while (peek().kind != Tok::End) {
      Token head = expect_ident();
      if (head.text == "decomposition") {
        table = parse_decomposition_block();
      } else if (head.text == "dga") {
        DgaSpec ignored;
        parse_dga_block(ignored);
      } else {
        fail("expected 'dga' or 'decomposition', found '" + head.text + "'", head);
      }
      accept(";");
    }
    if (!table) fail("missing decomposition block", peek());
    return *table;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& at) const { throw ParseError(msg, at.line, at.col); }

  const Token& peek() const { return toks_[pos_]; }
  Token next() {
    Token t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool is(const char* punct) const { return peek().kind == Tok::Punct && peek().text == punct; }
  bool accept(const char* punct) {
    if (!is(punct)) return false;
    next();
    return true;
  }
  void expect(const char* punct) {
    if (!is(punct)) {
      fail(std::string("expected '") + punct + "', found " + describe(peek()), peek());
    }
    next();
  }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }
  Token expect_ident() {
    if (peek().kind != Tok::Ident) fail("expected a name, found " + describe(peek()), peek());
    return next();
  }
  long expect_integer(long max) {
    bool negative = accept("-");
    if (peek().kind != Tok::Number) fail("expected an integer, found " + describe(peek()), peek());
    Token t = next();
    if (t.text.size() > 6 || std::stol(t.text) > max) fail("integer " + t.text + " is too large", t);
    long v = std::stol(t.text);
    return negative ? -v : v;
  }

  void parse_dga_block(DgaSpec& spec) {
    expect("{");
    bool have_cap = false;
    std::set<std::string> seen;
    while (!accept("}")) {
      Token key = expect_ident();
      if (!seen.insert(key.text).second) fail("duplicate field '" + key.text + "'", key);
      if (key.text == "degree_cap") {
        expect(":");
        Token at = peek();
        long cap = expect_integer(kMaxDegreeCap);
        if (cap < 0) fail("degree_cap must be non-negative", at);
        spec.degree_cap = static_cast<int>(cap);
        have_cap = true;
        accept(";");
      } else if (key.text == "commutative") {
        expect(":");
        Token v = expect_ident();
        if (v.text == "true") {
          spec.commutative = true;
        } else if (v.text == "false") {
          spec.commutative = false;
        } else {
          fail("expected 'true' or 'false'", v);
        }
        accept(";");
      } else if (key.text == "generators") {
        parse_generators(spec);
      } else if (key.text == "d") {
        parse_differential(spec);
      } else if (key.text == "relations") {
        parse_relations(spec);
      } else {
        fail("unknown field '" + key.text + "'", key);
      }
    }
    if (!have_cap) fail("dga block is missing degree_cap", peek());
  }

  void parse_generators(DgaSpec& spec) {
    expect("{");
    while (!accept("}")) {
      Token name = expect_ident();
      expect(":");
      Token at = peek();
      long degree = expect_integer(kMaxDegree);
      if (degree <= 0) fail("generator '" + name.text + "' must have positive degree", at);
      if (spec.find_generator(name.text)) fail("duplicate generator '" + name.text + "'", name);
      spec.generators.push_back({name.text, static_cast<int>(degree)});
      generator_pos_[name.text] = name;
      accept(";");
      accept(",");
    }
    accept(";");
  }

  void parse_differential(DgaSpec& spec) {
    expect("{");
    while (!accept("}")) {
      Token name = expect_ident();
      expect("=");
      Located p = parse_poly();
      d_refs_.push_back({name, p});
      spec.differential.push_back({name.text, std::move(p.poly)});
      accept(";");
    }
    accept(";");
  }

  void parse_relations(DgaSpec& spec) {
    expect("{");
    while (!accept("}")) {
      Located p = parse_poly();
      relation_refs_.push_back(p);
      spec.relations.push_back(std::move(p.poly));
      accept(";");
    }
    accept(";");
  }

  DecompositionTable parse_decomposition_block() {
    DecompositionTable table;
    expect("{");
    while (!accept("}")) {
      Token kw = expect_ident();
      if (kw.text != "degree") fail("expected 'degree', found '" + kw.text + "'", kw);
      Token at = peek();
      long degree = expect_integer(kMaxDegree);
      if (degree < 0) fail("negative degree", at);
      if (table.rows.count(static_cast<int>(degree))) fail("duplicate row for degree " + std::to_string(degree), at);
      auto& row = table.rows[static_cast<int>(degree)];
      expect("{");
      while (!accept("}")) {
        Token part = expect_ident();
        std::optional<std::vector<FormalPoly>>* slot = nullptr;
        if (part.text == "B") {
          slot = &row.B;
        } else if (part.text == "C") {
          slot = &row.C;
        } else {
          fail("expected 'B' or 'C', found '" + part.text + "'", part);
        }
        if (slot->has_value()) fail("duplicate " + part.text + " list", part);
        expect(":");
        slot->emplace();
        if (!is(";") && !is("}")) {
          do {
            Located p = parse_poly();
            decomposition_refs_.push_back(p);
            (*slot)->push_back(std::move(p.poly));
          } while (accept(","));
        }
        accept(";");
      }
      accept(";");
    }
    return table;
  }

  Rational parse_coefficient() {
    Token t = next();
    std::string text = t.text;
    if (accept("/")) {
      if (peek().kind != Tok::Number) fail("expected a denominator, found " + describe(peek()), peek());
      Token den = next();
      if (den.text.find_first_not_of('0') == std::string::npos) fail("zero denominator", den);
      text += "/" + den.text;
    }
    Rational r(text, 10);
    r.canonicalize();
    return r;
  }

  Located parse_poly() {
    Located out;
    out.start = peek();
    Rational sign = 1;
    if (accept("-")) {
      sign = -1;
    } else {
      accept("+");
    }
    while (true) {
      FormalTerm term;
      term.coefficient = sign;
      bool need_factor = true;
      if (peek().kind == Tok::Number) {
        term.coefficient *= parse_coefficient();
        need_factor = false;
        if (!accept("*")) goto done_term;
        need_factor = true;
      }
      while (need_factor) {
        Token name = expect_ident();
        unsigned e = 1;
        if (accept("^")) {
          Token at = peek();
          long v = expect_integer(kMaxExponent);
          if (v < 1) fail("exponent must be positive", at);
          e = static_cast<unsigned>(v);
        }
        out.names.push_back({name.text, name});
        term.factors.push_back({name.text, e});
        need_factor = accept("*");
      }
    done_term:
      // A bare "0" stands for the zero polynomial.
      if (!(term.factors.empty() && term.coefficient == 0)) out.poly.terms.push_back(std::move(term));
      if (accept("+")) {
        sign = 1;
      } else if (accept("-")) {
        sign = -1;
      } else {
        break;
      }
    }
    return out;
  }

  int degree_of(const DgaSpec& spec, const Located& p, const FormalTerm& term) const {
    int deg = 0;
    for (const auto& [name, e] : term.factors) {
      const Generator* g = spec.find_generator(name);
      deg += g->degree * static_cast<int>(e);
    }
    (void)p;
    return deg;
  }

  void check_names(const DgaSpec& spec, const Located& p) const {
    for (const auto& [name, tok] : p.names) {
      if (!spec.find_generator(name)) fail("unknown generator '" + name + "'", tok);
    }
  }

  void check_semantics(const SourceFile& file) const {
    const DgaSpec& spec = file.spec;
    std::set<std::string> defined;
    for (const auto& [name, p] : d_refs_) {
      const Generator* g = spec.find_generator(name.text);
      if (!g) fail("unknown generator '" + name.text + "'", name);
      if (!defined.insert(name.text).second) fail("differential of '" + name.text + "' given twice", name);
      check_names(spec, p);
      for (const auto& term : p.poly.terms) {
        int deg = degree_of(spec, p, term);
        if (deg != g->degree + 1) {
          fail("d must raise degree by 1: d(" + name.text + ") has a term of degree " + std::to_string(deg) +
                   " but " + name.text + " has degree " + std::to_string(g->degree),
               p.start);
        }
      }
    }
    for (const auto& p : relation_refs_) {
      check_names(spec, p);
      for (const auto& term : p.poly.terms) {
        if (degree_of(spec, p, term) != degree_of(spec, p, p.poly.terms.front())) {
          fail("inhomogeneous relation " + to_string(p.poly), p.start);
        }
      }
    }
    for (const auto& p : decomposition_refs_) check_names(spec, p);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, Token> generator_pos_;
  std::vector<std::pair<Token, Located>> d_refs_;
  std::vector<Located> relation_refs_;
  std::vector<Located> decomposition_refs_;
};

// Inverse of the monomial naming used by the DGA basis ("a01*a12", "x^2", "1").
FormalPoly poly_from_vec(const Vec& v, const std::vector<std::string>& names) {
  FormalPoly out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    FormalTerm term;
    term.coefficient = v[k];
    if (names[k] != "1") {
      std::istringstream parts(names[k]);
      std::string factor;
      while (std::getline(parts, factor, '*')) {
        std::size_t caret = factor.find('^');
        unsigned e = caret == std::string::npos ? 1u : static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
        term.factors.push_back({factor.substr(0, caret), e});
      }
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

void write_poly_list(std::ostringstream& out, const std::vector<FormalPoly>& list) {
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (k) out << ", ";
    out << to_string(list[k]);
  }
}

}  // namespace

std::string to_string(const FormalPoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.terms.size(); ++k) {
    const auto& t = p.terms[k];
    Rational c = t.coefficient;
    if (k == 0) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else if (c < 0) {
      out += " - ";
      c = -c;
    } else {
      out += " + ";
    }
    std::string factors;
    for (const auto& [name, e] : t.factors) {
      if (!factors.empty()) factors += "*";
      factors += name;
      if (e != 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += factors;
    } else {
      out += to_string(c) + "*" + factors;
    }
  }
  return out;
}

FormalPoly formal_from_vector(const Dga& dga, int degree, const Vec& v) {
  return poly_from_vec(v, dga.space().names(degree));
}

SourceFile parse_source(std::string_view text) { return Parser(text).parse_file(); }

DgaSpec parse_dga(std::string_view text) { return parse_source(text).spec; }

FormalPoly parse_polynomial(std::string_view text) { return Parser(text).parse_standalone_poly(); }

SourceFile load_source(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_source(buf.str());
}

Decomposition decomposition_from_table(const DecompositionTable& table, const Dga& dga) {
  const int cap = dga.degree_cap();
  for (const auto& [degree, row] : table.rows) {
    if (degree >= cap) {
      throw ValidationError("decomposition row for degree " + std::to_string(degree) +
                            " lies at or above the degree cap " + std::to_string(cap));
    }
  }
  Decomposition canon = canonical_decomposition(dga);
  Decomposition dec;
  dec.B.resize(cap);
  dec.C.resize(cap);
  dec.dB.resize(cap + 1);
  auto read_list = [&](const std::vector<FormalPoly>& list, int degree) {
    std::vector<Vec> vecs;
    for (const auto& p : list) vecs.push_back(dga.evaluate(p, degree).coeffs);
    return vecs;
  };
  for (int n = 0; n < cap; ++n) {
    auto it = table.rows.find(n);
    const DecompositionTable::Row* row = it == table.rows.end() ? nullptr : &it->second;
    if (row && row->B) {
      auto vecs = read_list(*row->B, n);
      std::size_t count = vecs.size();
      dec.B[n] = Subspace::span(dga.dim(n), std::move(vecs));
      if (dec.B[n].dim() != count) {
        throw ValidationError("B-list in degree " + std::to_string(n) + " is linearly dependent");
      }
    } else {
      dec.B[n] = canon.B[n];
    }
  }
  dec.dB[0] = Subspace(dga.dim(0));
  for (int n = 0; n < cap; ++n) {
    std::vector<Vec> images;
    for (const auto& b : dec.B[n].basis()) images.push_back(dga.differential(HVec{n, b}).coeffs);
    dec.dB[n + 1] = Subspace::span(dga.dim(n + 1), std::move(images));
  }
  for (int n = 0; n < cap; ++n) {
    auto it = table.rows.find(n);
    const DecompositionTable::Row* row = it == table.rows.end() ? nullptr : &it->second;
    if (row && row->C) {
      auto vecs = read_list(*row->C, n);
      std::size_t count = vecs.size();
      dec.C[n] = Subspace::span(dga.dim(n), std::move(vecs));
      if (dec.C[n].dim() != count) {
        throw ValidationError("C-list in degree " + std::to_string(n) + " is linearly dependent");
      }
    } else {
      dec.C[n] = choose_complement(dec.dB[n], kernel(dga.d(), n));
    }
  }
  validate_decomposition(dga, dec);
  return dec;
}

Decomposition parse_decomposition(std::string_view text, const Dga& dga) {
  return decomposition_from_table(Parser(text).parse_decomposition_only(), dga);
}

DecompositionTable table_from_decomposition(const Decomposition& dec, const Dga& dga) {
  DecompositionTable table;
  for (int n = 0; n < static_cast<int>(dec.B.size()); ++n) {
    if (dga.dim(n) == 0) continue;
    auto& row = table.rows[n];
    row.B.emplace();
    row.C.emplace();
    for (const auto& v : dec.B[n].basis()) row.B->push_back(poly_from_vec(v, dga.space().names(n)));
    for (const auto& v : dec.C[n].basis()) row.C->push_back(poly_from_vec(v, dga.space().names(n)));
  }
  return table;
}

std::string serialize(const DgaSpec& spec) {
  std::ostringstream out;
  out << "dga {\n";
  out << "  degree_cap: " << spec.degree_cap << ";\n";
  out << "  commutative: " << (spec.commutative ? "true" : "false") << ";\n";
  out << "  generators {";
  for (const auto& g : spec.generators) out << " " << g.name << ":" << g.degree;
  out << " }\n";
  if (!spec.differential.empty()) {
    out << "  d {\n";
    for (const auto& [name, p] : spec.differential) out << "    " << name << " = " << to_string(p) << ";\n";
    out << "  }\n";
  }
  if (!spec.relations.empty()) {
    out << "  relations {\n";
    for (const auto& p : spec.relations) out << "    " << to_string(p) << ";\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string serialize(const DecompositionTable& table) {
  std::ostringstream out;
  out << "decomposition {\n";
  for (const auto& [degree, row] : table.rows) {
    out << "  degree " << degree << " {";
    if (row.B) {
      out << " B: ";
      write_poly_list(out, *row.B);
      out << ";";
    }
    if (row.C) {
      out << " C: ";
      write_poly_list(out, *row.C);
      out << ";";
    }
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

std::string serialize(const SourceFile& file) {
  std::string out = serialize(file.spec);
  if (file.decomposition) out += "\n" + serialize(*file.decomposition);
  return out;
}

std::string serialize(const Decomposition& dec, const Dga& dga) {
  return serialize(table_from_decomposition(dec, dga));
}

}  // namespace ainf
