#pragma once

#include "ainf/contraction.hpp"
#include "ainf/dga.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ainf {

/// Rows of a decomposition block as written. A missing B or C row means "fill
/// canonically"; an empty row (`B: ;`) means the zero subspace.
struct DecompositionTable {
  struct Row {
    std::optional<std::vector<FormalPoly>> B;
    std::optional<std::vector<FormalPoly>> C;

    friend bool operator==(const Row&, const Row&) = default;
  };
  std::map<int, Row> rows;

  friend bool operator==(const DecompositionTable&, const DecompositionTable&) = default;
};

/// A `.dga` file: a dga block and an optional decomposition block.
struct SourceFile {
  DgaSpec spec;
  std::optional<DecompositionTable> decomposition;

  friend bool operator==(const SourceFile&, const SourceFile&) = default;
};

/// Errors are ParseError (with line and column) for both syntax and semantic
/// problems such as unknown generators or a differential of the wrong degree.
SourceFile parse_source(std::string_view text);
DgaSpec parse_dga(std::string_view text);
/// A single polynomial in the file syntax, e.g. "a01*a14 - 2*z1*z2".
FormalPoly parse_polynomial(std::string_view text);
SourceFile load_source(const std::filesystem::path& path);

/// Reads the decomposition block of `text` against an already built DGA.
/// Throws ValidationError when the result is not a valid decomposition.
Decomposition parse_decomposition(std::string_view text, const Dga& dga);
Decomposition decomposition_from_table(const DecompositionTable& table, const Dga& dga);
/// B and C rows for every degree below the cap, as echelon bases.
DecompositionTable table_from_decomposition(const Decomposition& dec, const Dga& dga);

std::string serialize(const DgaSpec& spec);
std::string serialize(const DecompositionTable& table);
std::string serialize(const SourceFile& file);
std::string serialize(const Decomposition& dec, const Dga& dga);

std::string to_string(const FormalPoly& p);
/// Writes a vector of the monomial basis as a formal polynomial.
FormalPoly formal_from_vector(const Dga& dga, int degree, const Vec& v);

}  // namespace ainf
