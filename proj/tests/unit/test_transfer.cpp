#include "ainf/dga_io.hpp"
#include "ainf/errors.hpp"
#include "ainf/transfer.hpp"
#include "random_dga.hpp"

#include <doctest.h>

using namespace ainf;

namespace {

std::string data(const std::string& name) { return std::string(AINF_DATA_DIR) + "/" + name; }

struct Example {
  SourceFile src;
  Dga dga;
  std::shared_ptr<Contraction> table;
};

Example quadruple() {
  Example e{load_source(data("example-2.6.dga")), {}, nullptr};
  e.dga = build_dga(e.src.spec);
  e.table = std::make_shared<Contraction>(
      contraction_from_decomposition(e.dga, decomposition_from_table(*e.src.decomposition, e.dga)));
  return e;
}

std::vector<HVec> classes(const Dga& dga, const Cohomology& h, std::initializer_list<const char*> names) {
  std::vector<HVec> out;
  for (const char* n : names) {
    HVec g = dga.generator(n);
    out.push_back(HVec{g.degree, *h.class_of(g.degree, g.coeffs)});
  }
  return out;
}

}  // namespace

TEST_CASE("the transferred structure is minimal and satisfies the identities") {
  Example e = quadruple();
  TransferResult tr = transfer_ainfinity(e.table, 4);
  CHECK(tr.structure->minimal());
  CHECK(check_stasheff(*tr.structure, 4).ok());
  CHECK(check_morphism(*tr.morphism, 4).ok());
  CHECK(check_stasheff(*tr.algebra, 3).ok());
}

TEST_CASE("m4 on the quadruple example along the table contraction") {
  Example e = quadruple();
  TransferResult tr = transfer_ainfinity(e.table, 4);
  const Cohomology& h = e.table->cohomology();
  HVec m4 = evaluate(*tr.structure, classes(e.dga, h, {"a01", "a12", "a23", "a34"}));
  HVec x = e.dga.evaluate(parse_polynomial("a01*a14 + a02*a24 + a03*a34 + z1*z2"));
  CHECK(m4.coeffs == Rational(-1) * *h.class_of(10, x.coeffs));
}

TEST_CASE("the unit shortcut agrees with the full recursion") {
  Example e = quadruple();
  LambdaCache fast(e.table, true);
  LambdaCache full(e.table, false);
  const auto& H = e.table->H();
  const BasisKey unit{0, 0};
  for (std::size_t j = 0; j < H.dim(3); ++j) {
    Word w{unit, {3, j}, {3, (j + 1) % H.dim(3)}};
    CHECK(fast.k_lambda(w) == full.k_lambda(w));
    Word v{{3, j}, unit, {5, 0}};
    CHECK(fast.k_lambda(v) == full.k_lambda(v));
  }
}

TEST_CASE("higher operations vanish on words containing the unit") {
  Example e = quadruple();
  TransferResult tr = transfer_ainfinity(e.table, 4);
  for (int k = 3; k <= 4; ++k)
    for (const auto& [w, v] : tr.structure->entries(k))
      for (const auto& key : w)
        if (key.degree == 0) CHECK(is_zero(to_poly(v)));
}

TEST_CASE("evaluating beyond the cap reports the minimal cap") {
  Example e = quadruple();
  TransferResult tr = transfer_ainfinity(e.table, 3);
  const Cohomology& h = e.table->cohomology();
  auto xs = classes(e.dga, h, {"z1", "z2", "z1"});
  CHECK(required_cap(15, 3) == 15);
  try {
    evaluate(*tr.structure, xs);
    FAIL("expected CapError");
  } catch (const CapError& err) {
    CHECK(err.required_cap() == 15);
  }
  CHECK_THROWS_AS(evaluate(*tr.structure, classes(e.dga, h, {"a01", "a12", "a23", "a34"})), ValidationError);
}

TEST_CASE("sign conventions of the Stasheff identity") {
  // Rescaling m_k by (-1)^{(k-1)(k+2)/2} converts a structure satisfying one
  // sign convention into one satisfying the other.
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Dga dga = build_dga(testing::random_dga_spec(seed));
    auto c = std::make_shared<Contraction>(contraction_from_decomposition(dga, random_decomposition(dga, seed)));
    TransferResult tr = transfer_ainfinity(c, 4);
    AInfinityStructure other = *tr.structure;
    for (int k = 2; k <= 4; ++k) {
      const int sign = ((k - 1) * (k + 2) / 2) % 2 == 0 ? 1 : -1;
      for (const auto& [w, v] : tr.structure->entries(k)) other.set(w, Rational(sign) * v);
    }
    CHECK(check_stasheff(*tr.structure, 4, StasheffSign::RPlusST).ok());
    CHECK(check_stasheff(other, 4, StasheffSign::KPlusNPlusKN).ok());
  }
}

TEST_CASE("Kadeishvili induction along the unique defining system") {
  Example e = quadruple();
  const Cohomology& h = e.table->cohomology();
  DefiningSystem ds;
  ds.classes = classes(e.dga, h, {"a01", "a12", "a23", "a34"});
  const char* names[5][5] = {};
  names[0][1] = "a01";
  names[1][2] = "a12";
  names[2][3] = "a23";
  names[3][4] = "a34";
  names[0][2] = "a02";
  names[1][3] = "a13";
  names[2][4] = "a24";
  names[0][3] = "a03";
  names[1][4] = "a14";
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (names[i][j]) ds.entries[{i, j}] = to_poly(e.dga.generator(names[i][j]).coeffs);
  REQUIRE_FALSE(check_defining_system(e.dga, h, ds));
  KadeishviliRecovery r = kadeishvili_recover(e.dga, ds, 4);
  CHECK(r.epsilon == -1);
  CHECK(r.value_sign == -1);
  CHECK(r.value.coeffs == Rational(-1) * r.massey_value.coeffs);
}
