#include "ainf/dga_io.hpp"
#include "ainf/errors.hpp"
#include "ainf/massey.hpp"

#include <doctest.h>

using namespace ainf;

namespace {

std::string data(const std::string& name) { return std::string(AINF_DATA_DIR) + "/" + name; }

std::vector<HVec> classes(const Dga& dga, const Cohomology& h, std::initializer_list<const char*> names) {
  std::vector<HVec> out;
  for (const char* n : names) {
    HVec g = dga.generator(n);
    out.push_back(HVec{g.degree, *h.class_of(g.degree, g.coeffs)});
  }
  return out;
}

}  // namespace

TEST_CASE("the two sign formulas") {
  MasseySigns s = massey_signs({3, 3, 3, 3});
  CHECK(s.adapted == -1);
  CHECK(s.general == 1);
  CHECK(massey_signs({3, 3, 3}).adapted == 1);
  CHECK(massey_signs({3, 3, 3}).general == -1);
  CHECK(massey_signs({2, 3, 3}).general == -1);  // 2*2 + 1*3
  CHECK(massey_signs({3, 2, 2}).general == 1);   // 2*3 + 1*2
}

TEST_CASE("a nonzero adjacent product makes the set empty") {
  Dga dga = build_dga(load_source(data("example-2.6.dga")).spec);
  Cohomology h(dga);
  auto xs = classes(dga, h, {"a01", "a23", "a12"});
  CHECK_FALSE(is_zero(to_poly(cup_product(dga, h, xs[0], xs[1]).coeffs)));
  MasseySetDescriptor m = higher_massey(dga, h, xs);
  CHECK(m.kind == MasseyKind::Empty);
  CHECK_FALSE(m.reason.empty());
  CHECK(triple_massey(dga, h, xs[0], xs[1], xs[2]).kind == MasseyKind::Empty);
}

TEST_CASE("the three modes agree on the triple example") {
  Dga dga = build_dga(load_source(data("example-3.3.dga")).spec);
  Cohomology h(dga);
  auto xs = classes(dga, h, {"a01", "a12", "a23"});
  MasseySetDescriptor sym = higher_massey(dga, h, xs);
  MasseySetDescriptor tri = triple_massey(dga, h, xs[0], xs[1], xs[2]);
  CHECK(sym.kind == MasseyKind::Coset);
  CHECK(sym.directions == tri.directions);
  CHECK(sym.contains(tri.base) == Membership::Yes);
  CHECK(sym.directions == indeterminacy(dga, h, xs[0], xs[1], xs[2]));
  MasseySetDescriptor sampled = higher_massey(dga, h, xs, {MasseyMode::Sampled, 3, 5});
  REQUIRE_FALSE(sampled.samples.empty());
  for (const auto& s : sampled.samples) CHECK(sym.contains(s) == Membership::Yes);
  MasseySetDescriptor canonical = higher_massey(dga, h, xs, {MasseyMode::Canonical});
  CHECK(sym.contains(canonical.base) == Membership::Yes);
  Vec sum(h.dim(8));
  for (const auto& d : sym.directions.basis()) sum = sum + d;
  CHECK(sym.contains(sym.base + sum) == Membership::Yes);
  CHECK(sym.contains(Vec(h.dim(8), Rational(1))) == Membership::No);
}

TEST_CASE("specializing every parameter gives a concrete defining system") {
  Dga dga = build_dga(load_source(data("example-3.3.dga")).spec);
  Cohomology h(dga);
  auto xs = classes(dga, h, {"a01", "a12", "a23"});
  MasseySetDescriptor sym = higher_massey(dga, h, xs);
  REQUIRE(sym.system);
  std::map<std::string, Rational> values;
  Rational v = 1;
  for (const auto& p : sym.system->parameters) values[p] = v++;
  DefiningSystem ds = specialize(*sym.system, values);
  CHECK(ds.concrete());
  CHECK_FALSE(check_defining_system(dga, h, ds));
  auto value = h.class_of(8, constant_part(defining_system_value(dga, ds)));
  REQUIRE(value);
  CHECK(sym.contains(*value) == Membership::Yes);
}

TEST_CASE("classes above the cap raise CapError") {
  Dga dga = build_dga(load_source(data("example-3.3.dga")).spec);
  Cohomology h(dga);
  auto xs = classes(dga, h, {"a01", "a12", "a23"});
  HVec big{8, Vec(h.dim(8))};
  big.coeffs[0] = 1;
  CHECK_THROWS_AS(higher_massey(dga, h, {xs[0], xs[1], big}), CapError);
}

TEST_CASE("adapted contractions: construction and refusal") {
  // <[a],[a],[a]> with a^2 = 0 and a cocycle y chosen as a_02: y cannot lie in B.
  Dga dga = build_dga(parse_dga("dga { degree_cap: 12; commutative: true; generators { a:3 y:5 } }"));
  Cohomology h(dga);
  HVec a = dga.generator("a");
  HVec ac{3, *h.class_of(3, a.coeffs)};
  DefiningSystem ds;
  ds.classes = {ac, ac, ac};
  ds.entries[{0, 1}] = to_poly(a.coeffs);
  ds.entries[{1, 2}] = to_poly(a.coeffs);
  ds.entries[{2, 3}] = to_poly(a.coeffs);
  ds.entries[{0, 2}] = to_poly(dga.generator("y").coeffs);
  ds.entries[{1, 3}] = to_poly(Vec(dga.dim(5)));
  REQUIRE_FALSE(check_defining_system(dga, h, ds));
  CHECK_THROWS_AS(adapted_decomposition(dga, ds), ValidationError);

  ds.entries[{0, 2}] = to_poly(Vec(dga.dim(5)));
  Contraction c = build_adapted_contraction(dga, ds);
  CHECK(validate_contraction(c).empty());
  CHECK(is_adapted(c, ds).adapted);
}

TEST_CASE("recovery on the quadruple example") {
  SourceFile src = load_source(data("example-2.6.dga"));
  Dga dga = build_dga(src.spec);
  Cohomology h(dga);
  auto xs = classes(dga, h, {"a01", "a12", "a23", "a34"});
  MasseySetDescriptor set = higher_massey(dga, h, xs);
  REQUIRE(set.single_point());
  auto table = std::make_shared<Contraction>(
      contraction_from_decomposition(dga, decomposition_from_table(*src.decomposition, dga)));
  TransferResult tr = transfer_ainfinity(table, 4);
  CHECK_FALSE(defining_system_canonical(*tr.cache, xs).ok());
  CHECK(check_vanishing_hypothesis(*tr.structure, 2) == false);
  CHECK(lower_image_span(*tr.structure, 3, 10).dim() >= 1);

  DefiningSystem ds = *set.system;
  auto adapted = std::make_shared<Contraction>(build_adapted_contraction(dga, ds));
  TransferResult ta = transfer_ainfinity(adapted, 4);
  CHECK(defining_system_canonical(*ta.cache, xs).ok());
  RecoveryVerdict v = verify_recovery(*ta.structure, xs, set);
  CHECK(v.detects);
  CHECK(v.recovers);
  CHECK(v.signs == std::vector<int>{-1});
}
