#include "ainf/errors.hpp"
#include "ainf/linalg.hpp"

#include <doctest.h>

using namespace ainf;

namespace {

Vec v(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

}  // namespace

TEST_CASE("echelon form is canonical for the span") {
  Subspace s1 = Subspace::span(3, {v({1, 2, 3}), v({2, 4, 7})});
  Subspace s2 = Subspace::span(3, {v({0, 0, 1}), v({3, 6, 0})});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.pivots() == std::vector<std::size_t>{0, 2});
  CHECK(s1.contains(v({1, 2, 0})));
  CHECK_FALSE(s1.contains(v({0, 1, 0})));
  CHECK(s1.reduce(v({1, 3, 1})) == v({0, 1, 0}));
}

TEST_CASE("kernel and image of a matrix") {
  Matrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 1) = 1;
  m.at(1, 2) = -1;
  Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  CHECK(m.apply(k.basis()[0]) == v({0, 0}));
  CHECK(image(m).dim() == 2);
  CHECK(kernel(Matrix(0, 3)).dim() == 3);
}

TEST_CASE("sum and intersection dimensions") {
  Subspace a = Subspace::span(4, {v({1, 0, 0, 0}), v({0, 1, 0, 0})});
  Subspace b = Subspace::span(4, {v({0, 1, 0, 0}), v({0, 0, 1, 0})});
  CHECK((a + b).dim() == 3);
  CHECK(a.intersect(b) == Subspace::span(4, {v({0, 1, 0, 0})}));
  CHECK(a.intersect(Subspace(4)).dim() == 0);
  CHECK(Subspace::full(4).contains(a));
}

TEST_CASE("complements use the non-pivot rows") {
  Subspace inside = Subspace::full(3);
  Subspace sub = Subspace::span(3, {v({1, 1, 0})});
  Subspace c = choose_complement(sub, inside);
  CHECK(c.dim() == 2);
  CHECK((c + sub).dim() == 3);
  CHECK(c.intersect(sub).dim() == 0);
  CHECK_THROWS_AS(choose_complement(Subspace::full(3), sub), ValidationError);
}

TEST_CASE("solver and coordinates") {
  Matrix m = Matrix::from_columns(3, std::vector<Vec>{v({1, 0, 1}), v({0, 1, 1})});
  LinearSolver s(m);
  CHECK(s.rank() == 2);
  auto x = s.solve(v({2, 3, 5}));
  REQUIRE(x);
  CHECK(*x == v({2, 3}));
  CHECK_FALSE(s.solve(v({1, 0, 0})));
  Coordinates coords(3, {v({1, 0, 1}), v({0, 1, 1})});
  CHECK(coords.of(v({1, 1, 2})) == v({1, 1}));
  CHECK_FALSE(coords.of(v({0, 0, 1})));
}

TEST_CASE("polynomial right-hand sides are solved coefficient-wise") {
  Matrix m = Matrix::from_columns(2, std::vector<Vec>{v({1, 1})});
  LinearSolver s(m);
  PolyQ t = PolyQ::parameter("t");
  PolyVec rhs{PolyQ(2) * t + 1, PolyQ(2) * t + 1};
  auto ok = s.solve(rhs);
  REQUIRE(ok.solution);
  CHECK((*ok.solution)[0] == PolyQ(2) * t + 1);
  auto bad = s.solve(PolyVec{t, PolyQ(0)});
  CHECK_FALSE(bad.solution);
  CHECK(bad.unsolvable.size() == 1);
}

TEST_CASE("graded maps and preimages") {
  GradedVectorSpace space(2);
  space.set_names(0, {"1"});
  space.set_names(1, {"x", "y"});
  space.set_names(2, {"z"});
  GradedMap f(space, space, 1);
  Matrix m(1, 2);
  m.at(0, 0) = 2;
  f.set_matrix(1, m);
  CHECK(f.apply(HVec{1, v({1, 5})}) == HVec{2, v({2})});
  auto pre = solve_preimage(f, 1, v({4}));
  REQUIRE(pre);
  CHECK(f.apply(HVec{1, *pre}).coeffs == v({4}));
  CHECK(kernel(f, 1).dim() == 1);
  CHECK(space.index_of(1, "y") == 1u);
}
