#include "ainf/bar.hpp"
#include "ainf/dga_io.hpp"
#include "ainf/massey.hpp"

#include <benchmark/benchmark.h>

using namespace ainf;

namespace {

std::string data(const std::string& name) { return std::string(AINF_DATA_DIR) + "/" + name; }

struct Quadruple {
  SourceFile src = load_source(data("example-2.6.dga"));
  Dga dga = build_dga(src.spec);
  std::shared_ptr<Contraction> table = std::make_shared<Contraction>(
      contraction_from_decomposition(dga, decomposition_from_table(*src.decomposition, dga)));
};

const Quadruple& quadruple() {
  static const Quadruple q;
  return q;
}

std::vector<HVec> generator_classes(const Dga& dga, const Cohomology& h, std::initializer_list<const char*> names) {
  std::vector<HVec> out;
  for (const char* n : names) {
    HVec g = dga.generator(n);
    out.push_back(HVec{g.degree, *h.class_of(g.degree, g.coeffs)});
  }
  return out;
}

void BM_BuildDga(benchmark::State& state) {
  const SourceFile& src = quadruple().src;
  for (auto _ : state) benchmark::DoNotOptimize(build_dga(src.spec));
}

void BM_Contraction(benchmark::State& state) {
  const Quadruple& q = quadruple();
  for (auto _ : state) benchmark::DoNotOptimize(contraction_from_decomposition(q.dga, canonical_decomposition(q.dga)));
}

void BM_Transfer(benchmark::State& state) {
  const Quadruple& q = quadruple();
  const int arity = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(transfer_ainfinity(q.table, arity));
}

void BM_StasheffCheck(benchmark::State& state) {
  TransferResult tr = transfer_ainfinity(quadruple().table, 4);
  for (auto _ : state) benchmark::DoNotOptimize(check_stasheff(*tr.structure, 4));
}

void BM_BarSquareZero(benchmark::State& state) {
  TransferResult tr = transfer_ainfinity(quadruple().table, 4);
  BarSlice bar = build_bar(tr.structure, 4);
  for (auto _ : state) benchmark::DoNotOptimize(check_square_zero(bar));
}

void BM_SymbolicMassey(benchmark::State& state) {
  const Quadruple& q = quadruple();
  const Cohomology& h = q.table->cohomology();
  auto xs = generator_classes(q.dga, h, {"a01", "a12", "a23", "a34"});
  for (auto _ : state) benchmark::DoNotOptimize(higher_massey(q.dga, h, xs));
}

}  // namespace

BENCHMARK(BM_BuildDga)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Contraction)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Transfer)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StasheffCheck)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BarSquareZero)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymbolicMassey)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
