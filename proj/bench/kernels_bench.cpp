// Serial reference kernels against their OpenMP counterparts.

#include "germforge/ae_calculus.hpp"
#include "germforge/echelon.hpp"
#include "germforge/jet_space.hpp"
#include "germforge/local_algebra.hpp"

#include <benchmark/benchmark.h>

using namespace germforge;

namespace {

const char* germs[] = {"y^2; y^5 + z^3*y; z", "x; y; t^5 + x*t + y^2*t^2 + y*t^3", "x; t^4 + x^3*t + x*t^2"};

Execution exec_of(const benchmark::State& s) { return s.range(2) ? Execution::parallel : Execution::serial; }

void tangent_assembly(benchmark::State& state) {
  const auto f = parse_map_germ(germs[state.range(0)]);
  const MonomialIndex index(f.n(), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tangent_rows(f, index, exec_of(state)));
  }
}

void tangent_echelon(benchmark::State& state) {
  const auto f = parse_map_germ(germs[state.range(0)]);
  const MonomialIndex index(f.n(), static_cast<unsigned>(state.range(1)));
  const auto rows = tangent_rows(f, index, Execution::serial);
  const auto columns = index.size() * f.p();
  for (auto _ : state) {
    benchmark::DoNotOptimize(echelon(rows, columns, exec_of(state)));
  }
  state.counters["rows"] = static_cast<double>(rows.size());
}

void jet_model(benchmark::State& state) {
  const auto f = parse_map_germ(germs[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(JetModel(f, static_cast<unsigned>(state.range(1)), {exec_of(state), false}).codim());
  }
}

void milnor_quotient(benchmark::State& state) {
  const auto g = parse_poly("x^3 + y^6 + x^2*y^2 + z^4", VarContext::make(std::vector<std::string>{"x", "y", "z"}));
  const auto jac = jacobian(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        truncated_quotient(jac, g.context_ptr(), static_cast<unsigned>(state.range(1)), exec_of(state)));
  }
}

// Arguments: germ index, jet order, 0 = serial / 1 = OpenMP.
void orders(benchmark::internal::Benchmark* b) {
  for (int g = 0; g < 3; ++g) {
    for (int k : {6, 9}) {
      for (int p : {0, 1}) {
        b->Args({g, k, p});
      }
    }
  }
  b->Unit(benchmark::kMillisecond);
}

} // namespace

BENCHMARK(tangent_assembly)->Apply(orders);
BENCHMARK(tangent_echelon)->Apply(orders);
BENCHMARK(jet_model)->Apply(orders);
BENCHMARK(milnor_quotient)->Args({0, 10, 0})->Args({0, 10, 1})->Args({0, 14, 0})->Args({0, 14, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
