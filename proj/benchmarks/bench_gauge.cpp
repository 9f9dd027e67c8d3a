#include "mcgauge/freealg.hpp"
#include "mcgauge/gauge.hpp"
#include "mcgauge/lie.hpp"
#include "mcgauge/ls_interval.hpp"
#include "mcgauge/text_format.hpp"
#include "mcgauge/trees.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <string>

namespace {

using namespace mcgauge;

const SpecDocument& load(const std::string& file)
{
    static std::map<std::string, SpecDocument> cache;
    auto it = cache.find(file);
    if (it == cache.end())
        it = cache.emplace(file, load_spec(std::string(MCGAUGE_FIXTURE_DIR) + "/" + file)).first;
    return it->second;
}

void route(benchmark::State& state, const std::string& method, const std::string& file, const std::string& x,
           const std::string& xi)
{
    const AlgebraSpec& spec = load(file).algebra;
    const GradedElement gx = parse_element(spec.basis(), x), gxi = parse_element(spec.basis(), xi);
    const MethodRegistry registry = default_registry();
    const GaugeMethod* m = registry.find(method);
    for (auto _ : state)
        benchmark::DoNotOptimize(m->apply(spec, gx, gxi));
}

BENCHMARK_CAPTURE(route, closed_f5, "closed", "f5.alg", "3 x", "u1 - 2 u3");
BENCHMARK_CAPTURE(route, trees_f5, "trees", "f5.alg", "3 x", "u1 - 2 u3");
BENCHMARK_CAPTURE(route, exp_f5, "exp", "f5.alg", "3 x", "u1 - 2 u3");
BENCHMARK_CAPTURE(route, cylinder_f5, "cylinder", "f5.alg", "3 x", "u1 - 2 u3");
BENCHMARK_CAPTURE(route, dga_d4, "dga", "d4.alg", "x", "u");
BENCHMARK_CAPTURE(route, trees_d4, "trees", "d4.alg", "x", "u");

void ls_build(benchmark::State& state)
{
    const int w = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ls_interval(w));
}
BENCHMARK(ls_build)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void ls_verify(benchmark::State& state)
{
    const LSPresentation ls = ls_interval(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_ls(ls));
}
BENCHMARK(ls_verify)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void bch_symbolic(benchmark::State& state)
{
    const FreeAlgebra s = bch_symbols(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(lie_rewrite(s, bch(s, s.generator(0), s.generator(1))));
}
BENCHMARK(bch_symbolic)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void rooted_trees(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_trees(static_cast<int>(state.range(0)), 4));
}
BENCHMARK(rooted_trees)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
