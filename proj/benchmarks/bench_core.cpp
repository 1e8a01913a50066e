#include <benchmark/benchmark.h>

#include "lojex/exponent.hpp"
#include "lojex/numeric.hpp"
#include "lojex/parse.hpp"
#include "lojex/signature.hpp"
#include "lojex/unipoly.hpp"
#include "lojex/wfilter.hpp"

namespace {

using namespace lojex;

void BM_Parse(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_polynomial("y*(x^5 - x*y^12 + y^15)"));
}
BENCHMARK(BM_Parse);

void BM_BiPolyMultiply(benchmark::State& state) {
    BiPoly a = parse_polynomial("x^3 + x*y^6 + y^9");
    BiPoly b = parse_polynomial("x^5 - x*y^12 + y^15");
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_BiPolyMultiply);

void BM_SturmCount(benchmark::State& state) {
    // (u^2 - 1)(u^2 - 4)(u - 1/3): five simple real roots
    UniPoly p = UniPoly({Rational(-1), Rational(0), Rational(1)}) *
                UniPoly({Rational(-4), Rational(0), Rational(1)}) *
                UniPoly({Rational(-1, 3), Rational(1)});
    for (auto _ : state) benchmark::DoNotOptimize(sturm_real_root_count(p));
}
BENCHMARK(BM_SturmCount);

void BM_ComputeGolden(benchmark::State& state) {
    BiPoly p = parse_polynomial("y*(x^5 - x*y^12 + y^15)");
    WeightSystem ws = infer_weights(p);
    for (auto _ : state) {
        CaseClassification cls = classify(p, ws);
        benchmark::DoNotOptimize(lojasiewicz_exponent(p, ws, cls));
    }
}
BENCHMARK(BM_ComputeGolden);

void BM_PathOracle(benchmark::State& state) {
    BiPoly p = parse_polynomial("x^3 - x*y^6 + y^9");
    WeightSystem ws = infer_weights(p);
    for (auto _ : state) benchmark::DoNotOptimize(path_oracle(p, ws));
}
BENCHMARK(BM_PathOracle);

void BM_EstimateCoarse(benchmark::State& state) {
    BiPoly p = parse_polynomial("x^3 + x*y^6 + y^9");
    EstimateConfig cfg;
    cfg.num_radii = 4;
    cfg.samples_per_circle = 256;
    for (auto _ : state) benchmark::DoNotOptimize(estimate_exponent(p, cfg));
}
BENCHMARK(BM_EstimateCoarse);

}  // namespace

BENCHMARK_MAIN();
