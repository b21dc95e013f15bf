#include <benchmark/benchmark.h>

#include <random>

#include "qseries/identities.hpp"
#include "qseries/lattice.hpp"
#include "qseries/parser.hpp"
#include "qseries/products.hpp"

namespace bm = benchmark;
using namespace qseries;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, long order) {
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<mpz_class> v(static_cast<std::size_t>(order) + 1);
    for (auto& c : v) c = coeff(rng);
    return TruncatedSeries(std::move(v));
}

} // namespace

static void BM_MulDense(bm::State& st) {
    const long order = st.range(0);
    std::mt19937_64 rng(1);
    const auto f = random_series(rng, order);
    const auto g = random_series(rng, order);
    for (auto _ : st) bm::DoNotOptimize(f * g);
}
BENCHMARK(BM_MulDense)->Arg(256)->Arg(1024)->Arg(4096)->Unit(bm::kMillisecond);

static void BM_MulTheta(bm::State& st) {
    const long order = st.range(0);
    const auto f = theta_jtp(50, 10, true, order);
    const auto g = theta_jtp(50, 30, true, order);
    for (auto _ : st) bm::DoNotOptimize(f * g);
}
BENCHMARK(BM_MulTheta)->Arg(1024)->Arg(8192)->Unit(bm::kMicrosecond);

static void BM_InvertX(bm::State& st) {
    const long order = st.range(0);
    const auto x = named("X", order);
    for (auto _ : st) bm::DoNotOptimize(invert(x));
}
BENCHMARK(BM_InvertX)->Arg(512)->Arg(2048)->Unit(bm::kMillisecond);

static void BM_EulerProduct(bm::State& st) {
    const long order = st.range(0);
    for (auto _ : st) bm::DoNotOptimize(expand_pochhammer({+1, 1, 1}, order));
}
BENCHMARK(BM_EulerProduct)->Arg(1024)->Arg(4096)->Unit(bm::kMillisecond);

static void BM_ThetaSum(bm::State& st) {
    const long order = st.range(0);
    for (auto _ : st) bm::DoNotOptimize(theta_jtp(5, 1, true, order));
}
BENCHMARK(BM_ThetaSum)->Arg(2048)->Arg(65536)->Unit(bm::kMicrosecond);

static void BM_CosetDissection(bm::State& st) {
    const QuadForm2 f{5, 1, 5, 3, 0};
    const CosetSystem det5{{2, 1}, {-1, 2}, {{0, 0}, {1, 0}, {0, -1}, {0, 1}, {-1, 0}}};
    for (auto _ : st) bm::DoNotOptimize(dissect_via_cosets(f, {1, 0, 0}, det5, 10, st.range(0)));
}
BENCHMARK(BM_CosetDissection)->Arg(500)->Arg(2000)->Unit(bm::kMillisecond);

static void BM_VerifyComponentChain(bm::State& st) {
    for (auto _ : st)
        bm::DoNotOptimize(component_factorization_check(Factorization::X2, st.range(0)));
}
BENCHMARK(BM_VerifyComponentChain)->Arg(500)->Arg(1000)->Unit(bm::kMillisecond);

static void BM_ParseLongExpression(bm::State& st) {
    std::string text = "1";
    for (int i = 0; i < 200; ++i) text += " + q^" + std::to_string(i) + "*X*Rcal^-2";
    for (auto _ : st) bm::DoNotOptimize(parse(text));
}
BENCHMARK(BM_ParseLongExpression)->Unit(bm::kMicrosecond);

BENCHMARK_MAIN();
