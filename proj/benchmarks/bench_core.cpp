#include <symplaw/det_laws.hpp>
#include <symplaw/invariants.hpp>
#include <symplaw/symplectic.hpp>

#include <benchmark/benchmark.h>

using namespace symplaw;

static void BM_Pfaffian(benchmark::State &state)
{
	Rng rng(1);
	const auto n = static_cast<std::size_t>(state.range(0));
	QMatrix a = random_alternating(n, rng, 9);
	for (auto _ : state)
		benchmark::DoNotOptimize(pfaffian(a));
}
BENCHMARK(BM_Pfaffian)->DenseRange(4, 16, 4);

static void BM_DeterminantLaplace(benchmark::State &state)
{
	Rng rng(2);
	const auto n = static_cast<std::size_t>(state.range(0));
	QMatrix m = rng.matrix(n, n, 9);
	for (auto _ : state)
		benchmark::DoNotOptimize(detail::laplace_det(m));
}
BENCHMARK(BM_DeterminantLaplace)->DenseRange(4, 12, 4);

static void BM_DeterminantBareiss(benchmark::State &state)
{
	Rng rng(2);
	const auto n = static_cast<std::size_t>(state.range(0));
	QMatrix m = rng.matrix(n, n, 9);
	for (auto _ : state)
		benchmark::DoNotOptimize(detail::bareiss_det(m));
}
BENCHMARK(BM_DeterminantBareiss)->DenseRange(4, 16, 4);

static void BM_PolyDeterminant(benchmark::State &state)
{
	const auto n = static_cast<std::size_t>(state.range(0));
	PolyMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			m(i, j) = Poly::variable("x" + std::to_string((i + j) % 3)) + Poly(static_cast<int>(i * j));
	for (auto _ : state)
		benchmark::DoNotOptimize(mat_det(m));
}
BENCHMARK(BM_PolyDeterminant)->DenseRange(2, 6, 2);

static void BM_PfaffianCharPoly(benchmark::State &state)
{
	SymplecticContext ctx(static_cast<unsigned>(state.range(0)));
	Rng rng(3);
	QMatrix m = random_j_symmetric(ctx, rng, 5);
	for (auto _ : state)
		benchmark::DoNotOptimize(pfaffian_char_poly(ctx, m));
}
BENCHMARK(BM_PfaffianCharPoly)->DenseRange(1, 4, 1);

static void BM_Recursion(benchmark::State &state)
{
	SymplecticContext ctx(static_cast<unsigned>(state.range(0)));
	Rng rng(4);
	QMatrix m = random_j_symmetric(ctx, rng, 5);
	for (auto _ : state)
		benchmark::DoNotOptimize(pfaffian_coeffs_from_lambdas(lambdas_of(m)));
}
BENCHMARK(BM_Recursion)->DenseRange(1, 4, 1);

static void BM_InvariantOracle(benchmark::State &state)
{
	const auto d = static_cast<unsigned>(state.range(0));
	const auto m = static_cast<unsigned>(state.range(1));
	for (auto _ : state)
		benchmark::DoNotOptimize(multilinear_invariant_dim(d, m));
}
BENCHMARK(BM_InvariantOracle)->Args({1, 2})->Args({1, 3})->Args({2, 2})->Unit(benchmark::kMillisecond);

static void BM_TraceWordSpan(benchmark::State &state)
{
	const auto d = static_cast<unsigned>(state.range(0));
	const auto m = static_cast<unsigned>(state.range(1));
	for (auto _ : state)
		benchmark::DoNotOptimize(trace_word_span_dim(d, m));
}
BENCHMARK(BM_TraceWordSpan)->Args({1, 3})->Args({2, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
