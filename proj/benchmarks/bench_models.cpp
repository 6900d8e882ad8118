#include "ratmod/analysis.hpp"
#include "ratmod/conf.hpp"
#include "ratmod/matrix.hpp"
#include "ratmod/presentation.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace ratmod;

namespace {

std::string sphere(int n)
{
    return "name = \"S" + std::to_string(n) + "\"\nrelations = [\"x^2\"]\n[[generators]]\nname = \"x\"\ndegree = " +
           std::to_string(n) + "\n[orientation]\ndegree = " + std::to_string(n) + "\nclass = \"x\"\n";
}

const std::string s3xs3 =
    "name = \"S3xS3\"\n[[generators]]\nname = \"y\"\ndegree = 3\n[[generators]]\nname = \"y'\"\ndegree = 3\n"
    "[orientation]\ndegree = 6\nclass = \"y*y'\"\n";

PdAlgebra load(const std::string& toml)
{
    const ExpandedPresentation e(parse_presentation(toml));
    return verify_pd(e.algebra(), *e.formal_dimension(), *e.fundamental_class());
}

Matrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Scalar(num(rng), den(rng));
    return m;
}

void BM_Reduce(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix m = random_matrix(n, n + 2, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_and_image(m));
}
BENCHMARK(BM_Reduce)->Arg(8)->Arg(16)->Arg(32);

void BM_LoadPresentation(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(load(s3xs3));
}
BENCHMARK(BM_LoadPresentation);

void BM_TensorCohomology(benchmark::State& state)
{
    const PdAlgebra p = load(s3xs3);
    for (auto _ : state) {
        const CdgaPtr t = tensor(p.algebra, p.algebra);
        benchmark::DoNotOptimize(Cohomology(*t).betti());
    }
}
BENCHMARK(BM_TensorCohomology);

void BM_HopfBundle(benchmark::State& state)
{
    const PdAlgebra s4 = load(sphere(4));
    const SparseVec e = SparseVec::basis(s4.algebra->space().index_of("x"));
    for (auto _ : state)
        benchmark::DoNotOptimize(conf2_disk_bundle(s4, e, 4));
}
BENCHMARK(BM_HopfBundle);

void BM_MasseySearch(benchmark::State& state)
{
    const PdAlgebra s4 = load(sphere(4));
    const CdgaPtr a =
        conf2_disk_bundle(s4, SparseVec::basis(s4.algebra->space().index_of("x")), 4).pretty_route.algebra();
    for (auto _ : state)
        benchmark::DoNotOptimize(nontrivial_massey_search(CohomologyRing(a)));
}
BENCHMARK(BM_MasseySearch);

void BM_PuncturedSphere(benchmark::State& state)
{
    const PdAlgebra p = load(sphere(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(conf2_punctured(p));
}
BENCHMARK(BM_PuncturedSphere)->Arg(4)->Arg(8)->Arg(16);

void BM_PuncturedS3xS3(benchmark::State& state)
{
    const PdAlgebra p = load(s3xs3);
    for (auto _ : state)
        benchmark::DoNotOptimize(conf2_punctured(p));
}
BENCHMARK(BM_PuncturedS3xS3);

}  // namespace

BENCHMARK_MAIN();
