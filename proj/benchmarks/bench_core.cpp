#include <benchmark/benchmark.h>

#include "germlab/models.hpp"
#include "germlab/multiple_points.hpp"

using namespace germlab;

namespace {

Ideal cyclic(int n) {
    std::vector<std::string> vars;
    for (int i = 0; i < n; ++i)
        vars.push_back("x" + std::to_string(i));
    std::vector<Polynomial> gens;
    for (int d = 1; d < n; ++d) {
        Polynomial g(vars);
        for (int i = 0; i < n; ++i) {
            Polynomial term = Polynomial::constant(vars, 1);
            for (int j = 0; j < d; ++j)
                term = term * Polynomial::variable(vars, vars[(i + j) % n]);
            g = g + term;
        }
        gens.push_back(g);
    }
    Polynomial prod = Polynomial::constant(vars, 1);
    for (const auto& v : vars)
        prod = prod * Polynomial::variable(vars, v);
    gens.push_back(prod - Polynomial::constant(vars, 1));
    return Ideal(vars, gens);
}

MapGerm cuspidal_edge() {
    Branch b;
    b.vars = {"x", "y"};
    b.components = {parse_polynomial("x", b.vars), parse_polynomial("y^2", b.vars),
                    parse_polynomial("y^3", b.vars)};
    return MapGerm(2, 3, {b});
}

void BM_GroebnerCyclic(benchmark::State& state) {
    Ideal i = cyclic(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Ideal b = groebner_basis(i, MonomialOrder::grevlex());
        benchmark::DoNotOptimize(b.gens().size());
    }
}
BENCHMARK(BM_GroebnerCyclic)->Arg(3)->Arg(4);

void BM_SaturateStrictDoublePoints(benchmark::State& state) {
    MapGerm bg = bigerm_from_hypersurface(parse_polynomial("x*y"));
    for (auto _ : state) {
        auto spaces = strict_multiple_points(bg, 2);
        benchmark::DoNotOptimize(spaces.size());
    }
}
BENCHMARK(BM_SaturateStrictDoublePoints);

void BM_DividedDifferences(benchmark::State& state) {
    MapGerm edge = cuspidal_edge();
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MultiplePointSpace mps = gaffney_multiple_points(edge, k);
        benchmark::DoNotOptimize(mps.ideal.gens().size());
    }
}
BENCHMARK(BM_DividedDifferences)->Arg(2)->Arg(3)->Arg(4);

void BM_IcssBigerm(benchmark::State& state) {
    std::vector<int> betti{1};
    betti.push_back(static_cast<int>(state.range(0)));
    ICSSModel m = bigerm_pair_model(betti, true);
    for (auto _ : state) {
        IcssResult res = run_icss(m);
        benchmark::DoNotOptimize(res.total_betti.size());
    }
}
BENCHMARK(BM_IcssBigerm)->Arg(1)->Arg(8)->Arg(32);

void BM_JordanData(benchmark::State& state) {
    size_t n = static_cast<size_t>(state.range(0));
    QMat h(n, n);
    // companion of (s - 1)^n conjugated by a fixed unipotent
    qpoly::Poly p{Rational(1)};
    for (size_t i = 0; i < n; ++i)
        p = qpoly::mul(p, qpoly::Poly{-1, 1});
    for (size_t i = 1; i < n; ++i)
        h.at(i, i - 1) = 1;
    for (size_t i = 0; i < n; ++i)
        h.at(i, n - 1) = -p[i];
    for (auto _ : state) {
        JordanModule data = jordan_data(h);
        benchmark::DoNotOptimize(data.max_block_size());
    }
}
BENCHMARK(BM_JordanData)->Arg(4)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
