#include <benchmark/benchmark.h>

#include <random>

#include "lgr/chow.hpp"
#include "lgr/grassmann.hpp"
#include "lgr/matrix.hpp"
#include "lgr/pde_analysis.hpp"
#include "lgr/symplectic.hpp"

namespace {

lgr::Rational random_rational(std::mt19937& gen) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return lgr::Rational(num(gen), den(gen));
}

lgr::Matrix random_matrix(std::mt19937& gen, int rows, int cols) {
  lgr::Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_rational(gen);
  return m;
}

lgr::SymMatrix random_sym(std::mt19937& gen, int n) {
  lgr::SymMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) h.at(i, j) = random_rational(gen);
  return h;
}

void BM_Plucker(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 gen(42);
  const lgr::SymMatrix h = random_sym(gen, n);
  for (auto _ : state) {
    auto v = lgr::plucker(h);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_Plucker)->Arg(3)->Arg(4)->Arg(5);

void BM_ExactDet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 gen(43);
  const lgr::Matrix m = random_matrix(gen, n, n);
  for (auto _ : state) {
    auto d = lgr::det(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_ExactDet)->Arg(6)->Arg(10)->Arg(14);

void BM_MaTestChow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 gen(44);
  const lgr::PdePolynomial f =
      lgr::chow_transform(lgr::ChowSubspace(random_matrix(gen, n, n)));
  for (auto _ : state) {
    bool ok = lgr::ma_test(f);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_MaTestChow)->Arg(2)->Arg(3)->Arg(4);

void BM_ActionWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 gen(45);
  lgr::Matrix c = random_matrix(gen, n, n);
  lgr::Matrix b = random_matrix(gen, n, n);
  const lgr::SymplecticMatrix word =
      lgr::SymplecticMatrix::translate(c + c.transpose()) *
      lgr::SymplecticMatrix::gl(lgr::Matrix::identity(n)) *
      lgr::SymplecticMatrix::shear(b + b.transpose());
  const lgr::SymMatrix h = random_sym(gen, n);
  for (auto _ : state) {
    try {
      auto out = lgr::action(word, h);
      benchmark::DoNotOptimize(out);
    } catch (const lgr::Error&) {
      state.SkipWithError("left the big cell");
      break;
    }
  }
}
BENCHMARK(BM_ActionWord)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
