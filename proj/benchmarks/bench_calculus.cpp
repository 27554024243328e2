#include <benchmark/benchmark.h>

#include "holoconn/families.hpp"
#include "holoconn/killing.hpp"
#include "holoconn/projective.hpp"

using namespace holoconn;

namespace {

const Expr xi = Expr::variable(2);
const ChartPoint origin{Scalar(0), Scalar(0)};

EllipticFamilyData family_data(int degree) {
  Polynomial f, g;
  for (int k = 0; k <= degree; ++k) {
    f.add_term(Monomial{0, k}, Scalar(k + 1));
    g.add_term(Monomial{0, k}, Scalar(k % 3 - 1));
  }
  return EllipticFamilyData(Expr(f), Expr(g), Expr(f) - Expr(g));
}

void BM_EllipticCurvature(benchmark::State& state) {
  EllipticFamilyData d = family_data(static_cast<int>(state.range(0)));
  Connection c = elliptic_family(d);
  for (auto _ : state) benchmark::DoNotOptimize(curvature(c));
}
BENCHMARK(BM_EllipticCurvature)->Arg(2)->Arg(4)->Arg(8);

void BM_LiouvilleInvariants(benchmark::State& state) {
  Connection c = elliptic_family(family_data(static_cast<int>(state.range(0))));
  GeodesicOde ode = geodesic_ode(c);
  for (auto _ : state) benchmark::DoNotOptimize(liouville_invariants(ode));
}
BENCHMARK(BM_LiouvilleInvariants)->Arg(2)->Arg(4);

void BM_KillingJetSpace(benchmark::State& state) {
  Connection c = elliptic_family(EllipticFamilyData(xi, Expr(0), Expr(0)));
  int order = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(killing_jet_space(c, origin, order));
}
BENCHMARK(BM_KillingJetSpace)->Arg(4)->Arg(6)->Arg(8);

void BM_RationalReduction(benchmark::State& state) {
  // exercises gcd-heavy arithmetic: derivative of a nested quotient
  const Expr z = Expr::variable(1);
  Expr e = (z.pow(3) + xi.pow(2) + Expr(1)) / (z * xi - Expr(2));
  e = (e + Expr(1) / (z + xi)) / (e - xi);
  for (auto _ : state) benchmark::DoNotOptimize(diff(diff(e, 1), 2));
}
BENCHMARK(BM_RationalReduction);

}  // namespace

BENCHMARK_MAIN();
