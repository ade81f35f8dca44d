#include <benchmark/benchmark.h>

#include "gratuity/breakeven.hpp"
#include "gratuity/loan.hpp"
#include "gratuity/scenario.hpp"

namespace {

const gratuity::TaxPolicy kPolicy = gratuity::TaxPolicy::botswana();

void BM_BreakevenContinuous(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gratuity::breakeven_installments_continuous(n, kPolicy));
}
BENCHMARK(BM_BreakevenContinuous)->Arg(1)->Arg(12)->Arg(365);

void BM_DecisionThreshold(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gratuity::decision_threshold(12, kPolicy));
}
BENCHMARK(BM_DecisionThreshold);

void BM_AmortizationSchedule(benchmark::State& state) {
    const gratuity::LoanTerms loan(100000.0, static_cast<int>(state.range(0)), 12, 0.12);
    for (auto _ : state) benchmark::DoNotOptimize(gratuity::amortization_schedule(loan));
    state.SetItemsProcessed(state.iterations() * loan.payment_count());
}
BENCHMARK(BM_AmortizationSchedule)->Arg(1)->Arg(20)->Arg(30);

void BM_PhiCurve(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gratuity::phi_curve(12, kPolicy, 0.0, 0.5, 201));
}
BENCHMARK(BM_PhiCurve);

void BM_Compare(benchmark::State& state) {
    const gratuity::Scenario scenario{kPolicy, gratuity::GratuityTerms(12000.0, 12),
                                      gratuity::SavingsOffer{0.05, gratuity::CompoundingMode::Simple},
                                      gratuity::LoanTerms(100000.0, 20, 12, 0.12)};
    for (auto _ : state) benchmark::DoNotOptimize(gratuity::compare(scenario));
}
BENCHMARK(BM_Compare);

} // namespace

BENCHMARK_MAIN();
