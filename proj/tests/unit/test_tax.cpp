#include <doctest.h>

#include <random>

#include "gratuity/error.hpp"
#include "gratuity/tax.hpp"

using namespace gratuity;

TEST_CASE("net year-end amount") {
    CHECK(net_year_end(1.0, TaxPolicy::botswana()) == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
    CHECK(net_year_end(1000.0, TaxPolicy(0.0, 0.25)) == doctest::Approx(750.0).epsilon(1e-15));
    // 0.5 * 1200 + 0.5 * 0.7 * 1200
    CHECK(net_year_end(1200.0, TaxPolicy(0.5, 0.3)) == doctest::Approx(1020.0).epsilon(1e-15));
}

TEST_CASE("net early lump and installments") {
    CHECK(net_early_lump(1.0, TaxPolicy::botswana()) == 0.75);
    CHECK(net_early_lump(500.0, TaxPolicy(1.0 / 3.0, 0.0)) == 500.0);
    CHECK(net_early_lump(1200.0, TaxPolicy(0.0, 1.0 / 3.0)) == doctest::Approx(800.0).epsilon(1e-15));

    CHECK(net_installment(1200.0, 12, TaxPolicy::botswana()) == doctest::Approx(75.0).epsilon(1e-15));
    CHECK(net_installment(1.0, 1, TaxPolicy(0.0, 0.0)) == 1.0);
    CHECK(net_installment(1.0, 12, TaxPolicy::botswana()) == doctest::Approx(0.0625).epsilon(1e-15));
}

TEST_CASE("parameter domain errors name the field") {
    CHECK_THROWS_AS(TaxPolicy(1.0, 0.25), DomainError);
    CHECK_THROWS_AS(TaxPolicy(0.3, -0.1), DomainError);
    CHECK_THROWS_AS(TaxPolicy(std::nan(""), 0.1), DomainError);
    try {
        TaxPolicy(0.3, 1.0);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(e.field() == "delta");
    }
    CHECK_THROWS_AS(net_installment(1.0, 0, TaxPolicy::botswana()), DomainError);
    CHECK_THROWS_AS(net_year_end(0.0, TaxPolicy::botswana()), DomainError);
    CHECK_THROWS_AS(GratuityTerms(-1.0, 12), DomainError);
    CHECK_THROWS_AS(GratuityTerms(1.0, 0), DomainError);
    CHECK(GratuityTerms(1200.0, 12).installment() == 100.0);
}

TEST_CASE("bracket schedule reduces to an effective rate") {
    const BracketSchedule two({{0.0, 0.0}, {36000.0, 0.25}});
    CHECK(effective_policy(48000.0, two, 1.0 / 3.0).delta() == doctest::Approx(3000.0 / 48000.0).epsilon(1e-15));
    CHECK(effective_policy(48000.0, two, 1.0 / 3.0).q() == 1.0 / 3.0);
    CHECK(effective_policy(36000.0, two, 1.0 / 3.0).delta() == 0.0);

    const BracketSchedule flat({{0.0, 0.25}});
    for (double gross : {1.0, 123.45, 1e6}) CHECK(effective_policy(gross, flat, 1.0 / 3.0).delta() == 0.25);

    CHECK_THROWS_AS(BracketSchedule({}), DomainError);
    CHECK_THROWS_AS(BracketSchedule({{100.0, 0.1}}), DomainError);
    CHECK_THROWS_AS(BracketSchedule({{0.0, 0.1}, {0.0, 0.2}}), DomainError);
    CHECK_THROWS_AS(BracketSchedule({{0.0, 0.1}, {10.0, 1.2}}), DomainError);
    CHECK_THROWS_AS(effective_policy(0.0, flat, 0.3), DomainError);
    // Rates need not be monotone.
    CHECK_NOTHROW(BracketSchedule({{0.0, 0.3}, {10.0, 0.1}}));
}

TEST_CASE("property: tax relief is worth exactly q delta G") {
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> frac(1e-6, 1.0 - 1e-6), amount(1.0, 1e6);
    std::uniform_int_distribution<int> count(1, 365);
    for (int i = 0; i < 1000; ++i) {
        const TaxPolicy p(frac(rng), frac(rng));
        const double G = amount(rng);
        const int n = count(rng);
        const double diff = net_year_end(G, p) - net_early_lump(G, p);
        CHECK(diff > 0.0);
        CHECK(diff == doctest::Approx(p.q() * p.delta() * G).epsilon(1e-9));
        CHECK(std::abs(n * net_installment(G, n, p) - net_early_lump(G, p)) <= 1e-12 * net_early_lump(G, p));
    }
}

TEST_CASE("property: effective rate bounded and non-decreasing for progressive schedules") {
    const BracketSchedule progressive({{0.0, 0.0}, {36000.0, 0.05}, {72000.0, 0.125}, {108000.0, 0.25}});
    double previous = 0.0;
    for (double gross = 1000.0; gross <= 500000.0; gross += 997.0) {
        const double d = effective_policy(gross, progressive, 0.2).delta();
        CHECK(d >= previous - 1e-15);
        CHECK(d >= 0.0);
        CHECK(d <= 0.25);
        previous = d;
    }
}
