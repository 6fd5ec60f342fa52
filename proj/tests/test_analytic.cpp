#include "doctest.h"

#include "splitcm/analytic.hpp"

#include <algorithm>

using namespace splitcm;

namespace {

// log10 of |x - y| relative to |y|
double rel_err(Complex const & x, Complex const & y)
{
    Real const d = (x - y).abs();
    if (d.is_zero())
        return -1e9;
    return d.log10_abs() - y.abs().log10_abs();
}

// plain product prod (1 - q^n), independent of the pentagonal series
Real eta24_product(long N, PrecisionContext const & ctx)
{
    mpfr_prec_t const prec = ctx.bits();
    Real const q = eta_nome(N, ctx);
    Real prod(1, prec);
    Real qn = q;
    Real const tiny = power_of_ten(-(ctx.digits() + 20), prec);
    while (abs(qn) > tiny) {
        prod *= Real(1, prec) - qn;
        qn *= q;
    }
    return abs(q) * pow(abs(prod), 24);
}

} // namespace

TEST_CASE("precision context")
{
    CHECK_THROWS_AS(PrecisionContext(10), InvalidInput);
    PrecisionContext const c(100);
    CHECK(c.bits() >= 333);
    CHECK(c.doubled().digits() == 200);
}

TEST_CASE("odd characteristics")
{
    auto const all = all_characteristics();
    CHECK(all.size() == 16);
    auto const odd = odd_characteristics();
    REQUIRE(odd.size() == 6);
    std::vector<ThetaCharacteristic> const want{{{0, 1}, {0, 1}}, {{0, 1}, {1, 1}}, {{1, 0}, {1, 0}},
                                                {{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}, {{1, 1}, {1, 0}}};
    CHECK(odd == want);
    long n_even = std::count_if(all.begin(), all.end(), [](auto const & c) { return !c.is_odd(); });
    CHECK(n_even == 10);
}

TEST_CASE("eta: series against product")
{
    PrecisionContext const ctx(100);
    for (long N : {3L, 7L, 43L, 163L}) {
        Real const a = eta24_abs(N, ctx);
        Real const b = eta24_product(N, ctx);
        Real const rel = abs(a - b) / b;
        CHECK((rel.is_zero() || rel.log10_abs() < -90));
    }
    // q = -exp(-pi sqrt(163)), about -3.8e-18
    Real const q = eta_nome(163, ctx);
    CHECK(q.sign() < 0);
    CHECK(q.to_double() == doctest::Approx(-3.8115e-18).epsilon(1e-3));
}

TEST_CASE("theta gradient: precision and truncation")
{
    HermitianForm const f(163, 3, 1, 2, 14);
    PeriodMatrix const Z = period_matrix(f);
    PrecisionContext const lo(60);
    PrecisionContext const hi = lo.doubled();
    for (auto const & ch : odd_characteristics()) {
        auto const g_lo = theta_gradient(ch, Z, lo);
        auto const g_hi = theta_gradient(ch, Z, hi);
        for (int k = 0; k < 2; ++k) {
            if (g_hi[k].abs().log10_abs() < -200)
                continue;
            CHECK(rel_err(g_lo[k], g_hi[k]) < -55);
        }
        long const R = theta_radius(Z, lo);
        auto const g_wide = theta_gradient(ch, Z, lo, R + 2);
        for (int k = 0; k < 2; ++k)
            if (g_lo[k].abs().log10_abs() > -200)
                CHECK(rel_err(g_lo[k], g_wide[k]) < -55);
    }
    CHECK_THROWS_AS(theta_gradient({{0, 0}, {0, 0}}, Z, lo), InvalidInput);
    CHECK(theta_tail_log10(Z, theta_radius(Z, lo)) <= -65);
}

TEST_CASE("theta gradient: diagonal period matrix splits")
{
    // s = 0: every odd characteristic factors into an odd and an even one
    HermitianForm const f(43, 1, 1, 0, 11);
    PeriodMatrix const Z = period_matrix(f);
    REQUIRE(Z.is_diagonal());
    PrecisionContext const ctx(50);
    int pure_u1 = 0, pure_u2 = 0;
    for (auto const & ch : odd_characteristics()) {
        auto const g = theta_gradient(ch, Z, ctx);
        bool const z1 = g[0].abs().log10_abs() < -45;
        bool const z2 = g[1].abs().log10_abs() < -45;
        CHECK(z1 != z2);
        if (z2)
            ++pure_u1;
        if (z1)
            ++pure_u2;
    }
    CHECK(pure_u1 == 3);
    CHECK(pure_u2 == 3);
    SexticC const s = bolza_klein_sextic(Z, ctx);
    double const big = s.c[3].abs().log10_abs();
    for (int k = 0; k < 7; ++k)
        if (k != 3)
            CHECK(s.c[k].abs().log10_abs() < big - 40);
}

TEST_CASE("sextic assembly is independent of factor order")
{
    HermitianForm const f(43, 3, 1, 2, 4);
    PeriodMatrix const Z = period_matrix(f);
    PrecisionContext const ctx(50);
    std::vector<std::array<Complex, 2>> grads;
    for (auto const & ch : odd_characteristics())
        grads.push_back(theta_gradient(ch, Z, ctx));
    SexticC const a = sextic_from_gradients(grads);
    std::reverse(grads.begin(), grads.end());
    std::swap(grads[1], grads[4]);
    SexticC const b = sextic_from_gradients(grads);
    for (int k = 0; k < 7; ++k)
        CHECK(rel_err(b.c[k], a.c[k]) < -45);
    grads.pop_back();
    CHECK_THROWS_AS(sextic_from_gradients(grads), InvalidInput);
}
