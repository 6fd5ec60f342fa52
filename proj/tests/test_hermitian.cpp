#include "doctest.h"

#include "splitcm/hermitian.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace splitcm;

namespace {

std::vector<HermitianForm> table1()
{
    long const N = 163;
    return {
        {N, 1, 1, 0, 41},  {N, 2, 1, 2, 21},  {N, 3, -1, 2, 14}, {N, 3, 1, 2, 14},
        {N, 4, -3, 2, 11}, {N, 4, 3, 2, 11},  {N, 5, -1, 4, 9},  {N, 5, 1, 4, 9},
        {N, 6, -5, 2, 8},  {N, 6, -1, 2, 7},  {N, 6, 1, 2, 7},   {N, 6, 5, 2, 8},
        {N, 7, -5, 6, 8},  {N, 7, 5, 6, 8},
    };
}

std::vector<Sl2GaussianGen> random_word(std::mt19937 & rng, int max_len)
{
    std::vector<Sl2GaussianGen> w;
    int const len = 1 + static_cast<int>(rng() % max_len);
    for (int i = 0; i < len; ++i) {
        switch (rng() % 3) {
        case 0: {
            long const x = static_cast<long>(rng() % 7) - 3;
            long const y = static_cast<long>(rng() % 7) - 3;
            w.push_back(gen::Translate{{x, y}});
            break;
        }
        case 1: w.push_back(gen::Invert{}); break;
        default: w.push_back(gen::NegateB{}); break;
        }
    }
    return w;
}

std::map<long, std::pair<long, long>> const table2 = {
    {3, {1, 1}}, {7, {1, 1}}, {11, {2, 2}}, {19, {2, 2}},
    {43, {4, 3}}, {67, {6, 4}}, {163, {14, 8}},
};

} // namespace

TEST_CASE("form validation")
{
    CHECK_NOTHROW(HermitianForm(43, 2, 1, 2, 6));
    CHECK_THROWS_AS(HermitianForm(43, 2, 1, 2, 7), InvalidInput);   // wrong discriminant
    CHECK_THROWS_AS(HermitianForm(43, -1, 1, 0, -11), InvalidInput); // not positive
    CHECK_THROWS_AS(HermitianForm(15, 1, 1, 0, 4), InvalidInput);    // composite N
    CHECK_THROWS_AS(HermitianForm(13, 1, 1, 0, 4), InvalidInput);    // N = 1 mod 4
    CHECK(parse_form(43, "3,1,2,4") == HermitianForm(43, 3, 1, 2, 4));
    CHECK_THROWS_AS(parse_form(43, "3,1,2"), InvalidInput);
    CHECK_THROWS_AS(parse_form(43, "3,x,2,4"), InvalidInput);
}

TEST_CASE("enumerate_reduced")
{
    CHECK(enumerate_reduced(43) == std::vector<HermitianForm>{{43, 1, 1, 0, 11},
                                                              {43, 2, 1, 2, 6},
                                                              {43, 3, -1, 2, 4},
                                                              {43, 3, 1, 2, 4}});
    CHECK(enumerate_reduced(163) == table1());
    CHECK(enumerate_reduced(3) == std::vector<HermitianForm>{{3, 1, 1, 0, 1}});
    CHECK_THROWS_AS(enumerate_reduced(15), InvalidInput);
    CHECK_THROWS_AS(enumerate_reduced(17), InvalidInput);
}

TEST_CASE("class and type numbers against the tabulated values")
{
    for (auto const & [N, nt] : table2) {
        CAPTURE(N);
        CHECK(static_cast<long>(enumerate_reduced(N).size()) == nt.first);
        CHECK(class_number_formula(N) == nt.first);
        CHECK(type_number(N) == nt.second);
    }
    // the formula holds beyond the class-number-one list
    for (long N : {23L, 31L, 47L, 59L, 71L, 79L, 83L, 103L, 107L, 127L, 131L, 139L, 151L,
                   167L, 179L, 191L, 199L, 211L, 223L, 227L, 239L, 251L, 263L}) {
        CAPTURE(N);
        CHECK(static_cast<long>(enumerate_reduced(N).size()) == class_number_formula(N));
    }
}

TEST_CASE("iota")
{
    CHECK(iota(HermitianForm(43, 3, 1, 2, 4)) == HermitianForm(43, 3, -1, 2, 4));
    CHECK(iota(HermitianForm(43, 1, 1, 0, 11)) == HermitianForm(43, 1, -1, 0, 11));
    for (auto const & f : table1())
        CHECK(iota(iota(f)) == f);
}

TEST_CASE("rep_point")
{
    auto p = rep_point(HermitianForm(163, 1, 1, 0, 41));
    CHECK(p.x == BigRational(1, 2));
    CHECK(p.y == 0);
    CHECK(p.t2 == BigRational(163, 4));
    p = rep_point(HermitianForm(43, 2, 1, 2, 6));
    CHECK(p.x == BigRational(1, 4));
    CHECK(p.y == BigRational(1, 2));
    CHECK(p.t2 == BigRational(43, 16));
    p = rep_point(HermitianForm(163, 7, 5, 6, 8));
    CHECK(p.x == BigRational(5, 14));
    CHECK(p.y == BigRational(3, 7));
    CHECK(p.t2 == BigRational(163, 196));
}

TEST_CASE("enumerated forms lie in the closed fundamental domain")
{
    for (long N : {3L, 7L, 11L, 19L, 43L, 67L, 163L, 227L, 499L}) {
        for (auto const & f : enumerate_reduced(N)) {
            CAPTURE(f);
            CHECK(f.discriminant() == -N);
            CHECK(mpz_odd_p(f.r().get_mpz_t()));
            CHECK(mpz_even_p(f.s().get_mpz_t()));
            auto const w = rep_point(f);
            CHECK(w.height2() >= 1);
            CHECK(abs(w.x) <= BigRational(1, 2));
            CHECK(w.y >= 0);
            CHECK(w.y <= BigRational(1, 2));
            CHECK(is_reduced(f));
        }
    }
}

TEST_CASE("is_reduced")
{
    CHECK(is_reduced(HermitianForm(43, 2, 1, 2, 6)));
    CHECK_FALSE(is_reduced(HermitianForm(43, 1, -1, 0, 11)));
    CHECK(is_reduced(HermitianForm(163, 6, 5, 2, 8)));
    CHECK_FALSE(is_reduced(HermitianForm(43, 11, -1, 0, 1)));
    CHECK_FALSE(is_reduced(HermitianForm(43, 2, -1, 2, 6)));
}

TEST_CASE("apply_generator")
{
    HermitianForm const f(43, 1, 1, 0, 11);
    CHECK(apply_generator(f, gen::NegateB{}) == HermitianForm(43, 1, -1, 0, 11));
    CHECK(apply_generator(f, gen::Invert{}) == HermitianForm(43, 11, -1, 0, 1));

    SUBCASE("translation moves the representative point by lambda")
    {
        HermitianForm const g(43, 3, 1, 2, 4);
        auto const w = rep_point(g);
        auto const h = apply_generator(g, gen::Translate{{2, -1}});
        auto const w2 = rep_point(h);
        CHECK(w2.x == w.x + 2);
        CHECK(w2.y == w.y - 1);
        CHECK(w2.t2 == w.t2);
    }
    SUBCASE("inversion inverts |w|^2")
    {
        for (auto const & g : enumerate_reduced(163)) {
            auto const h = apply_generator(g, gen::Invert{});
            CHECK(rep_point(h).height2() * rep_point(g).height2() == 1);
        }
    }
    SUBCASE("discriminant preserved along random words")
    {
        std::mt19937 rng(43);
        for (auto const & g : enumerate_reduced(43)) {
            for (int k = 0; k < 1000; ++k) {
                auto const h = apply_word(g, random_word(rng, 20));
                REQUIRE(h.discriminant() == -43);
            }
        }
    }
}

TEST_CASE("reduce_form")
{
    CHECK(reduce_form(HermitianForm(43, 1, -1, 0, 11)) == HermitianForm(43, 1, 1, 0, 11));
    CHECK(reduce_form(HermitianForm(43, 11, -1, 0, 1)) == HermitianForm(43, 1, 1, 0, 11));
    CHECK(reduce_form(HermitianForm(163, 2, -1, 2, 21)) == HermitianForm(163, 2, 1, 2, 21));

    SUBCASE("idempotent on the reduced list")
    {
        for (long N : {3L, 7L, 11L, 19L, 43L, 67L, 163L})
            for (auto const & f : enumerate_reduced(N))
                CHECK(reduce_form(f) == f);
    }
    SUBCASE("constant on orbits sampled by random words")
    {
        std::mt19937 rng(2024);
        for (long N : {43L, 67L, 163L}) {
            for (auto const & f : enumerate_reduced(N)) {
                for (int k = 0; k < 1000; ++k) {
                    auto const g = apply_word(f, random_word(rng, 20));
                    auto const r = reduce_form(g);
                    REQUIRE(r == f);
                    REQUIRE(reduce_form(r) == r);
                }
            }
        }
    }
    SUBCASE("distinct reduced forms are inequivalent")
    {
        // every boundary search ends at exactly one enumerated form, so the
        // reduced list has no duplicates up to equivalence
        for (long N : {11L, 19L, 43L, 67L, 163L, 499L}) {
            auto const forms = enumerate_reduced(N);
            for (auto const & f : forms)
                CHECK(std::count(forms.begin(), forms.end(), reduce_form(f)) == 1);
        }
    }
}

TEST_CASE("iota orbits")
{
    auto const forms = enumerate_reduced(163);
    std::vector<HermitianForm> fixed;
    for (auto const & f : forms) {
        auto const g = reduce_form(iota(f));
        CHECK(reduce_form(iota(g)) == f);
        if (g == f)
            fixed.push_back(f);
    }
    CHECK(fixed == std::vector<HermitianForm>{{163, 1, 1, 0, 41}, {163, 2, 1, 2, 21}});
}

TEST_CASE("principal and definable forms")
{
    CHECK(is_principal(HermitianForm(163, 1, 1, 0, 41)));
    CHECK_FALSE(is_principal(HermitianForm(163, 2, 1, 2, 21)));
    CHECK(is_principal(HermitianForm(43, 1, 1, 0, 11)));

    CHECK(definable_over_Q(HermitianForm(43, 2, 1, 2, 6)));
    CHECK_FALSE(definable_over_Q(HermitianForm(43, 3, 1, 2, 4)));
    CHECK_FALSE(definable_over_Q(HermitianForm(163, 3, 1, 2, 14)));
    CHECK(definable_over_Q(HermitianForm(163, 2, 1, 2, 21)));
    CHECK_THROWS_AS(definable_over_Q(HermitianForm(43, 1, 1, 0, 11)), InvalidInput);
}

TEST_CASE("period_matrix")
{
    auto const z = period_matrix(HermitianForm(43, 2, 1, 2, 6));
    CHECK(z.z11() == KElement(43, BigRational(1, 4), BigRational(1, 4)));
    CHECK(z.z12() == KElement(43, BigRational(1, 2)));
    CHECK(z.z22() == KElement(43, BigRational(-1, 4), BigRational(1, 4)));

    auto const p = period_matrix(HermitianForm(163, 1, 1, 0, 41));
    CHECK(p.is_diagonal());
    CHECK(p.z11() == KElement(163, BigRational(1, 2), BigRational(1, 2)));
    CHECK(p.z22() == KElement(163, BigRational(-1, 2), BigRational(1, 2)));

    for (auto const & f : enumerate_reduced(163)) {
        auto const m = period_matrix(f);
        // Im z11 = Im z22 = sqrt(N)/2a and z12 is real
        CHECK(m.z11().y() == BigRational(1, 2 * f.a()));
        CHECK(m.z22().y() == m.z11().y());
        CHECK(m.z12().is_rational());
        CHECK(m.imag_scale_squared() == BigRational(163, 4 * f.a() * f.a()));
    }
}
