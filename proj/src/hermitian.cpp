#include "splitcm/hermitian.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace splitcm {

void require_discriminant_prime(long N)
{
    if (N <= 0 || N % 4 != 3 || !is_prime(BigInt(N)))
        throw InvalidInput("N must be a prime congruent to 3 mod 4, got " +
                           std::to_string(N));
}

HermitianForm::HermitianForm(long N, BigInt a, GaussianInt b, BigInt c)
    : N_(N), a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
{
    require_discriminant_prime(N);
    if (a_ <= 0 || c_ <= 0)
        throw InvalidInput("Hermitian form " + to_string() + " is not positive definite");
    if (discriminant() != -N)
        throw InvalidInput("Hermitian form " + to_string() + " has discriminant " +
                           discriminant().get_str() + ", expected -" + std::to_string(N));
    if (mpz_even_p(b_.re.get_mpz_t()) || mpz_odd_p(b_.im.get_mpz_t()))
        throw InvalidInput("Hermitian form " + to_string() + ": b must be 1 mod 2");
}

std::string HermitianForm::to_string() const
{
    std::ostringstream os;
    os << "(" << a_ << "," << b_ << "," << c_ << ")";
    return os.str();
}

std::string HermitianForm::selector() const
{
    std::ostringstream os;
    os << a_ << "," << b_.re << "," << b_.im << "," << c_;
    return os.str();
}

std::ostream & operator<<(std::ostream & os, HermitianForm const & f)
{
    return os << f.to_string();
}

HermitianForm parse_form(long N, std::string const & text)
{
    std::vector<BigInt> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        BigInt v;
        if (item.empty() || v.set_str(item, 10) != 0)
            throw InvalidInput("malformed form selector '" + text + "' (expected a,r,s,c)");
        parts.push_back(v);
    }
    if (parts.size() != 4)
        throw InvalidInput("malformed form selector '" + text + "' (expected a,r,s,c)");
    return HermitianForm(N, parts[0], GaussianInt(parts[1], parts[2]), parts[3]);
}

/* ------------------------------------------------------------------ */

KElement PeriodMatrix::z11() const
{
    return KElement(N, ratio(r, 2 * a), ratio(1, 2 * a));
}

KElement PeriodMatrix::z12() const
{
    return KElement(N, ratio(s, 2 * a), 0);
}

KElement PeriodMatrix::z22() const
{
    return KElement(N, ratio(-r, 2 * a), ratio(1, 2 * a));
}

BigRational PeriodMatrix::imag_scale_squared() const
{
    return ratio(N, 4 * a * a);
}

/* ------------------------------------------------------------------ */

std::vector<HermitianForm> enumerate_reduced(long N)
{
    require_discriminant_prime(N);
    std::vector<HermitianForm> out;
    /* r, s <= sqrt(N/2)  <=>  2 r^2 <= N */
    for (long r = 1; 2 * r * r <= N; r += 2) {
        for (long s = 0; 2 * s * s <= N; s += 2) {
            long const m = (r * r + s * s + N) / 4;
            for (BigInt const & dz : divisors(BigInt(m))) {
                long const a = dz.get_si();
                if (a < std::max(r, s))
                    continue;
                if (a * a > m)
                    break;
                long const c = m / a;
                out.emplace_back(N, a, r, s, c);
                if (!(a == c || r == a || s == a || s == 0))
                    out.emplace_back(N, a, -r, s, c);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](HermitianForm const & x, HermitianForm const & y) {
        return std::tie(x.a(), x.r(), x.s()) < std::tie(y.a(), y.r(), y.s());
    });
    return out;
}

long class_number_formula(long N)
{
    require_discriminant_prime(N);
    if (N == 3)
        return 1;
    return kronecker(BigInt(-3), BigInt(N)) == 1 ? (N + 5) / 12 : (N + 13) / 12;
}

HermitianForm iota(HermitianForm const & f)
{
    return HermitianForm(f.N(), f.a(), -f.b().conj(), f.c());
}

H3Point rep_point(HermitianForm const & f)
{
    BigInt const two_a = 2 * f.a();
    return {ratio(f.r(), two_a), ratio(f.s(), two_a), ratio(BigInt(f.N()), two_a * two_a)};
}

bool is_reduced(HermitianForm const & f)
{
    BigInt const & a = f.a();
    BigInt const & c = f.c();
    BigInt const r = abs(f.r());
    BigInt const & s = f.s();
    if (s < 0 || a > c || r > a || s > a)
        return false;
    if (2 * r * r > f.N() || 2 * s * s > f.N())
        return false;
    if (f.r() < 0 && (a == c || r == a || s == a || s == 0))
        return false;
    return true;
}

HermitianForm apply_generator(HermitianForm const & f, Sl2GaussianGen const & g)
{
    struct Visitor
    {
        HermitianForm const & f;

        HermitianForm operator()(gen::Translate const & t) const
        {
            GaussianInt const & l = t.lambda;
            GaussianInt const b = f.b() + (2 * f.a()) * l;
            BigInt const c = f.c() + f.a() * l.norm() + (l.conj() * f.b()).re;
            return HermitianForm(HermitianForm::Unchecked{}, f.N(), f.a(), b, c);
        }
        HermitianForm operator()(gen::Invert const &) const
        {
            return HermitianForm(HermitianForm::Unchecked{}, f.N(), f.c(), -f.b().conj(), f.a());
        }
        HermitianForm operator()(gen::NegateB const &) const
        {
            return HermitianForm(HermitianForm::Unchecked{}, f.N(), f.a(), -f.b(), f.c());
        }
    };
    return std::visit(Visitor{f}, g);
}

HermitianForm apply_word(HermitianForm f, std::vector<Sl2GaussianGen> const & word)
{
    for (auto const & g : word)
        f = apply_generator(f, g);
    return f;
}

namespace {

/* Closure of the fundamental domain: |x| <= 1/2, 0 <= y <= 1/2, |w| >= 1. */
bool in_closure(HermitianForm const & f)
{
    return abs(f.r()) <= f.a() && f.s() >= 0 && f.s() <= f.a() && f.c() >= f.a();
}

BigInt cdiv(BigInt const & n, BigInt const & d)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

using FormKey = std::tuple<BigInt, BigInt, BigInt, BigInt>;

FormKey key(HermitianForm const & f)
{
    return {f.a(), f.r(), f.s(), f.c()};
}

} // namespace

HermitianForm reduce_form(HermitianForm const & input)
{
    constexpr int max_iterations = 10'000;
    HermitianForm f = input;
    int it = 0;
    for (;; ++it) {
        if (it == max_iterations)
            throw std::runtime_error("reduce_form: no convergence for " + input.to_string());
        BigInt const two_a = 2 * f.a();
        /* move r and s into (-a, a] */
        BigInt const kr = cdiv(f.r() - f.a(), two_a);
        BigInt const ks = cdiv(f.s() - f.a(), two_a);
        if (kr != 0 || ks != 0)
            f = apply_generator(f, gen::Translate{GaussianInt(-kr, -ks)});
        if (f.s() < 0 || (f.s() == 0 && f.r() < 0))
            f = apply_generator(f, gen::NegateB{});
        if (f.c() < f.a()) {
            f = apply_generator(f, gen::Invert{});
            continue;
        }
        break;
    }

    /* f is in the closure; pick the boundary representative the
     * enumeration keeps. */
    static std::vector<Sl2GaussianGen> const moves = {
        gen::Translate{{1, 0}},  gen::Translate{{-1, 0}}, gen::Translate{{0, 1}},
        gen::Translate{{0, -1}}, gen::Translate{{1, 1}},  gen::Translate{{1, -1}},
        gen::Translate{{-1, 1}}, gen::Translate{{-1, -1}}, gen::Invert{},
        gen::NegateB{}};
    std::set<FormKey> seen{key(f)};
    std::deque<HermitianForm> queue{f};
    std::vector<HermitianForm> hits;
    while (!queue.empty()) {
        HermitianForm const cur = queue.front();
        queue.pop_front();
        if (is_reduced(cur))
            hits.push_back(cur);
        for (auto const & m : moves) {
            HermitianForm const once = apply_generator(cur, m);
            for (HermitianForm const & nb : {once, apply_generator(once, gen::NegateB{})}) {
                if (!in_closure(nb) || !seen.insert(key(nb)).second)
                    continue;
                queue.push_back(nb);
            }
        }
        if (seen.size() > 1000)
            throw std::logic_error("reduce_form: boundary orbit of " + input.to_string() +
                                   " is unexpectedly large");
    }
    if (hits.size() != 1)
        throw std::logic_error("reduce_form: " + std::to_string(hits.size()) +
                               " reduced representatives for " + input.to_string());
    return hits.front();
}

long type_number(long N)
{
    auto const forms = enumerate_reduced(N);
    long fixed = 0;
    for (auto const & f : forms)
        if (reduce_form(iota(f)) == f)
            ++fixed;
    return (static_cast<long>(forms.size()) + fixed) / 2;
}

bool is_principal(HermitianForm const & f)
{
    return f.a() == 1 && f.b() == GaussianInt(1, 0) && f.c() == (f.N() + 1) / 4;
}

bool definable_over_Q(HermitianForm const & f)
{
    if (!is_reduced(f))
        throw InvalidInput("definable_over_Q: " + f.to_string() + " is not reduced");
    if (is_principal(f))
        throw InvalidInput("definable_over_Q: principal form carries no curve");
    return reduce_form(iota(f)) == f;
}

PeriodMatrix period_matrix(HermitianForm const & f)
{
    return {f.N(), f.a(), f.r(), f.s()};
}

} // namespace splitcm
