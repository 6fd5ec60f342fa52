#include "splitcm/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace splitcm {

std::vector<ThetaCharacteristic> all_characteristics()
{
    std::vector<ThetaCharacteristic> out;
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            out.push_back({{m >> 1, m & 1}, {n >> 1, n & 1}});
    return out;
}

std::vector<ThetaCharacteristic> odd_characteristics()
{
    std::vector<ThetaCharacteristic> out;
    for (auto const & ch : all_characteristics())
        if (ch.is_odd())
            out.push_back(ch);
    return out;
}

Real eta_nome(long N, PrecisionContext const & ctx)
{
    mpfr_prec_t const prec = ctx.bits();
    return -exp(-(Real::pi(prec) * sqrt(Real(N, prec))));
}

Real eta24_abs(long N, PrecisionContext const & ctx)
{
    if (N <= 0 || N % 4 != 3)
        throw InvalidInput("eta24_abs: N must be 3 mod 4");
    mpfr_prec_t const prec = ctx.bits();
    Real const q = eta_nome(N, ctx);
    /* |q|^e < 10^-(digits+10) once e * pi sqrt(N) > (digits+10) ln 10 */
    double const decay = M_PI * std::sqrt(static_cast<double>(N));
    double const target = static_cast<double>(ctx.digits() + 10) * M_LN10;

    /* prod (1 - q^n) = sum_k (-1)^k q^(k(3k-1)/2) */
    Real sum(1, prec);
    for (unsigned long k = 1;; ++k) {
        unsigned long const e1 = k * (3 * k - 1) / 2;
        unsigned long const e2 = k * (3 * k + 1) / 2;
        if (static_cast<double>(e1) * decay > target)
            break;
        Real term = pow(q, e1) + pow(q, e2);
        if (k % 2 == 1)
            sum -= term;
        else
            sum += term;
    }
    Real const result = abs(q) * pow(abs(sum), 24);
    if (!result.is_finite())
        throw std::overflow_error("eta24_abs: non-finite result");
    return result;
}

namespace {

struct GradientSetup
{
    long a;
    long r;
    long s;
    double t; // sqrt(N)/2a
};

GradientSetup setup(PeriodMatrix const & Z)
{
    if (!Z.a.fits_slong_p() || !Z.r.fits_slong_p() || !Z.s.fits_slong_p() || Z.a <= 0)
        throw InvalidInput("period matrix entries out of range");
    GradientSetup g{Z.a.get_si(), Z.r.get_si(), Z.s.get_si(), 0.0};
    g.t = std::sqrt(static_cast<double>(Z.N)) / (2.0 * static_cast<double>(g.a));
    return g;
}

} // namespace

long theta_radius(PeriodMatrix const & Z, PrecisionContext const & ctx)
{
    GradientSetup const g = setup(Z);
    double const target = static_cast<double>(ctx.digits() + 10) * M_LN10;
    double const R = 1.0 + std::sqrt(target / (M_PI * g.t));
    if (!(R < 1e5))
        throw std::overflow_error("theta_radius: truncation radius too large");
    return static_cast<long>(std::ceil(R));
}

double theta_tail_log10(PeriodMatrix const & Z, long R)
{
    GradientSetup const g = setup(Z);
    /* shell k < |m| <= k+1 holds at most pi (k+2)^2 points, each bounded by
     * 2 pi (k+1) exp(-pi t k^2); successive shells shrink by at most rho */
    double const k = static_cast<double>(R);
    double const log_term = std::log(2.0 * M_PI * M_PI) + 2.0 * std::log(k + 2.0) +
                            std::log(k + 1.0) - M_PI * g.t * k * k;
    double const rho = std::exp(-M_PI * g.t * (2.0 * k + 1.0)) * std::pow((k + 3.0) / (k + 2.0), 2) *
                       ((k + 2.0) / (k + 1.0));
    if (!(rho < 1.0))
        return HUGE_VAL;
    return (log_term - std::log1p(-rho)) / M_LN10;
}

std::array<Complex, 2> theta_gradient(ThetaCharacteristic const & ch, PeriodMatrix const & Z,
                                      PrecisionContext const & ctx)
{
    long const R = theta_radius(Z, ctx);
    double const tail = theta_tail_log10(Z, R);
    if (!(tail <= -static_cast<double>(ctx.digits() + 5)))
        throw std::logic_error("theta_gradient: tail bound " + std::to_string(tail) +
                               " exceeds working precision");
    return theta_gradient(ch, Z, ctx, R);
}

std::array<Complex, 2> theta_gradient(ThetaCharacteristic const & ch, PeriodMatrix const & Z,
                                      PrecisionContext const & ctx, long radius)
{
    if (!ch.is_odd())
        throw InvalidInput("theta_gradient: characteristic must be odd");
    if (radius < 1 || radius > 100000)
        throw std::overflow_error("theta_gradient: truncation radius out of range");
    GradientSetup const g = setup(Z);
    mpfr_prec_t const prec = ctx.bits();

    /* With M = 2m, the phase of exp(pi i m^T Re(Z) m + pi i m^T nu) is
     * exp(pi i k / 8a) for the integer
     *   k = r (M1^2 - M2^2) + 2 s M1 M2 + 4a (M1 nu1 + M2 nu2),
     * so only 16a roots of unity are needed. */
    long const order = 16 * g.a;
    Real const pi = Real::pi(prec);
    std::vector<Complex> roots;
    roots.reserve(static_cast<std::size_t>(order));
    for (long j = 0; j < order; ++j) {
        Real const angle = pi * j / (8 * g.a);
        roots.emplace_back(cos(angle), sin(angle));
    }
    /* |exp(pi i m^T Z m)| = exp(-pi t |m|^2) = E^{|M|^2}, E = exp(-pi t / 4) */
    Real const t = sqrt(Real(Z.N, prec)) / (2 * g.a);
    Real const E = exp(-(pi * t) / 4);

    long const bound = 2 * radius + 1;
    long const bound2 = 4 * radius * radius;
    Complex g1(prec), g2(prec);
    for (long M1 = -bound; M1 <= bound; ++M1) {
        if (((M1 % 2) + 2) % 2 != ch.mu[0])
            continue;
        for (long M2 = -bound; M2 <= bound; ++M2) {
            if (((M2 % 2) + 2) % 2 != ch.mu[1])
                continue;
            long const n2 = M1 * M1 + M2 * M2;
            if (n2 > bound2)
                continue;
            long k = g.r * (M1 * M1 - M2 * M2) + 2 * g.s * M1 * M2 +
                     4 * g.a * (M1 * ch.nu[0] + M2 * ch.nu[1]);
            k = ((k % order) + order) % order;
            Complex const term = roots[static_cast<std::size_t>(k)] * pow(E, static_cast<unsigned long>(n2));
            g1 += Complex(term.re * M1, term.im * M1);
            g2 += Complex(term.re * M2, term.im * M2);
        }
    }
    /* m_k = M_k / 2, so the factor 2 pi i m_k becomes pi i M_k */
    auto times_pi_i = [&](Complex const & z) { return Complex(-(z.im * pi), z.re * pi); };
    std::array<Complex, 2> out{times_pi_i(g1), times_pi_i(g2)};
    if (!out[0].is_finite() || !out[1].is_finite())
        throw std::overflow_error("theta_gradient: non-finite value");
    return out;
}

SexticC sextic_from_gradients(std::vector<std::array<Complex, 2>> const & grads)
{
    if (grads.size() != 6)
        throw InvalidInput("sextic_from_gradients: need six gradient pairs");
    mpfr_prec_t const prec = grads.front()[0].precision();
    /* poly[k] is the coefficient of u1^k u2^(deg - k) */
    std::vector<Complex> poly{Complex(Real(1, prec), Real(prec))};
    for (auto const & g : grads) {
        std::vector<Complex> next(poly.size() + 1, Complex(prec));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k] * g[1];
            next[k + 1] += poly[k] * g[0];
        }
        poly = std::move(next);
    }
    SexticC out;
    for (std::size_t k = 0; k < 7; ++k)
        out.c[k] = poly[k];
    return out;
}

SexticC bolza_klein_sextic(PeriodMatrix const & Z, PrecisionContext const & ctx)
{
    std::vector<std::array<Complex, 2>> grads;
    for (auto const & ch : odd_characteristics())
        grads.push_back(theta_gradient(ch, Z, ctx));
    return sextic_from_gradients(grads);
}

} // namespace splitcm
