#ifndef SPLITCM_ANALYTIC_HPP
#define SPLITCM_ANALYTIC_HPP

#include "splitcm/hermitian.hpp"
#include "splitcm/mp.hpp"

#include <array>
#include <vector>

namespace splitcm {

/* Theta characteristic (mu, nu) with mu, nu in {0,1}^2. */
struct ThetaCharacteristic
{
    std::array<int, 2> mu;
    std::array<int, 2> nu;

    int parity() const { return (mu[0] * nu[0] + mu[1] * nu[1]) % 2; }
    bool is_odd() const { return parity() == 1; }

    friend bool operator==(ThetaCharacteristic const &, ThetaCharacteristic const &) = default;
};

/* All 16 characteristics, mu-major then nu, each in lexicographic order. */
std::vector<ThetaCharacteristic> all_characteristics();

/* The six odd characteristics in the order of all_characteristics():
 * ((0,1),(0,1)), ((0,1),(1,1)), ((1,0),(1,0)), ((1,0),(1,1)),
 * ((1,1),(0,1)), ((1,1),(1,0)). */
std::vector<ThetaCharacteristic> odd_characteristics();

/* Binary sextic sum_k c[k] u1^k u2^(6-k) with high-precision coefficients. */
struct SexticC
{
    std::array<Complex, 7> c;
};

/* Nome of tau_N = (1 + sqrt(-N))/2: q = exp(2 pi i tau_N) = -exp(-pi sqrt(N)). */
Real eta_nome(long N, PrecisionContext const & ctx);

/* |eta((1 + sqrt(-N))/2)|^24 via the pentagonal-number series. */
Real eta24_abs(long N, PrecisionContext const & ctx);

/* Smallest radius R (in |m|, m in Z^2 + mu/2) with
 * pi (sqrt(N)/2a) (R - 1)^2 >= (digits + 10) ln 10. */
long theta_radius(PeriodMatrix const & Z, PrecisionContext const & ctx);

/* Upper bound (log10) for the gradient tail outside radius R. */
double theta_tail_log10(PeriodMatrix const & Z, long R);

/*
 * Gradient at u = 0 of the theta function with odd characteristic:
 *
 *   g_k = sum_{m in Z^2 + mu/2} exp(pi i m^T Z m) (2 pi i m_k) exp(pi i m^T nu).
 *
 * The default radius comes from theta_radius; an explicit radius is
 * accepted for truncation checks.
 */
std::array<Complex, 2> theta_gradient(ThetaCharacteristic const & ch, PeriodMatrix const & Z,
                                      PrecisionContext const & ctx);
std::array<Complex, 2> theta_gradient(ThetaCharacteristic const & ch, PeriodMatrix const & Z,
                                      PrecisionContext const & ctx, long radius);

/* Product of the six linear forms g1 u1 + g2 u2 over the odd
 * characteristics: the leading Taylor term of the product of the odd
 * theta functions. */
SexticC bolza_klein_sextic(PeriodMatrix const & Z, PrecisionContext const & ctx);

/* Same product from explicitly supplied gradient pairs. */
SexticC sextic_from_gradients(std::vector<std::array<Complex, 2>> const & grads);

} // namespace splitcm

#endif
