#ifndef SPLITCM_CURVES_HPP
#define SPLITCM_CURVES_HPP

#include "splitcm/analytic.hpp"
#include "splitcm/binary_form.hpp"
#include "splitcm/hermitian.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace splitcm {

class RecognitionFailed : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class PrincipalForm : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/*
 * y^2 = sum_k c[k] x^k over K = Q(sqrt(-N)). Equality compares N and the
 * coefficients; the provenance fields are informational.
 */
struct SexticK
{
    long N = 0;
    std::array<KElement, 7> c;
    std::optional<HermitianForm> source;
    long digits = 0;                 // precision at which recognition succeeded
    double residual_log10 = -HUGE_VAL; // worst |z - w| over the coefficients

    BinaryForm<KElement> homogeneous() const { return {{c.begin(), c.end()}}; }

    friend bool operator==(SexticK const & a, SexticK const & b) { return a.N == b.N && a.c == b.c; }
};

struct SexticQ
{
    std::array<BigRational, 7> c;

    BinaryForm<BigRational> homogeneous() const { return {{c.begin(), c.end()}}; }
    friend bool operator==(SexticQ const &, SexticQ const &) = default;
};

/* 120 digits for N <= 67, 220 above. */
long default_digits(long N);

struct Recognized
{
    KElement value;
    double residual_log10;
};

/*
 * The w = x + y sqrt(-N) with 2a^6 x, 2a^6 y integers of equal parity,
 * obtained by rounding; throws RecognitionFailed when |z - w| is not
 * below 10^(-digits/2) or the parities differ.
 */
Recognized recognize_in_K_detailed(Complex const & z, long N, BigInt const & a, PrecisionContext const & ctx);
KElement recognize_in_K(Complex const & z, long N, BigInt const & a, PrecisionContext const & ctx);

/* f_Z / ((2 pi)^6 a^6 |eta(tau_N)|^24), numerically; works for any form. */
SexticC normalized_numeric(HermitianForm const & f, PrecisionContext const & ctx);

/*
 * Exact f_Phi(x, 1). Each attempt recognizes at d digits and again at 2d,
 * and accepts only identical results; on failure d doubles (at most three
 * retries, never above 2000 digits).
 */
SexticK normalized_sextic(HermitianForm const & f, PrecisionContext const & ctx);
SexticK normalized_sextic(HermitianForm const & f);

/* Coefficient-wise conjugation y_k -> -y_k. */
SexticK iota_sextic(SexticK const & f);

/* 2a^6 c_k = x_k + y_k sqrt(-N) with x_k, y_k integers, x_k = y_k mod 2. */
bool has_integral_structure(SexticK const & f, BigInt const & a);

/* 6^-3 h(x) h^iota(x), h^iota(x) = conj(x^3 h(-1/x)), N = 163. */
SexticK intro_fixture_163();

/* Rational model over Q for the (2,1+2i,6) class of N = 43. */
SexticQ q_model_43();

SexticK to_sextic_k(SexticQ const & f, long N);

} // namespace splitcm

#endif
