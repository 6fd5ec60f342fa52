#include "splitcm/mp.hpp"

#include <cmath>
#include <stdexcept>

namespace splitcm {

PrecisionContext::PrecisionContext(long digits) : digits_(digits)
{
    if (digits < min_digits)
        throw InvalidInput("precision must be at least " + std::to_string(min_digits) +
                           " digits, got " + std::to_string(digits));
}

mpfr_prec_t PrecisionContext::bits() const
{
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits_) * 3.3219280948873623)) +
           64;
}

/* ------------------------------------------------------------------ */

namespace {

mpfr_prec_t max_prec(Real const & a, Real const & b)
{
    return std::max(a.precision(), b.precision());
}

} // namespace

Real::Real(mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(BigInt const & v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(BigRational const & v, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(std::string const & decimal, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw InvalidInput("malformed decimal '" + decimal + "'");
    }
}

Real::Real(Real const & o)
{
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real && o) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real & Real::operator=(Real const & o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real & Real::operator=(Real && o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(v_);
}

Real Real::pi(mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

double Real::log10_abs() const
{
    if (is_zero())
        return -HUGE_VAL;
    long e = 0;
    double const m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

BigInt Real::round() const
{
    if (!is_finite())
        throw std::overflow_error("Real::round of a non-finite value");
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
}

std::string Real::to_string(int digits) const
{
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return buf.data();
}

#define SPLITCM_REAL_BINOP(op, fn)                                                       \
    Real operator op(Real const & a, Real const & b)                                     \
    {                                                                                    \
        Real r(max_prec(a, b));                                                          \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                                 \
        return r;                                                                        \
    }

SPLITCM_REAL_BINOP(+, mpfr_add)
SPLITCM_REAL_BINOP(-, mpfr_sub)
SPLITCM_REAL_BINOP(*, mpfr_mul)
SPLITCM_REAL_BINOP(/, mpfr_div)

#undef SPLITCM_REAL_BINOP

Real operator-(Real const & a)
{
    Real r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real operator*(Real const & a, long k)
{
    Real r(a.precision());
    mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

Real operator/(Real const & a, long k)
{
    Real r(a.precision());
    mpfr_div_si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
}

Real & Real::operator+=(Real const & o)
{
    if (o.precision() > precision())
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real & Real::operator-=(Real const & o)
{
    if (o.precision() > precision())
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real & Real::operator*=(Real const & o)
{
    if (o.precision() > precision())
        mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

#define SPLITCM_REAL_FN(name, fn)                                                        \
    Real name(Real const & x)                                                            \
    {                                                                                    \
        Real r(x.precision());                                                           \
        fn(r.v_, x.v_, MPFR_RNDN);                                                       \
        return r;                                                                        \
    }

SPLITCM_REAL_FN(exp, mpfr_exp)
SPLITCM_REAL_FN(log, mpfr_log)
SPLITCM_REAL_FN(sqrt, mpfr_sqrt)
SPLITCM_REAL_FN(abs, mpfr_abs)
SPLITCM_REAL_FN(cos, mpfr_cos)
SPLITCM_REAL_FN(sin, mpfr_sin)

#undef SPLITCM_REAL_FN

Real pow(Real const & x, unsigned long n)
{
    Real r(x.precision());
    mpfr_pow_ui(r.v_, x.v_, n, MPFR_RNDN);
    return r;
}

Real power_of_ten(long e, mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0)
        mpfr_ui_div(r.get(), 1, r.get(), MPFR_RNDN);
    return r;
}

Complex to_complex(KElement const & k, mpfr_prec_t prec)
{
    Real const sqrtN = sqrt(Real(k.N(), prec));
    return {Real(k.x(), prec), Real(k.y(), prec) * sqrtN};
}

} // namespace splitcm
