#ifndef SPLITCM_MP_HPP
#define SPLITCM_MP_HPP

#include "splitcm/exact.hpp"

#include <mpfr.h>

#include <algorithm>
#include <string>

namespace splitcm {

/* Working precision for one analytic computation. Passed explicitly;
 * there is no global precision state. */
class PrecisionContext
{
    long digits_;

  public:
    static constexpr long min_digits = 30;

    explicit PrecisionContext(long digits);

    long digits() const { return digits_; }
    /* binary precision, with guard bits */
    mpfr_prec_t bits() const;
    PrecisionContext doubled() const { return PrecisionContext(2 * digits_); }
};

/*
 * RAII wrapper around mpfr_t. Binary operations round to the larger of
 * the operand precisions.
 */
class Real
{
    mpfr_t v_;

  public:
    explicit Real(mpfr_prec_t prec = 64);
    Real(long v, mpfr_prec_t prec);
    Real(BigInt const & v, mpfr_prec_t prec);
    Real(BigRational const & v, mpfr_prec_t prec);
    Real(std::string const & decimal, mpfr_prec_t prec);
    Real(Real const & o);
    Real(Real && o) noexcept;
    Real & operator=(Real const & o);
    Real & operator=(Real && o) noexcept;
    ~Real();

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    static Real pi(mpfr_prec_t prec);

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /* log10 |x|, -inf for zero */
    double log10_abs() const;
    BigInt round() const;
    std::string to_string(int digits) const;

    friend Real operator+(Real const & a, Real const & b);
    friend Real operator-(Real const & a, Real const & b);
    friend Real operator*(Real const & a, Real const & b);
    friend Real operator/(Real const & a, Real const & b);
    friend Real operator-(Real const & a);
    friend Real operator*(Real const & a, long k);
    friend Real operator*(long k, Real const & a) { return a * k; }
    friend Real operator/(Real const & a, long k);
    Real & operator+=(Real const & o);
    Real & operator-=(Real const & o);
    Real & operator*=(Real const & o);

    friend bool operator<(Real const & a, Real const & b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(Real const & a, Real const & b) { return b < a; }
    friend bool operator<=(Real const & a, Real const & b) { return !(b < a); }
    friend bool operator>=(Real const & a, Real const & b) { return !(a < b); }

    friend Real exp(Real const & x);
    friend Real log(Real const & x);
    friend Real sqrt(Real const & x);
    friend Real abs(Real const & x);
    friend Real cos(Real const & x);
    friend Real sin(Real const & x);
    friend Real pow(Real const & x, unsigned long n);
};

/* 10^e at the given precision. */
Real power_of_ten(long e, mpfr_prec_t prec);

struct Complex
{
    Real re;
    Real im;

    explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
    Complex conj() const { return {re, -im}; }
    Real norm() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm()); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    friend Complex operator+(Complex const & a, Complex const & b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(Complex const & a, Complex const & b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator-(Complex const & a) { return {-a.re, -a.im}; }
    friend Complex operator*(Complex const & a, Complex const & b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(Complex const & a, Real const & k) { return {a.re * k, a.im * k}; }
    friend Complex operator/(Complex const & a, Real const & k) { return {a.re / k, a.im / k}; }
    friend Complex operator/(Complex const & a, Complex const & b)
    {
        Real const n = b.norm();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Complex & operator+=(Complex const & o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex & operator-=(Complex const & o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex & operator*=(Complex const & o) { return *this = *this * o; }
};

/* Numerical value of a K element, sqrt(-N) = i sqrt(N). */
Complex to_complex(KElement const & k, mpfr_prec_t prec);

} // namespace splitcm

#endif
