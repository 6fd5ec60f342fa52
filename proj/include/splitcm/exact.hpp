#ifndef SPLITCM_EXACT_HPP
#define SPLITCM_EXACT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitcm {

using BigInt = mpz_class;
using BigRational = mpq_class;

/* Raised for violated preconditions on user-supplied data. */
class InvalidInput : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/* Gaussian integer re + im*i. */
struct GaussianInt
{
    BigInt re;
    BigInt im;

    GaussianInt() = default;
    GaussianInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    GaussianInt conj() const { return {re, -im}; }
    BigInt norm() const { return re * re + im * im; }

    friend GaussianInt operator+(GaussianInt const & x, GaussianInt const & y)
    {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianInt operator-(GaussianInt const & x, GaussianInt const & y)
    {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianInt operator-(GaussianInt const & x) { return {-x.re, -x.im}; }
    friend GaussianInt operator*(GaussianInt const & x, GaussianInt const & y)
    {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussianInt operator*(BigInt const & k, GaussianInt const & x)
    {
        return {k * x.re, k * x.im};
    }
    friend bool operator==(GaussianInt const & x, GaussianInt const & y)
    {
        return x.re == y.re && x.im == y.im;
    }

    std::string to_string() const;
};

std::ostream & operator<<(std::ostream & os, GaussianInt const & g);

/*
 * Element x + y*sqrt(-N) of K = Q(sqrt(-N)), sqrt(-N) = i*sqrt(N).
 * Mixing elements with different N throws.
 */
class KElement
{
    long N_ = 0;
    BigRational x_;
    BigRational y_;

    static long common_N(KElement const & a, KElement const & b);

  public:
    KElement() = default;
    explicit KElement(long N, BigRational x = 0, BigRational y = 0);

    long N() const { return N_; }
    BigRational const & x() const { return x_; }
    BigRational const & y() const { return y_; }

    bool is_rational() const { return y_ == 0; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }

    KElement conj() const { return KElement(N_, x_, -y_); }
    /* x^2 + N y^2 */
    BigRational norm() const;
    KElement inverse() const;

    friend KElement operator+(KElement const & a, KElement const & b);
    friend KElement operator-(KElement const & a, KElement const & b);
    friend KElement operator-(KElement const & a);
    friend KElement operator*(KElement const & a, KElement const & b);
    friend KElement operator/(KElement const & a, KElement const & b);
    friend KElement operator*(KElement const & a, BigRational const & k);
    friend KElement operator*(BigRational const & k, KElement const & a)
    {
        return a * k;
    }
    KElement & operator+=(KElement const & o) { return *this = *this + o; }
    KElement & operator-=(KElement const & o) { return *this = *this - o; }
    KElement & operator*=(KElement const & o) { return *this = *this * o; }

    /* A zero with N == 0 acts as a wildcard so that generic code can
     * start from T{} accumulators. */
    friend bool operator==(KElement const & a, KElement const & b);

    std::string to_string() const;
};

std::ostream & operator<<(std::ostream & os, KElement const & k);

/* prime -> exponent; no zero exponents are stored. */
class Factorization
{
    std::map<BigInt, long> exps_;

  public:
    Factorization() = default;
    Factorization(std::initializer_list<std::pair<long const, long>> init);

    void add(BigInt const & p, long e);
    long exponent(BigInt const & p) const;
    bool empty() const { return exps_.empty(); }
    std::size_t size() const { return exps_.size(); }
    auto begin() const { return exps_.begin(); }
    auto end() const { return exps_.end(); }

    Factorization & operator+=(Factorization const & o);
    friend Factorization operator*(long k, Factorization const & f);

    /* product of p^e; throws if any exponent is negative. */
    BigInt value() const;
    BigRational rational_value() const;

    friend bool operator==(Factorization const &, Factorization const &) = default;

    std::string to_string() const;
};

std::ostream & operator<<(std::ostream & os, Factorization const & f);

/* Kronecker symbol (a/n), n >= 1. */
int kronecker(BigInt const & a, BigInt const & n);

bool is_prime(BigInt const & n);

/* Factorization of |n|, n != 0. */
Factorization factor(BigInt const & n);

/* Positive divisors of n >= 1, ascending. */
std::vector<BigInt> divisors(BigInt const & n);

/* rho with rho^2 = a mod p and 0 <= rho <= (p-1)/2; nullopt iff a is a
 * non-residue. p must be an odd prime. */
std::optional<BigInt> sqrt_mod_p(BigInt const & a, BigInt const & p);

/* n/d in lowest terms. */
inline BigRational ratio(BigInt const & n, BigInt const & d)
{
    BigRational q(n, d);
    q.canonicalize();
    return q;
}

/* Floor of the square root of n >= 0. */
BigInt isqrt(BigInt const & n);
bool is_square(BigInt const & n);

/* Non-negative residue of a modulo m > 0. */
BigInt mod(BigInt const & a, BigInt const & m);

} // namespace splitcm

#endif
