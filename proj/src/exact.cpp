#include "splitcm/exact.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace splitcm {

std::string GaussianInt::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream & operator<<(std::ostream & os, GaussianInt const & g)
{
    if (g.im == 0)
        return os << g.re;
    if (g.re != 0)
        os << g.re << (g.im < 0 ? "-" : "+");
    else if (g.im < 0)
        os << "-";
    BigInt const a = abs(g.im);
    if (a != 1)
        os << a;
    return os << "i";
}

/* ------------------------------------------------------------------ */

KElement::KElement(long N, BigRational x, BigRational y)
    : N_(N), x_(std::move(x)), y_(std::move(y))
{
    if (N < 0)
        throw InvalidInput("KElement: N must be positive");
    if (N == 0 && y_ != 0)
        throw InvalidInput("KElement: irrational part without a field");
    x_.canonicalize();
    y_.canonicalize();
}

long KElement::common_N(KElement const & a, KElement const & b)
{
    if (a.N_ == b.N_ || b.N_ == 0)
        return a.N_;
    if (a.N_ == 0)
        return b.N_;
    throw InvalidInput("KElement: mixing different fields Q(sqrt(-" +
                       std::to_string(a.N_) + ")) and Q(sqrt(-" +
                       std::to_string(b.N_) + "))");
}

BigRational KElement::norm() const
{
    return x_ * x_ + BigRational(N_) * y_ * y_;
}

KElement KElement::inverse() const
{
    BigRational const n = norm();
    if (n == 0)
        throw std::domain_error("KElement: inverse of zero");
    return KElement(N_, x_ / n, -y_ / n);
}

KElement operator+(KElement const & a, KElement const & b)
{
    return KElement(KElement::common_N(a, b), a.x_ + b.x_, a.y_ + b.y_);
}

KElement operator-(KElement const & a, KElement const & b)
{
    return KElement(KElement::common_N(a, b), a.x_ - b.x_, a.y_ - b.y_);
}

KElement operator-(KElement const & a)
{
    return KElement(a.N_, -a.x_, -a.y_);
}

KElement operator*(KElement const & a, KElement const & b)
{
    long const N = KElement::common_N(a, b);
    return KElement(N, a.x_ * b.x_ - BigRational(N) * a.y_ * b.y_,
                    a.x_ * b.y_ + a.y_ * b.x_);
}

KElement operator/(KElement const & a, KElement const & b)
{
    return a * b.inverse();
}

KElement operator*(KElement const & a, BigRational const & k)
{
    return KElement(a.N_, a.x_ * k, a.y_ * k);
}

bool operator==(KElement const & a, KElement const & b)
{
    if (a.x_ != b.x_ || a.y_ != b.y_)
        return false;
    return a.N_ == b.N_ || a.y_ == 0;
}

std::string KElement::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream & operator<<(std::ostream & os, KElement const & k)
{
    if (k.y() == 0)
        return os << k.x();
    if (k.x() != 0)
        os << k.x() << (k.y() < 0 ? " - " : " + ") << abs(k.y());
    else
        os << k.y();
    return os << "*sqrt(-" << k.N() << ")";
}

/* ------------------------------------------------------------------ */

Factorization::Factorization(std::initializer_list<std::pair<long const, long>> init)
{
    for (auto const & [p, e] : init)
        add(BigInt(p), e);
}

void Factorization::add(BigInt const & p, long e)
{
    if (e == 0)
        return;
    auto it = exps_.find(p);
    if (it == exps_.end()) {
        exps_.emplace(p, e);
        return;
    }
    it->second += e;
    if (it->second == 0)
        exps_.erase(it);
}

long Factorization::exponent(BigInt const & p) const
{
    auto it = exps_.find(p);
    return it == exps_.end() ? 0 : it->second;
}

Factorization & Factorization::operator+=(Factorization const & o)
{
    for (auto const & [p, e] : o.exps_)
        add(p, e);
    return *this;
}

Factorization operator*(long k, Factorization const & f)
{
    Factorization r;
    for (auto const & [p, e] : f.exps_)
        r.add(p, k * e);
    return r;
}

BigInt Factorization::value() const
{
    BigInt v = 1;
    for (auto const & [p, e] : exps_) {
        if (e < 0)
            throw std::domain_error("Factorization::value: negative exponent");
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
        v *= pe;
    }
    return v;
}

BigRational Factorization::rational_value() const
{
    BigInt num = 1, den = 1;
    for (auto const & [p, e] : exps_) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(),
                   static_cast<unsigned long>(e < 0 ? -e : e));
        (e < 0 ? den : num) *= pe;
    }
    return ratio(num, den);
}

std::string Factorization::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream & operator<<(std::ostream & os, Factorization const & f)
{
    if (f.empty())
        return os << "1";
    bool first = true;
    for (auto const & [p, e] : f) {
        if (!first)
            os << " * ";
        first = false;
        os << p;
        if (e != 1)
            os << "^" << e;
    }
    return os;
}

/* ------------------------------------------------------------------ */

BigInt mod(BigInt const & a, BigInt const & m)
{
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt isqrt(BigInt const & n)
{
    if (n < 0)
        throw InvalidInput("isqrt of a negative number");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(BigInt const & n)
{
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

int kronecker(BigInt const & a, BigInt const & n)
{
    if (n < 1)
        throw InvalidInput("kronecker: n must be >= 1");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

constexpr unsigned long trial_bound = 10'000'000;

std::vector<unsigned long> const & small_primes()
{
    static std::vector<unsigned long> const primes = [] {
        std::vector<bool> composite(trial_bound, false);
        std::vector<unsigned long> ps;
        ps.reserve(700'000);
        for (unsigned long i = 2; i < trial_bound; ++i) {
            if (composite[i])
                continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j < trial_bound; j += i)
                composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

BigInt powm(BigInt const & b, BigInt const & e, BigInt const & m)
{
    BigInt r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool miller_rabin(BigInt const & n, unsigned long base)
{
    BigInt d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d /= 2;
        ++s;
    }
    BigInt x = powm(BigInt(base), d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

BigInt gcd(BigInt const & a, BigInt const & b)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/* Brent's variant of Pollard rho; n odd composite without small factors. */
BigInt pollard_brent(BigInt const & n)
{
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1;
        unsigned long const m = 128;
        auto f = [&](BigInt const & v) -> BigInt { return (v * v + c) % n; };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_large(BigInt const & n, Factorization & out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.add(n, 1);
        return;
    }
    BigInt const d = pollard_brent(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

} // namespace

bool is_prime(BigInt const & n)
{
    if (n < 2)
        return false;
    static constexpr std::array<unsigned long, 13> bases = {2,  3,  5,  7,  11, 13, 17,
                                                            19, 23, 29, 31, 37, 41};
    for (unsigned long p : bases) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    /* the 13 bases are deterministic below 3.3e24 */
    static BigInt const deterministic_limit("3317044064679887385961981");
    for (unsigned long p : bases)
        if (!miller_rabin(n, p))
            return false;
    if (n < deterministic_limit)
        return true;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Factorization factor(BigInt const & n)
{
    if (n == 0)
        throw InvalidInput("factor: n must be nonzero");
    Factorization f;
    BigInt m = abs(n);
    BigInt limit = isqrt(m);
    for (unsigned long p : small_primes()) {
        if (mpz_cmp_ui(limit.get_mpz_t(), p) < 0)
            break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p))
            continue;
        long e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        f.add(BigInt(p), e);
        limit = isqrt(m);
    }
    factor_large(m, f);
    return f;
}

std::vector<BigInt> divisors(BigInt const & n)
{
    if (n <= 0)
        throw InvalidInput("divisors: n must be positive");
    std::vector<BigInt> ds{1};
    for (auto const & [p, e] : factor(n)) {
        std::size_t const base = ds.size();
        BigInt pk = 1;
        for (long k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::optional<BigInt> sqrt_mod_p(BigInt const & a, BigInt const & p)
{
    if (p == 2 || !is_prime(p))
        throw InvalidInput("sqrt_mod_p: modulus must be an odd prime");
    BigInt const r = mod(a, p);
    if (r == 0)
        return BigInt(0);
    if (kronecker(r, p) != 1)
        return std::nullopt;

    BigInt root;
    if (p <= 10'000) {
        for (BigInt x = 1; x <= (p - 1) / 2; ++x) {
            if (x * x % p == r) {
                root = x;
                break;
            }
        }
    } else {
        /* Tonelli-Shanks */
        BigInt q = p - 1;
        unsigned long s = 0;
        while (mpz_even_p(q.get_mpz_t())) {
            q /= 2;
            ++s;
        }
        BigInt z = 2;
        while (kronecker(z, p) != -1)
            ++z;
        BigInt c = powm(z, q, p);
        BigInt x = powm(r, (q + 1) / 2, p);
        BigInt t = powm(r, q, p);
        unsigned long m = s;
        while (t != 1) {
            unsigned long i = 0;
            BigInt t2 = t;
            while (t2 != 1) {
                t2 = t2 * t2 % p;
                ++i;
            }
            BigInt b = c;
            for (unsigned long j = 0; j + i + 1 < m; ++j)
                b = b * b % p;
            x = x * b % p;
            c = b * b % p;
            t = t * c % p;
            m = i;
        }
        root = x;
    }
    if (root > (p - 1) / 2)
        root = p - root;
    return root;
}

} // namespace splitcm
