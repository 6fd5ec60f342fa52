#include "splitcm/arith.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace splitcm {

BigInt TernaryForm::operator()(std::array<long, 3> const & m) const
{
    BigInt q = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            q += G[i][j] * m[i] * m[j];
    return q;
}

std::array<BigInt, 3> TernaryForm::minors() const
{
    BigInt const m1 = G[0][0];
    BigInt const m2 = G[0][0] * G[1][1] - G[0][1] * G[1][0];
    BigInt const m3 = G[0][0] * (G[1][1] * G[2][2] - G[1][2] * G[2][1]) -
                      G[0][1] * (G[1][0] * G[2][2] - G[1][2] * G[2][0]) +
                      G[0][2] * (G[1][0] * G[2][1] - G[1][1] * G[2][0]);
    return {m1, m2, m3};
}

bool TernaryForm::is_positive_definite() const
{
    for (auto const & m : minors())
        if (m <= 0)
            return false;
    return true;
}

TernaryForm parse_gram(std::istream & in)
{
    TernaryForm Q;
    std::string line, tok;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (auto const hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        while (ls >> tok) {
            if (n == 9)
                throw InvalidInput("gram: more than nine entries");
            BigInt v;
            if (v.set_str(tok, 10) != 0)
                throw InvalidInput("gram: not an integer: " + tok);
            Q.G[n / 3][n % 3] = v;
            ++n;
        }
    }
    if (n != 9)
        throw InvalidInput("gram: expected nine integers, got " + std::to_string(n));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (Q.G[i][j] != Q.G[j][i])
                throw InvalidInput("gram: matrix is not symmetric");
    return Q;
}

TernaryForm read_gram_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("gram: cannot open " + path);
    return parse_gram(in);
}

TernaryForm gram_163()
{
    std::istringstream in("24 4 6  4 55 1  6 1 83");
    return parse_gram(in);
}

Factorization gz_exponents(TernaryForm const & Q, long N, long margin)
{
    if (!Q.is_positive_definite())
        throw IndefiniteForm("gz_exponents: form is not positive definite");
    if (margin < 0)
        throw InvalidInput("gz_exponents: negative margin");
    auto const & G = Q.G;
    BigInt const det = Q.minors()[2];
    // diagonal cofactors of G: (G^-1)_ii = cof_i / det
    std::array<BigInt, 3> const cof{G[1][1] * G[2][2] - G[1][2] * G[2][1], G[0][0] * G[2][2] - G[0][2] * G[2][0],
                                    G[0][0] * G[1][1] - G[0][1] * G[1][0]};
    std::array<long, 3> box{};
    for (std::size_t i = 0; i < 3; ++i) {
        BigInt const b = isqrt(BigInt(N * cof[i] / det)) + margin;
        if (!b.fits_slong_p() || b > 100000)
            throw InvalidInput("gz_exponents: enumeration box too large");
        box[i] = b.get_si();
    }

    Factorization out;
    BigInt const minusN = -N;
    std::array<long, 3> m{};
    for (m[0] = -box[0]; m[0] <= box[0]; ++m[0])
        for (m[1] = -box[1]; m[1] <= box[1]; ++m[1])
            for (m[2] = -box[2]; m[2] <= box[2]; ++m[2]) {
                BigInt const rest = N - Q(m);
                if (rest <= 0 || !mpz_divisible_ui_p(rest.get_mpz_t(), 4))
                    continue;
                BigInt const k = rest / 4;
                for (BigInt const & d : divisors(k)) {
                    if (d == 1)
                        continue;
                    int const chi = kronecker(minusN, d);
                    if (chi == 0)
                        continue;
                    for (auto const & [p, e] : factor(d))
                        out.add(p, -6L * chi * e);
                }
            }
    return out;
}

namespace {

long modp(BigInt const & v, long p)
{
    return mod(v, BigInt(p)).get_si();
}

long inverse_mod(long a, long p)
{
    BigInt r;
    BigInt const aa(a), pp(p);
    if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t()) == 0)
        throw InvalidInput("reduce: denominator divisible by " + std::to_string(p));
    return r.get_si();
}

long reduce_rational(BigRational const & q, long p)
{
    long const den = modp(q.get_den(), p);
    if (den == 0)
        throw InvalidInput("reduce: denominator divisible by " + std::to_string(p));
    return modp(q.get_num(), p) * inverse_mod(den, p) % p;
}

void require_odd_prime(long p)
{
    if (p < 3 || !is_prime(BigInt(p)))
        throw InvalidInput("reduce: p must be an odd prime, got " + std::to_string(p));
    if (p > 100000000)
        throw InvalidInput("reduce: p too large");
}

// polynomials over F_p, ascending coefficients, trimmed
using Poly = std::vector<long>;

void trim(Poly & f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

Poly poly_mod(Poly a, Poly const & b, long p)
{
    long const inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        long const q = a.back() * inv % p;
        std::size_t const shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - q * b[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

long horner(std::array<long, 7> const & c, long x, long p)
{
    long acc = 0;
    for (int k = 6; k >= 0; --k)
        acc = (acc * x + c[static_cast<std::size_t>(k)]) % p;
    return acc;
}

} // namespace

Fp_Sextic reduce_mod_P(SexticK const & f, long p, Root which)
{
    require_odd_prime(p);
    if (kronecker(BigInt(-f.N), BigInt(p)) != 1)
        throw InvalidInput("reduce_mod_P: " + std::to_string(p) + " does not split in K");
    auto const rho0 = sqrt_mod_p(BigInt(-f.N), BigInt(p));
    long const rho = which == Root::plus ? rho0->get_si() : (p - rho0->get_si()) % p;
    Fp_Sextic out;
    out.p = p;
    for (std::size_t k = 0; k < 7; ++k)
        out.c[k] = (reduce_rational(f.c[k].x(), p) + reduce_rational(f.c[k].y(), p) * rho) % p;
    return out;
}

Fp_Sextic reduce_mod_p(SexticQ const & f, long p)
{
    require_odd_prime(p);
    Fp_Sextic out;
    out.p = p;
    for (std::size_t k = 0; k < 7; ++k)
        out.c[k] = reduce_rational(f.c[k], p);
    return out;
}

bool is_smooth(Fp_Sextic const & f)
{
    long const p = f.p;
    if (f.c[6] == 0)
        return false;
    Poly a(f.c.begin(), f.c.end());
    Poly b;
    for (std::size_t k = 1; k < 7; ++k)
        b.push_back(static_cast<long>(k) * f.c[k] % p);
    trim(b);
    if (b.empty())
        return false;
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1; // gcd(f, f') constant
}

long count_points(Fp_Sextic const & f)
{
    if (!is_smooth(f))
        throw InvalidInput("count_points: singular reduction mod " + std::to_string(f.p));
    return character_sum_count(f);
}

long character_sum_count(Fp_Sextic const & f)
{
    long const p = f.p;
    std::vector<signed char> chi(static_cast<std::size_t>(p), -1);
    chi[0] = 0;
    for (long y = 1; y < p; ++y)
        chi[static_cast<std::size_t>(y * y % p)] = 1;
    long count = 0;
    for (long x = 0; x < p; ++x)
        count += 1 + chi[static_cast<std::size_t>(horner(f.c, x, p))];
    // two points at infinity iff the leading coefficient is a square
    count += 1 + chi[static_cast<std::size_t>(f.c[6])];
    return count;
}

long least_nonresidue(long p)
{
    require_odd_prime(p);
    for (long n = 2;; ++n)
        if (kronecker(BigInt(n), BigInt(p)) == -1)
            return n;
}

Fp_Sextic twist(Fp_Sextic const & f)
{
    long const n = least_nonresidue(f.p);
    Fp_Sextic out = f;
    for (auto & c : out.c)
        c = c * n % f.p;
    return out;
}

std::vector<std::pair<long, long>> split_prime_scan(long N, long p_min, long p_max)
{
    std::vector<std::pair<long, long>> out;
    if (p_min > p_max)
        throw InvalidInput("split_prime_scan: p_min > p_max");
    for (long a = 1;; ++a) {
        long const four_p = a * a + N;
        if (four_p % 4 != 0)
            continue;
        long const p = four_p / 4;
        if (p > p_max)
            break;
        if (p >= p_min && is_prime(BigInt(p)))
            out.emplace_back(p, a);
    }
    return out;
}

long default_scan_start(long N)
{
    for (long a = (N + 1) / 2;; ++a) {
        if ((a * a + N) % 4 != 0)
            continue;
        long const p = (a * a + N) / 4;
        if (is_prime(BigInt(p)))
            return p;
    }
}

namespace {

long serre(long p)
{
    BigInt const s = isqrt(BigInt(4 * p)); // floor(2 sqrt p)
    return p + 1 + 2 * s.get_si();
}

} // namespace

std::vector<MaximalScanRow> maximal_scan(SexticK const & f, long p_min, long p_max, Root which)
{
    std::vector<MaximalScanRow> rows;
    if (p_max < p_min)
        return rows;
    for (auto const & [p, a] : split_prime_scan(f.N, p_min, p_max)) {
        MaximalScanRow row;
        row.p = p;
        row.a = a;
        row.target = p + 1 + 2 * a;
        row.serre_bound = serre(p);
        Fp_Sextic fb;
        try {
            fb = reduce_mod_P(f, p, which);
        } catch (InvalidInput const & e) {
            row.skipped = true;
            row.reason = e.what();
            rows.push_back(row);
            continue;
        }
        if (!is_smooth(fb)) {
            row.skipped = true;
            row.reason = "bad reduction";
            rows.push_back(row);
            continue;
        }
        row.count = count_points(fb);
        row.twist_count = count_points(twist(fb));
        row.is_maximal = std::max(row.count, row.twist_count) == row.target;
        rows.push_back(row);
    }
    return rows;
}

std::vector<MaximalScanRow> maximal_scan(SexticK const & f, long p_max, Root which)
{
    return maximal_scan(f, default_scan_start(f.N), p_max, which);
}

std::vector<MaximalScanRow> maximal_scan(SexticQ const & f, long N, long p_max)
{
    return maximal_scan(to_sextic_k(f, N), default_scan_start(N), p_max, Root::plus);
}

} // namespace splitcm
