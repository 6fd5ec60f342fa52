#ifndef SPLITCM_BINARY_FORM_HPP
#define SPLITCM_BINARY_FORM_HPP

#include "splitcm/exact.hpp"
#include "splitcm/mp.hpp"

#include <stdexcept>
#include <vector>

/*
 * Binary forms sum_k c[k] x^k y^(d-k) over a coefficient ring T, and the
 * Cayley Omega-process transvectants used to build sextic invariants.
 *
 * T must provide +, -, * and a rational scaling through scale(); the
 * overloads below cover BigRational, KElement and Complex.
 */

namespace splitcm {

inline BigRational scale(BigRational const & v, BigRational const & k)
{
    return v * k;
}
inline KElement scale(KElement const & v, BigRational const & k)
{
    return v * k;
}
inline Complex scale(Complex const & v, BigRational const & k)
{
    Real const kk(k, v.precision());
    return v * kk;
}

template <class T> T zero_like(T const & sample)
{
    return scale(sample, BigRational(0));
}

template <class T> struct BinaryForm
{
    std::vector<T> c; // c[k]: coefficient of x^k y^(degree - k)

    int degree() const { return static_cast<int>(c.size()) - 1; }
};

template <class T> BinaryForm<T> diff_x(BinaryForm<T> const & f)
{
    int const d = f.degree();
    if (d == 0)
        return {{zero_like(f.c[0])}};
    BinaryForm<T> r{std::vector<T>(static_cast<std::size_t>(d), zero_like(f.c[0]))};
    for (int k = 1; k <= d; ++k)
        r.c[static_cast<std::size_t>(k - 1)] = scale(f.c[static_cast<std::size_t>(k)], BigRational(k));
    return r;
}

template <class T> BinaryForm<T> diff_y(BinaryForm<T> const & f)
{
    int const d = f.degree();
    if (d == 0)
        return {{zero_like(f.c[0])}};
    BinaryForm<T> r{std::vector<T>(static_cast<std::size_t>(d), zero_like(f.c[0]))};
    for (int k = 0; k < d; ++k)
        r.c[static_cast<std::size_t>(k)] = scale(f.c[static_cast<std::size_t>(k)], BigRational(d - k));
    return r;
}

template <class T> BinaryForm<T> multiply(BinaryForm<T> const & f, BinaryForm<T> const & g)
{
    BinaryForm<T> r{std::vector<T>(f.c.size() + g.c.size() - 1, zero_like(f.c[0]))};
    for (std::size_t i = 0; i < f.c.size(); ++i)
        for (std::size_t j = 0; j < g.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + f.c[i] * g.c[j];
    return r;
}

inline BigInt factorial(long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt binomial(long n, long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/*
 * (f, g)_h = (m-h)!(n-h)!/(m! n!) sum_j (-1)^j C(h,j)
 *            d^h f / dx^(h-j) dy^j * d^h g / dx^j dy^(h-j)
 */
template <class T> BinaryForm<T> transvectant(BinaryForm<T> const & f, BinaryForm<T> const & g, int h)
{
    int const m = f.degree();
    int const n = g.degree();
    if (h > m || h > n)
        throw std::invalid_argument("transvectant order exceeds degree");
    BinaryForm<T> acc{std::vector<T>(static_cast<std::size_t>(m + n - 2 * h + 1), zero_like(f.c[0]))};
    for (int j = 0; j <= h; ++j) {
        BinaryForm<T> df = f;
        for (int i = 0; i < h - j; ++i)
            df = diff_x(df);
        for (int i = 0; i < j; ++i)
            df = diff_y(df);
        BinaryForm<T> dg = g;
        for (int i = 0; i < j; ++i)
            dg = diff_x(dg);
        for (int i = 0; i < h - j; ++i)
            dg = diff_y(dg);
        BinaryForm<T> const term = multiply(df, dg);
        BigRational const coeff((j % 2 == 0 ? 1 : -1) * binomial(h, j));
        for (std::size_t k = 0; k < acc.c.size(); ++k)
            acc.c[k] = acc.c[k] + scale(term.c[k], coeff);
    }
    BigRational const norm = ratio(factorial(m - h) * factorial(n - h), factorial(m) * factorial(n));
    for (auto & v : acc.c)
        v = scale(v, norm);
    return acc;
}

/* Clebsch invariants A, B, C, D of a binary sextic. */
template <class T> struct ClebschInvariants
{
    T A, B, C, D;
};

template <class T> ClebschInvariants<T> clebsch(BinaryForm<T> const & f)
{
    if (f.degree() != 6)
        throw std::invalid_argument("clebsch: expected a sextic");
    auto const i = transvectant(f, f, 4);
    auto const delta = transvectant(i, i, 2);
    auto const y1 = transvectant(f, i, 4);
    auto const y2 = transvectant(i, y1, 2);
    auto const y3 = transvectant(i, y2, 2);
    return {transvectant(f, f, 6).c[0], transvectant(i, i, 4).c[0], transvectant(i, delta, 4).c[0],
            transvectant(y3, y1, 2).c[0]};
}

/* Igusa-Clebsch invariants; I10 equals the discriminant of the sextic. */
template <class T> struct IgusaClebsch
{
    T I2, I4, I6, I10;
};

template <class T> IgusaClebsch<T> igusa_clebsch(BinaryForm<T> const & f)
{
    auto const [A, B, C, D] = clebsch(f);
    auto k = [](long v) { return BigRational(v); };
    T const A2 = A * A;
    T const A3 = A2 * A;
    T const A5 = A3 * A2;
    T const I2 = scale(A, k(-120));
    T const I4 = scale(A2, k(-720)) + scale(B, k(6750));
    T const I6 = scale(A3, k(8640)) + scale(A * B, k(-108000)) + scale(C, k(202500));
    T const I10 = scale(A5, k(-62208)) + scale(A3 * B, k(972000)) + scale(A2 * C, k(1620000)) +
                  scale(A * B * B, k(-3037500)) + scale(B * C, k(-6075000)) + scale(D, k(-4556250));
    return {I2, I4, I6, I10};
}

/* Determinant over a field by Gaussian elimination with pivot search. */
template <class T> T determinant(std::vector<std::vector<T>> m)
{
    std::size_t const n = m.size();
    T const zero = zero_like(m[0][0]);
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == zero)
            ++piv;
        if (piv == n)
            return zero;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            negate = !negate;
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == zero)
                continue;
            T const factor = m[row][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k)
                m[row][k] = m[row][k] - factor * m[col][k];
        }
    }
    T prod = m[0][0];
    for (std::size_t i = 1; i < n; ++i)
        prod = prod * m[i][i];
    return negate ? zero - prod : prod;
}

/*
 * Discriminant of the degree-d polynomial sum c[k] x^k with c[d] != 0:
 * (-1)^(d(d-1)/2) Res(f, f') / c[d], the resultant taken as the
 * determinant of the Sylvester matrix.
 */
template <class T> T polynomial_discriminant(std::vector<T> const & c)
{
    std::size_t const d = c.size() - 1;
    T const zero = zero_like(c[0]);
    if (d < 2 || c[d] == zero)
        throw std::invalid_argument("polynomial_discriminant: degenerate leading coefficient");
    std::vector<T> der(d, zero);
    for (std::size_t k = 1; k <= d; ++k)
        der[k - 1] = scale(c[k], BigRational(static_cast<long>(k)));
    std::size_t const n = 2 * d - 1;
    std::vector<std::vector<T>> syl(n, std::vector<T>(n, zero));
    /* rows: coefficients from the highest power down */
    for (std::size_t r = 0; r + 1 < d; ++r)
        for (std::size_t k = 0; k <= d; ++k)
            syl[r][r + k] = c[d - k];
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k)
            syl[d - 1 + r][r + k] = der[d - 1 - k];
    T const res = determinant(std::move(syl));
    T const q = res / c[d];
    bool const negate = ((d * (d - 1) / 2) % 2) == 1;
    return negate ? zero - q : q;
}

} // namespace splitcm

#endif
