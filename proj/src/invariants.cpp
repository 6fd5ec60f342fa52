#include "splitcm/invariants.hpp"

#include <algorithm>
#include <set>

namespace splitcm {

bool IgusaInvariants::is_integral() const
{
    for (auto const & j : as_array())
        if (j.get_den() != 1)
            return false;
    return true;
}

namespace {

template <class T> void require_sextic(std::array<T, 7> const & c, T const & zero)
{
    if (c[6] == zero)
        throw InvalidInput("sextic has degenerate leading coefficient");
}

BigRational rational_part(KElement const & k, char const * name)
{
    if (!k.is_rational())
        throw InvalidInput(std::string("igusa: ") + name + " is not rational: " + k.to_string());
    return k.x();
}

} // namespace

IgusaInvariants igusa(SexticQ const & f)
{
    require_sextic(f.c, BigRational(0));
    auto const J = igusa_from_clebsch(igusa_clebsch(f.homogeneous()));
    return {J.J2, J.J4, J.J6, J.J8, J.J10};
}

IgusaInvariants igusa(SexticK const & f)
{
    require_sextic(f.c, KElement(f.N));
    auto const J = igusa_from_clebsch(igusa_clebsch(f.homogeneous()));
    return {rational_part(J.J2, "J2"), rational_part(J.J4, "J4"), rational_part(J.J6, "J6"),
            rational_part(J.J8, "J8"), rational_part(J.J10, "J10")};
}

BigRational sextic_disc(SexticQ const & f)
{
    return polynomial_discriminant(std::vector<BigRational>(f.c.begin(), f.c.end()));
}

KElement sextic_disc(SexticK const & f)
{
    std::vector<KElement> c(f.c.begin(), f.c.end());
    for (auto & v : c)
        if (v.N() == 0)
            v = KElement(f.N, v.x(), v.y());
    return polynomial_discriminant(c);
}

Complex numeric_disc(SexticC const & f)
{
    BinaryForm<Complex> const g{{f.c.begin(), f.c.end()}};
    return igusa_clebsch(g).I10;
}

bool ConicMatrix::is_symmetric() const
{
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (m[i][j] != m[j][i])
                return false;
    return true;
}

ConicMatrix mestre_matrix(IgusaInvariants const & J)
{
    BigRational const &J2 = J.J2, &J4 = J.J4, &J6 = J.J6, &J10 = J.J10;
    BigRational const J2_2 = J2 * J2;
    BigRational const m11 = 3 * J2_2 * J2 - 160 * J4 * J2 - 3600 * J6;
    BigRational const m21 = -J4 * J2_2 + 330 * J6 * J2 + 160 * J4 * J4;
    BigRational const m31 = -J6 * J2_2 - 840 * J6 * J4 - 8000 * J10;
    BigRational const m22 = -25 * J6 * J2_2 - 8 * J4 * J4 * J2 - 120 * J6 * J4 - 2000 * J10;
    // printed with weight 10 as 67 J6 J4; the J2 factor makes it homogeneous
    BigRational const m32 = 67 * J2 * J4 * J6 + 600 * J10 * J2 + 90 * J6 * J6;
    BigRational const m33 = -33 * J6 * J6 * J2 - 100 * J6 * J4 * J4 - 800 * J10 * J4;
    ConicMatrix M;
    M.m = {{{m11, m21, m31}, {m21, m22, m32}, {m31, m32, m33}}};
    return M;
}

DetReport det_mestre(ConicMatrix const & M)
{
    std::vector<std::vector<BigRational>> rows;
    for (auto const & r : M.m)
        rows.emplace_back(r.begin(), r.end());
    DetReport out;
    out.value = determinant(std::move(rows));
    out.sign = sgn(out.value);
    if (out.sign != 0) {
        out.factors = factor(out.value.get_num());
        if (out.value.get_den() != 1)
            out.factors += -1 * factor(out.value.get_den());
    }
    return out;
}

std::string Place::to_string() const
{
    return is_infinite() ? "inf" : p.get_str();
}

namespace {

// a = p^alpha * u with p not dividing u
long split_valuation(BigInt & u, BigInt const & p)
{
    long alpha = 0;
    while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
        u /= p;
        ++alpha;
    }
    return alpha;
}

// squares do not change the symbol, so num*den stands in for num/den
BigInt integer_rep(BigRational const & q)
{
    return q.get_num() * q.get_den();
}

long mod8(BigInt const & u)
{
    return mod(u, BigInt(8)).get_si();
}

} // namespace

int hilbert_symbol(BigRational const & a, BigRational const & b, Place const & v)
{
    if (a == 0 || b == 0)
        throw InvalidInput("hilbert_symbol: arguments must be nonzero");
    if (v.is_infinite())
        return (a < 0 && b < 0) ? -1 : 1;
    if (v.p < 2 || !is_prime(v.p))
        throw InvalidInput("hilbert_symbol: place must be a prime or infinity");
    BigInt u = integer_rep(a);
    BigInt w = integer_rep(b);
    long const alpha = split_valuation(u, v.p);
    long const beta = split_valuation(w, v.p);
    if (v.p == 2) {
        auto eps = [](BigInt const & x) { return ((mod8(x) - 1) / 2) % 2; };
        auto omega = [](BigInt const & x) {
            long const r = mod8(x);
            return ((r * r - 1) / 8) % 2;
        };
        long const e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
        return e % 2 == 0 ? 1 : -1;
    }
    int s = 1;
    BigInt const half = (v.p - 1) / 2;
    if ((alpha * beta) % 2 == 1 && mpz_odd_p(half.get_mpz_t()))
        s = -s;
    if (beta % 2 == 1)
        s *= kronecker(u, v.p);
    if (alpha % 2 == 1)
        s *= kronecker(w, v.p);
    return s;
}

std::array<BigRational, 3> diagonalize(ConicMatrix const & M)
{
    auto A = M.m;
    std::array<BigRational, 3> d;
    for (int i = 0; i < 3; ++i) {
        int piv = -1;
        for (int j = i; j < 3; ++j)
            if (A[j][j] != 0) {
                piv = j;
                break;
            }
        if (piv < 0) {
            // zero diagonal: x_i -> x_i + x_j gives 2 A_ij on the diagonal
            for (int j = i + 1; j < 3 && piv < 0; ++j)
                if (A[i][j] != 0) {
                    for (int k = 0; k < 3; ++k)
                        A[i][k] += A[j][k];
                    for (int k = 0; k < 3; ++k)
                        A[k][i] += A[k][j];
                    piv = i;
                }
            if (piv < 0)
                throw InvalidInput("diagonalize: singular matrix");
        }
        if (piv != i) {
            std::swap(A[piv], A[i]);
            for (auto & row : A)
                std::swap(row[piv], row[i]);
        }
        for (int j = i + 1; j < 3; ++j) {
            if (A[j][i] == 0)
                continue;
            BigRational const f = A[j][i] / A[i][i];
            for (int k = 0; k < 3; ++k)
                A[j][k] -= f * A[i][k];
            for (int k = 0; k < 3; ++k)
                A[k][j] -= f * A[k][i];
        }
        d[static_cast<std::size_t>(i)] = A[i][i];
    }
    return d;
}

ObstructionReport conic_obstruction(ConicMatrix const & M)
{
    if (!M.is_symmetric())
        throw InvalidInput("conic_obstruction: matrix is not symmetric");
    ObstructionReport out;
    out.det = det_mestre(M);
    if (out.det.sign == 0)
        throw InvalidInput("conic_obstruction: singular matrix (extra automorphisms)");
    out.diagonal = diagonalize(M);
    auto const & d = out.diagonal;

    // Scaled to an integral matrix, the form is unimodular at every odd
    // p not dividing det, hence isotropic there; only 2 and primes of det
    // can obstruct. The diagonal entries themselves are never factored.
    BigInt L = 1;
    for (auto const & row : M.m)
        for (auto const & v : row)
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.get_den_mpz_t());
    BigRational const scaled_det = out.det.value * L * L * L;
    std::set<BigInt> primes{BigInt(2)};
    for (auto const & [p, e] : factor(scaled_det.get_num()))
        primes.insert(p);

    // d1 x^2 + d2 y^2 + d3 z^2 is isotropic at v iff (-d1 d3, -d2 d3)_v = 1
    BigRational const a = -d[0] * d[2];
    BigRational const b = -d[1] * d[2];
    for (auto const & p : primes)
        if (hilbert_symbol(a, b, Place{p}) == -1)
            out.obstructed_places.push_back(Place{p});
    if (hilbert_symbol(a, b, Place::infinity()) == -1)
        out.obstructed_places.push_back(Place::infinity());
    out.solvable_over_Q = out.obstructed_places.empty();
    return out;
}

bool weighted_equal(IgusaInvariants const & J, IgusaInvariants const & Jp)
{
    if (J.J10 == 0 || Jp.J10 == 0)
        throw InvalidInput("weighted_equal: J10 must be nonzero");
    auto const x = J.as_array();
    auto const y = Jp.as_array();
    auto power = [](BigRational const & q, unsigned long e) {
        BigRational r;
        mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
        return r;
    };
    // J_i^{w_j} J'_j^{w_i} = J'_i^{w_j} J_j^{w_i}
    for (unsigned long i = 0; i < 5; ++i)
        for (unsigned long j = i + 1; j < 5; ++j) {
            unsigned long const wi = i + 1, wj = j + 1;
            if (power(x[i], wj) * power(y[j], wi) != power(y[i], wj) * power(x[j], wi))
                return false;
        }
    return true;
}

} // namespace splitcm
