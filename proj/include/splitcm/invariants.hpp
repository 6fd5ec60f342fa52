#ifndef SPLITCM_INVARIANTS_HPP
#define SPLITCM_INVARIANTS_HPP

#include "splitcm/curves.hpp"

#include <array>
#include <string>
#include <vector>

namespace splitcm {

struct IgusaInvariants
{
    BigRational J2, J4, J6, J8, J10;

    std::array<BigRational, 5> as_array() const { return {J2, J4, J6, J8, J10}; }
    bool is_integral() const;
    /* 4 J8 = J2 J6 - J4^2 */
    bool satisfies_j8_relation() const { return 4 * J8 == J2 * J6 - J4 * J4; }

    friend bool operator==(IgusaInvariants const &, IgusaInvariants const &) = default;
};

/* J's from Igusa-Clebsch invariants; J10 = I10 / 4096. */
template <class T> struct IgusaJ
{
    T J2, J4, J6, J8, J10;
};

template <class T> IgusaJ<T> igusa_from_clebsch(IgusaClebsch<T> const & ic)
{
    auto k = [](long n, long d = 1) { return BigRational(n, d); };
    T const J2 = scale(ic.I2, k(1, 8));
    T const J4 = scale(scale(J2 * J2, k(4)) - ic.I4, k(1, 96));
    T const J6 = scale(scale(J2 * J2 * J2, k(8)) - scale(J2 * J4, k(160)) - ic.I6, k(1, 576));
    T const J8 = scale(J2 * J6 - J4 * J4, k(1, 4));
    T const J10 = scale(ic.I10, k(1, 4096));
    return {J2, J4, J6, J8, J10};
}

IgusaInvariants igusa(SexticQ const & f);
/* Throws InvalidInput if some J is not rational. */
IgusaInvariants igusa(SexticK const & f);

/* Exact discriminant of sum c_k x^k (degree 6). */
BigRational sextic_disc(SexticQ const & f);
KElement sextic_disc(SexticK const & f);

/* Discriminant of a numerical sextic, through I10. */
Complex numeric_disc(SexticC const & f);

struct ConicMatrix
{
    std::array<std::array<BigRational, 3>, 3> m;

    bool is_symmetric() const;
    friend bool operator==(ConicMatrix const &, ConicMatrix const &) = default;
};

ConicMatrix mestre_matrix(IgusaInvariants const & J);

struct DetReport
{
    BigRational value;
    int sign = 0;
    Factorization factors; // of |value|; negative exponents for the denominator
};

DetReport det_mestre(ConicMatrix const & M);

/* A place of Q: a prime, or infinity (p == 0). */
struct Place
{
    BigInt p;

    static Place infinity() { return {BigInt(0)}; }
    bool is_infinite() const { return p == 0; }
    std::string to_string() const;

    friend bool operator==(Place const &, Place const &) = default;
    friend bool operator<(Place const & a, Place const & b)
    {
        // primes ascending, infinity last
        if (a.is_infinite() != b.is_infinite())
            return b.is_infinite();
        return a.p < b.p;
    }
};

int hilbert_symbol(BigRational const & a, BigRational const & b, Place const & v);

struct ObstructionReport
{
    DetReport det;
    std::array<BigRational, 3> diagonal;
    std::vector<Place> obstructed_places; // sorted
    bool solvable_over_Q = false;
};

/* Local solvability of x M x^T = 0 at every place; throws InvalidInput for
 * singular M. */
ObstructionReport conic_obstruction(ConicMatrix const & M);

/* Diagonal entries of a congruent diagonal form. */
std::array<BigRational, 3> diagonalize(ConicMatrix const & M);

/* Same point of weighted projective space (weights 1..5). Throws
 * InvalidInput if either J10 vanishes. */
bool weighted_equal(IgusaInvariants const & J, IgusaInvariants const & Jp);

} // namespace splitcm

#endif
