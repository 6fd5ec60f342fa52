#ifndef SPLITCM_HERMITIAN_HPP
#define SPLITCM_HERMITIAN_HPP

#include "splitcm/exact.hpp"

#include <string>
#include <variant>
#include <vector>

namespace splitcm {

/* Validates N as a prime congruent to 3 mod 4; throws InvalidInput otherwise. */
void require_discriminant_prime(long N);

namespace gen {
struct Translate
{
    GaussianInt lambda;
};
struct Invert
{
};
struct NegateB
{
};
} // namespace gen

/* Generators of SL2(Z[i]) acting on forms. */
using Sl2GaussianGen = std::variant<gen::Translate, gen::Invert, gen::NegateB>;

/*
 * Binary Hermitian form over Z[i],
 *
 *   Phi(u, v) = 2a u conj(u) + b u conj(v) + conj(b) conj(u) v + 2c v conj(v),
 *
 * with discriminant b conj(b) - 4ac = -N, a, c > 0. The forms the
 * pipeline works with have b = 1 mod 2 (odd real part, even imaginary
 * part); apply_generator keeps that congruence.
 */
class HermitianForm
{
    long N_ = 0;
    BigInt a_;
    GaussianInt b_;
    BigInt c_;

    struct Unchecked
    {
    };
    /* Used for images of valid forms under SL2(Z[i]); these keep N, the
     * discriminant, positivity and the congruence on b. */
    HermitianForm(Unchecked, long N, BigInt a, GaussianInt b, BigInt c)
        : N_(N), a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
    {
    }
    friend HermitianForm apply_generator(HermitianForm const & f, Sl2GaussianGen const & g);

  public:
    HermitianForm(long N, BigInt a, GaussianInt b, BigInt c);
    /* Convenience: b = r + s*i. */
    HermitianForm(long N, long a, long r, long s, long c)
        : HermitianForm(N, BigInt(a), GaussianInt(r, s), BigInt(c))
    {
    }

    long N() const { return N_; }
    BigInt const & a() const { return a_; }
    GaussianInt const & b() const { return b_; }
    BigInt const & c() const { return c_; }
    BigInt const & r() const { return b_.re; }
    BigInt const & s() const { return b_.im; }

    BigInt discriminant() const { return b_.norm() - 4 * a_ * c_; }

    /* "(a,r+si,c)" */
    std::string to_string() const;
    /* "a,r,s,c" as accepted by parse_form */
    std::string selector() const;

    friend bool operator==(HermitianForm const &, HermitianForm const &) = default;
};

std::ostream & operator<<(std::ostream & os, HermitianForm const & f);

/* Parses "a,r,s,c". */
HermitianForm parse_form(long N, std::string const & text);

/* Point (x, y, t) of hyperbolic 3-space; t is kept through t^2. */
struct H3Point
{
    BigRational x;
    BigRational y;
    BigRational t2;

    /* x^2 + y^2 + t^2 */
    BigRational height2() const { return x * x + y * y + t2; }
};

/* Z = (1/2a) [[r + sqrt(-N), s], [s, -r + sqrt(-N)]] */
struct PeriodMatrix
{
    long N = 0;
    BigInt a;
    BigInt r;
    BigInt s;

    /* Entries as elements of K (row-major z11, z12, z22). */
    KElement z11() const;
    KElement z12() const;
    KElement z22() const;
    /* Im Z = (sqrt(N)/2a) Id; its square is N/(4a^2). */
    BigRational imag_scale_squared() const;
    bool is_diagonal() const { return s == 0; }
};

/* All reduced forms of discriminant -N in canonical order (a, re b, im b). */
std::vector<HermitianForm> enumerate_reduced(long N);

/* (N+5)/12 or (N+13)/12 according to (-3/N). */
long class_number_formula(long N);

/* (a, -conj(b), c) */
HermitianForm iota(HermitianForm const & f);

H3Point rep_point(HermitianForm const & f);

/* Membership in the enumeration, decided without enumerating. */
bool is_reduced(HermitianForm const & f);

/*
 * Translate(l): b -> b + 2a l, c -> c + a|l|^2 + Re(conj(l) b)
 *               (substitution u -> u + conj(l) v)
 * Invert:       (a, b, c) -> (c, -conj(b), a)   ((u, v) -> (-v, u))
 * NegateB:      (a, b, c) -> (a, -b, c)         ((u, v) -> (iu, -iv))
 */
HermitianForm apply_generator(HermitianForm const & f, Sl2GaussianGen const & g);
HermitianForm apply_word(HermitianForm f, std::vector<Sl2GaussianGen> const & word);

/* Reduced representative of the SL2(Z[i]) class of f. */
HermitianForm reduce_form(HermitianForm const & f);

/* Number of orbits of f -> reduce_form(iota(f)) on the reduced forms. */
long type_number(long N);

bool is_principal(HermitianForm const & f);

/* True iff f is SL2(Z[i])-equivalent to iota(f); f must be reduced and
 * non-principal. */
bool definable_over_Q(HermitianForm const & f);

PeriodMatrix period_matrix(HermitianForm const & f);

} // namespace splitcm

#endif
