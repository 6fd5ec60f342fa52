#ifndef SPLITCM_ARITH_HPP
#define SPLITCM_ARITH_HPP

#include "splitcm/curves.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace splitcm {

class IndefiniteForm : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/* Q(m) = m^T G m for a symmetric integer matrix G. */
struct TernaryForm
{
    std::array<std::array<BigInt, 3>, 3> G;

    BigInt operator()(std::array<long, 3> const & m) const;
    /* leading principal minors, all > 0 iff positive definite */
    std::array<BigInt, 3> minors() const;
    bool is_positive_definite() const;
};

/* Nine whitespace-separated integers, row-major; must be symmetric.
 * Text after # on a line is ignored. */
TernaryForm parse_gram(std::istream & in);
TernaryForm read_gram_file(std::string const & path);

/* Level-163 form [[24,4,6],[4,55,1],[6,1,83]]. */
TernaryForm gram_163();

/*
 * For every m with k = (N - Q(m))/4 a positive integer and every d | k,
 * adds -6 (-N/d) v_p(d) to the exponent of each p | d. The search box
 * |m_i| <= sqrt(N (G^-1)_ii) covers Q(m) < N exactly; margin widens it.
 */
Factorization gz_exponents(TernaryForm const & Q, long N, long margin = 0);

enum class Root
{
    plus,
    minus
};

struct Fp_Sextic
{
    long p = 0;
    std::array<long, 7> c{}; // residues in [0, p)

    friend bool operator==(Fp_Sextic const &, Fp_Sextic const &) = default;
};

/* sqrt(-N) -> +rho or -rho, rho the smaller square root mod p. */
Fp_Sextic reduce_mod_P(SexticK const & f, long p, Root which);
Fp_Sextic reduce_mod_p(SexticQ const & f, long p);

/* Degree 6 and squarefree over F_p. */
bool is_smooth(Fp_Sextic const & f);

/* Points on the smooth projective model of y^2 = f(x); rejects singular
 * reductions. */
long count_points(Fp_Sextic const & f);

/* sum_x (1 + chi(f(x))) + 1 + chi(c6), without the smoothness check. */
long character_sum_count(Fp_Sextic const & f);

long least_nonresidue(long p);
Fp_Sextic twist(Fp_Sextic const & f);

/* Primes p_min <= p <= p_max with 4p = a^2 + N, ascending, as (p, a). */
std::vector<std::pair<long, long>> split_prime_scan(long N, long p_min, long p_max);

struct MaximalScanRow
{
    long p = 0;
    long a = 0;
    long count = 0;
    long twist_count = 0;
    long target = 0;      // p + 1 + 2a
    long serre_bound = 0; // p + 1 + 2 floor(2 sqrt p)
    bool is_maximal = false;
    bool skipped = false;
    std::string reason;
};

/* First p of the scan: the smallest split p with 2a + 1 > N, where
 * p + 1 + 2a is Serre's bound. For N = 43 this is 167. */
long default_scan_start(long N);

std::vector<MaximalScanRow> maximal_scan(SexticK const & f, long p_max, Root which = Root::plus);
std::vector<MaximalScanRow> maximal_scan(SexticQ const & f, long N, long p_max);
std::vector<MaximalScanRow> maximal_scan(SexticK const & f, long p_min, long p_max, Root which);

} // namespace splitcm

#endif
