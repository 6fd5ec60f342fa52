#include "splitcm/curves.hpp"

#include <algorithm>
#include <cmath>

namespace splitcm {

long default_digits(long N)
{
    return N <= 67 ? 120 : 220;
}

Recognized recognize_in_K_detailed(Complex const & z, long N, BigInt const & a, PrecisionContext const & ctx)
{
    if (a <= 0)
        throw InvalidInput("recognize_in_K: a must be positive");
    if (!z.is_finite())
        throw RecognitionFailed("recognize_in_K: non-finite input");
    mpfr_prec_t const prec = std::max(ctx.bits(), z.precision());
    BigInt const a6 = a * a * a * a * a * a;
    BigInt const den = 2 * a6;
    Real const sqrtN = sqrt(Real(N, prec));
    BigInt const X = (z.re * Real(den, prec)).round();
    BigInt const Y = ((z.im * Real(den, prec)) / sqrtN).round();

    KElement w(N, ratio(X, den), ratio(Y, den));
    Real const residual = (z - to_complex(w, prec)).abs();
    double const res_log = residual.is_zero() ? -HUGE_VAL : residual.log10_abs();
    double const limit = -static_cast<double>(ctx.digits()) / 2.0;
    if (!(res_log < limit))
        throw RecognitionFailed("recognize_in_K: residual 10^" + std::to_string(res_log) + " above 10^" +
                                std::to_string(limit));
    BigInt const parity = X - Y;
    if (mpz_odd_p(parity.get_mpz_t()))
        throw RecognitionFailed("recognize_in_K: 2a^6 x and 2a^6 y differ in parity");
    return {std::move(w), res_log};
}

KElement recognize_in_K(Complex const & z, long N, BigInt const & a, PrecisionContext const & ctx)
{
    return recognize_in_K_detailed(z, N, a, ctx).value;
}

SexticC normalized_numeric(HermitianForm const & f, PrecisionContext const & ctx)
{
    PeriodMatrix const Z = period_matrix(f);
    SexticC s = bolza_klein_sextic(Z, ctx);
    mpfr_prec_t const prec = ctx.bits();
    Real const two_pi = Real::pi(prec) * 2;
    Real const a(Z.a, prec);
    Real const scale = pow(two_pi, 6) * pow(a, 6) * eta24_abs(f.N(), ctx);
    for (auto & c : s.c)
        c = c / scale;
    return s;
}

namespace {

struct Attempt
{
    SexticK value;
    bool ok = false;
    std::string error;
};

Attempt recognize_all(HermitianForm const & f, SexticC const & s, PrecisionContext const & ctx)
{
    Attempt out;
    out.value.N = f.N();
    out.value.source = f;
    out.value.digits = ctx.digits();
    try {
        for (std::size_t k = 0; k < 7; ++k) {
            Recognized r = recognize_in_K_detailed(s.c[k], f.N(), f.a(), ctx);
            out.value.c[k] = std::move(r.value);
            out.value.residual_log10 = std::max(out.value.residual_log10, r.residual_log10);
        }
        if (out.value.c[6].is_zero())
            throw RecognitionFailed("leading coefficient recognized as zero");
        out.ok = true;
    } catch (RecognitionFailed const & e) {
        out.error = e.what();
    }
    return out;
}

} // namespace

SexticK normalized_sextic(HermitianForm const & f, PrecisionContext const & ctx)
{
    if (!is_reduced(f))
        throw InvalidInput("normalized_sextic: form " + f.to_string() + " is not reduced");
    if (is_principal(f))
        throw PrincipalForm("normalized_sextic: " + f.to_string() + " is in the principal class");

    constexpr long max_digits = 2000;
    constexpr int max_retries = 3;
    PrecisionContext cur = ctx;
    std::optional<Attempt> here;
    std::string last_error;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        if (cur.digits() > max_digits)
            break;
        if (!here)
            here = recognize_all(f, normalized_numeric(f, cur), cur);
        PrecisionContext const check = cur.doubled();
        Attempt verify = recognize_all(f, normalized_numeric(f, check), check);
        if (here->ok && verify.ok && here->value == verify.value)
            return here->value;
        last_error = !here->ok ? here->error : !verify.ok ? verify.error : "results differ at doubled precision";
        cur = check;
        here = std::move(verify);
    }
    throw RecognitionFailed("normalized_sextic: " + f.to_string() + ": " + last_error);
}

SexticK normalized_sextic(HermitianForm const & f)
{
    return normalized_sextic(f, PrecisionContext(default_digits(f.N())));
}

SexticK iota_sextic(SexticK const & f)
{
    SexticK out = f;
    for (auto & c : out.c)
        c = c.conj();
    if (out.source)
        out.source = iota(*out.source);
    return out;
}

bool has_integral_structure(SexticK const & f, BigInt const & a)
{
    BigInt const den = 2 * a * a * a * a * a * a;
    for (auto const & c : f.c) {
        BigRational const x = c.x() * den;
        BigRational const y = c.y() * den;
        if (x.get_den() != 1 || y.get_den() != 1)
            return false;
        BigInt const d = x.get_num() - y.get_num();
        if (mpz_odd_p(d.get_mpz_t()))
            return false;
    }
    return !f.c[6].is_zero();
}

SexticK intro_fixture_163()
{
    long const N = 163;
    auto k = [](long x, long y) { return KElement(N, BigRational(x), BigRational(y)); };
    // h(x) = h0 + h1 x + h2 x^2 + h3 x^3
    std::array<KElement, 4> const h{k(-37250, -1596), k(510153, -47481), k(1752597, 129789), k(-151790, 7144)};
    // x^3 h(-1/x), conjugated
    std::array<KElement, 4> const hi{-h[3].conj(), h[2].conj(), -h[1].conj(), h[0].conj()};
    SexticK out;
    out.N = N;
    for (auto & c : out.c)
        c = KElement(N);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out.c[i + j] += h[i] * hi[j];
    for (auto & c : out.c)
        c = c * BigRational(1, 216);
    return out;
}

SexticQ q_model_43()
{
    return {{BigRational(1472877), BigRational(3214656), BigRational(813483), BigRational(585856),
             BigRational(61311), BigRational(24384), BigRational(1)}};
}

SexticK to_sextic_k(SexticQ const & f, long N)
{
    SexticK out;
    out.N = N;
    for (std::size_t k = 0; k < 7; ++k)
        out.c[k] = KElement(N, f.c[k]);
    return out;
}

} // namespace splitcm
