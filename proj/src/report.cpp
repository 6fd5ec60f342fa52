#include "splitcm/report.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace splitcm {

using nlohmann::json;

std::vector<long> report_discriminants()
{
    return {3, 7, 11, 19, 43, 67, 163};
}

long auto_digits(long N, BigInt const & a)
{
    double const want = 40.0 + 3.0 * std::sqrt(static_cast<double>(N)) * a.get_d();
    long const d = std::max(120L, static_cast<long>(std::ceil(want)));
    return std::min(d, 2000L);
}

CurveReport curve_report(HermitianForm const & f, long digits, long pmax)
{
    if (!is_reduced(f))
        throw InvalidInput("form " + f.to_string() + " is not reduced");
    CurveReport r{f, false, false, {}, {}, {}, {}, {}, {}, {}};
    r.principal = is_principal(f);
    if (r.principal)
        throw PrincipalForm("form " + f.to_string() + " is in the principal class");
    r.definable_over_Q = definable_over_Q(f);
    long const d = digits > 0 ? digits : auto_digits(f.N(), f.a());
    r.sextic = normalized_sextic(f, PrecisionContext(d));
    r.igusa = igusa(*r.sextic);
    if (r.igusa->J10.get_den() != 1 || r.igusa->J10 == 0)
        throw RecognitionFailed("J10 is not a nonzero integer for " + f.to_string());
    r.D = factor(r.igusa->J10.get_num());
    r.mestre = mestre_matrix(*r.igusa);
    r.det = det_mestre(*r.mestre);
    if (!r.definable_over_Q && r.det->sign != 0)
        r.obstruction = conic_obstruction(*r.mestre);
    if (pmax > 0)
        r.scan = maximal_scan(*r.sextic, pmax, Root::plus);
    return r;
}

bool is_consistent(CurveReport const & r)
{
    if (!r.igusa || !r.D || !r.det || !r.sextic)
        return false;
    if (r.D->rational_value() != abs(r.igusa->J10))
        return false;
    if (r.igusa->J10 * 4096 != sextic_disc(*r.sextic).x())
        return false;
    bool const want_obstruction = !r.definable_over_Q && r.det->sign != 0;
    if (want_obstruction != r.obstruction.has_value())
        return false;
    if (r.obstruction && r.obstruction->solvable_over_Q)
        return false;
    return true;
}

FullReport full_report(long N, long digits)
{
    auto const allowed = report_discriminants();
    if (std::find(allowed.begin(), allowed.end(), N) == allowed.end())
        throw InvalidInput("report: N must be one of 3, 7, 11, 19, 43, 67, 163");
    FullReport out;
    out.N = N;
    auto const forms = enumerate_reduced(N);
    out.n = static_cast<long>(forms.size());
    out.t = type_number(N);
    std::vector<std::future<CurveReport>> jobs;
    for (auto const & f : forms)
        if (!is_principal(f))
            jobs.push_back(std::async(std::launch::async, [f, digits] { return curve_report(f, digits); }));
    for (auto & j : jobs)
        out.curves.push_back(j.get());
    return out;
}

namespace {

std::string str(BigInt const & v)
{
    return v.get_str();
}

std::string str(long v)
{
    return std::to_string(v);
}

std::string str(BigRational const & q)
{
    return q.get_str();
}

} // namespace

json to_json(KElement const & k)
{
    return {{"x_num", str(k.x().get_num())},
            {"x_den", str(k.x().get_den())},
            {"y_num", str(k.y().get_num())},
            {"y_den", str(k.y().get_den())}};
}

json to_json(SexticK const & f)
{
    BigInt den = 1;
    for (auto const & c : f.c) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.x().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.y().get_den_mpz_t());
    }
    json nums = json::array();
    json coeffs = json::array();
    for (auto const & c : f.c) {
        BigRational const x = c.x() * den;
        BigRational const y = c.y() * den;
        nums.push_back({{"x", str(x.get_num())}, {"y", str(y.get_num())}});
        coeffs.push_back(to_json(c));
    }
    json j{{"N", str(f.N)}, {"common_denominator", str(den)}, {"numerators", nums}, {"coefficients", coeffs}};
    if (f.digits > 0) {
        j["recognition_digits"] = str(f.digits);
        j["residual_log10_floor"] = str(static_cast<long>(std::floor(f.residual_log10)));
    }
    return j;
}

json to_json(IgusaInvariants const & J)
{
    return {{"J2", str(J.J2)}, {"J4", str(J.J4)}, {"J6", str(J.J6)}, {"J8", str(J.J8)}, {"J10", str(J.J10)}};
}

json to_json(Factorization const & f)
{
    json out = json::array();
    for (auto const & [p, e] : f)
        out.push_back({{"p", str(p)}, {"e", str(e)}});
    return out;
}

json to_json(ConicMatrix const & M)
{
    json rows = json::array();
    for (auto const & r : M.m) {
        json row = json::array();
        for (auto const & v : r)
            row.push_back(str(v));
        rows.push_back(row);
    }
    return rows;
}

json to_json(ObstructionReport const & r)
{
    json places = json::array();
    for (auto const & p : r.obstructed_places)
        places.push_back(p.to_string());
    json diag = json::array();
    for (auto const & d : r.diagonal)
        diag.push_back(str(d));
    return {{"obstructed_places", places}, {"solvable_over_Q", r.solvable_over_Q}, {"diagonal", diag}};
}

json to_json(MaximalScanRow const & r)
{
    json j{{"p", str(r.p)}, {"a", str(r.a)}, {"skipped", r.skipped}};
    if (r.skipped) {
        j["reason"] = r.reason;
    } else {
        j["count"] = str(r.count);
        j["twist_count"] = str(r.twist_count);
        j["target"] = str(r.target);
        j["is_maximal"] = r.is_maximal;
    }
    return j;
}

json to_json(CurveReport const & r)
{
    json j{{"form", r.form.to_string()},
           {"selector", r.form.selector()},
           {"principal", r.principal},
           {"definable_over_Q", r.definable_over_Q}};
    if (r.sextic)
        j["sextic"] = to_json(*r.sextic);
    if (r.igusa)
        j["igusa"] = to_json(*r.igusa);
    if (r.D)
        j["D_factorization"] = to_json(*r.D);
    if (r.mestre)
        j["mestre_matrix"] = to_json(*r.mestre);
    if (r.det) {
        j["det_mestre"] = str(r.det->value);
        j["det_mestre_factorization"] = to_json(r.det->factors);
    }
    if (r.obstruction)
        j["obstruction"] = to_json(*r.obstruction);
    if (r.scan) {
        json rows = json::array();
        bool all = true;
        for (auto const & row : *r.scan) {
            rows.push_back(to_json(row));
            all = all && (row.skipped || row.is_maximal);
        }
        j["maximal_scan"] = {{"rows", rows}, {"all_maximal", all}};
    }
    return j;
}

json to_json(FullReport const & r)
{
    json curves = json::array();
    for (auto const & c : r.curves)
        curves.push_back(to_json(c));
    return {{"schema_version", report_schema_version},
            {"N", str(r.N)},
            {"n", str(r.n)},
            {"t", str(r.t)},
            {"curve_classes", str(r.t - 1)},
            {"curves", curves}};
}

std::string dump(json const & j)
{
    return j.dump(2) + "\n";
}

} // namespace splitcm
