#ifndef SPLITCM_REPORT_HPP
#define SPLITCM_REPORT_HPP

#include "splitcm/arith.hpp"
#include "splitcm/invariants.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace splitcm {

inline constexpr char const * report_schema_version = "1";

/* N values with class number one, the only ones `report` accepts. */
std::vector<long> report_discriminants();

/* max(120, 40 + 3 sqrt(N) a) digits, at most 2000. */
long auto_digits(long N, BigInt const & a);

struct CurveReport
{
    HermitianForm form;
    bool principal = false;
    bool definable_over_Q = false;
    std::optional<SexticK> sextic;
    std::optional<IgusaInvariants> igusa;
    std::optional<Factorization> D; // factorization of J10 = disc / 2^12
    std::optional<ConicMatrix> mestre;
    std::optional<DetReport> det;
    std::optional<ObstructionReport> obstruction;
    std::optional<std::vector<MaximalScanRow>> scan;
};

/* digits == 0 selects auto_digits. Throws PrincipalForm, RecognitionFailed
 * or InvalidInput. pmax > 0 adds a maximal-curve scan of the plus root. */
CurveReport curve_report(HermitianForm const & f, long digits = 0, long pmax = 0);

/* D = J10 and obstruction present iff not definable and det M != 0. */
bool is_consistent(CurveReport const & r);

struct FullReport
{
    long N = 0;
    long n = 0;
    long t = 0;
    std::vector<CurveReport> curves; // canonical form order
};

/* One report per non-principal reduced form, computed concurrently. */
FullReport full_report(long N, long digits = 0);

nlohmann::json to_json(KElement const & k);
nlohmann::json to_json(SexticK const & f);
nlohmann::json to_json(IgusaInvariants const & J);
nlohmann::json to_json(Factorization const & f);
nlohmann::json to_json(ConicMatrix const & M);
nlohmann::json to_json(ObstructionReport const & r);
nlohmann::json to_json(MaximalScanRow const & r);
nlohmann::json to_json(CurveReport const & r);
nlohmann::json to_json(FullReport const & r);

/* Canonical text: sorted keys, two-space indent, trailing newline. */
std::string dump(nlohmann::json const & j);

} // namespace splitcm

#endif
