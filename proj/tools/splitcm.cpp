// splitcm: command-line front end.
//
// exit codes: 0 ok, 1 gz-verify DIFFER, 2 invalid input, 3 recognition
// failure, 4 principal form, 5 indefinite Gram matrix, 6 maximality failure

#include "splitcm/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

using namespace splitcm;
using nlohmann::json;

namespace {

enum Exit
{
    ok = 0,
    differ = 1,
    invalid = 2,
    recognition = 3,
    principal = 4,
    indefinite = 5,
    not_maximal = 6
};

struct Options
{
    long N = 0;
    std::string form;
    std::string digits = "auto";
    std::string format = "text";
    std::string out;
    long pmax = 10000;
    long pmin = 0;
    long curve_pmax = 0;
    std::string curve;
    std::string gram;
    std::string root = "plus";
    std::string sextic_file;
};

class Output
{
    std::ofstream file_;
    std::ostream * os_;

  public:
    explicit Output(std::string const & path) : os_(&std::cout)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw InvalidInput("cannot write " + path);
            os_ = &file_;
        }
    }
    std::ostream & operator()() { return *os_; }
};

long parse_digits(std::string const & s)
{
    if (s == "auto" || s == "0")
        return 0;
    try {
        std::size_t used = 0;
        long const d = std::stol(s, &used);
        if (used != s.size() || d < PrecisionContext::min_digits || d > 2000)
            throw InvalidInput("");
        return d;
    } catch (std::exception const &) {
        throw InvalidInput("--digits must be auto or an integer in [30, 2000]");
    }
}

bool json_format(Options const & o)
{
    if (o.format != "text" && o.format != "json")
        throw InvalidInput("--format must be text or json");
    return o.format == "json";
}

HermitianForm reduced_form(Options const & o)
{
    require_discriminant_prime(o.N);
    HermitianForm const f = parse_form(o.N, o.form);
    if (!is_reduced(f))
        throw InvalidInput("form " + f.to_string() + " is not reduced");
    return f;
}

SexticQ read_sextic_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open " + path);
    SexticQ f;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        auto const hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue;
        std::string extra;
        if (ls >> extra)
            throw InvalidInput("sextic file: one coefficient per line");
        if (n == 7)
            throw InvalidInput("sextic file: more than seven coefficients");
        BigRational q;
        if (q.set_str(tok, 10) != 0 || q.get_den() == 0)
            throw InvalidInput("sextic file: bad rational " + tok);
        q.canonicalize();
        f.c[n++] = q;
    }
    if (n != 7)
        throw InvalidInput("sextic file: expected seven coefficients c0..c6");
    if (f.c[6] == 0)
        throw InvalidInput("sextic file: c6 must be nonzero");
    return f;
}

// intro | qmodel | a,r,s,c
std::variant<SexticK, SexticQ> select_curve(Options const & o, long digits)
{
    if (o.curve == "intro") {
        if (o.N != 163)
            throw InvalidInput("curve intro needs -N 163");
        return intro_fixture_163();
    }
    if (o.curve == "qmodel") {
        if (o.N != 43)
            throw InvalidInput("curve qmodel needs -N 43");
        return q_model_43();
    }
    require_discriminant_prime(o.N);
    HermitianForm const f = parse_form(o.N, o.curve);
    if (!is_reduced(f))
        throw InvalidInput("form " + f.to_string() + " is not reduced");
    return normalized_sextic(f, PrecisionContext(digits > 0 ? digits : auto_digits(f.N(), f.a())));
}

std::string k_string(KElement const & k)
{
    return k.to_string();
}

void print_igusa(std::ostream & os, IgusaInvariants const & J)
{
    os << "J2  = " << J.J2 << "\n"
       << "J4  = " << J.J4 << "\n"
       << "J6  = " << J.J6 << "\n"
       << "J8  = " << J.J8 << "\n"
       << "J10 = " << J.J10 << "\n";
}

void print_conic(std::ostream & os, ConicMatrix const & M, DetReport const & det)
{
    char const * names[3][3] = {{"m11", "m12", "m13"}, {"m21", "m22", "m23"}, {"m31", "m32", "m33"}};
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            os << names[i][j] << " = " << M.m[i][j] << "\n";
    os << "det M = " << det.value;
    if (det.sign != 0)
        os << " = " << (det.sign < 0 ? "-" : "") << det.factors;
    os << "\n";
}

void print_obstruction(std::ostream & os, ObstructionReport const & r)
{
    os << "diagonal: " << r.diagonal[0] << ", " << r.diagonal[1] << ", " << r.diagonal[2] << "\n";
    os << "obstructed places: {";
    for (std::size_t i = 0; i < r.obstructed_places.size(); ++i)
        os << (i ? ", " : "") << r.obstructed_places[i].to_string();
    os << "}\n";
    os << "conic has a rational point: " << (r.solvable_over_Q ? "yes" : "no") << "\n";
}

void print_curve(std::ostream & os, CurveReport const & r)
{
    os << "form " << r.form.to_string() << "  principal=" << (r.principal ? "yes" : "no")
       << "  definable_over_Q=" << (r.definable_over_Q ? "yes" : "no") << "\n";
    if (r.sextic) {
        os << "f(x) = sum c_k x^k   (" << r.sextic->digits << " digits, residual 10^"
           << static_cast<long>(std::floor(r.sextic->residual_log10)) << ")\n";
        for (int k = 6; k >= 0; --k)
            os << "  c" << k << " = " << k_string(r.sextic->c[static_cast<std::size_t>(k)]) << "\n";
    }
    if (r.igusa)
        print_igusa(os, *r.igusa);
    if (r.D)
        os << "D = J10 = " << *r.D << "\n";
    if (r.mestre && r.det)
        print_conic(os, *r.mestre, *r.det);
    if (r.det && r.det->sign == 0)
        os << "det M = 0: extra automorphisms, conic criterion not applicable\n";
    if (r.obstruction)
        print_obstruction(os, *r.obstruction);
}

void print_scan(std::ostream & os, std::vector<MaximalScanRow> const & rows)
{
    os << "      p      a   count   twist  p+1+2a  maximal\n";
    for (auto const & r : rows) {
        char buf[128];
        if (r.skipped) {
            std::snprintf(buf, sizeof buf, "%7ld %6ld  skipped: ", r.p, r.a);
            os << buf << r.reason << "\n";
            continue;
        }
        std::snprintf(buf, sizeof buf, "%7ld %6ld %7ld %7ld %7ld  %s\n", r.p, r.a, r.count, r.twist_count, r.target,
                      r.is_maximal ? "yes" : "NO");
        os << buf;
    }
}

int cmd_enumerate(Options const & o)
{
    require_discriminant_prime(o.N);
    bool const as_json = json_format(o);
    auto const forms = enumerate_reduced(o.N);
    long const t = type_number(o.N);
    Output out(o.out);
    if (as_json) {
        json list = json::array();
        for (auto const & f : forms)
            list.push_back({{"form", f.to_string()}, {"selector", f.selector()}, {"principal", is_principal(f)}});
        out() << dump({{"N", std::to_string(o.N)},
                         {"n", std::to_string(forms.size())},
                         {"t", std::to_string(t)},
                         {"forms", list}});
        return ok;
    }
    for (auto const & f : forms) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%6s %10s %6s", f.a().get_str().c_str(), f.b().to_string().c_str(),
                      f.c().get_str().c_str());
        out() << buf << "\n";
    }
    out() << "n=" << forms.size() << " t=" << t << "\n";
    return ok;
}

int cmd_curve(Options const & o)
{
    bool const as_json = json_format(o);
    HermitianForm const f = reduced_form(o);
    CurveReport const r = curve_report(f, parse_digits(o.digits), o.curve_pmax);
    Output out(o.out);
    if (as_json)
        out() << dump(to_json(r));
    else {
        print_curve(out(), r);
        if (r.scan)
            print_scan(out(), *r.scan);
    }
    return ok;
}

int cmd_invariants(Options const & o)
{
    bool const as_json = json_format(o);
    SexticQ const f = read_sextic_file(o.sextic_file);
    IgusaInvariants const J = igusa(f);
    Output out(o.out);
    if (as_json) {
        json j = to_json(J);
        j["disc"] = sextic_disc(f).get_str();
        out() << dump(j);
        return ok;
    }
    print_igusa(out(), J);
    out() << "disc = " << sextic_disc(f) << "\n";
    return ok;
}

int cmd_obstruction(Options const & o)
{
    bool const as_json = json_format(o);
    IgusaInvariants J;
    if (!o.form.empty()) {
        HermitianForm const f = reduced_form(o);
        if (is_principal(f))
            throw PrincipalForm("form " + f.to_string() + " is in the principal class");
        long const d = parse_digits(o.digits);
        J = igusa(normalized_sextic(f, PrecisionContext(d > 0 ? d : auto_digits(f.N(), f.a()))));
    } else if (!o.sextic_file.empty()) {
        J = igusa(read_sextic_file(o.sextic_file));
    } else {
        throw InvalidInput("obstruction needs --form (with -N) or a sextic file");
    }
    ConicMatrix const M = mestre_matrix(J);
    DetReport const det = det_mestre(M);
    Output out(o.out);
    std::optional<ObstructionReport> rep;
    if (det.sign != 0)
        rep = conic_obstruction(M);
    if (as_json) {
        json j{{"mestre_matrix", to_json(M)},
               {"det_mestre", det.value.get_str()},
               {"det_mestre_factorization", to_json(det.factors)}};
        if (rep)
            j["obstruction"] = to_json(*rep);
        out() << dump(j);
        return ok;
    }
    print_conic(out(), M, det);
    if (rep)
        print_obstruction(out(), *rep);
    else
        out() << "det M = 0: extra automorphisms, conic criterion not applicable\n";
    return ok;
}

int cmd_gz_verify(Options const & o)
{
    bool const as_json = json_format(o);
    TernaryForm const Q = o.gram.empty() ? gram_163() : read_gram_file(o.gram);
    if (o.gram.empty() && o.N != 163)
        throw InvalidInput("the bundled Gram matrix is for N = 163; pass --gram");
    Factorization const gz = gz_exponents(Q, o.N);
    Options sel = o;
    if (sel.curve.empty())
        sel.curve = "intro";
    auto const curve = select_curve(sel, parse_digits(o.digits));
    BigRational disc = std::visit(
        [](auto const & f) -> BigRational {
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, SexticQ>)
                return sextic_disc(f);
            else {
                KElement const d = sextic_disc(f);
                if (!d.is_rational())
                    throw InvalidInput("discriminant is not rational");
                return d.x();
            }
        },
        curve);
    BigRational const D = disc / 4096;
    if (D == 0)
        throw InvalidInput("curve discriminant vanishes");
    Factorization fd = factor(D.get_num());
    if (D.get_den() != 1)
        fd += -1 * factor(D.get_den());
    bool const equal = (fd == gz) && D > 0;
    Output out(o.out);
    if (as_json) {
        out() << dump({{"gz_exponents", to_json(gz)},
                       {"disc_factorization", to_json(fd)},
                       {"verdict", equal ? "EQUAL" : "DIFFER"}});
    } else {
        out() << "gz exponents:       " << gz << "\n";
        out() << "2^-12 disc(f):      " << (D < 0 ? "-" : "") << fd << "\n";
        out() << (equal ? "EQUAL" : "DIFFER") << "\n";
    }
    return equal ? ok : differ;
}

int cmd_maximal_scan(Options const & o)
{
    bool const as_json = json_format(o);
    if (o.root != "plus" && o.root != "minus")
        throw InvalidInput("--root must be plus or minus");
    if (o.pmax < 0 || o.pmax > 100000)
        throw InvalidInput("--pmax must be in [0, 100000]");
    Options sel = o;
    if (sel.curve.empty())
        sel.curve = "qmodel";
    auto const curve = select_curve(sel, parse_digits(o.digits));
    Root const which = o.root == "plus" ? Root::plus : Root::minus;
    long const pmin = o.pmin > 0 ? o.pmin : default_scan_start(o.N);
    SexticK const fk = std::holds_alternative<SexticK>(curve) ? std::get<SexticK>(curve)
                                                               : to_sextic_k(std::get<SexticQ>(curve), o.N);
    auto const rows = maximal_scan(fk, pmin, o.pmax, which);
    bool all = true;
    for (auto const & r : rows)
        all = all && (r.skipped || r.is_maximal);
    Output out(o.out);
    if (as_json) {
        json list = json::array();
        for (auto const & r : rows)
            list.push_back(to_json(r));
        out() << dump({{"rows", list}, {"all_maximal", all}});
    } else {
        print_scan(out(), rows);
        out() << (all ? "all rows maximal" : "some rows NOT maximal") << "\n";
    }
    return all ? ok : not_maximal;
}

int cmd_report(Options const & o)
{
    bool const as_json = json_format(o);
    FullReport const r = full_report(o.N, parse_digits(o.digits));
    for (auto const & c : r.curves)
        if (!is_consistent(c))
            throw std::logic_error("inconsistent report for " + c.form.to_string());
    Output out(o.out);
    if (as_json) {
        out() << dump(to_json(r));
        return ok;
    }
    out() << "N=" << r.N << " n=" << r.n << " t=" << r.t << " curve classes=" << r.t - 1 << "\n";
    for (auto const & c : r.curves) {
        out() << "\n";
        print_curve(out(), c);
    }
    return ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Genus-2 curves with split CM Jacobian"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App * c) {
        c->add_option("-N", o.N, "discriminant parameter (prime, 3 mod 4)")->required();
        c->add_option("--format", o.format, "text or json");
        c->add_option("-o,--out", o.out, "output path");
    };

    auto * en = app.add_subcommand("enumerate", "reduced Hermitian forms");
    add_common(en);

    auto * cu = app.add_subcommand("curve", "curve report for one reduced form");
    add_common(cu);
    cu->add_option("--form", o.form, "a,r,s,c with b = r + s i")->required();
    cu->add_option("--digits", o.digits, "working precision or auto");
    cu->add_option("--pmax", o.curve_pmax, "also run a maximal-curve scan up to pmax");

    auto * inv = app.add_subcommand("invariants", "Igusa invariants of a rational sextic file");
    inv->add_option("file", o.sextic_file, "seven coefficients c0..c6, one per line")->required();
    inv->add_option("--format", o.format, "text or json");
    inv->add_option("-o,--out", o.out, "output path");

    auto * ob = app.add_subcommand("obstruction", "Mestre conic and its local obstructions");
    ob->add_option("file", o.sextic_file, "rational sextic file");
    ob->add_option("-N", o.N, "discriminant parameter");
    ob->add_option("--form", o.form, "a,r,s,c");
    ob->add_option("--digits", o.digits, "working precision or auto");
    ob->add_option("--format", o.format, "text or json");
    ob->add_option("-o,--out", o.out, "output path");

    auto * gz = app.add_subcommand("gz-verify", "factored discriminant against the ternary-form sum");
    add_common(gz);
    gz->add_option("--gram", o.gram, "Gram matrix file (default: bundled N=163 form)");
    gz->add_option("--curve", o.curve, "intro, qmodel or a,r,s,c (default intro)");
    gz->add_option("--digits", o.digits, "working precision or auto");

    auto * ms = app.add_subcommand("maximal-scan", "point counts at split primes");
    add_common(ms);
    ms->add_option("--curve", o.curve, "qmodel or a,r,s,c (default qmodel)");
    ms->add_option("--pmax", o.pmax, "largest prime");
    ms->add_option("--pmin", o.pmin, "smallest prime (default: start of the Serre range)");
    ms->add_option("--root", o.root, "plus or minus square root of -N");
    ms->add_option("--digits", o.digits, "working precision or auto");

    auto * rep = app.add_subcommand("report", "all curves for N");
    add_common(rep);
    rep->add_option("--digits", o.digits, "working precision or auto");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e);
    } catch (CLI::ParseError const & e) {
        app.exit(e);
        return invalid;
    }

    try {
        if (en->parsed())
            return cmd_enumerate(o);
        if (cu->parsed())
            return cmd_curve(o);
        if (inv->parsed())
            return cmd_invariants(o);
        if (ob->parsed())
            return cmd_obstruction(o);
        if (gz->parsed())
            return cmd_gz_verify(o);
        if (ms->parsed())
            return cmd_maximal_scan(o);
        if (rep->parsed())
            return cmd_report(o);
    } catch (PrincipalForm const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return principal;
    } catch (RecognitionFailed const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return recognition;
    } catch (IndefiniteForm const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return indefinite;
    } catch (std::invalid_argument const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    }
    return invalid;
}
