#include "hurwitz/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hurwitz/bounds.hpp"

namespace hurwitz {

namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<int>& values, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += std::to_string(values[i]);
    }
    return out;
}

bool separable_only(const CharProfile& profile)
{
    return profile.mode == Characteristic::Positive;
}

Json profile_json(const CharProfile& profile)
{
    Json j;
    j["name"] = profile_name(profile);
    j["char"] = profile.mode == Characteristic::Zero ? "0" : "p";
    j["strict"] = profile.strict;
    j["morphisms"] = separable_only(profile) ? "separable" : "all";
    return j;
}

Json rules_json(const std::vector<RuleEvaluation>& trail)
{
    Json rules = Json::array();
    for (const auto& r : trail) {
        Json witness = Json::object();
        for (const auto& w : r.witnesses) {
            witness[w.name] = w.value.str();
        }
        rules.push_back(Json{{"id", rule_code(r.id)}, {"fired", r.fired}, {"witness", std::move(witness)}});
    }
    return rules;
}

std::string witness_text(const RuleEvaluation& r)
{
    std::string out;
    for (const auto& w : r.witnesses) {
        if (!out.empty()) {
            out += ' ';
        }
        out += w.name + '=' + w.value.str();
    }
    return out;
}

void write_trail(std::ostream& os, const MVerdict& v)
{
    os << "m=" << v.m << ' ' << status_name(v.status);
    if (v.excluded_by) {
        os << " by " << rule_code(*v.excluded_by);
    }
    os << '\n';
    for (const auto& r : v.trail) {
        std::string code(rule_code(r.id));
        code.resize(8, ' ');
        os << "  " << code << (r.fired ? "fired " : "pass  ") << witness_text(r) << '\n';
    }
}

void write_profile_notes(std::ostream& os, const CharProfile& profile, int d)
{
    if (separable_only(profile)) {
        os << "note: positive characteristic verdicts apply to separable morphisms only\n";
    }
    if (d == 1) {
        os << "note: d = 1 means X is a hyperplane, i.e. P^(n-1); a smooth image of projective space "
              "is projective space\n";
    }
}

const char* kCsvHeader = "n,e,d,overall,surviving_m\n";

}  // namespace

OutputFormat parse_output_format(std::string_view name)
{
    if (name == "text") {
        return OutputFormat::Text;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string render_case(const CaseReport& report, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json j;
        j["n"] = report.n;
        j["d"] = report.d;
        j["e"] = report.e;
        j["profile"] = profile_json(report.profile);
        j["M"] = report.max_degree;
        Json verdicts = Json::array();
        for (const auto& v : report.verdicts) {
            verdicts.push_back(Json{{"m", v.m}, {"status", status_name(v.status)}, {"rules", rules_json(v.trail)}});
        }
        j["verdicts"] = std::move(verdicts);
        j["overall"] = overall_name(report.overall);
        Json diagnostics = Json::array();
        for (const auto& [m, alpha] : report.diagnostics) {
            diagnostics.push_back(Json{{"m", m}, {"alpha", alpha.str()}});
        }
        j["diagnostics"] = std::move(diagnostics);
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << kCsvHeader << report.n << ',' << report.e << ',' << report.d << ',' << overall_name(report.overall)
           << ',' << join(report.surviving(), ";") << '\n';
        break;
    case OutputFormat::Text:
        os << "n=" << report.n << " d=" << report.d << " e=" << report.e << " profile=" << profile_name(report.profile)
           << '\n';
        os << "M=" << report.max_degree << " (relaxed bound fails for all m >= " << report.threshold << ")\n";
        for (const auto& v : report.verdicts) {
            write_trail(os, v);
        }
        os << "overall: " << overall_name(report.overall);
        if (const auto s = report.surviving(); !s.empty()) {
            os << " (surviving m: " << join(s, ", ") << ')';
        }
        os << '\n';
        for (const auto& [m, alpha] : report.diagnostics) {
            os << "alpha(m=" << m << ") = " << alpha.str() << '\n';
        }
        write_profile_notes(os, report.profile, report.d);
        break;
    }
    return os.str();
}

std::string render_verdict(const MorphismCase& c, const MVerdict& verdict, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json j;
        j["n"] = c.n;
        j["d"] = c.d;
        j["e"] = c.e;
        j["m"] = verdict.m;
        j["profile"] = profile_json(c.profile);
        j["status"] = status_name(verdict.status);
        j["rules"] = rules_json(verdict.trail);
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "n,e,d,m,status,excluded_by\n"
           << c.n << ',' << c.e << ',' << c.d << ',' << verdict.m << ',' << status_name(verdict.status) << ','
           << (verdict.excluded_by ? rule_code(*verdict.excluded_by) : std::string_view{}) << '\n';
        break;
    case OutputFormat::Text:
        os << "n=" << c.n << " d=" << c.d << " e=" << c.e << " profile=" << profile_name(c.profile) << '\n';
        write_trail(os, verdict);
        write_profile_notes(os, c.profile, c.d);
        break;
    }
    return os.str();
}

std::string render_table(int n, int e, const CharProfile& profile, const std::vector<TableRow>& rows,
                         OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json j;
        j["n"] = n;
        j["e"] = e;
        j["profile"] = profile_json(profile);
        Json out_rows = Json::array();
        for (const auto& r : rows) {
            out_rows.push_back(Json{{"d", r.d}, {"overall", overall_name(r.overall)}, {"surviving_m", r.surviving_m}});
        }
        j["rows"] = std::move(out_rows);
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << kCsvHeader;
        for (const auto& r : rows) {
            os << n << ',' << e << ',' << r.d << ',' << overall_name(r.overall) << ',' << join(r.surviving_m, ";")
               << '\n';
        }
        break;
    case OutputFormat::Text: {
        os << "n=" << n << " e=" << e << " profile=" << profile_name(profile) << '\n';
        std::vector<int> forced;
        for (const auto& r : rows) {
            os << "d=" << r.d << ' ' << overall_name(r.overall);
            if (!r.surviving_m.empty()) {
                os << " (surviving m: " << join(r.surviving_m, ", ") << ')';
            }
            os << '\n';
            if (extension_forced(r.overall)) {
                forced.push_back(r.d);
            }
        }
        os << "extension forced for d in {" << join(forced, ", ") << "}\n";
        if (separable_only(profile)) {
            os << "note: positive characteristic verdicts apply to separable morphisms only\n";
        }
        break;
    }
    }
    return os.str();
}

std::string render_verification(const VerificationReport& report, OutputFormat format)
{
    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json tables = Json::array();
        for (const auto& t : report.tables) {
            tables.push_back(Json{{"profile", profile_name(t.golden.profile)},
                                  {"n", t.golden.n},
                                  {"e", t.golden.e},
                                  {"dmax", t.golden.d_max},
                                  {"expected", t.golden.expected},
                                  {"actual", t.actual},
                                  {"mismatched", t.mismatched},
                                  {"pass", t.pass()}});
        }
        Json j;
        j["tables"] = std::move(tables);
        j["pass"] = report.pass();
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "profile,n,e,d,expected,actual,match\n";
        for (const auto& t : report.tables) {
            for (const auto& r : t.rows) {
                const bool expected = std::find(t.golden.expected.begin(), t.golden.expected.end(), r.d)
                                      != t.golden.expected.end();
                const bool actual = extension_forced(r.overall);
                os << profile_name(t.golden.profile) << ',' << t.golden.n << ',' << t.golden.e << ',' << r.d << ','
                   << (expected ? 1 : 0) << ',' << (actual ? 1 : 0) << ',' << (expected == actual ? 1 : 0) << '\n';
            }
        }
        break;
    case OutputFormat::Text:
        for (const auto& t : report.tables) {
            os << (t.pass() ? "PASS " : "FAIL ") << profile_name(t.golden.profile) << " n=" << t.golden.n
               << " e=" << t.golden.e << " d<=" << t.golden.d_max << "  {" << join(t.actual, ", ") << '}';
            if (!t.pass()) {
                os << "  expected {" << join(t.golden.expected, ", ") << "} mismatched d: " << join(t.mismatched, ", ");
            }
            os << '\n';
        }
        os << (report.pass() ? "verify-paper: pass\n" : "verify-paper: FAIL\n");
        break;
    }
    return os.str();
}

std::string render_chern(const CompleteIntersection& space, std::optional<long> twist, OutputFormat format)
{
    const auto total = cotangent_total_chern(space);
    std::optional<Rational> top;
    if (twist) {
        top = twisted_top_chern(space, *twist);
    }
    std::vector<std::string> coeffs;
    for (const auto& c : total.coefficients()) {
        coeffs.push_back(c.str());
    }

    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json j;
        j["n"] = space.n;
        j["degrees"] = space.degrees;
        j["total_chern"] = coeffs;
        if (twist) {
            j["twist"] = *twist;
            j["top_chern"] = top->str();
        }
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "n,degrees,total_chern" << (twist ? ",twist,top_chern" : "") << '\n';
        os << space.n << ',' << join(space.degrees, ";") << ',';
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            os << (i > 0 ? ";" : "") << coeffs[i];
        }
        if (twist) {
            os << ',' << *twist << ',' << top->str();
        }
        os << '\n';
        break;
    case OutputFormat::Text:
        if (twist) {
            os << top->str() << '\n';
        } else {
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                os << "c" << i << " = " << coeffs[i] << " h^" << i << '\n';
            }
        }
        break;
    }
    return os.str();
}

std::string render_bound(int n, int d, int e, std::optional<int> m, OutputFormat format)
{
    struct Row {
        int m;
        HurwitzSides hurwitz;
        RelaxedSides relaxed;
        Rational degree;
    };
    std::vector<Row> rows;
    std::optional<DegreeBound> bound;
    auto make_row = [&](int mm) {
        return Row{mm, hurwitz_check(n, d, e, mm), relaxed_sides(n, d, e, mm), morphism_degree(n, d, e, mm)};
    };
    if (m) {
        rows.push_back(make_row(*m));
    } else {
        bound = max_poly_degree(n, d, e);
        for (int mm = 1; mm <= bound->threshold; ++mm) {
            rows.push_back(make_row(mm));
        }
    }

    std::ostringstream os;
    switch (format) {
    case OutputFormat::Json: {
        Json j;
        j["n"] = n;
        j["d"] = d;
        j["e"] = e;
        if (bound) {
            j["M"] = bound->max_degree;
            j["threshold"] = bound->threshold;
        }
        Json out_rows = Json::array();
        for (const auto& r : rows) {
            out_rows.push_back(Json{{"m", r.m},
                                    {"lhs", r.hurwitz.lhs.str()},
                                    {"rhs", r.hurwitz.rhs.str()},
                                    {"holds", r.hurwitz.holds},
                                    {"relaxed_lhs", r.relaxed.lhs.str()},
                                    {"relaxed_rhs", r.relaxed.rhs.str()},
                                    {"relaxed_holds", r.relaxed.holds},
                                    {"degf", r.degree.str()}});
        }
        j["rows"] = std::move(out_rows);
        os << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "n,d,e,m,lhs,rhs,holds,relaxed_lhs,relaxed_rhs,relaxed_holds,degf\n";
        for (const auto& r : rows) {
            os << n << ',' << d << ',' << e << ',' << r.m << ',' << r.hurwitz.lhs << ',' << r.hurwitz.rhs << ','
               << (r.hurwitz.holds ? 1 : 0) << ',' << r.relaxed.lhs << ',' << r.relaxed.rhs << ','
               << (r.relaxed.holds ? 1 : 0) << ',' << r.degree << '\n';
        }
        break;
    case OutputFormat::Text:
        os << "n=" << n << " d=" << d << " e=" << e << '\n';
        for (const auto& r : rows) {
            os << "m=" << r.m << "  hurwitz " << r.hurwitz.lhs << (r.hurwitz.holds ? " >= " : " < ") << r.hurwitz.rhs
               << "  relaxed " << r.relaxed.lhs << (r.relaxed.holds ? " > " : " <= ") << r.relaxed.rhs
               << "  deg f = " << r.degree << '\n';
        }
        if (bound) {
            os << "M=" << bound->max_degree << " (relaxed bound fails for all m >= " << bound->threshold << ")\n";
        }
        break;
    }
    return os.str();
}

}  // namespace hurwitz
