#include "hurwitz/cli.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hurwitz/bounds.hpp"
#include "hurwitz/chow.hpp"
#include "hurwitz/feasibility.hpp"
#include "hurwitz/golden_tables.hpp"
#include "hurwitz/render.hpp"
#include "hurwitz/sweep.hpp"

namespace hurwitz::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& what)
{
    if (!ok) {
        throw UsageError("invalid argument: requires " + what);
    }
}

struct Params {
    int n = 4;
    int d = 0;
    int e = 0;
    std::optional<int> m;
    int d_max = 30;
    std::string characteristic = "0";
    bool strict = false;
    std::string degrees;
    std::optional<long> twist;
    std::string format = "text";
};

CharProfile profile_of(const Params& p)
{
    return p.characteristic == "0" ? CharProfile::char0(p.strict) : CharProfile::positive(p.strict);
}

void require_engine_domain(const Params& p, bool needs_d)
{
    require(p.n >= 4, "n >= 4 (got " + std::to_string(p.n) + ")");
    if (needs_d) {
        require(p.d >= 1, "d >= 1 (got " + std::to_string(p.d) + ")");
    }
    require(p.e >= 3, "e >= 3 (got " + std::to_string(p.e) + ")");
    if (p.m) {
        require(*p.m >= 1, "m >= 1 (got " + std::to_string(*p.m) + ")");
    }
}

std::vector<int> parse_degrees(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(item, &used);
            require(used == item.size(), "--degrees as comma-separated integers");
            out.push_back(value);
        } catch (const std::logic_error&) {
            throw UsageError("invalid argument: requires --degrees as comma-separated integers");
        }
    }
    require(!out.empty(), "--degrees with at least one degree");
    return out;
}

void add_format(CLI::App* sub, Params& p)
{
    sub->add_option("--format", p.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

void add_profile(CLI::App* sub, Params& p)
{
    sub->add_option("--char", p.characteristic, "Characteristic: 0 or p")->check(CLI::IsMember({"0", "p"}));
    sub->add_flag("--strict", p.strict, "Also apply integrality and m = 1, 2 rigidity rules");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hurwitz-type bounds for morphisms between hypersurfaces in P^n", "hurwitz"};
    app.require_subcommand(1);
    Params p;

    auto* chern = app.add_subcommand("chern", "Chern classes of the cotangent sheaf of a complete intersection");
    chern->add_option("--n", p.n, "Ambient dimension")->required();
    chern->add_option("--degrees", p.degrees, "Comma-separated multidegree")->required();
    chern->add_option("--twist", p.twist, "Twist t for deg c_top(Omega^1_X(t))");
    add_format(chern, p);

    auto* bound = app.add_subcommand("bound", "Hurwitz-inequality sides and the maximal polynomial degree");
    bound->add_option("--n", p.n, "Ambient dimension")->required();
    bound->add_option("--d", p.d, "deg X")->required();
    bound->add_option("--e", p.e, "deg Y")->required();
    bound->add_option("--m", p.m, "Polynomial degree (omit to scan)");
    add_format(bound, p);

    auto* check = app.add_subcommand("check", "Classify (n, d, e) or a single (n, d, e, m)");
    check->add_option("--n", p.n, "Ambient dimension")->required();
    check->add_option("--d", p.d, "deg X")->required();
    check->add_option("--e", p.e, "deg Y")->required();
    check->add_option("--m", p.m, "Polynomial degree (omit for the full case report)");
    add_profile(check, p);
    add_format(check, p);

    auto* table = app.add_subcommand("table", "Feasibility table for d = 1..dmax");
    table->add_option("--n", p.n, "Ambient dimension")->required();
    table->add_option("--e", p.e, "deg Y")->required();
    table->add_option("--dmax", p.d_max, "Largest d")->required();
    add_profile(table, p);
    add_format(table, p);

    auto* verify = app.add_subcommand("verify-paper", "Regenerate the published P^4 tables and compare");
    add_format(verify, p);

    std::vector<const char*> argv{"hurwitz"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        if (auto nl = what.find('\n'); nl != std::string::npos) {
            what.resize(nl);
        }
        err << "error: " << what << '\n';
        return kExitUsage;
    }

    try {
        const auto format = parse_output_format(p.format);
        if (chern->parsed()) {
            const CompleteIntersection space{p.n, parse_degrees(p.degrees)};
            try {
                space.validate();
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("invalid argument: ") + e.what());
            }
            out << render_chern(space, p.twist, format);
        } else if (bound->parsed()) {
            require_engine_domain(p, true);
            out << render_bound(p.n, p.d, p.e, p.m, format);
        } else if (check->parsed()) {
            require_engine_domain(p, true);
            if (p.m) {
                const MorphismCase c{p.n, p.d, p.e, *p.m, profile_of(p)};
                out << render_verdict(c, classify_m(c), format);
            } else {
                out << render_case(classify_case(p.n, p.d, p.e, profile_of(p)), format);
            }
        } else if (table->parsed()) {
            require_engine_domain(p, false);
            require(p.d_max >= 1, "dmax >= 1 (got " + std::to_string(p.d_max) + ")");
            const auto profile = profile_of(p);
            out << render_table(p.n, p.e, profile, generate_table(p.n, p.e, p.d_max, profile), format);
        } else if (verify->parsed()) {
            const auto report = verify_published_tables();
            out << render_verification(report, format);
            return report.pass() ? kExitOk : kExitMismatch;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace hurwitz::cli
