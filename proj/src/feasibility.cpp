#include "hurwitz/feasibility.hpp"

#include <stdexcept>

#include "hurwitz/bounds.hpp"

namespace hurwitz {

std::string profile_name(const CharProfile& profile)
{
    std::string out = profile.mode == Characteristic::Zero ? "char0" : "posChar";
    if (profile.strict) {
        out += "+strict";
    }
    return out;
}

std::string_view rule_code(RuleId id)
{
    switch (id) {
    case RuleId::Effective: return "R0";
    case RuleId::Hurwitz: return "R-HUR";
    case RuleId::DegreeGap: return "R-GAP";
    case RuleId::DegreeGapPos: return "R-GAP+";
    case RuleId::SectionBound: return "R-SIG";
    case RuleId::Integrality: return "R-INT";
    case RuleId::LinearRigidity: return "R-M1";
    case RuleId::QuadraticRigidity: return "R-M2";
    }
    throw std::logic_error("unknown rule id");
}

std::vector<RuleId> rules_for(const CharProfile& profile)
{
    std::vector<RuleId> rules{RuleId::Effective, RuleId::Hurwitz};
    if (profile.mode == Characteristic::Zero) {
        rules.push_back(RuleId::DegreeGap);
        rules.push_back(RuleId::SectionBound);
    } else {
        rules.push_back(RuleId::DegreeGapPos);
    }
    if (profile.strict) {
        rules.push_back(RuleId::Integrality);
        rules.push_back(RuleId::LinearRigidity);
        if (profile.mode == Characteristic::Zero) {
            rules.push_back(RuleId::QuadraticRigidity);
        }
    }
    return rules;
}

std::string_view status_name(Status status)
{
    switch (status) {
    case Status::Excluded: return "Excluded";
    case Status::ExtensionForced: return "ExtensionForced";
    case Status::Survives: return "Survives";
    }
    throw std::logic_error("unknown status");
}

std::string_view overall_name(Overall overall)
{
    switch (overall) {
    case Overall::ExtensionHolds: return "ExtensionHolds";
    case Overall::NoMorphism: return "NoMorphism";
    case Overall::Undetermined: return "Undetermined";
    }
    throw std::logic_error("unknown overall classification");
}

void MorphismCase::validate() const
{
    auto require = [](bool ok, const char* what, int value) {
        if (!ok) {
            throw std::invalid_argument(std::string("precondition violated: ") + what + " (got "
                                        + std::to_string(value) + ")");
        }
    };
    require(n >= 4, "n >= 4", n);
    require(d >= 1, "d >= 1", d);
    require(e >= 3, "e >= 3", e);
    require(m >= 1, "m >= 1", m);
}

namespace {

RuleEvaluation evaluate_rule(RuleId id, const MorphismCase& c)
{
    const int gap = c.residual_degree();
    RuleEvaluation r{id, false, {}};
    switch (id) {
    case RuleId::Effective:
        r.fired = gap < 0;
        r.witnesses = {{"em", c.e * c.m}, {"d", c.d}};
        break;
    case RuleId::Hurwitz: {
        auto sides = hurwitz_check(c.n, c.d, c.e, c.m);
        r.fired = !sides.holds;
        r.witnesses = {{"lhs", std::move(sides.lhs)}, {"rhs", std::move(sides.rhs)}};
        break;
    }
    case RuleId::DegreeGap:
        r.fired = gap > 0 && gap < c.e;
        r.witnesses = {{"degH", gap}, {"e", c.e}};
        break;
    case RuleId::DegreeGapPos:
        r.fired = gap == 1;
        r.witnesses = {{"degH", gap}};
        break;
    case RuleId::SectionBound: {
        const int cap = c.n * (c.m - 1);
        r.fired = gap != 0 && c.d > cap;
        r.witnesses = {{"d", c.d}, {"n(m-1)", cap}};
        break;
    }
    case RuleId::Integrality: {
        auto deg_f = morphism_degree(c.n, c.d, c.e, c.m);
        r.fired = !deg_f.is_integer() || deg_f.sign() <= 0;
        r.witnesses = {{"degf", std::move(deg_f)}};
        break;
    }
    case RuleId::LinearRigidity:
        r.fired = c.m == 1 && c.d != c.e;
        r.witnesses = {{"m", c.m}, {"d", c.d}, {"e", c.e}};
        break;
    case RuleId::QuadraticRigidity:
        r.fired = c.m == 2 && c.d != 2 * c.e;
        r.witnesses = {{"m", c.m}, {"d", c.d}, {"2e", 2 * c.e}};
        break;
    }
    return r;
}

}  // namespace

Status replay_trail(const std::vector<RuleEvaluation>& trail, int d, int e, int m)
{
    for (const auto& r : trail) {
        if (r.fired) {
            return Status::Excluded;
        }
    }
    return e * m == d ? Status::ExtensionForced : Status::Survives;
}

MVerdict classify_m(const MorphismCase& c)
{
    c.validate();
    MVerdict v;
    v.m = c.m;
    for (RuleId id : rules_for(c.profile)) {
        v.trail.push_back(evaluate_rule(id, c));
        if (v.trail.back().fired && !v.excluded_by) {
            v.excluded_by = id;
        }
    }
    v.status = replay_trail(v.trail, c.d, c.e, c.m);
    return v;
}

Overall overall_from_verdicts(const std::vector<MVerdict>& verdicts)
{
    bool forced = false;
    for (const auto& v : verdicts) {
        if (v.status == Status::Survives) {
            return Overall::Undetermined;
        }
        forced = forced || v.status == Status::ExtensionForced;
    }
    return forced ? Overall::ExtensionHolds : Overall::NoMorphism;
}

std::vector<int> CaseReport::surviving() const
{
    std::vector<int> out;
    for (const auto& v : verdicts) {
        if (v.status == Status::Survives) {
            out.push_back(v.m);
        }
    }
    return out;
}

std::vector<int> CaseReport::forced() const
{
    std::vector<int> out;
    for (const auto& v : verdicts) {
        if (v.status == Status::ExtensionForced) {
            out.push_back(v.m);
        }
    }
    return out;
}

CaseReport classify_case(int n, int d, int e, const CharProfile& profile)
{
    MorphismCase{n, d, e, 1, profile}.validate();
    const auto bound = max_poly_degree(n, d, e);
    CaseReport report{n, d, e, profile, bound.max_degree, bound.threshold, {}, Overall::NoMorphism, {}};
    report.verdicts.reserve(static_cast<std::size_t>(bound.max_degree));
    for (int m = 1; m <= bound.max_degree; ++m) {
        report.verdicts.push_back(classify_m({n, d, e, m, profile}));
        if (report.verdicts.back().status != Status::Excluded) {
            report.diagnostics.emplace_back(m, separability_threshold(n, d, e, m));
        }
    }
    report.overall = overall_from_verdicts(report.verdicts);
    return report;
}

bool section_bound_holds(int n, int delta, int e, int m)
{
    MorphismCase{n, 1, e, m, {}}.validate();
    if (delta < 1) {
        throw std::invalid_argument("precondition violated: delta >= 1 (got " + std::to_string(delta) + ")");
    }
    return n - delta + m * (e - n) <= 0;
}

}  // namespace hurwitz
