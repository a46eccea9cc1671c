#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Decision engine for f: X_d -> Y_e, hypersurfaces in P^n (n >= 4, e >= 3),
// f^*O_Y(1) = O_X(m). H = F^{-1}(Y) - X is the residual divisor of degree
// em - d; the extension conclusion is H = 0, i.e. f = F|_X and F^{-1}(Y) = X.

enum class Characteristic { Zero, Positive };

/// Which exclusion rules run. Non-strict profiles are exactly the rule sets
/// behind the published P^4 tables; strict adds the integrality of deg f and
/// the m = 1 / m = 2 rigidity facts.
struct CharProfile {
    Characteristic mode = Characteristic::Zero;
    bool strict = false;

    static CharProfile char0(bool strict = false) { return {Characteristic::Zero, strict}; }
    static CharProfile positive(bool strict = false) { return {Characteristic::Positive, strict}; }

    friend bool operator==(const CharProfile&, const CharProfile&) = default;
};

/// "char0" / "posChar", with a "+strict" suffix in strict mode.
std::string profile_name(const CharProfile& profile);

enum class RuleId {
    Effective,        // R0:     em >= d
    Hurwitz,          // R-HUR:  Hurwitz-type inequality
    DegreeGap,        // R-GAP:  char 0, em - d = 0 or em - d >= e
    DegreeGapPos,     // R-GAP+: positive char, em - d != 1
    SectionBound,     // R-SIG:  em != d forces d <= n(m-1)
    Integrality,      // R-INT:  deg f a positive integer (strict)
    LinearRigidity,   // R-M1:   m = 1 forces d = e (strict)
    QuadraticRigidity // R-M2:   m = 2 forces d = 2e (strict, char 0)
};

std::string_view rule_code(RuleId id);

/// Rules in evaluation order for the profile.
std::vector<RuleId> rules_for(const CharProfile& profile);

struct Witness {
    std::string name;
    Rational value;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct RuleEvaluation {
    RuleId id;
    bool fired = false;
    std::vector<Witness> witnesses;

    friend bool operator==(const RuleEvaluation&, const RuleEvaluation&) = default;
};

enum class Status { Excluded, ExtensionForced, Survives };
std::string_view status_name(Status status);

struct MorphismCase {
    int n = 4;
    int d = 1;
    int e = 3;
    int m = 1;
    CharProfile profile;

    /// Throws std::invalid_argument unless n >= 4, d >= 1, e >= 3, m >= 1.
    void validate() const;
    [[nodiscard]] int residual_degree() const { return e * m - d; }
};

struct MVerdict {
    int m = 0;
    Status status = Status::Survives;
    /// First fired rule when Excluded.
    std::optional<RuleId> excluded_by;
    /// Every rule of the profile, in order, fired or not.
    std::vector<RuleEvaluation> trail;

    friend bool operator==(const MVerdict&, const MVerdict&) = default;
};

/// Status implied by a trail: Excluded on any fired rule, otherwise
/// ExtensionForced when em = d and Survives when em != d.
Status replay_trail(const std::vector<RuleEvaluation>& trail, int d, int e, int m);

/// Evaluates the profile's rules in fixed order R0, R-HUR, R-GAP or R-GAP+,
/// R-SIG (char 0), then the strict rules. The full trail is recorded even
/// after the first rule fires.
MVerdict classify_m(const MorphismCase& c);

enum class Overall { ExtensionHolds, NoMorphism, Undetermined };
std::string_view overall_name(Overall overall);

/// ExtensionHolds and NoMorphism both mean the extension conclusion is forced.
inline bool extension_forced(Overall overall) { return overall != Overall::Undetermined; }

/// Pure function of the verdict list: Undetermined if any m survives,
/// otherwise ExtensionHolds if some m is ExtensionForced, otherwise NoMorphism.
Overall overall_from_verdicts(const std::vector<MVerdict>& verdicts);

struct CaseReport {
    int n = 4;
    int d = 1;
    int e = 3;
    CharProfile profile;
    /// Largest m passing the Hurwitz check, and the relaxed-bound threshold
    /// certifying that no larger m can pass.
    int max_degree = 0;
    int threshold = 1;
    /// One verdict per m = 1..max_degree.
    std::vector<MVerdict> verdicts;
    Overall overall = Overall::NoMorphism;
    /// (m, alpha) for each non-excluded m.
    std::vector<std::pair<int, Rational>> diagnostics;

    [[nodiscard]] std::vector<int> surviving() const;
    [[nodiscard]] std::vector<int> forced() const;
};

CaseReport classify_case(int n, int d, int e, const CharProfile& profile);

/// n - delta + m (e - n) <= 0: the bound a degree-delta integral
/// hypersurface in P^(n-1) mapping to Y_e with polynomial degree m obeys
/// in characteristic zero.
bool section_bound_holds(int n, int delta, int e, int m);

}  // namespace hurwitz
