#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/chow.hpp"
#include "hurwitz/feasibility.hpp"
#include "hurwitz/golden_tables.hpp"
#include "hurwitz/sweep.hpp"

namespace hurwitz {

enum class OutputFormat { Text, Json, Csv };

/// Throws std::invalid_argument for anything but "text", "json", "csv".
OutputFormat parse_output_format(std::string_view name);

// All renderers emit exact integers or "p/q" strings, never decimals, and
// are byte-deterministic. CSV uses LF line endings and no quoting; JSON keys
// appear in a fixed order. Every rendering ends with a newline.

std::string render_case(const CaseReport& report, OutputFormat format);
std::string render_verdict(const MorphismCase& c, const MVerdict& verdict, OutputFormat format);
std::string render_table(int n, int e, const CharProfile& profile, const std::vector<TableRow>& rows,
                         OutputFormat format);
std::string render_verification(const VerificationReport& report, OutputFormat format);

/// Total Chern class of the cotangent sheaf, plus deg c_top(Omega^1_X(t))
/// when `twist` is given.
std::string render_chern(const CompleteIntersection& space, std::optional<long> twist, OutputFormat format);

/// Hurwitz and relaxed sides for a single m, or the whole certified scan
/// m = 1..threshold when `m` is empty.
std::string render_bound(int n, int d, int e, std::optional<int> m, OutputFormat format);

}  // namespace hurwitz
