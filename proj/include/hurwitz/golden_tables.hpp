#pragma once

#include <string_view>
#include <vector>

#include "hurwitz/feasibility.hpp"
#include "hurwitz/sweep.hpp"

namespace hurwitz {

/// A published feasibility table row set: the d in 1..d_max for which the
/// extension conclusion is forced at (n, e) under a non-strict profile.
struct GoldenTable {
    CharProfile profile;
    int n = 4;
    int e = 3;
    int d_max = 30;
    std::vector<int> expected;  // ascending
};

/// Parses the data/p4_tables.txt format:
///   <char0|posChar> <n> <e> <dmax> : <a>, <b>..<c>, ...
/// '#' starts a comment. Throws std::invalid_argument on malformed lines.
std::vector<GoldenTable> parse_golden_tables(std::string_view text);

/// The compiled-in published P^4 tables.
const std::vector<GoldenTable>& published_tables();

struct TableCheck {
    GoldenTable golden;
    std::vector<TableRow> rows;
    std::vector<int> actual;      // d with extension_forced(overall)
    std::vector<int> mismatched;  // d where expected and actual disagree
    [[nodiscard]] bool pass() const { return mismatched.empty(); }
};

struct VerificationReport {
    std::vector<TableCheck> tables;
    [[nodiscard]] bool pass() const;
};

VerificationReport verify_tables(const std::vector<GoldenTable>& goldens);
VerificationReport verify_published_tables();

}  // namespace hurwitz
