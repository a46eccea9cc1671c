#pragma once

#include <cstddef>
#include <vector>

#include "hurwitz/feasibility.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

// Data-parallel kernels over parameter grids. Each kernel has an OpenMP
// version and a serial reference with identical, order-deterministic
// output; tests compare the two.

/// Closed integer interval [first, last].
struct IntRange {
    int first = 0;
    int last = -1;

    [[nodiscard]] std::size_t size() const { return last < first ? 0 : static_cast<std::size_t>(last - first + 1); }
};

struct TableRow {
    int d = 0;
    Overall overall = Overall::NoMorphism;
    std::vector<int> surviving_m;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// One row per d = 1..d_max at fixed (n, e), ordered by d.
std::vector<TableRow> generate_table(int n, int e, int d_max, const CharProfile& profile);
std::vector<TableRow> generate_table_serial(int n, int e, int d_max, const CharProfile& profile);

/// Full case reports for every (n, d, e) in the grid, ordered n-major, then d, then e.
std::vector<CaseReport> classify_grid(IntRange n, IntRange d, IntRange e, const CharProfile& profile);
std::vector<CaseReport> classify_grid_serial(IntRange n, IntRange d, IntRange e, const CharProfile& profile);

struct OracleMismatch {
    int n = 0;
    int d = 0;
    int m = 0;
    Rational closed_form;
    Rational series;
};

/// Compares top_chern_source(n, d, m) against the Chow-ring series
/// computation twisted_top_chern((n, [d]), 2m) on the grid; returns every
/// disagreement (empty on success).
std::vector<OracleMismatch> oracle_sweep(IntRange n, IntRange d, IntRange m);
std::vector<OracleMismatch> oracle_sweep_serial(IntRange n, IntRange d, IntRange m);

}  // namespace hurwitz
