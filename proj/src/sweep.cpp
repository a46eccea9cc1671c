#include "hurwitz/sweep.hpp"

#include <exception>
#include <optional>

#include "hurwitz/bounds.hpp"
#include "hurwitz/chow.hpp"

namespace hurwitz {

namespace {

TableRow table_row(int n, int d, int e, const CharProfile& profile)
{
    const auto report = classify_case(n, d, e, profile);
    return {d, report.overall, report.surviving()};
}

std::optional<OracleMismatch> oracle_point(int n, int d, int m)
{
    auto closed = top_chern_source(n, d, m);
    auto series = twisted_top_chern(hypersurface(n, d), 2L * m);
    if (closed == series) {
        return std::nullopt;
    }
    return OracleMismatch{n, d, m, std::move(closed), std::move(series)};
}

// Runs body(i) for i in [0, count) across OpenMP threads. The first
// exception thrown by any iteration is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, Body&& body)
{
    std::exception_ptr failure;
    const auto total = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < total; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(hurwitz_parallel_for_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

struct Grid3 {
    IntRange a;
    IntRange b;
    IntRange c;

    [[nodiscard]] std::size_t size() const { return a.size() * b.size() * c.size(); }
    void unflatten(std::size_t i, int& x, int& y, int& z) const
    {
        z = c.first + static_cast<int>(i % c.size());
        i /= c.size();
        y = b.first + static_cast<int>(i % b.size());
        i /= b.size();
        x = a.first + static_cast<int>(i);
    }
};

}  // namespace

std::vector<TableRow> generate_table(int n, int e, int d_max, const CharProfile& profile)
{
    std::vector<TableRow> rows(static_cast<std::size_t>(d_max > 0 ? d_max : 0));
    parallel_for(rows.size(), [&](std::size_t i) { rows[i] = table_row(n, static_cast<int>(i) + 1, e, profile); });
    return rows;
}

std::vector<TableRow> generate_table_serial(int n, int e, int d_max, const CharProfile& profile)
{
    std::vector<TableRow> rows;
    for (int d = 1; d <= d_max; ++d) {
        rows.push_back(table_row(n, d, e, profile));
    }
    return rows;
}

std::vector<CaseReport> classify_grid(IntRange n, IntRange d, IntRange e, const CharProfile& profile)
{
    const Grid3 grid{n, d, e};
    std::vector<CaseReport> out(grid.size());
    parallel_for(out.size(), [&](std::size_t i) {
        int nn = 0, dd = 0, ee = 0;
        grid.unflatten(i, nn, dd, ee);
        out[i] = classify_case(nn, dd, ee, profile);
    });
    return out;
}

std::vector<CaseReport> classify_grid_serial(IntRange n, IntRange d, IntRange e, const CharProfile& profile)
{
    std::vector<CaseReport> out;
    for (int nn = n.first; nn <= n.last; ++nn) {
        for (int dd = d.first; dd <= d.last; ++dd) {
            for (int ee = e.first; ee <= e.last; ++ee) {
                out.push_back(classify_case(nn, dd, ee, profile));
            }
        }
    }
    return out;
}

std::vector<OracleMismatch> oracle_sweep(IntRange n, IntRange d, IntRange m)
{
    const Grid3 grid{n, d, m};
    std::vector<std::optional<OracleMismatch>> slots(grid.size());
    parallel_for(slots.size(), [&](std::size_t i) {
        int nn = 0, dd = 0, mm = 0;
        grid.unflatten(i, nn, dd, mm);
        slots[i] = oracle_point(nn, dd, mm);
    });
    std::vector<OracleMismatch> out;
    for (auto& s : slots) {
        if (s) {
            out.push_back(std::move(*s));
        }
    }
    return out;
}

std::vector<OracleMismatch> oracle_sweep_serial(IntRange n, IntRange d, IntRange m)
{
    std::vector<OracleMismatch> out;
    for (int nn = n.first; nn <= n.last; ++nn) {
        for (int dd = d.first; dd <= d.last; ++dd) {
            for (int mm = m.first; mm <= m.last; ++mm) {
                if (auto s = oracle_point(nn, dd, mm)) {
                    out.push_back(std::move(*s));
                }
            }
        }
    }
    return out;
}

}  // namespace hurwitz
