#include "hurwitz/golden_tables.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hurwitz/golden_tables_data.hpp"

namespace hurwitz {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int to_int(std::string_view s, std::string_view line)
{
    s = trim(s);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("golden table: bad integer '" + std::string(s) + "' in line: " + std::string(line));
    }
    return value;
}

std::vector<int> parse_set(std::string_view body, std::string_view line)
{
    std::vector<int> out;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const auto item = trim(body.substr(0, comma));
        body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
        if (const auto dots = item.find(".."); dots != std::string_view::npos) {
            const int lo = to_int(item.substr(0, dots), line);
            const int hi = to_int(item.substr(dots + 2), line);
            for (int v = lo; v <= hi; ++v) {
                out.push_back(v);
            }
        } else {
            out.push_back(to_int(item, line));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GoldenTable parse_line(std::string_view line)
{
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("golden table: missing ':' in line: " + std::string(line));
    }
    std::istringstream head{std::string(line.substr(0, colon))};
    std::string profile;
    GoldenTable table;
    if (!(head >> profile >> table.n >> table.e >> table.d_max)) {
        throw std::invalid_argument("golden table: malformed header in line: " + std::string(line));
    }
    if (profile == "char0") {
        table.profile = CharProfile::char0();
    } else if (profile == "posChar") {
        table.profile = CharProfile::positive();
    } else {
        throw std::invalid_argument("golden table: unknown profile '" + profile + "'");
    }
    table.expected = parse_set(line.substr(colon + 1), line);
    return table;
}

}  // namespace

std::vector<GoldenTable> parse_golden_tables(std::string_view text)
{
    std::vector<GoldenTable> out;
    while (!text.empty()) {
        const auto newline = text.find('\n');
        auto line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (!line.empty()) {
            out.push_back(parse_line(line));
        }
    }
    return out;
}

const std::vector<GoldenTable>& published_tables()
{
    static const std::vector<GoldenTable> tables = parse_golden_tables(detail::kGoldenTablesText);
    return tables;
}

bool VerificationReport::pass() const
{
    return std::all_of(tables.begin(), tables.end(), [](const TableCheck& t) { return t.pass(); });
}

VerificationReport verify_tables(const std::vector<GoldenTable>& goldens)
{
    VerificationReport report;
    for (const auto& golden : goldens) {
        TableCheck check{golden, generate_table(golden.n, golden.e, golden.d_max, golden.profile), {}, {}};
        for (const auto& row : check.rows) {
            const bool expected = std::binary_search(golden.expected.begin(), golden.expected.end(), row.d);
            const bool actual = extension_forced(row.overall);
            if (actual) {
                check.actual.push_back(row.d);
            }
            if (expected != actual) {
                check.mismatched.push_back(row.d);
            }
        }
        // Expected entries beyond d_max can never be matched.
        for (int d : golden.expected) {
            if (d < 1 || d > golden.d_max) {
                check.mismatched.push_back(d);
            }
        }
        report.tables.push_back(std::move(check));
    }
    return report;
}

VerificationReport verify_published_tables()
{
    return verify_tables(published_tables());
}

}  // namespace hurwitz
