#include "rwrs/cli/report.hpp"

#include <cstdio>
#include <fstream>

#include "rwrs/core/error.hpp"

namespace rwrs::cli
{
std::string format_real(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void ResultTable::add_row(std::vector<std::string> row)
{
    if (row.size() != columns.size())
    {
        throw Error(ErrorCode::io_error,
                    "row has " + std::to_string(row.size()) + " cells, expected "
                        + std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

void write_csv(std::ostream& os, ResultTable const& table)
{
    auto line = [&os](std::vector<std::string> const& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            os << (i ? "," : "") << cells[i];
        os << '\n';
    };
    line(table.columns);
    for (auto const& row : table.rows)
        line(row);
}

void emit_report(std::filesystem::path const& dir,
                 ResultTable const& table,
                 nlohmann::json const& summary)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
    {
        throw Error(ErrorCode::io_error,
                    "cannot create '" + dir.string() + "': " + ec.message());
    }
    auto open = [](std::filesystem::path const& p) {
        std::ofstream os(p, std::ios::binary);
        if (!os)
            throw Error(ErrorCode::io_error, "cannot write '" + p.string() + "'");
        return os;
    };
    {
        auto os = open(dir / "results.csv");
        write_csv(os, table);
        if (!os)
            throw Error(ErrorCode::io_error, "write failed for results.csv");
    }
    {
        auto os = open(dir / "summary.json");
        os << summary.dump(2) << '\n';
        if (!os)
            throw Error(ErrorCode::io_error, "write failed for summary.json");
    }
}

}  // namespace rwrs::cli
