#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace rwrs::cli
{
//! Round-trippable decimal: printf("%.17g").
std::string format_real(double x);

//! Fixed-column CSV table; every cell is preformatted text.
struct ResultTable
{
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

void write_csv(std::ostream& os, ResultTable const& table);

/*!
 * Write results.csv and summary.json into \c dir, creating it if needed.
 * Throws IoError when a file cannot be written.
 */
void emit_report(std::filesystem::path const& dir,
                 ResultTable const& table,
                 nlohmann::json const& summary);

}  // namespace rwrs::cli
