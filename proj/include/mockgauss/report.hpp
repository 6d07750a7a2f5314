#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mockgauss/experiments.hpp"

namespace mockgauss {

using Cell = std::variant<std::int64_t, double, bool, std::string>;

/// Column-major-named, row-major-stored report table.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

enum class ReportFormat { Csv, Json };

ReportFormat parse_report_format(std::string_view name);

struct ReportHeader {
    std::uint64_t seed = 0;
    std::string config_hash;
};

/// %.17g, enough to round-trip any double.
std::string format_double(double x);

/// CSV: "# seed=<s> config_hash=<h>" then a header row and data rows.
/// JSON: an array of row objects keyed by column name.
std::string render_report(const Table& table, ReportFormat format, const ReportHeader& header);

/// Writes the rendered report; I/O failures throw with the path in the message.
void emit_report(const Table& table, const std::filesystem::path& path, ReportFormat format,
                 const ReportHeader& header);

/// Columns: order, mc_estimate, mc_stderr, gaussian_limit, finite_n_prediction, pass.
Table moment_table(const MomentReport& report);

struct CsvDocument {
    std::vector<std::string> comments;  // without the leading '#'
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

CsvDocument parse_csv(std::string_view text);
CsvDocument read_csv(const std::filesystem::path& path);

}  // namespace mockgauss
