#include "mockgauss/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mockgauss {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                    std::to_string(columns.size()) + " columns");
    rows.push_back(std::move(row));
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    throw std::invalid_argument("unknown report format '" + std::string(name) + "' (expected csv or json)");
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>)
                return format_double(v);
            else if constexpr (std::is_same_v<V, bool>)
                return v ? "true" : "false";
            else if constexpr (std::is_same_v<V, std::string>)
                return csv_field(v);
            else
                return std::to_string(v);
        },
        cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> nlohmann::ordered_json {
            using V = std::decay_t<decltype(v)>;
            // Non-finite doubles have no JSON number form.
            if constexpr (std::is_same_v<V, double>) {
                if (!std::isfinite(v)) return nullptr;
            }
            return v;
        },
        cell);
}

}  // namespace

std::string render_report(const Table& table, ReportFormat format, const ReportHeader& header) {
    if (format == ReportFormat::Json) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (std::size_t c = 0; c < table.columns.size(); ++c) obj[table.columns[c]] = cell_json(row[c]);
            rows.push_back(std::move(obj));
        }
        // dump() prints doubles with round-trip precision.
        return rows.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "# seed=" << header.seed << " config_hash=" << header.config_hash << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << csv_field(table.columns[c]);
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell_text(row[c]);
        out << "\n";
    }
    return out.str();
}

void emit_report(const Table& table, const std::filesystem::path& path, ReportFormat format,
                 const ReportHeader& header) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open report file '" + path.string() + "' for writing");
    out << render_report(table, format, header);
    out.flush();
    if (!out) throw std::runtime_error("failed writing report file '" + path.string() + "'");
}

Table moment_table(const MomentReport& report) {
    Table t{{"order", "mc_estimate", "mc_stderr", "gaussian_limit", "finite_n_prediction", "pass"}, {}};
    for (const auto& r : report.rows)
        t.add_row({std::int64_t{r.order}, r.mc_estimate, r.mc_stderr, r.gaussian_limit, r.finite_n_prediction, r.pass});
    return t;
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

CsvDocument parse_csv(std::string_view text) {
    CsvDocument doc;
    std::size_t pos = 0;
    bool have_header = false;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::string_view body = line.substr(1);
            if (!body.empty() && body.front() == ' ') body.remove_prefix(1);
            doc.comments.emplace_back(body);
            continue;
        }
        auto fields = split_csv_line(line);
        if (!have_header) {
            doc.columns = std::move(fields);
            have_header = true;
        } else {
            if (fields.size() != doc.columns.size())
                throw std::runtime_error("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                                         std::to_string(doc.columns.size()));
            doc.rows.push_back(std::move(fields));
        }
    }
    return doc;
}

CsvDocument read_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open CSV file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_csv(buffer.str());
}

}  // namespace mockgauss
