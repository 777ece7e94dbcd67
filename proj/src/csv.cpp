#include "fracrank/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fracrank {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, delim)) out.push_back(trim(field));
    if (!line.empty() && line.back() == delim) out.push_back("");
    return out;
}

bool parse_number(const std::string& s, double& v) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, v);
    return res.ec == std::errc() && res.ptr == last;
}

}  // namespace

Panel load_csv(std::istream& in, const CsvOptions& options) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        rows.push_back(split(line, options.delimiter));
    }
    if (rows.size() < 2)
        throw std::invalid_argument("csv: need a header row and at least one data row");

    const std::size_t width = rows.front().size();
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r].size() != width)
            throw std::invalid_argument("csv: ragged row " + std::to_string(r + 1) +
                                        " (" + std::to_string(rows[r].size()) +
                                        " fields, header has " + std::to_string(width) +
                                        ")");

    bool has_time = false;
    switch (options.time_column) {
        case TimeColumn::Yes: has_time = true; break;
        case TimeColumn::No: has_time = false; break;
        case TimeColumn::Auto: {
            double v;
            for (std::size_t r = 1; r < rows.size(); ++r)
                if (!parse_number(rows[r][0], v)) { has_time = true; break; }
            break;
        }
    }
    const std::size_t first_data_col = has_time ? 1 : 0;
    if (width <= first_data_col)
        throw std::invalid_argument("csv: no data columns");

    std::vector<std::string> labels(rows.front().begin() +
                                        static_cast<std::ptrdiff_t>(first_data_col),
                                    rows.front().end());
    std::vector<std::string> time_index;
    const std::size_t T = rows.size() - 1;
    const std::size_t p = width - first_data_col;
    Eigen::MatrixXd values(static_cast<Eigen::Index>(T), static_cast<Eigen::Index>(p));

    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (has_time) time_index.push_back(rows[r][0]);
        for (std::size_t c = 0; c < p; ++c) {
            const std::string& cell = rows[r][first_data_col + c];
            if (cell.empty())
                throw std::invalid_argument("csv: missing value at row " +
                                            std::to_string(r + 1) + ", column '" +
                                            labels[c] + "'");
            double v;
            if (!parse_number(cell, v))
                throw std::invalid_argument("csv: non-numeric cell '" + cell +
                                            "' at row " + std::to_string(r + 1) +
                                            ", column '" + labels[c] + "'");
            values(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(c)) = v;
        }
    }
    return Panel(std::move(values), std::move(labels), std::move(time_index));
}

Panel load_csv(const std::string& path, const CsvOptions& options) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    return load_csv(f, options);
}

}  // namespace fracrank
