#pragma once

#include <iosfwd>
#include <string>

#include "fracrank/panel.hpp"

namespace fracrank {

enum class TimeColumn { Auto, Yes, No };

struct CsvOptions {
    char delimiter = ',';
    /// Auto treats the first column as period labels when any of its cells
    /// fails to parse as a number (numeric period labels such as years need
    /// an explicit Yes).
    TimeColumn time_column = TimeColumn::Auto;
};

/// Loads a rectangular delimited file with a header row of series names and
/// an optional first column of period labels into a validated Panel.
/// Rejects ragged rows, duplicate or empty headers, and missing or
/// non-numeric cells, naming the offending row/column.
Panel load_csv(const std::string& path, const CsvOptions& options = {});
Panel load_csv(std::istream& in, const CsvOptions& options = {});

}  // namespace fracrank
