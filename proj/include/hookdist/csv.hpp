#pragma once

#include "hookdist/stats.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hookdist {

/// Quotes a field when it contains a comma, quote, CR or LF (RFC 4180).
std::string csv_escape(std::string_view field);

/// Writes one record with LF termination.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// Shortest-round-trip style formatting with a fixed significant-digit count,
/// always with '.' as the decimal separator.
std::string format_double(double value, int significant_digits);

/// Columns n,mu_measured,mu_asymptotic,ratio.
void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows);
/// Columns m,x,y.
void write_figure2_csv(std::ostream& out, const std::vector<Figure2Row>& rows, int significant_digits = 12);

/// Writes to a sibling temporary file and renames it over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace hookdist
