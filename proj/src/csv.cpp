#include "hookdist/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace hookdist {

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out << ',';
        out << csv_escape(fields[i]);
    }
    out << '\n';
}

std::string format_double(double value, int significant_digits) {
    if (significant_digits < 1 || significant_digits > 17) {
        throw std::invalid_argument("format_double: significant digits must be in [1, 17]");
    }
    // the C locale is never changed by this library, so printf uses '.'
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, value);
    return buf;
}

void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows) {
    write_csv_row(out, {"n", "mu_measured", "mu_asymptotic", "ratio"});
    for (const Table1Row& r : rows) {
        write_csv_row(out, {std::to_string(r.n), r.mean_measured.to_string(), r.mean_asymptotic.to_string(),
                            r.ratio.to_string()});
    }
}

void write_figure2_csv(std::ostream& out, const std::vector<Figure2Row>& rows, int significant_digits) {
    write_csv_row(out, {"m", "x", "y"});
    for (const Figure2Row& r : rows) {
        write_csv_row(out, {std::to_string(r.m), format_double(r.x, significant_digits),
                            format_double(r.y, significant_digits)});
    }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        f.flush();
        if (!f) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

}  // namespace hookdist
