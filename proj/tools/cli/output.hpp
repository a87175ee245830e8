// Deterministic CSV and self-contained SVG output.
#pragma once

#include <string>
#include <vector>

namespace cli {

// 17-significant-digit, locale-independent float formatting
std::string fmt17(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// comma-separated, UTF-8, LF line endings, header first
void write_csv(const std::string& path, const CsvTable& table);

struct Series {
    std::string label;
    std::vector<double> x, y;
};

// minimal line plot: frame, ticks, polylines; byte-deterministic
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<Series>& series);

}  // namespace cli
