#include "cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace cli {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw std::runtime_error("cannot write " + path);
    for (std::size_t i = 0; i < table.header.size(); ++i)
        out << (i ? "," : "") << table.header[i];
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
}

namespace {

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<Series>& series) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Series& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;

    const double w = 640.0, h = 480.0, ml = 60.0, mr = 20.0, mt = 40.0, mb = 45.0;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    out << "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
    out << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">" << title << "</text>\n";
    out << "<rect x=\"" << fmt6(ml) << "\" y=\"" << fmt6(mt) << "\" width=\""
        << fmt6(w - ml - mr) << "\" height=\"" << fmt6(h - mt - mb)
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    // corner tick labels
    out << "<text x=\"" << fmt6(ml) << "\" y=\"" << fmt6(h - mb + 18)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << fmt6(xmin) << "</text>\n";
    out << "<text x=\"" << fmt6(w - mr) << "\" y=\"" << fmt6(h - mb + 18)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt6(xmax)
        << "</text>\n";
    out << "<text x=\"" << fmt6(ml - 6) << "\" y=\"" << fmt6(h - mb)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt6(ymin)
        << "</text>\n";
    out << "<text x=\"" << fmt6(ml - 6) << "\" y=\"" << fmt6(mt + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt6(ymax)
        << "</text>\n";

    int ci = 0;
    double legendY = mt + 16.0;
    for (const Series& s : series) {
        const char* color = colors[ci % 5];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            out << fmt6(px(s.x[i])) << "," << fmt6(py(s.y[i])) << " ";
        }
        out << "\"/>\n";
        if (!s.label.empty()) {
            out << "<text x=\"" << fmt6(ml + 10) << "\" y=\"" << fmt6(legendY)
                << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
                << s.label << "</text>\n";
            legendY += 15.0;
        }
        ++ci;
    }
    out << "</svg>\n";
}

}  // namespace cli
