#include "dynkin/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "dynkin/csv.hpp"

namespace dynkin::svg {
namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 600;
constexpr double kLeft = 80;
constexpr double kRight = 160;  // legend column
constexpr double kTop = 50;
constexpr double kBottom = 70;

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double v) { return csv::format_fixed(v, 2); }

// Roughly five ticks at 1/2/5 multiples.
double tick_step(double span) {
    if (!(span > 0)) return 1.0;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) return m * mag;
    }
    return 10.0 * mag;
}

}  // namespace

void write(std::ostream& out, const Chart& chart) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
    double y0 = x0, y1 = -x0;
    for (const auto& s : chart.series) {
        for (const auto& [x, y] : s.points) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
    for (const auto& [label, y] : chart.hlines) {
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    if (!std::isfinite(x0)) x0 = 0, x1 = 1;
    if (!std::isfinite(y0)) y0 = 0, y1 = 1;
    if (x1 <= x0) x1 = x0 + 1;
    if (y1 <= y0) y1 = y0 + 1;
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * plot_w; };
    auto py = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * plot_h; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"600\" "
           "viewBox=\"0 0 800 600\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n"
        << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
        << escape(chart.title) << "</text>\n";

    // Axes and ticks.
    out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
        << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(kLeft + plot_w)
        << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n"
        << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft) << "\" y2=\""
        << num(kTop + plot_h) << "\"/>\n"
        << "</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    const double xs = tick_step(x1 - x0);
    for (double x = std::ceil(x0 / xs) * xs; x <= x1 + 1e-9 * xs; x += xs) {
        out << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(px(x))
            << "\" y2=\"" << num(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kTop + plot_h + 20)
            << "\" text-anchor=\"middle\">" << csv::format_double(std::round(x / xs) * xs) << "</text>\n";
    }
    const double ys = tick_step(y1 - y0);
    for (double y = std::ceil(y0 / ys) * ys; y <= y1 + 1e-9 * ys; y += ys) {
        out << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(kLeft)
            << "\" y2=\"" << num(py(y)) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
            << csv::format_double(std::round(y / ys) * ys) << "</text>\n";
    }
    out << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 20)
        << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(chart.x_label) << "</text>\n"
        << "<text x=\"20\" y=\"" << num(kTop + plot_h / 2) << "\" text-anchor=\"middle\" font-size=\"14\" "
        << "transform=\"rotate(-90 20 " << num(kTop + plot_h / 2) << ")\">" << escape(chart.y_label)
        << "</text>\n"
        << "</g>\n";

    for (const auto& [label, y] : chart.hlines) {
        out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(kLeft + plot_w)
            << "\" y2=\"" << num(py(y)) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n"
            << "<text x=\"" << num(kLeft + plot_w + 6) << "\" y=\"" << num(py(y) + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"gray\">" << escape(label) << "</text>\n";
    }

    double legend_y = kTop + 10;
    for (const auto& s : chart.series) {
        out << "<polyline fill=\"none\" stroke=\"" << escape(s.color) << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (i) out << ' ';
            out << num(px(s.points[i].first)) << ',' << num(py(s.points[i].second));
        }
        out << "\"/>\n";
        const double lx = kLeft + plot_w + 20;
        out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(legend_y) << "\" x2=\"" << num(lx + 20)
            << "\" y2=\"" << num(legend_y) << "\" stroke=\"" << escape(s.color) << "\" stroke-width=\"2\"/>\n"
            << "<text x=\"" << num(lx + 26) << "\" y=\"" << num(legend_y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.label) << "</text>\n";
        legend_y += 20;
    }
    out << "</svg>\n";
}

}  // namespace dynkin::svg
