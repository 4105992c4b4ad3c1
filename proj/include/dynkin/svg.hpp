#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dynkin::svg {

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

struct Chart {
    std::string title;
    std::string x_label = "t";
    std::string y_label = "S";
    std::vector<Series> series;
    /// Optional horizontal reference line (e.g. the strike).
    std::vector<std::pair<std::string, double>> hlines;
};

/// Standalone SVG 1.1 document, viewBox 0 0 800 600, linear axes.
void write(std::ostream& out, const Chart& chart);

}  // namespace dynkin::svg
