#include "mtc/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace mtc {

namespace {

constexpr double kPanelSize = 360.0;
constexpr double kMargin = 30.0;
constexpr double kGap = 40.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Bounds {
    double min_x, max_x, min_y, max_y;
};

void draw_panel(std::ostringstream& out, const Dataset& ds,
                const std::vector<int>& assignments, const Bounds& b,
                double offset_x, const std::string& caption) {
    auto sx = [&](double x) {
        return offset_x + kMargin + (x - b.min_x) / (b.max_x - b.min_x) * kPanelSize;
    };
    auto sy = [&](double y) {
        return kMargin + kPanelSize - (y - b.min_y) / (b.max_y - b.min_y) * kPanelSize;
    };
    out << "<rect x=\"" << num(offset_x + kMargin) << "\" y=\"" << num(kMargin)
        << "\" width=\"" << num(kPanelSize) << "\" height=\"" << num(kPanelSize)
        << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    out << "<text x=\"" << num(offset_x + kMargin + kPanelSize / 2) << "\" y=\""
        << num(kMargin + kPanelSize + 20) << "\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"13\">" << caption << "</text>\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        double x = sx(ds.points[i].coords[0]);
        double y = sy(ds.points[i].coords[1]);
        int label = assignments[i];
        if (label == kNoise) {
            // Noise gets a distinct cross marker.
            out << "<path d=\"M" << num(x - 3) << ' ' << num(y - 3) << " L" << num(x + 3)
                << ' ' << num(y + 3) << " M" << num(x - 3) << ' ' << num(y + 3) << " L"
                << num(x + 3) << ' ' << num(y - 3)
                << "\" stroke=\"#555555\" stroke-width=\"1.2\"/>\n";
        } else {
            const char* color = kPalette[label % 10];
            out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
    }
}

} // namespace

std::string render_case_svg(const TrialSnapshot& snapshot, const std::string& title) {
    const Dataset& src = snapshot.mr_case.source;
    const Dataset& fup = snapshot.mr_case.followup;
    if (src.dim != 2 || fup.dim != 2)
        throw ConfigError("plotting requires 2-D datasets");

    Bounds b{src.points[0].coords[0], src.points[0].coords[0],
             src.points[0].coords[1], src.points[0].coords[1]};
    for (const Dataset* ds : {&src, &fup})
        for (const Point& p : ds->points) {
            b.min_x = std::min(b.min_x, p.coords[0]);
            b.max_x = std::max(b.max_x, p.coords[0]);
            b.min_y = std::min(b.min_y, p.coords[1]);
            b.max_y = std::max(b.max_y, p.coords[1]);
        }
    double pad_x = (b.max_x - b.min_x) * 0.05 + 1e-9;
    double pad_y = (b.max_y - b.min_y) * 0.05 + 1e-9;
    b.min_x -= pad_x;
    b.max_x += pad_x;
    b.min_y -= pad_y;
    b.max_y += pad_y;

    double width = 2 * kPanelSize + 2 * kMargin + kGap + kMargin;
    double height = kPanelSize + 2 * kMargin + 30;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
        << num(height) << "\">\n";
    out << "<text x=\"" << num(width / 2) << "\" y=\"18\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
    draw_panel(out, src, snapshot.source_assignments, b, 0.0, "source");
    draw_panel(out, fup, snapshot.followup_assignments, b, kPanelSize + kGap + kMargin,
               "follow-up");
    out << "</svg>\n";
    return out.str();
}

} // namespace mtc
