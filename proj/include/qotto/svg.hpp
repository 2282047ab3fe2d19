// svg.hpp — Minimal SVG emitter for sweep plots: one series drawn as a
// polyline with point markers, framed axes, and min/max tick labels. Header
// only, no dependencies.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace qotto::svg {

struct Series {
    std::vector<double> x;
    std::vector<double> y;
};

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace detail

inline std::string plot(const Series& series, const std::string& x_label,
                        const std::string& y_label, int width = 640,
                        int height = 480) {
    const int ml = 60, mr = 20, mt = 20, mb = 50;  // margins
    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    bool any = false;
    for (size_t i = 0; i < series.x.size() && i < series.y.size(); ++i) {
        if (!std::isfinite(series.x[i]) || !std::isfinite(series.y[i])) continue;
        if (!any) {
            x_lo = x_hi = series.x[i];
            y_lo = y_hi = series.y[i];
            any = true;
        } else {
            x_lo = std::min(x_lo, series.x[i]);
            x_hi = std::max(x_hi, series.x[i]);
            y_lo = std::min(y_lo, series.y[i]);
            y_hi = std::max(y_hi, series.y[i]);
        }
    }
    if (x_hi - x_lo <= 0.0) x_hi = x_lo + 1.0;
    if (y_hi - y_lo <= 0.0) y_hi = y_lo + 1.0;
    const double px = width - ml - mr;
    const double py = height - mt - mb;
    const auto map_x = [&](double v) { return ml + (v - x_lo) / (x_hi - x_lo) * px; };
    const auto map_y = [&](double v) { return mt + py - (v - y_lo) / (y_hi - y_lo) * py; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    out += "<line x1=\"" + detail::num(ml) + "\" y1=\"" + detail::num(mt + py) +
           "\" x2=\"" + detail::num(ml + px) + "\" y2=\"" + detail::num(mt + py) +
           "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + detail::num(ml) + "\" y1=\"" + detail::num(mt) + "\" x2=\"" +
           detail::num(ml) + "\" y2=\"" + detail::num(mt + py) +
           "\" stroke=\"black\"/>\n";
    // tick labels at the range ends
    out += "<text x=\"" + detail::num(ml) + "\" y=\"" + detail::num(height - mb + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + detail::num(x_lo) +
           "</text>\n";
    out += "<text x=\"" + detail::num(ml + px) + "\" y=\"" +
           detail::num(height - mb + 18) + "\" font-size=\"11\" text-anchor=\"middle\">" +
           detail::num(x_hi) + "</text>\n";
    out += "<text x=\"" + detail::num(ml - 6) + "\" y=\"" + detail::num(mt + py) +
           "\" font-size=\"11\" text-anchor=\"end\">" + detail::num(y_lo) + "</text>\n";
    out += "<text x=\"" + detail::num(ml - 6) + "\" y=\"" + detail::num(mt + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + detail::num(y_hi) + "</text>\n";
    // axis labels
    out += "<text x=\"" + detail::num(ml + px / 2) + "\" y=\"" +
           detail::num(height - 12) + "\" font-size=\"13\" text-anchor=\"middle\">" +
           x_label + "</text>\n";
    out += "<text x=\"14\" y=\"" + detail::num(mt + py / 2) +
           "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 14 " +
           detail::num(mt + py / 2) + ")\">" + y_label + "</text>\n";

    std::string points;
    std::string markers;
    for (size_t i = 0; i < series.x.size() && i < series.y.size(); ++i) {
        if (!std::isfinite(series.x[i]) || !std::isfinite(series.y[i])) continue;
        const double cx = map_x(series.x[i]);
        const double cy = map_y(series.y[i]);
        if (!points.empty()) points += ' ';
        points += detail::num(cx) + "," + detail::num(cy);
        markers += "<circle cx=\"" + detail::num(cx) + "\" cy=\"" + detail::num(cy) +
                   "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
    if (!points.empty()) {
        out += "<polyline points=\"" + points +
               "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\"/>\n";
    }
    out += markers;
    out += "</svg>\n";
    return out;
}

}  // namespace qotto::svg
