#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mtjstdp/format.hpp"

namespace mtjstdp {

// Minimal self-contained SVG line chart with optional per-point error bars.
// Output is a deterministic byte stream (to_chars formatting throughout).
class SvgChart {
public:
    SvgChart(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    struct Series {
        std::string color;
        std::vector<double> x, y, err_low, err_high;  // err_* empty or same size
        bool markers = true;
    };

    void add_series(Series s) { series_.push_back(std::move(s)); }

    std::string render() const {
        constexpr double width = 720.0, height = 480.0;
        constexpr double ml = 70.0, mr = 20.0, mt = 40.0, mb = 55.0;
        double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
        bool first = true;
        for (const auto& s : series_) {
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                const double ylo = s.err_low.empty() ? s.y[i] : s.err_low[i];
                const double yhi = s.err_high.empty() ? s.y[i] : s.err_high[i];
                if (first) {
                    x_min = x_max = s.x[i];
                    y_min = ylo;
                    y_max = yhi;
                    first = false;
                } else {
                    x_min = std::min(x_min, s.x[i]);
                    x_max = std::max(x_max, s.x[i]);
                    y_min = std::min(y_min, ylo);
                    y_max = std::max(y_max, yhi);
                }
            }
        }
        if (x_max == x_min) x_max = x_min + 1.0;
        if (y_max == y_min) y_max = y_min + 1.0;
        const double x_pad = 0.03 * (x_max - x_min);
        const double y_pad = 0.06 * (y_max - y_min);
        x_min -= x_pad;
        x_max += x_pad;
        y_min -= y_pad;
        y_max += y_pad;

        auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * (width - ml - mr); };
        auto py = [&](double y) { return height - mb - (y - y_min) / (y_max - y_min) * (height - mt - mb); };
        auto num = [](double v) { return format_sig9(v); };

        std::string out;
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
               "viewBox=\"0 0 720 480\">\n";
        out += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
        out += "<text x=\"360\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"16\">" + title_ + "</text>\n";

        // axes + ticks
        out += "<line x1=\"" + num(ml) + "\" y1=\"" + num(height - mb) + "\" x2=\"" + num(width - mr) +
               "\" y2=\"" + num(height - mb) + "\" stroke=\"black\"/>\n";
        out += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(ml) + "\" y2=\"" +
               num(height - mb) + "\" stroke=\"black\"/>\n";
        for (int i = 0; i <= 5; ++i) {
            const double xv = x_min + (x_max - x_min) * i / 5.0;
            const double yv = y_min + (y_max - y_min) * i / 5.0;
            out += "<line x1=\"" + num(px(xv)) + "\" y1=\"" + num(height - mb) + "\" x2=\"" + num(px(xv)) +
                   "\" y2=\"" + num(height - mb + 5) + "\" stroke=\"black\"/>\n";
            out += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(height - mb + 20) +
                   "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
                   format_sig9(round_tick(xv)) + "</text>\n";
            out += "<line x1=\"" + num(ml - 5) + "\" y1=\"" + num(py(yv)) + "\" x2=\"" + num(ml) +
                   "\" y2=\"" + num(py(yv)) + "\" stroke=\"black\"/>\n";
            out += "<text x=\"" + num(ml - 9) + "\" y=\"" + num(py(yv) + 4) +
                   "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
                   format_sig9(round_tick(yv)) + "</text>\n";
        }
        out += "<text x=\"" + num((ml + width - mr) / 2) + "\" y=\"" + num(height - 12) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + x_label_ +
               "</text>\n";
        out += "<text x=\"16\" y=\"" + num((mt + height - mb) / 2) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 16 " +
               num((mt + height - mb) / 2) + ")\">" + y_label_ + "</text>\n";

        for (const auto& s : series_) {
            if (!s.err_low.empty()) {
                for (std::size_t i = 0; i < s.x.size(); ++i) {
                    out += "<line x1=\"" + num(px(s.x[i])) + "\" y1=\"" + num(py(s.err_low[i])) +
                           "\" x2=\"" + num(px(s.x[i])) + "\" y2=\"" + num(py(s.err_high[i])) +
                           "\" stroke=\"" + s.color + "\" stroke-width=\"1\"/>\n";
                }
            }
            if (s.x.size() > 1) {
                std::string points;
                for (std::size_t i = 0; i < s.x.size(); ++i) {
                    if (i) points += ' ';
                    points += num(px(s.x[i])) + "," + num(py(s.y[i]));
                }
                out += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.5\" points=\"" +
                       points + "\"/>\n";
            }
            if (s.markers) {
                for (std::size_t i = 0; i < s.x.size(); ++i) {
                    out += "<circle cx=\"" + num(px(s.x[i])) + "\" cy=\"" + num(py(s.y[i])) +
                           "\" r=\"2.5\" fill=\"" + s.color + "\"/>\n";
                }
            }
        }
        out += "</svg>\n";
        return out;
    }

private:
    static double round_tick(double v) { return std::round(v * 1000.0) / 1000.0; }

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

}  // namespace mtjstdp
