#include "mepnet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mepnet
{

namespace
{

constexpr const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#17becf", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
};

std::string
fmt(const char* pattern, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, a);
    return buf;
}

std::string
escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += ch;
        }
    }
    return out;
}

}  // anon

std::string
render_chart(std::span<const AggregateRow> rows, const ChartOptions& options)
{
    if (rows.empty())
        throw std::invalid_argument("render_chart: no rows to plot");

    const auto curves = group_curves(rows);

    int x_lo = rows.front().l0;
    int x_hi = x_lo;
    double y_lo = rows.front().mean_concurrence;
    double y_hi = y_lo;
    for (const AggregateRow& r : rows) {
        x_lo = std::min(x_lo, r.l0);
        x_hi = std::max(x_hi, r.l0);
        y_lo = std::min(y_lo, r.mean_concurrence);
        y_hi = std::max(y_hi, r.mean_concurrence);
    }
    if (x_hi == x_lo) {
        x_lo -= 1;
        x_hi += 1;
    }
    const double pad = std::max((y_hi - y_lo) * 0.05, 1e-3);
    y_lo -= pad;
    y_hi += pad;

    const double left = 70;
    const double right = options.width - 190;
    const double top = 40;
    const double bottom = options.height - 50;
    auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * (right - left); };
    auto py = [&](double y) { return bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top); };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.width) + "\" height=\""
         + std::to_string(options.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + fmt("%.1f", (left + right) / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
         + escape(options.title) + "</text>\n";

    // axes
    s += "<g stroke=\"black\" stroke-width=\"1\">\n";
    s += "<line x1=\"" + fmt("%.1f", left) + "\" y1=\"" + fmt("%.1f", bottom) + "\" x2=\"" + fmt("%.1f", right)
         + "\" y2=\"" + fmt("%.1f", bottom) + "\"/>\n";
    s += "<line x1=\"" + fmt("%.1f", left) + "\" y1=\"" + fmt("%.1f", top) + "\" x2=\"" + fmt("%.1f", left)
         + "\" y2=\"" + fmt("%.1f", bottom) + "\"/>\n";
    s += "</g>\n";

    for (int x = x_lo; x <= x_hi; x++) {
        const double X = px(x);
        s += "<line x1=\"" + fmt("%.1f", X) + "\" y1=\"" + fmt("%.1f", bottom) + "\" x2=\"" + fmt("%.1f", X)
             + "\" y2=\"" + fmt("%.1f", bottom + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + fmt("%.1f", X) + "\" y=\"" + fmt("%.1f", bottom + 18) + "\" text-anchor=\"middle\">"
             + std::to_string(x) + "</text>\n";
    }
    constexpr int kYTicks = 5;
    for (int i = 0; i <= kYTicks; i++) {
        const double y = y_lo + (y_hi - y_lo) * i / kYTicks;
        const double Y = py(y);
        s += "<line x1=\"" + fmt("%.1f", left - 5) + "\" y1=\"" + fmt("%.1f", Y) + "\" x2=\"" + fmt("%.1f", right)
             + "\" y2=\"" + fmt("%.1f", Y) + "\" stroke=\"#dddddd\"/>\n";
        s += "<text x=\"" + fmt("%.1f", left - 8) + "\" y=\"" + fmt("%.1f", Y + 4) + "\" text-anchor=\"end\">"
             + fmt("%.4f", y) + "</text>\n";
    }
    s += "<text x=\"" + fmt("%.1f", (left + right) / 2) + "\" y=\"" + fmt("%.1f", bottom + 38)
         + "\" text-anchor=\"middle\">l0 (hops)</text>\n";
    s += "<text x=\"18\" y=\"" + fmt("%.1f", (top + bottom) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
         + fmt("%.1f", (top + bottom) / 2) + ")\">mean concurrence</text>\n";

    std::size_t index = 0;
    for (const auto& [key, points] : curves) {
        const bool baseline = key.strategy == "BASELINE";
        const std::string color = baseline ? "black" : kPalette[index++ % std::size(kPalette)];
        const std::string dash = baseline ? " stroke-dasharray=\"2,4\"" : "";
        std::string pts;
        for (const CurvePoint& p : points) {
            if (!pts.empty())
                pts += ' ';
            pts += fmt("%.2f", px(p.l0)) + "," + fmt("%.2f", py(p.mean));
        }
        s += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"" + dash + " points=\"" + pts + "\"/>\n";
        for (const CurvePoint& p : points)
            s += "<circle cx=\"" + fmt("%.2f", px(p.l0)) + "\" cy=\"" + fmt("%.2f", py(p.mean)) + "\" r=\"3\" fill=\""
                 + color + "\"/>\n";
    }

    // legend, same order as the series
    double ly = top + 10;
    index = 0;
    for (const auto& [key, points] : curves) {
        const bool baseline = key.strategy == "BASELINE";
        const std::string color = baseline ? "black" : kPalette[index++ % std::size(kPalette)];
        const std::string dash = baseline ? " stroke-dasharray=\"2,4\"" : "";
        const std::string label =
            std::string(topology_name(key.topology)) + " " + key.strategy + (baseline ? "" : " k=" + std::to_string(key.k));
        s += "<line x1=\"" + fmt("%.1f", right + 15) + "\" y1=\"" + fmt("%.1f", ly) + "\" x2=\"" + fmt("%.1f", right + 40)
             + "\" y2=\"" + fmt("%.1f", ly) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"" + dash + "/>\n";
        s += "<text x=\"" + fmt("%.1f", right + 45) + "\" y=\"" + fmt("%.1f", ly + 4) + "\">" + escape(label)
             + "</text>\n";
        ly += 18;
    }
    s += "</svg>\n";
    return s;
}

}  // namespace mepnet
