#include "deskcalc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "deskcalc/format.hpp"

namespace deskcalc::svg {

namespace {

constexpr int kMarginLeft = 60;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 45;

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

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Frame {
    int width, height;
    double x_min, x_max, y_min, y_max;

    double px(double x) const {
        return kMarginLeft + (x - x_min) / (x_max - x_min) * (width - kMarginLeft - kMarginRight);
    }
    double py(double y) const {
        return height - kMarginBottom -
               (y - y_min) / (y_max - y_min) * (height - kMarginTop - kMarginBottom);
    }
};

void open_svg(std::ostringstream& out, int width, int height) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
}

void draw_axes(std::ostringstream& out, const Frame& f, const std::string& title) {
    double x0 = kMarginLeft;
    double y0 = f.height - kMarginBottom;
    double x1 = f.width - kMarginRight;
    double y1 = kMarginTop;
    out << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
        << "\" stroke=\"black\"/>\n"
        << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
        << "\" stroke=\"black\"/>\n";
    out << "  <text x=\"" << (f.width / 2) << "\" y=\"18\" text-anchor=\"middle\">"
        << escape(title) << "</text>\n";
    // axis range labels
    out << "  <text x=\"" << x0 << "\" y=\"" << (y0 + 18) << "\" text-anchor=\"middle\">"
        << format::sig6(f.x_min) << "</text>\n"
        << "  <text x=\"" << x1 << "\" y=\"" << (y0 + 18) << "\" text-anchor=\"middle\">"
        << format::sig6(f.x_max) << "</text>\n"
        << "  <text x=\"" << (x0 - 6) << "\" y=\"" << (y0 + 4)
        << "\" text-anchor=\"end\">" << format::sig6(f.y_min) << "</text>\n"
        << "  <text x=\"" << (x0 - 6) << "\" y=\"" << (y1 + 4)
        << "\" text-anchor=\"end\">" << format::sig6(f.y_max) << "</text>\n";
}

}  // namespace

std::string line_chart(const calculus::FunctionTable& table, const std::string& title,
                       int width, int height) {
    double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
    bool first = true;
    for (const auto& row : table.rows) {
        if (!row.y) continue;
        if (first) {
            x_min = x_max = row.x;
            y_min = y_max = *row.y;
            first = false;
        } else {
            x_min = std::min(x_min, row.x);
            x_max = std::max(x_max, row.x);
            y_min = std::min(y_min, *row.y);
            y_max = std::max(y_max, *row.y);
        }
    }
    if (first) throw std::invalid_argument("line_chart: no plottable rows");
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    Frame f{width, height, x_min, x_max, y_min, y_max};
    std::ostringstream out;
    open_svg(out, width, height);
    draw_axes(out, f, title);

    // one polyline per contiguous run of evaluable rows
    std::vector<std::string> points;
    auto flush = [&]() {
        if (points.size() >= 2) {
            out << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < points.size(); ++i) {
                if (i) out << ' ';
                out << points[i];
            }
            out << "\"/>\n";
        }
        points.clear();
    };
    for (const auto& row : table.rows) {
        if (!row.y) {
            flush();
            continue;
        }
        points.push_back(coord(f.px(row.x)) + "," + coord(f.py(*row.y)));
    }
    flush();
    out << "</svg>\n";
    return out.str();
}

std::string box_plot(const std::vector<std::pair<std::string, stats::FiveNumberSummary>>& groups,
                     const std::string& title, int width, int height) {
    if (groups.empty()) throw std::invalid_argument("box_plot: no groups");

    double y_min = groups.front().second.min;
    double y_max = groups.front().second.max;
    for (const auto& [label, f] : groups) {
        y_min = std::min(y_min, f.min);
        y_max = std::max(y_max, f.max);
    }
    if (y_max == y_min) {
        y_min -= 1.0;
        y_max += 1.0;
    }
    // headroom so whiskers do not touch the frame
    double pad = 0.05 * (y_max - y_min);
    Frame f{width, height, 0.0, static_cast<double>(groups.size()), y_min - pad, y_max + pad};

    std::ostringstream out;
    open_svg(out, width, height);
    draw_axes(out, f, title);

    double slot = (width - kMarginLeft - kMarginRight) / static_cast<double>(groups.size());
    double box_half = std::min(slot * 0.25, 40.0);
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto& [label, s] = groups[i];
        double cx = kMarginLeft + slot * (static_cast<double>(i) + 0.5);
        double y_q1 = f.py(s.q1);
        double y_q3 = f.py(s.q3);
        double y_med = f.py(s.median);
        double y_lo = f.py(s.min);
        double y_hi = f.py(s.max);
        out << "  <g class=\"box\">\n";
        // whiskers
        out << "    <line x1=\"" << coord(cx) << "\" y1=\"" << coord(y_lo) << "\" x2=\""
            << coord(cx) << "\" y2=\"" << coord(y_q1) << "\" stroke=\"black\"/>\n";
        out << "    <line x1=\"" << coord(cx) << "\" y1=\"" << coord(y_q3) << "\" x2=\""
            << coord(cx) << "\" y2=\"" << coord(y_hi) << "\" stroke=\"black\"/>\n";
        out << "    <line x1=\"" << coord(cx - box_half * 0.6) << "\" y1=\"" << coord(y_lo)
            << "\" x2=\"" << coord(cx + box_half * 0.6) << "\" y2=\"" << coord(y_lo)
            << "\" stroke=\"black\"/>\n";
        out << "    <line x1=\"" << coord(cx - box_half * 0.6) << "\" y1=\"" << coord(y_hi)
            << "\" x2=\"" << coord(cx + box_half * 0.6) << "\" y2=\"" << coord(y_hi)
            << "\" stroke=\"black\"/>\n";
        // interquartile box and median line
        out << "    <rect x=\"" << coord(cx - box_half) << "\" y=\"" << coord(y_q3)
            << "\" width=\"" << coord(2 * box_half) << "\" height=\""
            << coord(std::max(y_q1 - y_q3, 0.0)) << "\" fill=\"lightsteelblue\" stroke=\"black\"/>\n";
        out << "    <line x1=\"" << coord(cx - box_half) << "\" y1=\"" << coord(y_med)
            << "\" x2=\"" << coord(cx + box_half) << "\" y2=\"" << coord(y_med)
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        out << "    <text x=\"" << coord(cx) << "\" y=\"" << (height - kMarginBottom + 18)
            << "\" text-anchor=\"middle\">" << escape(label) << "</text>\n";
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace deskcalc::svg
