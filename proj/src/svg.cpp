#include "srp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace srp {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 60.0;
constexpr double kBand = 24.0;  // gap between the plot box and the infinity lines

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

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

}  // namespace

std::string diagram_to_svg(const PersistenceDiagram& d, const std::string& title) {
    double lo = kInf;
    double hi = -kInf;
    for (const auto& p : d.points)
        for (double x : {p.birth, p.death})
            if (std::isfinite(x)) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
    if (!std::isfinite(lo)) {
        lo = 0.0;
        hi = 1.0;
    }
    if (hi - lo < 1.0) hi = lo + 1.0;
    const double pad = (hi - lo) * 0.1;
    lo -= pad;
    hi += pad;

    const double x0 = kMargin + kBand;
    const double x1 = kSize - kMargin;
    const double y0 = kSize - kMargin;
    const double y1 = kMargin + kBand;
    auto sx = [&](double v) { return x0 + (v - lo) / (hi - lo) * (x1 - x0); };
    auto sy = [&](double v) { return y0 - (v - lo) / (hi - lo) * (y0 - y1); };
    const double inf_y = kMargin;
    const double ninf_x = kMargin;

    std::ostringstream os;
    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kSize / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
       << "</text>\n";
    os << "<rect x=\"" << x0 << "\" y=\"" << y1 << "\" width=\"" << x1 - x0 << "\" height=\"" << y0 - y1
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y1
       << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << inf_y << "\" x2=\"" << x1 << "\" y2=\"" << inf_y
       << "\" stroke=\"gray\" stroke-dasharray=\"2 2\"/>\n";
    os << "<text x=\"" << x0 - 6 << "\" y=\"" << inf_y + 4 << "\" text-anchor=\"end\">&#8734;</text>\n";
    os << "<line x1=\"" << ninf_x << "\" y1=\"" << y0 << "\" x2=\"" << ninf_x << "\" y2=\"" << y1
       << "\" stroke=\"gray\" stroke-dasharray=\"2 2\"/>\n";
    os << "<text x=\"" << ninf_x << "\" y=\"" << y0 + 32 << "\" text-anchor=\"middle\">-&#8734;</text>\n";

    const double step = std::max(1.0, std::ceil((hi - lo) / 8.0));
    for (double t = std::ceil(lo); t <= hi; t += step) {
        os << "<text x=\"" << sx(t) << "\" y=\"" << y0 + 16 << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
        os << "<text x=\"" << x0 - 6 << "\" y=\"" << sy(t) + 4 << "\" text-anchor=\"end\">" << num(t) << "</text>\n";
    }
    os << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kSize - 12 << "\" text-anchor=\"middle\">birth</text>\n";
    os << "<text x=\"16\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << (y0 + y1) / 2 << ")\">death</text>\n";

    for (const auto& p : d.points) {
        const double cx = std::isinf(p.birth) ? ninf_x : sx(p.birth);
        const double cy = std::isinf(p.death) ? inf_y : sy(p.death);
        os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"steelblue\"/>\n";
        os << "<text x=\"" << cx << "\" y=\"" << cy - 8 << "\" text-anchor=\"middle\">" << p.mult << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace srp
