#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace logspiral::svg {

namespace {

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string escape(const std::string& s)
{
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

} // namespace

void Drawing::add(Path path)
{
    std::erase_if(path.points, [](const Point2& p) {
        return !std::isfinite(p.first) || !std::isfinite(p.second);
    });
    if (path.points.size() >= 2)
        paths_.push_back(std::move(path));
}

std::string Drawing::render() const
{
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -x0, y1 = -x0;
    for (const Path& p : paths_) {
        for (const auto& [x, y] : p.points) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
    if (paths_.empty())
        x0 = y0 = 0.0, x1 = y1 = 1.0;
    double w = std::max(x1 - x0, 1e-12);
    double h = std::max(y1 - y0, 1e-12);
    const double mx = 0.05 * w, my = 0.05 * h;
    // Flip y: model y up, SVG y down.
    const double vx = x0 - mx, vy = -(y1 + my);
    w += 2.0 * mx;
    h += 2.0 * my;
    const double unit = std::max(w, h) / 500.0;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
       << num(800.0 * h / w) << "\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' ' << num(w) << ' '
       << num(h) << "\">\n"
       << "<title>" << escape(title_) << "</title>\n"
       << "<rect x=\"" << num(vx) << "\" y=\"" << num(vy) << "\" width=\"" << num(w) << "\" height=\""
       << num(h) << "\" fill=\"white\"/>\n";
    for (const Path& p : paths_) {
        os << "<polyline fill=\"none\" stroke=\"" << p.stroke << "\" stroke-width=\""
           << num(p.width * unit) << "\" stroke-linejoin=\"round\"";
        if (p.opacity < 1.0)
            os << " stroke-opacity=\"" << num(p.opacity) << '"';
        if (p.dashed)
            os << " stroke-dasharray=\"" << num(4.0 * unit) << ' ' << num(3.0 * unit) << '"';
        os << " points=\"";
        for (std::size_t i = 0; i < p.points.size(); ++i)
            os << (i ? " " : "") << num(p.points[i].first) << ',' << num(-p.points[i].second);
        os << "\"/>\n";
    }
    for (const Label& l : labels_) {
        os << "<text x=\"" << num(l.at.first) << "\" y=\"" << num(-l.at.second) << "\" font-size=\""
           << num(10.0 * unit) << "\" font-family=\"sans-serif\">" << escape(l.text) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace logspiral::svg
