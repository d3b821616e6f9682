#include "figures.hpp"

#include "svg.hpp"

#include "logspiral/closed_form.hpp"
#include "logspiral/curves.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logspiral::figures {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kElevation = 0.45; // camera tilt above the xy-plane, radians

using svg::Path;
using svg::Point2;

/// Side view: rotate so the camera looks along -y' from slightly above.
Point2 side(const Vec3& p) { return {p.x, p.z * std::cos(kElevation) + p.y * std::sin(kElevation)}; }
/// Positive when p's outward direction faces the camera.
double facing(const Vec3& n) { return -n.y * std::cos(kElevation) + n.z * std::sin(kElevation); }

/// Splits a polyline into front (solid) and back (faint, dashed) runs.
void add_with_depth(svg::Drawing& d, const std::vector<Vec3>& pts, const std::vector<Vec3>& normals,
                    const std::string& stroke, double width)
{
    Path run{{}, stroke, width};
    bool front = true;
    const auto flush = [&] {
        if (run.points.size() >= 2) {
            Path p = run;
            if (!front) {
                p.opacity = 0.35;
                p.dashed = true;
            }
            d.add(std::move(p));
        }
        run.points.clear();
    };
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const bool f = facing(normals[i]) >= 0.0;
        if (i > 0 && f != front) {
            run.points.push_back(side(pts[i]));
            flush();
        }
        front = f;
        run.points.push_back(side(pts[i]));
    }
    flush();
}

Vec3 sphere_point(double R, double u, double v)
{
    return {R * std::sin(v) * std::cos(u), R * std::sin(v) * std::sin(u), R * std::cos(v)};
}

Vec3 pseudosphere_point(double R, double u, double v)
{
    return {R * std::sin(v) * std::cos(u), R * std::sin(v) * std::sin(u),
            R * (std::log(std::tan(v / 2.0)) + std::cos(v))};
}

/// Outward normal of the pseudosphere (away from the axis).
Vec3 pseudosphere_normal(double u, double v)
{
    return {std::cos(v) * std::cos(u), std::cos(v) * std::sin(u), std::sin(v)};
}

void sphere_wireframe(svg::Drawing& d, double R)
{
    std::vector<Point2> rim;
    for (int i = 0; i <= 240; ++i) {
        const double a = 2.0 * pi * i / 240.0;
        rim.push_back({R * std::cos(a), R * std::sin(a)});
    }
    d.add(Path{rim, "#444444", 1.2});
    for (int j = 1; j < 6; ++j) {
        const double v = pi * j / 6.0;
        std::vector<Vec3> pts, normals;
        for (int i = 0; i <= 180; ++i) {
            pts.push_back(sphere_point(R, 2.0 * pi * i / 180.0, v));
            normals.push_back(pts.back() / R);
        }
        add_with_depth(d, pts, normals, "#999999", 0.6);
    }
    for (int j = 0; j < 12; ++j) {
        const double u = 2.0 * pi * j / 12.0;
        std::vector<Vec3> pts, normals;
        for (int i = 0; i <= 90; ++i) {
            pts.push_back(sphere_point(R, u, pi * i / 90.0));
            normals.push_back(pts.back() / R);
        }
        add_with_depth(d, pts, normals, "#999999", 0.6);
    }
}

void pseudosphere_wireframe(svg::Drawing& d, double R, double v_lo)
{
    for (int j = 0; j < 12; ++j) {
        const double u = 2.0 * pi * j / 12.0;
        std::vector<Vec3> pts, normals;
        for (int i = 0; i <= 120; ++i) {
            const double v = v_lo + (pi / 2 - v_lo) * i / 120.0;
            pts.push_back(pseudosphere_point(R, u, v));
            normals.push_back(pseudosphere_normal(u, v));
        }
        add_with_depth(d, pts, normals, "#999999", 0.6);
    }
    for (double v : {v_lo, 0.2, 0.45, 0.8, 1.2, pi / 2}) {
        std::vector<Vec3> pts, normals;
        for (int i = 0; i <= 180; ++i) {
            const double u = 2.0 * pi * i / 180.0;
            pts.push_back(pseudosphere_point(R, u, v));
            normals.push_back(pseudosphere_normal(u, v));
        }
        add_with_depth(d, pts, normals, v == pi / 2 ? "#444444" : "#999999", v == pi / 2 ? 1.2 : 0.6);
    }
}

std::string spiral()
{
    svg::Drawing d("Logarithmic spiral");
    const double a = 0.15;
    const ChartCurve c = plane_log_spiral(a);
    Path p{{}, "#1f4e9c", 1.4};
    for (int i = 0; i <= 2000; ++i) {
        const Vec3 q = c.position(-2.0 + 38.0 * i / 2000.0);
        p.points.push_back({q.x, q.y});
    }
    d.add(std::move(p));
    return d.render();
}

std::string pseudosphere()
{
    svg::Drawing d("Pseudosphere");
    pseudosphere_wireframe(d, 1.0, 0.06);
    return d.render();
}

std::string sphere_loxodrome_figure()
{
    svg::Drawing d("Loxodrome on a sphere");
    sphere_wireframe(d, 1.0);
    const ChartCurve c = sphere_loxodrome(1.0, 4.0);
    std::vector<Vec3> pts;
    for (int i = 0; i <= 4000; ++i)
        pts.push_back(c.position(pi / 2 * (0.003 + 0.994 * i / 4000.0)));
    add_with_depth(d, pts, pts, "#b0302a", 1.4);
    return d.render();
}

std::string pseudosphere_loxodrome_figure()
{
    svg::Drawing d("Loxodrome on a pseudosphere");
    const double v_lo = 0.06;
    pseudosphere_wireframe(d, 1.0, v_lo);
    const ChartCurve c = pseudosphere_loxodrome(1.0, pi / 3, 0.0, v_lo);
    std::vector<Vec3> pts, normals;
    for (int i = 0; i <= 1500; ++i) {
        const double v = v_lo + (pi / 2 - v_lo) * i / 1500.0;
        const ChartPoint cp = c.at(v);
        pts.push_back(c.position(v));
        normals.push_back(pseudosphere_normal(cp.u, cp.v));
    }
    add_with_depth(d, pts, normals, "#b0302a", 1.4);
    return d.render();
}

/// Iso-lines of k_theta(K, r) at theta = pi/4 by marching squares; r is
/// stretched vertically so the plot is roughly square.
std::string k_surface()
{
    svg::Drawing d("The function k_theta(K, r), theta = pi/4");
    constexpr int nK = 160, nr = 160;
    constexpr double K0 = -4.0, K1 = 4.0, r0 = 0.05, r1 = 1.5;
    constexpr double stretch = (K1 - K0) / (r1 - r0);
    const double theta = pi / 4;
    const auto K_at = [](int i) { return K0 + (K1 - K0) * i / nK; };
    const auto r_at = [](int j) { return r0 + (r1 - r0) * j / nr; };

    std::vector<double> k(static_cast<std::size_t>((nK + 1) * (nr + 1)));
    const auto at = [&](int i, int j) -> double& {
        return k[static_cast<std::size_t>(j * (nK + 1) + i)];
    };
    for (int j = 0; j <= nr; ++j)
        for (int i = 0; i <= nK; ++i)
            at(i, j) = k_theta(K_at(i), r_at(j), theta);

    d.add(Path{{{K0, 0.0}, {K1, 0.0}}, "#444444", 0.8});
    d.add(Path{{{0.0, 0.0}, {0.0, (r1 - r0) * stretch}}, "#444444", 0.8});
    d.add(Path{{{K0, 0.0}, {K1, 0.0}, {K1, (r1 - r0) * stretch}, {K0, (r1 - r0) * stretch}, {K0, 0.0}},
               "#444444", 0.6});
    d.add(svg::Label{{K1 + 0.1, -0.1}, "K"});
    d.add(svg::Label{{0.1, (r1 - r0) * stretch + 0.1}, "r"});

    const std::array<double, 11> levels = {-4, -2, -1, -0.5, 0, 0.5, 0.75, 1, 1.5, 2, 4};
    for (std::size_t li = 0; li < levels.size(); ++li) {
        const double level = levels[li];
        const std::string stroke = level < 0 ? "#b0302a" : level == 0 ? "#000000" : "#1f4e9c";
        for (int j = 0; j < nr; ++j) {
            for (int i = 0; i < nK; ++i) {
                const std::array<double, 4> val = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
                const std::array<Point2, 4> pos = {Point2{K_at(i), r_at(j)}, Point2{K_at(i + 1), r_at(j)},
                                                   Point2{K_at(i + 1), r_at(j + 1)},
                                                   Point2{K_at(i), r_at(j + 1)}};
                std::vector<Point2> crossings;
                for (int e = 0; e < 4; ++e) {
                    const double a = val[e] - level;
                    const double b = val[(e + 1) % 4] - level;
                    if ((a < 0.0) == (b < 0.0))
                        continue;
                    const double s = a / (a - b);
                    const Point2 p = pos[e];
                    const Point2 q = pos[(e + 1) % 4];
                    crossings.push_back({p.first + s * (q.first - p.first),
                                         (p.second + s * (q.second - p.second) - r0) * stretch});
                }
                for (std::size_t c = 0; c + 1 < crossings.size(); c += 2)
                    d.add(Path{{crossings[c], crossings[c + 1]}, stroke, level == 0 ? 1.2 : 0.9});
            }
        }
    }
    return d.render();
}

} // namespace

std::string render(std::string_view name)
{
    if (name == "spiral")
        return spiral();
    if (name == "pseudosphere")
        return pseudosphere();
    if (name == "sphere-loxodrome")
        return sphere_loxodrome_figure();
    if (name == "pseudosphere-loxodrome")
        return pseudosphere_loxodrome_figure();
    if (name == "k-surface")
        return k_surface();
    throw std::invalid_argument("unknown figure: " + std::string(name));
}

std::string render_curve(const std::vector<Vec3>& points, std::string_view surface, double R,
                         const std::string& title)
{
    svg::Drawing d(title);
    if (surface == "sphere" || surface == "pseudosphere") {
        std::vector<Point2> rim;
        for (int i = 0; i <= 240; ++i) {
            const double a = 2.0 * pi * i / 240.0;
            rim.push_back({R * std::cos(a), R * std::sin(a)});
        }
        d.add(Path{rim, "#999999", 0.8});
    }
    Path p{{}, "#1f4e9c", 1.4};
    for (const Vec3& q : points)
        p.points.push_back({q.x, q.y});
    d.add(std::move(p));
    return d.render();
}

} // namespace logspiral::figures
