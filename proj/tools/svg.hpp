#pragma once

#include <string>
#include <utility>
#include <vector>

namespace logspiral::svg {

using Point2 = std::pair<double, double>;

struct Path {
    std::vector<Point2> points;
    std::string stroke = "#1f4e9c";
    double width = 1.0; ///< in units of 1/500 of the drawing's larger side
    double opacity = 1.0;
    bool dashed = false;
};

struct Label {
    Point2 at;
    std::string text;
};

/// Collects polylines in model coordinates (y up) and renders SVG 1.1 with a
/// viewBox equal to their bounding box plus a 5% margin.
class Drawing {
public:
    explicit Drawing(std::string title) : title_(std::move(title)) {}

    void add(Path path);
    void add(Label label) { labels_.push_back(std::move(label)); }
    [[nodiscard]] bool empty() const noexcept { return paths_.empty(); }
    [[nodiscard]] std::string render() const;

private:
    std::string title_;
    std::vector<Path> paths_;
    std::vector<Label> labels_;
};

} // namespace logspiral::svg
