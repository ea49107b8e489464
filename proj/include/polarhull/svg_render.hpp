#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "polarhull/errors.hpp"
#include "polarhull/geometry.hpp"

namespace polarhull {

// What to draw; only `points` is required.  `ray_interval` > 0 adds the bin
// rays of the polar frame (rotated by `frame_offset`) from the center.
struct RenderScene {
  const std::vector<Point>* points = nullptr;
  const Hull* hull = nullptr;
  const std::vector<std::size_t>* fence = nullptr;
  const Center* center = nullptr;
  double ray_interval = 0.0;
  double frame_offset = 0.0;
};

inline std::string render_svg(const RenderScene& scene, double width_px = 800.0,
                              std::size_t max_dots = 20000) {
  if (scene.points == nullptr || scene.points->empty()) throw EmptyInput();
  const std::vector<Point>& points = *scene.points;

  double min_x = points[0].x, max_x = points[0].x;
  double min_y = points[0].y, max_y = points[0].y;
  for (const Point& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  if (scene.center != nullptr) {
    min_x = std::min(min_x, scene.center->x);
    max_x = std::max(max_x, scene.center->x);
    min_y = std::min(min_y, scene.center->y);
    max_y = std::max(max_y, scene.center->y);
  }
  double span_x = max_x - min_x;
  double span_y = max_y - min_y;
  if (span_x <= 0.0 && span_y <= 0.0) span_x = span_y = 1.0;
  const double span = std::max(span_x, span_y);
  const double margin = 0.05 * span;
  const double scale = width_px / (span + 2.0 * margin);
  const double height_px = (span_y + 2.0 * margin) * scale;

  auto px = [&](double x) { return (x - min_x + margin) * scale; };
  auto py = [&](double y) { return height_px - (y - min_y + margin) * scale; };  // y up

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
      << width_px << ' ' << height_px << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (scene.center != nullptr && scene.ray_interval > 0.0) {
    const double reach = 2.0 * (span + 2.0 * margin);
    out << "<g stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
    for (double t = 0.0; t < kTwoPi; t += scene.ray_interval) {
      const double a = t + scene.frame_offset;
      out << "<line x1=\"" << px(scene.center->x) << "\" y1=\"" << py(scene.center->y)
          << "\" x2=\"" << px(scene.center->x + reach * std::cos(a)) << "\" y2=\""
          << py(scene.center->y + reach * std::sin(a)) << "\"/>\n";
    }
    out << "</g>\n";
  }

  const std::size_t stride =
      points.size() > max_dots ? (points.size() + max_dots - 1) / max_dots : 1;
  out << "<g fill=\"#888888\">\n";
  for (std::size_t i = 0; i < points.size(); i += stride) {
    out << "<circle cx=\"" << px(points[i].x) << "\" cy=\"" << py(points[i].y)
        << "\" r=\"1.5\"/>\n";
  }
  out << "</g>\n";

  if (scene.fence != nullptr && !scene.fence->empty()) {
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" points=\"";
    for (std::size_t idx : *scene.fence) {
      out << px(points[idx].x) << ',' << py(points[idx].y) << ' ';
    }
    // close the ring visually
    out << px(points[scene.fence->front()].x) << ',' << py(points[scene.fence->front()].y);
    out << "\"/>\n";
    out << "<g fill=\"#1f77b4\">\n";
    for (std::size_t idx : *scene.fence) {
      out << "<circle cx=\"" << px(points[idx].x) << "\" cy=\"" << py(points[idx].y)
          << "\" r=\"2.5\"/>\n";
    }
    out << "</g>\n";
  }

  if (scene.hull != nullptr && !scene.hull->vertices.empty()) {
    out << "<path fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" d=\"";
    for (std::size_t i = 0; i < scene.hull->vertices.size(); ++i) {
      const Point& p = points[scene.hull->vertices[i]];
      out << (i == 0 ? 'M' : 'L') << px(p.x) << ' ' << py(p.y);
    }
    out << "Z\"/>\n";
    out << "<g fill=\"#d62728\">\n";
    for (std::size_t idx : scene.hull->vertices) {
      out << "<circle cx=\"" << px(points[idx].x) << "\" cy=\"" << py(points[idx].y)
          << "\" r=\"3\"/>\n";
    }
    out << "</g>\n";
  }

  if (scene.center != nullptr) {
    const double cx = px(scene.center->x);
    const double cy = py(scene.center->y);
    out << "<path stroke=\"#000000\" stroke-width=\"1.5\" d=\"M" << cx - 5 << ' ' << cy << 'L'
        << cx + 5 << ' ' << cy << 'M' << cx << ' ' << cy - 5 << 'L' << cx << ' ' << cy + 5
        << "\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

inline void save_svg(const std::string& path, const std::string& svg) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << svg;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace polarhull
