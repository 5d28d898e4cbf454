#include <algorithm>
#include <cmath>
#include <vector>

#include "cellshape/raster.hpp"

namespace cellshape::raster {
namespace {

// Moore ring in clockwise screen order (y down), starting west.
constexpr int kDx[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kDy[8] = {0, -1, -1, -1, 0, 1, 1, 1};

int direction_of(int dx, int dy) {
  for (int d = 0; d < 8; ++d) {
    if (kDx[d] == dx && kDy[d] == dy) return d;
  }
  return 0;
}

// Traces the border of the 8-connected set given by `inside`, starting at its
// first raster pixel. The start's west neighbour is outside by construction.
template <typename Inside>
std::vector<Point> moore_trace(Point start, Inside inside, std::size_t max_steps) {
  std::vector<Point> points{start};
  Point cur = start;
  int back = 0;
  Point first_move{};
  bool have_first = false;
  for (std::size_t step = 0; step < max_steps; ++step) {
    int found = -1;
    for (int k = 1; k < 8; ++k) {
      const int d = (back + k) % 8;
      if (inside(cur.x + kDx[d], cur.y + kDy[d])) {
        found = k;
        break;
      }
    }
    if (found < 0) break;  // isolated pixel
    const int d = (back + found) % 8;
    const int prev_d = (back + found - 1) % 8;
    const Point next{cur.x + kDx[d], cur.y + kDy[d]};
    const Point prev_bg{cur.x + kDx[prev_d], cur.y + kDy[prev_d]};
    if (cur == start) {
      if (have_first && next == first_move) break;
      if (!have_first) {
        first_move = next;
        have_first = true;
      }
    }
    back = direction_of(prev_bg.x - next.x, prev_bg.y - next.y);
    cur = next;
    points.push_back(cur);
  }
  // The walk ends back on the start pixel, which is already the first point.
  if (points.size() > 1 && points.back() == start) points.pop_back();
  return points;
}

}  // namespace

std::vector<Contour> trace_contours(const LabeledMask& labeled) {
  const int w = labeled.width;
  const int h = labeled.height;
  const int n = labeled.num_regions;
  const auto areas = region_areas(labeled);
  auto idx = [w](int x, int y) { return static_cast<std::size_t>(y) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x); };

  // First raster pixel per region.
  std::vector<Point> first(static_cast<std::size_t>(n) + 1, Point{-1, -1});
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto l = labeled.labels[idx(x, y)];
      if (l != 0 && first[static_cast<std::size_t>(l)].x < 0) first[static_cast<std::size_t>(l)] = {x, y};
    }
  }

  // Background pockets: 4-connected background components not touching the border.
  std::vector<std::int32_t> pocket(labeled.labels.size(), 0);
  std::vector<Point> pocket_first{{-1, -1}};
  std::vector<std::size_t> pocket_area{0};
  std::vector<bool> pocket_open{true};
  std::vector<Point> stack;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (labeled.labels[idx(x, y)] != 0 || pocket[idx(x, y)] != 0) continue;
      const auto id = static_cast<std::int32_t>(pocket_first.size());
      pocket_first.push_back({x, y});
      bool open = false;
      std::size_t area = 0;
      pocket[idx(x, y)] = id;
      stack.push_back({x, y});
      while (!stack.empty()) {
        const Point p = stack.back();
        stack.pop_back();
        ++area;
        if (p.x == 0 || p.y == 0 || p.x == w - 1 || p.y == h - 1) open = true;
        const Point nb[4] = {{p.x - 1, p.y}, {p.x + 1, p.y}, {p.x, p.y - 1}, {p.x, p.y + 1}};
        for (const Point q : nb) {
          if (q.x < 0 || q.y < 0 || q.x >= w || q.y >= h) continue;
          if (labeled.labels[idx(q.x, q.y)] != 0 || pocket[idx(q.x, q.y)] != 0) continue;
          pocket[idx(q.x, q.y)] = id;
          stack.push_back(q);
        }
      }
      pocket_area.push_back(area);
      pocket_open.push_back(open);
    }
  }

  // Holes grouped by enclosing region: the west neighbour of a pocket's first
  // pixel belongs to the enclosing region.
  std::vector<std::vector<std::int32_t>> holes_of(static_cast<std::size_t>(n) + 1);
  for (std::size_t id = 1; id < pocket_first.size(); ++id) {
    if (pocket_open[id]) continue;
    const Point s = pocket_first[id];
    const auto owner = labeled.labels[idx(s.x - 1, s.y)];
    holes_of[static_cast<std::size_t>(owner)].push_back(static_cast<std::int32_t>(id));
  }

  std::vector<Contour> contours;
  for (int l = 1; l <= n; ++l) {
    const auto lu = static_cast<std::size_t>(l);
    auto in_region = [&](int x, int y) { return x >= 0 && y >= 0 && x < w && y < h && labeled.labels[idx(x, y)] == l; };
    Contour outer{moore_trace(first[lu], in_region, 8 * areas[lu] + 16), l, false};
    if (outer.size() >= kMinContourPoints) contours.push_back(std::move(outer));

    for (const auto id : holes_of[lu]) {
      auto in_pocket = [&](int x, int y) { return x >= 0 && y >= 0 && x < w && y < h && pocket[idx(x, y)] == id; };
      auto pts = moore_trace(pocket_first[static_cast<std::size_t>(id)], in_pocket,
                             8 * pocket_area[static_cast<std::size_t>(id)] + 16);
      if (pts.size() < kMinContourPoints) continue;
      std::reverse(pts.begin() + 1, pts.end());
      contours.push_back(Contour{std::move(pts), l, true});
    }
  }
  return contours;
}

BinaryMask fill_contour(const Contour& contour, int width, int height) {
  BinaryMask out(width, height);
  const auto& pts = contour.points;
  const std::size_t n = pts.size();
  auto mark = [&](int x, int y) {
    if (out.contains(x, y)) out.set(x, y, true);
  };
  if (n == 0) return out;
  int ymin = pts[0].y;
  int ymax = pts[0].y;
  for (const auto& p : pts) {
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
    mark(p.x, p.y);
  }
  std::vector<double> xs;
  for (int y = std::max(ymin, 0); y <= std::min(ymax, height - 1); ++y) {
    xs.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const Point a = pts[i];
      const Point b = pts[(i + 1) % n];
      if (a.y == b.y) {
        if (a.y == y) {
          for (int x = std::min(a.x, b.x); x <= std::max(a.x, b.x); ++x) mark(x, y);
        }
        continue;
      }
      const bool spans = (a.y <= y && y < b.y) || (b.y <= y && y < a.y);
      const int lo = std::min(a.y, b.y);
      const int hi = std::max(a.y, b.y);
      const double x = a.x + static_cast<double>(y - a.y) * (b.x - a.x) / static_cast<double>(b.y - a.y);
      if (y >= lo && y <= hi && x == std::floor(x)) mark(static_cast<int>(x), y);
      if (spans) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      const int x0 = std::max(0, static_cast<int>(std::ceil(xs[i])));
      const int x1 = std::min(width - 1, static_cast<int>(std::floor(xs[i + 1])));
      for (int x = x0; x <= x1; ++x) out.set(x, y, true);
    }
  }
  return out;
}

}  // namespace cellshape::raster
