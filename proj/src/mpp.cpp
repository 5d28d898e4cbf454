#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "cellshape/error.hpp"
#include "cellshape/polygon.hpp"
#include "cellshape/raster.hpp"

namespace cellshape::poly {
namespace {

struct Grid {
  int nx = 0;
  int ny = 0;
  std::vector<std::uint8_t> on;

  bool at(int i, int j) const { return i >= 0 && j >= 0 && i < nx && j < ny && on[static_cast<std::size_t>(j) * nx + i] != 0; }
  std::uint8_t& ref(int i, int j) { return on[static_cast<std::size_t>(j) * nx + i]; }
};

// Keeps the largest 4-connected component (first in raster order on ties),
// then fills background pockets that do not reach the grid border.
void clean_complex(Grid& g) {
  std::vector<int> comp(g.on.size(), 0);
  std::vector<std::pair<int, int>> stack;
  int best_id = 0;
  std::size_t best_size = 0;
  int next_id = 0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const auto idx = static_cast<std::size_t>(j) * g.nx + i;
      if (!g.on[idx] || comp[idx] != 0) continue;
      const int id = ++next_id;
      std::size_t size = 0;
      comp[idx] = id;
      stack.push_back({i, j});
      while (!stack.empty()) {
        const auto [ci, cj] = stack.back();
        stack.pop_back();
        ++size;
        const int di[4] = {-1, 1, 0, 0};
        const int dj[4] = {0, 0, -1, 1};
        for (int d = 0; d < 4; ++d) {
          const int ni = ci + di[d];
          const int nj = cj + dj[d];
          if (!g.at(ni, nj)) continue;
          const auto nidx = static_cast<std::size_t>(nj) * g.nx + ni;
          if (comp[nidx] != 0) continue;
          comp[nidx] = id;
          stack.push_back({ni, nj});
        }
      }
      if (size > best_size) {
        best_size = size;
        best_id = id;
      }
    }
  }
  for (std::size_t k = 0; k < g.on.size(); ++k) g.on[k] = (comp[k] == best_id && best_id != 0) ? 1 : 0;

  // Flood the outside from the border; whatever background remains is a pocket.
  std::vector<std::uint8_t> outside(g.on.size(), 0);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (i != 0 && j != 0 && i != g.nx - 1 && j != g.ny - 1) continue;
      const auto idx = static_cast<std::size_t>(j) * g.nx + i;
      if (g.on[idx] || outside[idx]) continue;
      outside[idx] = 1;
      stack.push_back({i, j});
      while (!stack.empty()) {
        const auto [ci, cj] = stack.back();
        stack.pop_back();
        const int di[4] = {-1, 1, 0, 0};
        const int dj[4] = {0, 0, -1, 1};
        for (int d = 0; d < 4; ++d) {
          const int ni = ci + di[d];
          const int nj = cj + dj[d];
          if (ni < 0 || nj < 0 || ni >= g.nx || nj >= g.ny) continue;
          const auto nidx = static_cast<std::size_t>(nj) * g.nx + ni;
          if (g.on[nidx] || outside[nidx]) continue;
          outside[nidx] = 1;
          stack.push_back({ni, nj});
        }
      }
    }
  }
  for (std::size_t k = 0; k < g.on.size(); ++k) {
    if (!outside[k]) g.on[k] = 1;
  }
}

struct Lattice {
  int x;
  int y;
  friend bool operator==(const Lattice&, const Lattice&) = default;
  friend auto operator<=>(const Lattice&, const Lattice&) = default;
};

// Boundary of a simply connected polyomino as a positively oriented loop of
// corner lattice points with collinear points removed.
std::vector<Lattice> trace_complex(const Grid& g) {
  std::map<Lattice, Lattice> next;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (!g.at(i, j)) continue;
      if (!g.at(i, j - 1)) next[{i, j}] = {i + 1, j};
      if (!g.at(i + 1, j)) next[{i + 1, j}] = {i + 1, j + 1};
      if (!g.at(i, j + 1)) next[{i + 1, j + 1}] = {i, j + 1};
      if (!g.at(i - 1, j)) next[{i, j + 1}] = {i, j};
    }
  }
  if (next.empty()) return {};
  // Lowest y, then lowest x.
  Lattice start = next.begin()->first;
  for (const auto& [v, _] : next) {
    if (v.y < start.y || (v.y == start.y && v.x < start.x)) start = v;
  }
  std::vector<Lattice> loop{start};
  for (Lattice cur = next.at(start); !(cur == start); cur = next.at(cur)) loop.push_back(cur);

  std::vector<Lattice> corners;
  const std::size_t n = loop.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Lattice a = loop[(k + n - 1) % n];
    const Lattice b = loop[k];
    const Lattice c = loop[(k + 1) % n];
    const long turn = static_cast<long>(b.x - a.x) * (c.y - b.y) - static_cast<long>(b.y - a.y) * (c.x - b.x);
    if (turn != 0) corners.push_back(b);
  }
  return corners;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int turn_sign(Point2d a, Point2d b, Point2d c) {
  return sign_of((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
}

}  // namespace

CellularBand cellular_band(const Contour& contour, int cell_size) {
  if (cell_size < 1) throw Error("MPP cell size must be >= 1");
  if (contour.points.empty()) throw DegenerateError("empty contour");
  int minx = contour.points[0].x, maxx = minx, miny = contour.points[0].y, maxy = miny;
  for (const auto& p : contour.points) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const int w = maxx - minx + 1;
  const int h = maxy - miny + 1;
  Contour local = contour;
  for (auto& p : local.points) p = {p.x - minx, p.y - miny};
  const BinaryMask inside = raster::fill_contour(local, w, h);

  Grid grid{(w - 1) / cell_size, (h - 1) / cell_size, {}};
  if (grid.nx < 1 || grid.ny < 1) throw DegenerateError("contour is thinner than one MPP cell");
  grid.on.assign(static_cast<std::size_t>(grid.nx) * grid.ny, 0);
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      bool full = true;
      for (int b = 0; b <= cell_size && full; ++b) {
        for (int a = 0; a <= cell_size && full; ++a) full = inside.at(i * cell_size + a, j * cell_size + b);
      }
      grid.ref(i, j) = full ? 1 : 0;
    }
  }
  clean_complex(grid);
  const auto corners = trace_complex(grid);
  if (corners.size() < 4) throw DegenerateError("contour is thinner than one MPP cell");

  CellularBand band;
  band.cell_size = cell_size;
  const std::size_t n = corners.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Lattice a = corners[(k + n - 1) % n];
    const Lattice b = corners[k];
    const Lattice c = corners[(k + 1) % n];
    const int din_x = sign_of(b.x - a.x), din_y = sign_of(b.y - a.y);
    const int dout_x = sign_of(c.x - b.x), dout_y = sign_of(c.y - b.y);
    const bool is_convex = din_x * dout_y - din_y * dout_x > 0;
    const Point2d wall{static_cast<double>(minx + b.x * cell_size), static_cast<double>(miny + b.y * cell_size)};
    band.inner_wall.push_back(wall);
    band.convex.push_back(is_convex);
    if (is_convex) {
      band.candidates.push_back(wall);
    } else {
      band.candidates.push_back({wall.x + cell_size * (dout_x - din_x), wall.y + cell_size * (dout_y - din_y)});
    }
  }
  return band;
}

PolyApprox min_perimeter_polygon(const Contour& contour, int cell_size) {
  const CellularBand band = cellular_band(contour, cell_size);
  const auto& v = band.candidates;
  const std::size_t n = v.size();

  PolyApprox out;
  out.method = Method::mpp;
  out.param = cell_size;
  out.vertices.push_back(v[0]);

  std::size_t last = 0;
  std::size_t white = 0;
  std::size_t black = 0;
  std::size_t k = 1;
  // k == n revisits the starting vertex and closes the polygon.
  while (k <= n) {
    const Point2d vk = v[k % n];
    if (turn_sign(v[last], v[white], vk) > 0) {
      if (white == n || white == 0) break;
      out.vertices.push_back(v[white]);
      last = black = white;
      k = white + 1;
    } else if (turn_sign(v[last], v[black], vk) < 0) {
      if (black == n || black == 0) break;
      out.vertices.push_back(v[black]);
      last = white = black;
      k = black + 1;
    } else {
      if (k == n) break;
      if (band.convex[k]) {
        white = k;
      } else {
        black = k;
      }
      ++k;
    }
  }
  return out;
}

}  // namespace cellshape::poly
