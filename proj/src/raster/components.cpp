#include <numeric>
#include <vector>

#include "cellshape/error.hpp"
#include "cellshape/raster.hpp"

namespace cellshape::raster {
namespace {

class DisjointSet {
 public:
  std::int32_t make() {
    parent_.push_back(static_cast<std::int32_t>(parent_.size()));
    return parent_.back();
  }
  std::int32_t find(std::int32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent_[b] = a;
    } else {
      parent_[a] = b;
    }
  }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::int32_t> parent_;
};

}  // namespace

LabeledMask label_components(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  LabeledMask out{w, h, std::vector<std::int32_t>(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0), 0};
  auto at = [&](int x, int y) -> std::int32_t& { return out.labels[static_cast<std::size_t>(y) * w + x]; };

  // Provisional labels start at 1; slot 0 of the set stays unused.
  DisjointSet sets;
  sets.make();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y)) continue;
      std::int32_t label = 0;
      // Already-visited 8-neighbours: W, NW, N, NE.
      const int nx[4] = {x - 1, x - 1, x, x + 1};
      const int ny[4] = {y, y - 1, y - 1, y - 1};
      for (int i = 0; i < 4; ++i) {
        if (nx[i] < 0 || ny[i] < 0 || nx[i] >= w) continue;
        const std::int32_t n = at(nx[i], ny[i]);
        if (n == 0) continue;
        if (label == 0) {
          label = n;
        } else {
          sets.unite(label, n);
        }
      }
      at(x, y) = label == 0 ? sets.make() : label;
    }
  }

  // Final ids in order of first raster appearance of each root.
  std::vector<std::int32_t> remap(sets.size(), 0);
  std::int32_t next = 0;
  for (auto& v : out.labels) {
    if (v == 0) continue;
    const std::int32_t root = sets.find(v);
    if (remap[root] == 0) remap[root] = ++next;
    v = remap[root];
  }
  out.num_regions = next;
  return out;
}

std::vector<std::size_t> region_areas(const LabeledMask& labeled) {
  std::vector<std::size_t> areas(static_cast<std::size_t>(labeled.num_regions) + 1, 0);
  for (const auto v : labeled.labels) ++areas[static_cast<std::size_t>(v)];
  return areas;
}

int largest_region(const LabeledMask& labeled) {
  if (labeled.num_regions < 1) throw NoRegionError("mask has no foreground region");
  const auto areas = region_areas(labeled);
  int best = 1;
  for (int l = 2; l <= labeled.num_regions; ++l) {
    if (areas[static_cast<std::size_t>(l)] > areas[static_cast<std::size_t>(best)]) best = l;
  }
  return best;
}

}  // namespace cellshape::raster
