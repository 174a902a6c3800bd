// Dense volumetric grids with physical spacing, plus the grid-level
// operations the rest of the pipeline builds on: isotropic resampling,
// cropping, intensity scaling and connected-component lesion extraction.
//
// Conventions used throughout:
//   - voxel order is x-fastest:  index = x + nx*(y + ny*z)
//   - the physical center of voxel i along an axis is (i + 0.5) * spacing
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cadet/error.hpp"

namespace cadet {

using Dims3 = std::array<int, 3>;
using Vec3 = std::array<double, 3>;

struct Frame {
  Dims3 dims{0, 0, 0};
  Vec3 spacing_mm{1.0, 1.0, 1.0};

  bool operator==(const Frame&) const = default;
};

namespace detail {

inline std::size_t checked_voxel_count(const Dims3& dims) {
  require(dims[0] >= 1 && dims[1] >= 1 && dims[2] >= 1, errc::bad_config,
          "dims must all be >= 1");
  return static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) *
         static_cast<std::size_t>(dims[2]);
}

inline void check_spacing(const Vec3& spacing) {
  require(spacing[0] > 0 && spacing[1] > 0 && spacing[2] > 0, errc::invalid_spacing,
          "spacing must be positive on every axis");
}

}  // namespace detail

template <typename T>
struct Grid3 {
  Dims3 dims{0, 0, 0};
  Vec3 spacing_mm{1.0, 1.0, 1.0};
  std::vector<T> voxels;

  static Grid3 zeros(const Dims3& dims, const Vec3& spacing) {
    detail::check_spacing(spacing);
    Grid3 g;
    g.dims = dims;
    g.spacing_mm = spacing;
    g.voxels.assign(detail::checked_voxel_count(dims), T{});
    return g;
  }

  std::size_t size() const { return voxels.size(); }

  std::size_t index(int x, int y, int z) const {
    return static_cast<std::size_t>(x) +
           static_cast<std::size_t>(dims[0]) *
               (static_cast<std::size_t>(y) + static_cast<std::size_t>(dims[1]) * z);
  }

  T& at(int x, int y, int z) { return voxels[index(x, y, z)]; }
  const T& at(int x, int y, int z) const { return voxels[index(x, y, z)]; }

  bool in_bounds(int x, int y, int z) const {
    return x >= 0 && y >= 0 && z >= 0 && x < dims[0] && y < dims[1] && z < dims[2];
  }

  Frame frame() const { return Frame{dims, spacing_mm}; }

  bool is_isotropic(double rel_tol = 1e-9) const {
    double s = spacing_mm[0];
    return std::abs(spacing_mm[1] - s) <= rel_tol * s &&
           std::abs(spacing_mm[2] - s) <= rel_tol * s;
  }

  bool is_cubic() const { return dims[0] == dims[1] && dims[1] == dims[2]; }

  double voxel_volume_mm3() const { return spacing_mm[0] * spacing_mm[1] * spacing_mm[2]; }

  void validate() const {
    detail::check_spacing(spacing_mm);
    require(voxels.size() == detail::checked_voxel_count(dims), errc::shape_mismatch,
            "voxel array length does not match dims");
  }
};

using Volume3 = Grid3<float>;
using Mask3 = Grid3<std::uint8_t>;

struct LesionRecord {
  int id = 0;
  Vec3 center_mm{0, 0, 0};
  double volume_mm3 = 0.0;
  double equivalent_diameter_mm = 0.0;
  std::vector<std::int64_t> voxel_ids;
};

inline double voxel_center_mm(int i, double spacing) { return (i + 0.5) * spacing; }

inline int nearest_voxel(double p_mm, double spacing, int n) {
  long long i = std::llround(p_mm / spacing - 0.5);
  if (i < 0) i = 0;
  if (i >= n) i = n - 1;
  return static_cast<int>(i);
}

inline void require_same_frame(const Frame& a, const Frame& b, const char* what) {
  require(a == b, errc::frame_mismatch, std::string(what) + ": dims/spacing disagree");
}

// Trilinear sample at a continuous voxel-index coordinate; out-of-range
// coordinates clamp to the border voxel.
inline float sample_trilinear_index(const Volume3& v, double fx, double fy, double fz) {
  auto prep = [](double f, int n, int& i0, int& i1, float& t) {
    if (f < 0.0) f = 0.0;
    double top = static_cast<double>(n - 1);
    if (f > top) f = top;
    double fl = std::floor(f);
    i0 = static_cast<int>(fl);
    i1 = i0 + 1 < n ? i0 + 1 : n - 1;
    t = static_cast<float>(f - fl);
  };
  int x0, x1, y0, y1, z0, z1;
  float tx, ty, tz;
  prep(fx, v.dims[0], x0, x1, tx);
  prep(fy, v.dims[1], y0, y1, ty);
  prep(fz, v.dims[2], z0, z1, tz);

  auto lerp = [](float a, float b, float t) { return a * (1.0f - t) + b * t; };
  float c00 = lerp(v.at(x0, y0, z0), v.at(x1, y0, z0), tx);
  float c10 = lerp(v.at(x0, y1, z0), v.at(x1, y1, z0), tx);
  float c01 = lerp(v.at(x0, y0, z1), v.at(x1, y0, z1), tx);
  float c11 = lerp(v.at(x0, y1, z1), v.at(x1, y1, z1), tx);
  return lerp(lerp(c00, c10, ty), lerp(c01, c11, ty), tz);
}

inline float sample_trilinear_mm(const Volume3& v, const Vec3& p_mm) {
  return sample_trilinear_index(v, p_mm[0] / v.spacing_mm[0] - 0.5,
                                p_mm[1] / v.spacing_mm[1] - 0.5,
                                p_mm[2] / v.spacing_mm[2] - 0.5);
}

// Resample onto an isotropic grid of target_mm voxels by trilinear
// interpolation in physical coordinates. Output dims are round(n*s/target),
// at least 1 per axis.
inline Volume3 resample_isotropic(const Volume3& v, double target_mm = 1.0) {
  require(target_mm > 0.0, errc::invalid_spacing, "target spacing must be > 0");
  v.validate();

  Dims3 out_dims;
  for (int a = 0; a < 3; ++a) {
    long long n = std::llround(v.dims[a] * v.spacing_mm[a] / target_mm);
    out_dims[a] = static_cast<int>(std::max<long long>(1, n));
  }
  Volume3 out = Volume3::zeros(out_dims, Vec3{target_mm, target_mm, target_mm});
  for (int z = 0; z < out_dims[2]; ++z) {
    double pz = voxel_center_mm(z, target_mm);
    for (int y = 0; y < out_dims[1]; ++y) {
      double py = voxel_center_mm(y, target_mm);
      for (int x = 0; x < out_dims[0]; ++x) {
        double px = voxel_center_mm(x, target_mm);
        out.at(x, y, z) = sample_trilinear_mm(v, Vec3{px, py, pz});
      }
    }
  }
  return out;
}

// Cube of edge_mm/spacing voxels per side around the voxel nearest center_mm;
// regions outside the source are zero-filled. The source voxel nearest
// center_mm lands at output index n/2 on each axis.
inline Volume3 crop_centered(const Volume3& v, const Vec3& center_mm, double edge_mm) {
  require(v.is_isotropic(), errc::not_isotropic, "crop_centered requires an isotropic volume");
  double s = v.spacing_mm[0];
  long long n = std::llround(edge_mm / s);
  require(n >= 1 && std::abs(n * s - edge_mm) <= 1e-6 * edge_mm, errc::invalid_params,
          "edge_mm must be a positive multiple of the voxel spacing");
  int edge = static_cast<int>(n);

  Dims3 out_dims{edge, edge, edge};
  Volume3 out = Volume3::zeros(out_dims, v.spacing_mm);
  Dims3 offset;
  for (int a = 0; a < 3; ++a) {
    int c = nearest_voxel(center_mm[a], s, v.dims[a]);
    offset[a] = c - edge / 2;
  }
  for (int z = 0; z < edge; ++z) {
    int sz = z + offset[2];
    if (sz < 0 || sz >= v.dims[2]) continue;
    for (int y = 0; y < edge; ++y) {
      int sy = y + offset[1];
      if (sy < 0 || sy >= v.dims[1]) continue;
      int x_lo = std::max(0, -offset[0]);
      int x_hi = std::min(edge, v.dims[0] - offset[0]);
      for (int x = x_lo; x < x_hi; ++x) out.at(x, y, z) = v.at(x + offset[0], sy, sz);
    }
  }
  return out;
}

// Central sub-cube of edge_vox voxels per side (no zero fill needed; the
// requested edge must not exceed the source).
inline Volume3 center_crop(const Volume3& v, int edge_vox) {
  require(v.is_cubic(), errc::not_cubic, "center_crop requires a cubic volume");
  require(edge_vox >= 1 && edge_vox <= v.dims[0], errc::bad_input_size,
          "center_crop edge exceeds the source");
  int off = (v.dims[0] - edge_vox) / 2;
  Volume3 out = Volume3::zeros(Dims3{edge_vox, edge_vox, edge_vox}, v.spacing_mm);
  for (int z = 0; z < edge_vox; ++z)
    for (int y = 0; y < edge_vox; ++y)
      for (int x = 0; x < edge_vox; ++x) out.at(x, y, z) = v.at(x + off, y + off, z + off);
  return out;
}

// Affine map of the value range onto [0, 1]; a constant volume maps to zeros.
inline Volume3 scale_to_unit(const Volume3& v) {
  Volume3 out = v;
  if (v.voxels.empty()) return out;
  float lo = v.voxels[0], hi = v.voxels[0];
  for (float x : v.voxels) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (hi == lo) {
    std::fill(out.voxels.begin(), out.voxels.end(), 0.0f);
    return out;
  }
  float scale = 1.0f / (hi - lo);
  for (float& x : out.voxels) x = (x - lo) * scale;
  return out;
}

struct ComponentLabels {
  std::vector<std::int32_t> labels;  // -1 background, else index into records
  std::vector<LesionRecord> records;
};

// 26-connected components of the mask's 1-voxels. Component ids are assigned
// in ascending order of each component's minimum linear voxel index (the scan
// discovers components in exactly that order).
inline ComponentLabels label_components(const Mask3& m) {
  m.validate();
  const int nx = m.dims[0], ny = m.dims[1], nz = m.dims[2];
  ComponentLabels out;
  out.labels.assign(m.size(), -1);

  std::vector<std::int64_t> stack;
  for (std::size_t seed = 0; seed < m.size(); ++seed) {
    if (m.voxels[seed] == 0 || out.labels[seed] >= 0) continue;
    const std::int32_t id = static_cast<std::int32_t>(out.records.size());
    LesionRecord rec;
    rec.id = id;
    stack.clear();
    stack.push_back(static_cast<std::int64_t>(seed));
    out.labels[seed] = id;
    while (!stack.empty()) {
      std::int64_t idx = stack.back();
      stack.pop_back();
      rec.voxel_ids.push_back(idx);
      int x = static_cast<int>(idx % nx);
      int y = static_cast<int>((idx / nx) % ny);
      int z = static_cast<int>(idx / (static_cast<std::int64_t>(nx) * ny));
      for (int dz = -1; dz <= 1; ++dz)
        for (int dy = -1; dy <= 1; ++dy)
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0 && dz == 0) continue;
            int px = x + dx, py = y + dy, pz = z + dz;
            if (px < 0 || py < 0 || pz < 0 || px >= nx || py >= ny || pz >= nz) continue;
            std::size_t nidx = m.index(px, py, pz);
            if (m.voxels[nidx] == 0 || out.labels[nidx] >= 0) continue;
            out.labels[nidx] = id;
            stack.push_back(static_cast<std::int64_t>(nidx));
          }
    }
    std::sort(rec.voxel_ids.begin(), rec.voxel_ids.end());
    Vec3 c{0, 0, 0};
    for (std::int64_t idx : rec.voxel_ids) {
      int x = static_cast<int>(idx % nx);
      int y = static_cast<int>((idx / nx) % ny);
      int z = static_cast<int>(idx / (static_cast<std::int64_t>(nx) * ny));
      c[0] += voxel_center_mm(x, m.spacing_mm[0]);
      c[1] += voxel_center_mm(y, m.spacing_mm[1]);
      c[2] += voxel_center_mm(z, m.spacing_mm[2]);
    }
    double cnt = static_cast<double>(rec.voxel_ids.size());
    rec.center_mm = Vec3{c[0] / cnt, c[1] / cnt, c[2] / cnt};
    rec.volume_mm3 = cnt * m.voxel_volume_mm3();
    rec.equivalent_diameter_mm = std::cbrt(6.0 * rec.volume_mm3 / 3.14159265358979323846);
    out.records.push_back(std::move(rec));
  }
  return out;
}

inline std::vector<LesionRecord> connected_components(const Mask3& m) {
  return label_components(m).records;
}

}  // namespace cadet
