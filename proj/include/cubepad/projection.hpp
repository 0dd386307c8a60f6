/*
 * Copyright 2026 The Cubepad Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

//
// Equirectangular <-> cube-map conversion, face packing, and synthetic
// sphere content.
//
// Equirectangular convention: pixel (m, n) of a W x H plane (W = 2H) has its
// center at longitude theta = ((m + 0.5) / W) * 2*pi - pi and latitude
// phi = pi/2 - ((n + 0.5) / H) * pi. The viewing direction is
//   d = (cos(phi) sin(theta), sin(phi), -cos(phi) cos(theta)),
// so m = W/2 - 0.5 looks at the Front face center. Chroma planes follow the
// same convention at half resolution.
//
// equirect_to_cubemap computes its horizontal sampling position as an exact
// integer quarter-turn base plus a fraction derived only from |x|,|z| ratios.
// Cube rotations about the vertical axis (and 180-degree flips) then change
// the base, never the fraction, which makes the conversion bit-exactly
// equivariant under the cube symmetries that act on the equirect raster as
// pixel shifts/flips (requires the plane width to be a multiple of 4).
//

#ifndef CUBEPAD_PROJECTION_HPP
#define CUBEPAD_PROJECTION_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "cubepad/common.hpp"
#include "cubepad/geometry.hpp"
#include "cubepad/parallel.hpp"
#include "cubepad/resample.hpp"

namespace cubepad {

// Panoramic frame, width = 2 * height.
struct EquirectFrame {
  PlanarFrame frame;

  EquirectFrame() = default;
  EquirectFrame(int w, int bd) : frame(w, w / 2, bd) { validate(); }

  int width() const { return frame.width(); }
  int height() const { return frame.height(); }
  int bitdepth() const { return frame.bitdepth(); }

  void validate() const {
    frame.validate();
    check(width() == 2 * height(), ErrorKind::kDimensionMismatch,
          "EquirectFrame: width must be twice the height");
    check(width() % 4 == 0, ErrorKind::kDimensionMismatch,
          "EquirectFrame: 4:2:0 needs width divisible by 4");
  }
};

// Six face images, luma a x a and chroma (a/2) x (a/2) each.
struct CubeMapFrame {
  struct FacePlanes {
    Plane y, cb, cr;
  };

  int a = 0;
  int bitdepth = 8;
  std::array<FacePlanes, kNumFaces> faces;

  CubeMapFrame() = default;
  CubeMapFrame(int a_, int bd) : a(a_), bitdepth(bd) {
    check(a >= 4 && a % 2 == 0, ErrorKind::kGeometryMismatch,
          "CubeMapFrame: face size must be even and >= 4");
    for (auto& f : faces) {
      f.y = Plane(a, a, bd);
      f.cb = Plane(a / 2, a / 2, bd);
      f.cr = Plane(a / 2, a / 2, bd);
    }
  }

  const FacePlanes& face(Face f) const { return faces[static_cast<int>(f)]; }
  FacePlanes& face(Face f) { return faces[static_cast<int>(f)]; }
};

// Direction of equirect sample (m, n); fractional positions are allowed and
// refer to the same pixel-center convention. The result has unit length.
inline Direction3 equirect_to_direction(double m, double n, int W, int H) {
  const double theta = ((m + 0.5) / W) * (2.0 * detail::kPi) - detail::kPi;
  const double phi = 0.5 * detail::kPi - ((n + 0.5) / H) * detail::kPi;
  const double cp = std::cos(phi);
  return {cp * std::sin(theta), std::sin(phi), -cp * std::cos(theta)};
}

// Continuous equirect position of direction d (any nonzero length).
// m lies in [-0.5, W - 0.5), n in [-0.5, H - 0.5].
inline void direction_to_equirect(const Direction3& d, int W, int H,
                                  double& m, double& n) {
  const double len = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
  check(len > 0.0, ErrorKind::kInvalidArgument,
        "direction_to_equirect: zero direction");
  const double theta =
      (d.x == 0.0 && d.z == 0.0) ? 0.0 : std::atan2(d.x, -d.z);
  const double phi = std::asin(std::clamp(d.y / len, -1.0, 1.0));
  m = W * (theta + detail::kPi) / (2.0 * detail::kPi) - 0.5;
  n = H * (0.5 - phi / detail::kPi) - 0.5;
}

namespace detail {

// Snaps a non-negative sampling offset to units of 2^-26 samples. On the
// snapped value every later coordinate step (integer bases, half-sample
// shifts, mirror complements, floor/fraction splits) is exact in double
// precision, which is what makes quarter-turn and mirror equivariance of
// the conversion bit-exact. The displacement is below 1.5e-8 samples, far
// under every quality tolerance in use.
inline double snap_offset(double t) {
  return std::nearbyint(t * 67108864.0) / 67108864.0;
}

// Horizontal sampling position on a panoramic plane of width Wp for a view
// direction with horizontal components (x, z), decomposed as an integer
// quarter-turn base plus an offset. The offset magnitude depends only on
// min/max of |x|, |z|, so directions related by quarter turns about the
// vertical axis (or sign flips of x or z) produce offsets that are exactly
// equal or exactly mirrored; the paired-sum sampler keeps the mirror case
// bit-exact.
struct AzimuthPos {
  std::int64_t xi = 0;
  double xf = 0.0;
};

inline AzimuthPos azimuth_sample_pos(double x, double z, int Wp) {
  const double ax = std::fabs(x), az = std::fabs(z);
  if (ax == 0.0 && az == 0.0) return {0, 0.5 * Wp - 0.5};  // polar axis
  const bool z_major = az >= ax;
  const double mn = z_major ? ax : az;
  const double mx = z_major ? az : ax;
  // Exact diagonals must stay exact: atan(1) * 2/pi is not bitwise 0.5.
  const double s0 =
      (mn == mx) ? 0.5 : std::atan(mn / mx) * (2.0 / detail::kPi);
  const double g = snap_offset(0.25 * Wp * s0);
  const double sg = x >= 0.0 ? 1.0 : -1.0;
  const int isg = x >= 0.0 ? 1 : -1;
  int quarter;
  double off;
  if (z < 0.0) {
    quarter = z_major ? 2 : 2 + isg;
    off = (z_major ? sg * g : -sg * g) - 0.5;
  } else {
    quarter = z_major ? 2 + 2 * isg : 2 + isg;
    off = (z_major ? -sg * g : sg * g) - 0.5;
  }
  if (Wp % 4 == 0) {
    return {static_cast<std::int64_t>(Wp / 4) * quarter, off};
  }
  return {0, 0.25 * Wp * quarter + off};
}

// Vertical sampling position, exactly mirror-symmetric about the row
// center: +|y| and -|y| give positions c - t and c + t with the same
// snapped t and dyadic c, so both rows and their sampling fractions are
// exact mirror images.
inline double elevation_sample_pos(double y_comp, double len, int Hp) {
  const double r = std::min(std::fabs(y_comp) / len, 1.0);
  const double t = snap_offset(Hp * (std::asin(r) / detail::kPi));
  const double c = 0.5 * Hp - 0.5;
  return y_comp >= 0.0 ? c - t : c + t;
}

// Direction of the face sample at face coordinates (u, v); components are
// single products with the axis signs, no summation order to worry about.
inline Direction3 face_direction(const FaceFrame& fr, double u, double v,
                                 double h) {
  return {u * fr.u_axis.x + v * fr.v_axis.x + h * fr.outward.x,
          u * fr.u_axis.y + v * fr.v_axis.y + h * fr.outward.y,
          u * fr.u_axis.z + v * fr.v_axis.z + h * fr.outward.z};
}

}  // namespace detail

// Resamples an equirectangular frame onto the six cube faces. Luma uses
// Lanczos-3, chroma Lanczos-2; x wraps around the panorama, y clamps at the
// poles. The outputs are deterministic and independent of `threads`.
inline CubeMapFrame equirect_to_cubemap(const EquirectFrame& eq, int a,
                                        int threads = 1) {
  eq.validate();
  CubeMapFrame cube(a, eq.bitdepth());
  const double h = 0.5 * a;
  const int W = eq.width(), H = eq.height();
  const int bd = eq.bitdepth();

  parallel_for(static_cast<std::int64_t>(kNumFaces) * a, threads,
               [&](std::int64_t job) {
                 const Face f = kAllFaces[static_cast<int>(job / a)];
                 const int j = static_cast<int>(job % a);
                 const FaceFrame fr = face_frame(f);
                 Plane& out = cube.face(f).y;
                 const double v = h - j - 0.5;
                 for (int i = 0; i < a; ++i) {
                   const double u = i + 0.5 - h;
                   const Direction3 d = detail::face_direction(fr, u, v, h);
                   const auto pos = detail::azimuth_sample_pos(d.x, d.z, W);
                   const double len =
                       std::sqrt(h * h + (u * u + v * v));
                   const double yc =
                       detail::elevation_sample_pos(d.y, len, H);
                   out.at(i, j) = quantize(
                       sample_lanczos_split(eq.frame.y, pos.xi, pos.xf, yc, 3,
                                            BorderMode::kWrapHorizontal),
                       bd);
                 }
               });

  const int ac = a / 2;
  const int Wc = W / 2, Hc = H / 2;
  parallel_for(static_cast<std::int64_t>(kNumFaces) * ac, threads,
               [&](std::int64_t job) {
                 const Face f = kAllFaces[static_cast<int>(job / ac)];
                 const int j = static_cast<int>(job % ac);
                 const FaceFrame fr = face_frame(f);
                 auto& planes = cube.face(f);
                 // Chroma sample (i, j) sits at luma coordinate
                 // (2i + 0.5, 2j + 0.5), i.e. face offsets are exact ints.
                 const double v = h - (2 * j + 1);
                 for (int i = 0; i < ac; ++i) {
                   const double u = (2 * i + 1) - h;
                   const Direction3 d = detail::face_direction(fr, u, v, h);
                   const auto pos = detail::azimuth_sample_pos(d.x, d.z, Wc);
                   const double len =
                       std::sqrt(h * h + (u * u + v * v));
                   const double yc =
                       detail::elevation_sample_pos(d.y, len, Hc);
                   planes.cb.at(i, j) = quantize(
                       sample_lanczos_split(eq.frame.cb, pos.xi, pos.xf, yc,
                                            2, BorderMode::kWrapHorizontal),
                       bd);
                   planes.cr.at(i, j) = quantize(
                       sample_lanczos_split(eq.frame.cr, pos.xi, pos.xf, yc,
                                            2, BorderMode::kWrapHorizontal),
                       bd);
                 }
               });
  return cube;
}

// Resamples a cube map back onto an equirectangular frame of width W.
// Each output pixel picks its source face by central projection (seam ties
// resolve by Face priority) and samples within that single face with clamp
// borders: Lanczos-3 for luma, Lanczos-2 for chroma.
inline EquirectFrame cubemap_to_equirect(const CubeMapFrame& cube, int W,
                                         int threads = 1) {
  check(W >= 8 && W % 4 == 0, ErrorKind::kDimensionMismatch,
        "cubemap_to_equirect: width must be a positive multiple of 4");
  const int H = W / 2;
  const int a = cube.a;
  const double h = 0.5 * a;
  EquirectFrame eq(W, cube.bitdepth);

  parallel_for(H, threads, [&](std::int64_t n) {
    for (int m = 0; m < W; ++m) {
      const Direction3 d =
          equirect_to_direction(m, static_cast<double>(n), W, H);
      const FaceHit hit = direction_to_face_coord(d, a);
      const auto& fp = cube.face(hit.coord.face);
      const double sx = hit.coord.u + h - 0.5;
      const double sy = h - 0.5 - hit.coord.v;
      eq.frame.y.at(m, static_cast<int>(n)) = quantize(
          sample_lanczos(fp.y, sx, sy, 3, BorderMode::kClamp),
          cube.bitdepth);
    }
  });

  const int Wc = W / 2, Hc = H / 2;
  parallel_for(Hc, threads, [&](std::int64_t n) {
    for (int m = 0; m < Wc; ++m) {
      const Direction3 d =
          equirect_to_direction(m, static_cast<double>(n), Wc, Hc);
      const FaceHit hit = direction_to_face_coord(d, a);
      const auto& fp = cube.face(hit.coord.face);
      // Chroma grid: sample i at face offset u = 2i + 1 - a/2.
      const double sx = (hit.coord.u + h - 1.0) * 0.5;
      const double sy = (h - 1.0 - hit.coord.v) * 0.5;
      eq.frame.cb.at(m, static_cast<int>(n)) = quantize(
          sample_lanczos(fp.cb, sx, sy, 2, BorderMode::kClamp),
          cube.bitdepth);
      eq.frame.cr.at(m, static_cast<int>(n)) = quantize(
          sample_lanczos(fp.cr, sx, sy, 2, BorderMode::kClamp),
          cube.bitdepth);
    }
  });
  return eq;
}

// Returns `p` rotated by a quarter-turn multiple. 90-degree turns require a
// square plane.
inline Plane rotate_plane(const Plane& p, TileRot rot) {
  if (rot == TileRot::kR0) return p;
  check(rot == TileRot::kR180 || p.width == p.height,
        ErrorKind::kDimensionMismatch,
        "rotate_plane: quarter turns need a square plane");
  Plane out(p.width, p.height, p.bitdepth);
  const int w = p.width, hgt = p.height;
  for (int y = 0; y < hgt; ++y) {
    for (int x = 0; x < w; ++x) {
      std::uint16_t s = 0;
      switch (rot) {
        case TileRot::kR90Cw:  s = p.at(y, hgt - 1 - x); break;
        case TileRot::kR90Ccw: s = p.at(w - 1 - y, x); break;
        case TileRot::kR180:   s = p.at(w - 1 - x, hgt - 1 - y); break;
        case TileRot::kR0:     s = p.at(x, y); break;
      }
      out.at(x, y) = s;
    }
  }
  return out;
}

inline TileRot inverse_rot(TileRot rot) {
  switch (rot) {
    case TileRot::kR90Cw:  return TileRot::kR90Ccw;
    case TileRot::kR90Ccw: return TileRot::kR90Cw;
    default:               return rot;
  }
}

namespace detail {

inline void blit(const Plane& src, Plane& dst, int dx, int dy) {
  for (int y = 0; y < src.height; ++y) {
    for (int x = 0; x < src.width; ++x) {
      dst.at(dx + x, dy + y) = src.at(x, y);
    }
  }
}

inline Plane crop(const Plane& src, int sx, int sy, int w, int h) {
  Plane out(w, h, src.bitdepth);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      out.at(x, y) = src.at(sx + x, sy + y);
    }
  }
  return out;
}

}  // namespace detail

// Packs the six faces into one frame per the layout table. Grid cells not
// covered by a face are mid-gray (2^(bitdepth-1)) in all three planes.
inline PlanarFrame pack_layout(const CubeMapFrame& cube, LayoutKind kind) {
  const LayoutSpec& spec = layout_table(kind);
  const int a = cube.a, ac = a / 2;
  const auto gray = static_cast<std::uint16_t>(1 << (cube.bitdepth - 1));
  PlanarFrame out(spec.cols * a, spec.rows * a, cube.bitdepth, gray, gray);
  for (Face f : kAllFaces) {
    const TilePlacement& t = spec.tile(f);
    const auto& planes = cube.face(f);
    detail::blit(rotate_plane(planes.y, t.rot), out.y, t.col * a, t.row * a);
    detail::blit(rotate_plane(planes.cb, t.rot), out.cb, t.col * ac,
                 t.row * ac);
    detail::blit(rotate_plane(planes.cr, t.rot), out.cr, t.col * ac,
                 t.row * ac);
  }
  return out;
}

// Inverse of pack_layout. The frame must be an exact grid of square tiles
// for the layout; gray filler content is ignored.
inline CubeMapFrame unpack_layout(const PlanarFrame& frame, LayoutKind kind) {
  frame.validate();
  const LayoutSpec& spec = layout_table(kind);
  check(frame.width() % spec.cols == 0, ErrorKind::kDimensionMismatch,
        "unpack_layout: width not divisible by layout columns");
  const int a = frame.width() / spec.cols;
  check(frame.height() == spec.rows * a, ErrorKind::kDimensionMismatch,
        "unpack_layout: frame is not a grid of square tiles");
  const int ac = a / 2;
  CubeMapFrame cube(a, frame.bitdepth());
  for (Face f : kAllFaces) {
    const TilePlacement& t = spec.tile(f);
    const TileRot inv = inverse_rot(t.rot);
    auto& planes = cube.face(f);
    planes.y = rotate_plane(
        detail::crop(frame.y, t.col * a, t.row * a, a, a), inv);
    planes.cb = rotate_plane(
        detail::crop(frame.cb, t.col * ac, t.row * ac, ac, ac), inv);
    planes.cr = rotate_plane(
        detail::crop(frame.cr, t.col * ac, t.row * ac, ac, ac), inv);
  }
  return cube;
}

// Row-major 3x3 matrix.
struct Mat3 {
  double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

  Direction3 apply(const Direction3& d) const {
    return {m[0][0] * d.x + m[0][1] * d.y + m[0][2] * d.z,
            m[1][0] * d.x + m[1][1] * d.y + m[1][2] * d.z,
            m[2][0] * d.x + m[2][1] * d.y + m[2][2] * d.z};
  }
};

// Verifies R is a proper rotation: R^T R = I within 1e-9 and det(R) = +1
// within 1e-9.
inline void validate_rotation(const Mat3& r) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += r.m[k][i] * r.m[k][j];
      const double want = i == j ? 1.0 : 0.0;
      check(std::fabs(s - want) <= 1e-9, ErrorKind::kInvalidRotation,
            "rotation matrix is not orthonormal");
    }
  }
  const double det =
      r.m[0][0] * (r.m[1][1] * r.m[2][2] - r.m[1][2] * r.m[2][1]) -
      r.m[0][1] * (r.m[1][0] * r.m[2][2] - r.m[1][2] * r.m[2][0]) +
      r.m[0][2] * (r.m[1][0] * r.m[2][1] - r.m[1][1] * r.m[2][0]);
  check(std::fabs(det - 1.0) <= 1e-9, ErrorKind::kInvalidRotation,
        "rotation matrix determinant is not +1");
}

// Rodrigues rotation about `axis` (need not be unit length) by `degrees`.
// A near-zero axis is rejected.
inline Mat3 rotation_from_axis_angle(double ax, double ay, double az,
                                     double degrees) {
  const double len = std::sqrt(ax * ax + ay * ay + az * az);
  check(len > 1e-12, ErrorKind::kInvalidRotation,
        "rotation axis is degenerate");
  const double x = ax / len, y = ay / len, z = az / len;
  const double t = degrees * detail::kPi / 180.0;
  const double c = std::cos(t), s = std::sin(t), oc = 1.0 - c;
  Mat3 r;
  r.m[0][0] = c + x * x * oc;
  r.m[0][1] = x * y * oc - z * s;
  r.m[0][2] = x * z * oc + y * s;
  r.m[1][0] = y * x * oc + z * s;
  r.m[1][1] = c + y * y * oc;
  r.m[1][2] = y * z * oc - x * s;
  r.m[2][0] = z * x * oc - y * s;
  r.m[2][1] = z * y * oc + x * s;
  r.m[2][2] = c + z * z * oc;
  return r;
}

enum class SynthPattern { kConstant, kSmoothHarmonic, kLatitudeChecker,
                          kCircleGrid };

inline std::optional<SynthPattern> pattern_from_name(std::string_view s) {
  if (s == "constant") return SynthPattern::kConstant;
  if (s == "smooth") return SynthPattern::kSmoothHarmonic;
  if (s == "checker") return SynthPattern::kLatitudeChecker;
  if (s == "circles") return SynthPattern::kCircleGrid;
  return std::nullopt;
}

namespace detail {

// Fixed unit vectors (exact dot products keep the patterns reproducible).
inline constexpr double kN1[3] = {0.36, 0.48, 0.80};
inline constexpr double kN2[3] = {0.80, 0.60, 0.00};
inline constexpr double kN3[3] = {-0.48, 0.64, 0.60};

inline double dotn(const Direction3& d, const double n[3]) {
  return d.x * n[0] + d.y * n[1] + d.z * n[2];
}

inline double circle_bump(double s) {
  const double q = 25.0 * s;
  return std::exp(-q * q);
}

}  // namespace detail

// Analytic sphere patterns; `d` must be unit length. Values are normalized
// to [0, 1] and scaled by the caller's bit depth.
inline double pattern_y(SynthPattern p, const Direction3& d) {
  switch (p) {
    case SynthPattern::kConstant:
      return 0.5;
    case SynthPattern::kSmoothHarmonic:
      return 0.5 + 0.22 * detail::dotn(d, detail::kN1) +
             0.13 * detail::dotn(d, detail::kN2) *
                 detail::dotn(d, detail::kN3);
    case SynthPattern::kLatitudeChecker: {
      const double theta =
          (d.x == 0.0 && d.z == 0.0) ? 0.0 : std::atan2(d.x, -d.z);
      const double phi = std::asin(std::clamp(d.y, -1.0, 1.0));
      const int kt = static_cast<int>(
          std::floor((theta + detail::kPi) / (detail::kPi / 8.0)));
      const int kp = static_cast<int>(
          std::floor((phi + 0.5 * detail::kPi) / (detail::kPi / 8.0)));
      return ((kt + kp) & 1) ? 0.75 : 0.25;
    }
    case SynthPattern::kCircleGrid: {
      double best = 0.0;
      const double s1 = detail::dotn(d, detail::kN1);
      const double s2 = detail::dotn(d, detail::kN2);
      const double s3 = detail::dotn(d, detail::kN3);
      best = std::max(best, detail::circle_bump(s1));
      best = std::max(best, detail::circle_bump(s2));
      best = std::max(best, detail::circle_bump(s3));
      return 0.12 + 0.78 * best;
    }
  }
  fail(ErrorKind::kInvalidArgument, "pattern_y: bad pattern");
}

inline double pattern_cb(SynthPattern p, const Direction3& d) {
  switch (p) {
    case SynthPattern::kConstant:
      return 0.5;
    case SynthPattern::kSmoothHarmonic:
    case SynthPattern::kCircleGrid:
      return 0.5 + 0.2 * detail::dotn(d, detail::kN2);
    case SynthPattern::kLatitudeChecker: {
      const double theta =
          (d.x == 0.0 && d.z == 0.0) ? 0.0 : std::atan2(d.x, -d.z);
      const int kt = static_cast<int>(
          std::floor((theta + detail::kPi) / (detail::kPi / 8.0)));
      return (kt & 1) ? 0.6 : 0.4;
    }
  }
  fail(ErrorKind::kInvalidArgument, "pattern_cb: bad pattern");
}

inline double pattern_cr(SynthPattern p, const Direction3& d) {
  switch (p) {
    case SynthPattern::kConstant:
      return 0.5;
    case SynthPattern::kSmoothHarmonic:
    case SynthPattern::kCircleGrid:
      return 0.5 - 0.2 * detail::dotn(d, detail::kN3);
    case SynthPattern::kLatitudeChecker: {
      const double phi = std::asin(std::clamp(d.y, -1.0, 1.0));
      const int kp = static_cast<int>(
          std::floor((phi + 0.5 * detail::kPi) / (detail::kPi / 8.0)));
      return (kp & 1) ? 0.6 : 0.4;
    }
  }
  fail(ErrorKind::kInvalidArgument, "pattern_cr: bad pattern");
}

// Renders an analytic test sphere into an equirect frame of width W
// (height W/2), viewing each pixel direction through rotation `rot`.
// Evaluation is pointwise (no resampling), so the output is an exact
// quantization of the pattern.
inline EquirectFrame gen_synthetic(int W, const Mat3& rot, SynthPattern pat,
                                   int bitdepth, int threads = 1) {
  check(W >= 8 && W % 4 == 0, ErrorKind::kDimensionMismatch,
        "gen_synthetic: width must be a multiple of 4 and >= 8");
  validate_rotation(rot);
  EquirectFrame eq(W, bitdepth);
  const int H = W / 2;
  const double maxv = static_cast<double>((1 << bitdepth) - 1);

  parallel_for(H, threads, [&](std::int64_t n) {
    for (int m = 0; m < W; ++m) {
      const Direction3 d = rot.apply(
          equirect_to_direction(m, static_cast<double>(n), W, H));
      eq.frame.y.at(m, static_cast<int>(n)) =
          quantize(pattern_y(pat, d) * maxv, bitdepth);
    }
  });
  parallel_for(H / 2, threads, [&](std::int64_t n) {
    for (int m = 0; m < W / 2; ++m) {
      const Direction3 d = rot.apply(
          equirect_to_direction(m, static_cast<double>(n), W / 2, H / 2));
      eq.frame.cb.at(m, static_cast<int>(n)) =
          quantize(pattern_cb(pat, d) * maxv, bitdepth);
      eq.frame.cr.at(m, static_cast<int>(n)) =
          quantize(pattern_cr(pat, d) * maxv, bitdepth);
    }
  });
  return eq;
}

}  // namespace cubepad

#endif  // CUBEPAD_PROJECTION_HPP
