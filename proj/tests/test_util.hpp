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
// Shared test helpers. The geometric reference implementations here are
// kept deliberately independent of the library: they carry their own copy
// of the face-axis convention and compute through 3-D ray casting rather
// than the library's 2-D similar-triangle route, so agreement between the
// two is a meaningful check rather than a tautology.
//

#ifndef CUBEPAD_TESTS_TEST_UTIL_HPP
#define CUBEPAD_TESTS_TEST_UTIL_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "cubepad/geometry.hpp"
#include "cubepad/padding.hpp"
#include "cubepad/projection.hpp"
#include "cubepad/resample.hpp"

namespace testutil {

// ---------------------------------------------------------------------------
// Independent face-axis tables (documented convention, retyped by hand).
// Index order: front, rear, left, right, top, bottom.
// ---------------------------------------------------------------------------
inline constexpr int kOut[6][3] = {{0, 0, -1}, {0, 0, 1},  {-1, 0, 0},
                                   {1, 0, 0},  {0, 1, 0},  {0, -1, 0}};
inline constexpr int kU[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 0, -1},
                                 {0, 0, 1}, {1, 0, 0},  {1, 0, 0}};
inline constexpr int kV[6][3] = {{0, 1, 0}, {0, 1, 0}, {0, 1, 0},
                                 {0, 1, 0}, {0, 0, 1}, {0, 0, -1}};

struct OracleExtension {
  int face = -1;
  double su = 0.0;
  double sv = 0.0;
  bool seam = false;
  bool inside = false;
};

// 3-D ray-cast reference for the extension mapping: places the query point
// on the face's projection plane, then centrally projects it back onto the
// cube and reads off the face it lands on. Ties pick the lowest face index.
inline OracleExtension oracle_extension(int face, double x, double y, int a,
                                        int S) {
  const double half = 0.5 * a;
  const double c = S + half;
  const double u = x - c;
  const double v = c - y;
  OracleExtension r;
  if (std::fabs(u) < half && std::fabs(v) < half) {
    r.inside = true;
    return r;
  }
  double p[3];
  for (int k = 0; k < 3; ++k) {
    p[k] = half * kOut[face][k] + u * kU[face][k] + v * kV[face][k];
  }
  const double m =
      std::max(std::fabs(p[0]), std::max(std::fabs(p[1]), std::fabs(p[2])));
  int hit = -1, cnt = 0;
  for (int f = 0; f < 6; ++f) {
    const double dp =
        p[0] * kOut[f][0] + p[1] * kOut[f][1] + p[2] * kOut[f][2];
    if (dp == m) {
      if (hit < 0) hit = f;
      ++cnt;
    }
  }
  const double t = half / m;
  r.face = hit;
  r.su = t * (p[0] * kU[hit][0] + p[1] * kU[hit][1] + p[2] * kU[hit][2]);
  r.sv = t * (p[0] * kV[hit][0] + p[1] * kV[hit][1] + p[2] * kV[hit][2]);
  r.seam = cnt > 1;
  return r;
}

// ---------------------------------------------------------------------------
// Cube rotation group (integer signed-permutation matrices).
// ---------------------------------------------------------------------------
struct Mat3i {
  int m[3][3];

  friend bool operator==(const Mat3i& a, const Mat3i& b) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (a.m[i][j] != b.m[i][j]) return false;
      }
    }
    return true;
  }
};

inline constexpr Mat3i kIdentity3 = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
inline constexpr Mat3i kRotY90 = {{{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}}};
inline constexpr Mat3i kRotX90 = {{{1, 0, 0}, {0, 0, -1}, {0, 1, 0}}};

inline Mat3i mul(const Mat3i& a, const Mat3i& b) {
  Mat3i r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int s = 0;
      for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  }
  return r;
}

inline Mat3i transpose(const Mat3i& a) {
  Mat3i r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[j][i];
  }
  return r;
}

inline std::array<std::int64_t, 3> apply(const Mat3i& a,
                                         const std::array<std::int64_t, 3>& v) {
  return {a.m[0][0] * v[0] + a.m[0][1] * v[1] + a.m[0][2] * v[2],
          a.m[1][0] * v[0] + a.m[1][1] * v[1] + a.m[1][2] * v[2],
          a.m[2][0] * v[0] + a.m[2][1] * v[1] + a.m[2][2] * v[2]};
}

inline cubepad::Vec3i apply(const Mat3i& a, const cubepad::Vec3i& v) {
  return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
          a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
          a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}

// All 24 rotational cube symmetries, generated by closure from two quarter
// turns.
inline const std::vector<Mat3i>& cube_rotations() {
  static const std::vector<Mat3i> group = [] {
    std::vector<Mat3i> g = {kIdentity3};
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (const Mat3i& gen : {kRotY90, kRotX90}) {
        const Mat3i next = mul(gen, g[i]);
        bool known = false;
        for (const Mat3i& have : g) {
          if (have == next) {
            known = true;
            break;
          }
        }
        if (!known) g.push_back(next);
      }
    }
    return g;
  }();
  return group;
}

// ---------------------------------------------------------------------------
// Applying a cube symmetry to frames (test-side, index arithmetic only).
// ---------------------------------------------------------------------------

// Source (face, px, py) shown at (dst_face, dx, dy) of the transformed
// cube, for a square per-face grid of size N with margin `m` on each side
// (m = 0 for plain faces). M maps original directions to transformed ones.
struct PixelRef {
  cubepad::Face face;
  int px;
  int py;
};

inline PixelRef source_pixel(const Mat3i& minv, cubepad::Face dst_face,
                             int dx, int dy, int N, int m) {
  using cubepad::face_frame;
  const int e = N + 2 * m;
  const cubepad::FaceFrame df = face_frame(dst_face);
  const std::int64_t u2 = 2 * dx + 1 - e;
  const std::int64_t v2 = e - (2 * dy + 1);
  const std::array<std::int64_t, 3> pos = {
      N * df.outward.x + u2 * df.u_axis.x + v2 * df.v_axis.x,
      N * df.outward.y + u2 * df.u_axis.y + v2 * df.v_axis.y,
      N * df.outward.z + u2 * df.u_axis.z + v2 * df.v_axis.z};
  const std::array<std::int64_t, 3> p = apply(minv, pos);
  const cubepad::Face sf =
      cubepad::face_from_outward(apply(minv, df.outward));
  const cubepad::FaceFrame ff = face_frame(sf);
  const std::int64_t su =
      p[0] * ff.u_axis.x + p[1] * ff.u_axis.y + p[2] * ff.u_axis.z;
  const std::int64_t sv =
      p[0] * ff.v_axis.x + p[1] * ff.v_axis.y + p[2] * ff.v_axis.z;
  return {sf, static_cast<int>((su + e - 1) / 2),
          static_cast<int>((e - 1 - sv) / 2)};
}

// Cube-map frame viewed through rotation M (content at direction d of the
// result is the original content at M^-1 d).
inline cubepad::CubeMapFrame rotate_cube(const cubepad::CubeMapFrame& cube,
                                         const Mat3i& M) {
  const Mat3i minv = transpose(M);
  cubepad::CubeMapFrame out(cube.a, cube.bitdepth);
  for (cubepad::Face f : cubepad::kAllFaces) {
    auto& dst = out.face(f);
    for (int j = 0; j < cube.a; ++j) {
      for (int i = 0; i < cube.a; ++i) {
        const PixelRef s = source_pixel(minv, f, i, j, cube.a, 0);
        dst.y.at(i, j) = cube.face(s.face).y.at(s.px, s.py);
      }
    }
    const int ac = cube.a / 2;
    for (int j = 0; j < ac; ++j) {
      for (int i = 0; i < ac; ++i) {
        const PixelRef s = source_pixel(minv, f, i, j, ac, 0);
        dst.cb.at(i, j) = cube.face(s.face).cb.at(s.px, s.py);
        dst.cr.at(i, j) = cube.face(s.face).cr.at(s.px, s.py);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Analytic sphere content.
// ---------------------------------------------------------------------------
inline cubepad::Direction3 normalize(const cubepad::Direction3& d) {
  const double len = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
  return {d.x / len, d.y / len, d.z / len};
}

// Test-owned unit normals (distinct from the library's pattern constants).
inline constexpr double kTn1[3] = {0.48, 0.60, 0.64};
inline constexpr double kTn2[3] = {0.60, 0.00, 0.80};
inline constexpr double kTn3[3] = {0.00, 0.80, -0.60};

inline double tdot(const cubepad::Direction3& d, const double n[3]) {
  return d.x * n[0] + d.y * n[1] + d.z * n[2];
}

// Slowly varying sphere function; on a 256-sample face at 10 bits the
// sample-to-sample luma step stays below one code value.
inline double smooth_slow_y(const cubepad::Direction3& d) {
  return 0.5 + 0.09 * tdot(d, kTn1) + 0.05 * tdot(d, kTn2) * tdot(d, kTn3);
}

inline double smooth_slow_cb(const cubepad::Direction3& d) {
  return 0.5 + 0.08 * tdot(d, kTn2);
}

inline double smooth_slow_cr(const cubepad::Direction3& d) {
  return 0.5 - 0.08 * tdot(d, kTn3);
}

// Renders analytic sphere content straight onto cube faces (no equirect
// intermediate, no resampling): each sample is the quantized pattern value
// in its own viewing direction.
template <typename FnY, typename FnCb, typename FnCr>
cubepad::CubeMapFrame render_cube_analytic(int a, int bd, FnY fy, FnCb fcb,
                                           FnCr fcr) {
  cubepad::CubeMapFrame cube(a, bd);
  const double maxv = static_cast<double>((1 << bd) - 1);
  const double h = 0.5 * a;
  for (cubepad::Face f : cubepad::kAllFaces) {
    auto& planes = cube.face(f);
    for (int j = 0; j < a; ++j) {
      for (int i = 0; i < a; ++i) {
        const cubepad::Direction3 d = normalize(cubepad::face_point_to_direction(
            {f, i + 0.5 - h, h - j - 0.5}, a));
        planes.y.at(i, j) = cubepad::quantize(fy(d) * maxv, bd);
      }
    }
    const int ac = a / 2;
    for (int j = 0; j < ac; ++j) {
      for (int i = 0; i < ac; ++i) {
        const cubepad::Direction3 d = normalize(cubepad::face_point_to_direction(
            {f, static_cast<double>(2 * i + 1) - h,
             h - static_cast<double>(2 * j + 1)},
            a));
        planes.cb.at(i, j) = cubepad::quantize(fcb(d) * maxv, bd);
        planes.cr.at(i, j) = cubepad::quantize(fcr(d) * maxv, bd);
      }
    }
  }
  return cube;
}

inline cubepad::CubeMapFrame render_smooth_cube(int a, int bd) {
  return render_cube_analytic(a, bd, smooth_slow_y, smooth_slow_cb,
                              smooth_slow_cr);
}

// Random cube content (independent uniform samples, fixed seed).
inline cubepad::CubeMapFrame random_cube(int a, int bd, std::uint32_t seed) {
  cubepad::CubeMapFrame cube(a, bd);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, (1 << bd) - 1);
  for (auto& fp : cube.faces) {
    for (auto* p : {&fp.y, &fp.cb, &fp.cr}) {
      for (auto& s : p->samples) s = static_cast<std::uint16_t>(dist(rng));
    }
  }
  return cube;
}

// ---------------------------------------------------------------------------
// Misc.
// ---------------------------------------------------------------------------
inline std::string make_temp_dir(const std::string& tag) {
  namespace fs = std::filesystem;
  const fs::path base = fs::temp_directory_path();
  std::mt19937_64 rng(std::random_device{}());
  for (int tries = 0; tries < 64; ++tries) {
    fs::path p = base / (tag + "-" + std::to_string(rng()));
    std::error_code ec;
    if (fs::create_directory(p, ec)) return p.string();
  }
  throw std::runtime_error("make_temp_dir failed");
}

}  // namespace testutil

#endif  // CUBEPAD_TESTS_TEST_UTIL_HPP
