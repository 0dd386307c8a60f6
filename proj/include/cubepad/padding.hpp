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
// Face padding.
//
// extend_face grows a face image by S samples on every side. Each extension
// sample lies on the face's projection plane beyond the face square; its
// value is resampled from the single adjacent source face at the position
// where the viewing ray through the extension sample crosses that face
// (see extension_source in geometry.hpp). Content is therefore continuous
// across the face boundary, unlike tile-border replication.
//
// Exactness: on the pixel grid every source position is a rational number
// with denominator 2 * w2, where w2 is the dominant offset in half-sample
// units. The bilinear fetch runs entirely in 64-bit integers and performs
// one final double division, so extend_face commutes bit-exactly with the
// 24 rotational cube symmetries (which act on the integer inputs by
// relabeling). Source positions stay strictly inside the open half-sample
// border of the source face; lateral positions inside that border clamp to
// the face's outermost sample line (constant extrapolation over less than
// half a sample step).
//
// Diagonal seams (|u| = |v|) belong to two extension strips at once; such
// samples get the average of their two non-seam neighbors perpendicular to
// the diagonal, computed before quantization. At the outermost corner
// sample, where those neighbors do not exist, the two inward 4-neighbors
// substitute.
//
// complement_neighbors builds the classical unfolded-neighbor canvas for
// comparison: the four adjacent faces are rotated as rigid tiles into the
// face plane (lossless quarter turns, derived from the cube topology), which
// keeps content only approximately continuous across the shared edges.
// The canvas covers luma only.
//

#ifndef CUBEPAD_PADDING_HPP
#define CUBEPAD_PADDING_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "cubepad/common.hpp"
#include "cubepad/geometry.hpp"
#include "cubepad/parallel.hpp"
#include "cubepad/projection.hpp"
#include "cubepad/resample.hpp"

namespace cubepad {

// A face image extended by S luma samples on each side. Chroma planes are
// extended by S/2 chroma samples, matching 4:2:0 subsampling. The central
// (a x a) region is a bit-identical copy of the source face.
struct ExtendedFace {
  Face face = Face::kFront;
  int a = 0;
  int S = 0;
  int bitdepth = 8;
  Plane y, cb, cr;

  // Luma access in face-local coordinates, fx and fy in [-S, a + S).
  std::uint16_t luma(int fx, int fy) const { return y.at(fx + S, fy + S); }
};

namespace detail {

inline std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d) != 0 && ((n < 0) != (d < 0))) --q;
  return q;
}

// Extends one plane. N is the plane's face size, m the margin, both in this
// plane's own sample units (chroma geometry is the luma geometry scaled by
// one half, so the same integer routine serves both).
inline Plane extend_plane(const std::array<const Plane*, kNumFaces>& planes,
                          Face face, int N, int m, int bd) {
  const int e = N + 2 * m;
  Plane out(e, e, bd);
  std::vector<double> vals(static_cast<std::size_t>(e) * e, 0.0);
  std::vector<std::pair<int, int>> seams;
  const Plane& center = *planes[static_cast<int>(face)];
  const FaceFrame fr = face_frame(face);
  const std::int64_t Nl = N;

  for (int py = 0; py < e; ++py) {
    for (int px = 0; px < e; ++px) {
      // Face offsets of the sample center in half-sample units.
      const std::int64_t u2 = 2 * px + 1 - e;
      const std::int64_t v2 = e - (2 * py + 1);
      const std::int64_t au = std::abs(u2), av = std::abs(v2);
      double val;
      if (au < Nl && av < Nl) {
        val = center.at(px - m, py - m);
      } else if (au == av) {
        seams.emplace_back(px, py);
        continue;
      } else {
        const bool cross_u = au > av;
        const std::int64_t w2 = cross_u ? au : av;
        const std::int64_t lat2 = cross_u ? v2 : u2;
        const Vec3i toward = cross_u ? (u2 > 0 ? fr.u_axis : -fr.u_axis)
                                     : (v2 > 0 ? fr.v_axis : -fr.v_axis);
        const Vec3i lat_axis = cross_u ? fr.v_axis : fr.u_axis;
        const Face nbr = face_from_outward(toward);
        const FaceFrame nf = face_frame(nbr);
        // Source offset on the neighbor, as exact rationals scaled by w2:
        // depth term N^2 / (2 w2) plus lateral term N * lat2 / (2 w2),
        // distributed onto the neighbor's axes (the dot products are +-1/0).
        const std::int64_t num_su =
            Nl * Nl * dot(fr.outward, nf.u_axis) +
            Nl * lat2 * dot(lat_axis, nf.u_axis);
        const std::int64_t num_sv =
            Nl * Nl * dot(fr.outward, nf.v_axis) +
            Nl * lat2 * dot(lat_axis, nf.v_axis);
        const std::int64_t den = 2 * w2;
        // Array coordinates of the source sample position (x = num / den).
        const std::int64_t num_ax = num_su + (Nl - 1) * w2;
        const std::int64_t num_ay = (Nl - 1) * w2 - num_sv;
        // The position must stay inside the face's open half-sample border.
        check(2 * num_ax + den > 0 &&
                  2 * (num_ax - (Nl - 1) * den) < den &&
                  2 * num_ay + den > 0 &&
                  2 * (num_ay - (Nl - 1) * den) < den,
              ErrorKind::kInternal,
              "extend_plane: source position left the source face");
        const std::int64_t ix = floor_div(num_ax, den);
        const std::int64_t iy = floor_div(num_ay, den);
        const std::int64_t rx = num_ax - ix * den;
        const std::int64_t ry = num_ay - iy * den;
        const Plane& src = *planes[static_cast<int>(nbr)];
        const auto cx0 = static_cast<int>(std::clamp<std::int64_t>(ix, 0, N - 1));
        const auto cx1 =
            static_cast<int>(std::clamp<std::int64_t>(ix + 1, 0, N - 1));
        const auto cy0 = static_cast<int>(std::clamp<std::int64_t>(iy, 0, N - 1));
        const auto cy1 =
            static_cast<int>(std::clamp<std::int64_t>(iy + 1, 0, N - 1));
        const std::int64_t top =
            (den - rx) * src.at(cx0, cy0) + rx * src.at(cx1, cy0);
        const std::int64_t bot =
            (den - rx) * src.at(cx0, cy1) + rx * src.at(cx1, cy1);
        const std::int64_t blended = (den - ry) * top + ry * bot;
        val = static_cast<double>(blended) /
              (static_cast<double>(den) * static_cast<double>(den));
      }
      vals[static_cast<std::size_t>(py) * e + px] = val;
      out.at(px, py) = quantize(val, bd);
    }
  }

  for (const auto& [px, py] : seams) {
    const std::int64_t u2 = 2 * px + 1 - e;
    const std::int64_t v2 = e - (2 * py + 1);
    const int su = u2 > 0 ? 1 : -1;
    const int sv = v2 > 0 ? 1 : -1;
    // Neighbors perpendicular to the corner diagonal, one per strip.
    int axp = px + su, ayp = py + sv;
    int bxp = px - su, byp = py - sv;
    if (axp < 0 || axp >= e || ayp < 0 || ayp >= e || bxp < 0 || bxp >= e ||
        byp < 0 || byp >= e) {
      axp = px - su;
      ayp = py;
      bxp = px;
      byp = py + sv;
    }
    const double val =
        0.5 * (vals[static_cast<std::size_t>(ayp) * e + axp] +
               vals[static_cast<std::size_t>(byp) * e + bxp]);
    vals[static_cast<std::size_t>(py) * e + px] = val;
    out.at(px, py) = quantize(val, bd);
  }
  return out;
}

inline std::array<const Plane*, kNumFaces> plane_set(
    const CubeMapFrame& cube, int which) {
  std::array<const Plane*, kNumFaces> ps{};
  for (int i = 0; i < kNumFaces; ++i) {
    const auto& fp = cube.faces[i];
    ps[i] = which == 0 ? &fp.y : (which == 1 ? &fp.cb : &fp.cr);
  }
  return ps;
}

}  // namespace detail

// Extends one face of the cube map by S samples per side (S even, > 0).
inline ExtendedFace extend_face(const CubeMapFrame& cube, Face face, int S) {
  const CubeGeom geom{cube.a, S};
  geom.validate();
  ExtendedFace ef;
  ef.face = face;
  ef.a = cube.a;
  ef.S = S;
  ef.bitdepth = cube.bitdepth;
  ef.y = detail::extend_plane(detail::plane_set(cube, 0), face, cube.a, S,
                              cube.bitdepth);
  ef.cb = detail::extend_plane(detail::plane_set(cube, 1), face, cube.a / 2,
                               S / 2, cube.bitdepth);
  ef.cr = detail::extend_plane(detail::plane_set(cube, 2), face, cube.a / 2,
                               S / 2, cube.bitdepth);
  return ef;
}

// Extends all six faces; the result is independent of `threads`.
inline std::array<ExtendedFace, kNumFaces> extend_all(
    const CubeMapFrame& cube, int S, int threads = 1) {
  std::array<ExtendedFace, kNumFaces> out;
  parallel_for(kNumFaces, threads, [&](std::int64_t i) {
    out[i] = extend_face(cube, kAllFaces[i], S);
  });
  return out;
}

// Unfolded-neighbor canvas: the face at the center of a 3a x 3a luma plane,
// its four neighbors rotated rigidly into the face plane, corners mid-gray.
struct ComplementedFace {
  Face face = Face::kFront;
  int a = 0;
  int bitdepth = 8;
  Plane canvas;

  struct SidePlacement {
    Face neighbor = Face::kFront;
    TileRot rot = TileRot::kR0;
  };
  // Indexed by FaceSide.
  std::array<SidePlacement, 4> sides{};
};

namespace detail {

// 3-D position (half-sample units) of source pixel (i, j) of face `f` with
// face size N.
inline std::array<std::int64_t, 3> pixel_pos3(Face f, int N, int i, int j) {
  const FaceFrame fr = face_frame(f);
  const std::int64_t un = 2 * i + 1 - N;
  const std::int64_t vn = N - 2 * j - 1;
  return {N * fr.outward.x + un * fr.u_axis.x + vn * fr.v_axis.x,
          N * fr.outward.y + un * fr.u_axis.y + vn * fr.v_axis.y,
          N * fr.outward.z + un * fr.u_axis.z + vn * fr.v_axis.z};
}

// Source pixel shown at position (x, y) of a tile rotated by `rot`.
inline std::pair<int, int> rotated_source_index(TileRot rot, int N, int x,
                                                int y) {
  switch (rot) {
    case TileRot::kR0:     return {x, y};
    case TileRot::kR90Cw:  return {y, N - 1 - x};
    case TileRot::kR90Ccw: return {N - 1 - y, x};
    case TileRot::kR180:   return {N - 1 - x, N - 1 - y};
  }
  fail(ErrorKind::kInvalidArgument, "rotated_source_index: bad rotation");
}

// Expected 3-D position (half-sample units) of tile-local pixel (p, q) when
// face `face`'s neighbor across `side` is unfolded rigidly into the face
// plane: depth d beyond the shared edge corresponds to depth d into the
// neighbor.
inline std::array<std::int64_t, 3> unfolded_pos3(Face face, FaceSide side,
                                                 int N, int p, int q) {
  const FaceFrame fr = face_frame(face);
  const Vec3i g = side_outward(fr, side);
  std::int64_t depth2 = 0, lat2 = 0;
  Vec3i lat_axis{};
  switch (side) {
    case FaceSide::kTop:
      depth2 = 2 * (N - q) - 1;
      lat2 = 2 * p + 1 - N;
      lat_axis = fr.u_axis;
      break;
    case FaceSide::kBottom:
      depth2 = 2 * q + 1;
      lat2 = 2 * p + 1 - N;
      lat_axis = fr.u_axis;
      break;
    case FaceSide::kLeft:
      depth2 = 2 * (N - p) - 1;
      lat2 = N - 2 * q - 1;
      lat_axis = fr.v_axis;
      break;
    case FaceSide::kRight:
      depth2 = 2 * p + 1;
      lat2 = N - 2 * q - 1;
      lat_axis = fr.v_axis;
      break;
  }
  const std::int64_t fc = N - depth2;
  return {N * g.x + fc * fr.outward.x + lat2 * lat_axis.x,
          N * g.y + fc * fr.outward.y + lat2 * lat_axis.y,
          N * g.z + fc * fr.outward.z + lat2 * lat_axis.z};
}

// The unique quarter turn that makes the neighbor tile continue the face
// across `side` when unfolded. Derived by matching exact pixel positions,
// not from a hand-built table.
inline TileRot derive_side_rotation(Face face, FaceSide side, int N) {
  const Face nbr = neighbor_across(face, side);
  constexpr std::array<TileRot, 4> kRots = {TileRot::kR0, TileRot::kR90Cw,
                                            TileRot::kR180, TileRot::kR90Ccw};
  constexpr int kProbes[2][2] = {{0, 1}, {2, 0}};
  TileRot found = TileRot::kR0;
  int matches = 0;
  for (TileRot r : kRots) {
    bool ok = true;
    for (const auto& pr : kProbes) {
      const auto [si, sj] = rotated_source_index(r, N, pr[0], pr[1]);
      if (pixel_pos3(nbr, N, si, sj) !=
          unfolded_pos3(face, side, N, pr[0], pr[1])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      found = r;
      ++matches;
    }
  }
  check(matches == 1, ErrorKind::kInternal,
        "derive_side_rotation: ambiguous unfolding");
  return found;
}

}  // namespace detail

// Builds the neighbor-complemented luma canvas for one face.
inline ComplementedFace complement_neighbors(const CubeMapFrame& cube,
                                             Face face) {
  const int a = cube.a;
  ComplementedFace cf;
  cf.face = face;
  cf.a = a;
  cf.bitdepth = cube.bitdepth;
  const auto gray = static_cast<std::uint16_t>(1 << (cube.bitdepth - 1));
  cf.canvas = Plane(3 * a, 3 * a, cube.bitdepth, gray);
  detail::blit(cube.face(face).y, cf.canvas, a, a);

  // Canvas tile origins per side.
  const auto origin = [a](FaceSide s) -> std::pair<int, int> {
    switch (s) {
      case FaceSide::kLeft:   return {0, a};
      case FaceSide::kRight:  return {2 * a, a};
      case FaceSide::kTop:    return {a, 0};
      case FaceSide::kBottom: return {a, 2 * a};
    }
    return {0, 0};
  };

  for (FaceSide s : kAllSides) {
    const Face nbr = neighbor_across(face, s);
    const TileRot rot = detail::derive_side_rotation(face, s, a);
    cf.sides[static_cast<int>(s)] = {nbr, rot};
    const auto [ox, oy] = origin(s);
    detail::blit(rotate_plane(cube.face(nbr).y, rot), cf.canvas, ox, oy);
  }
  return cf;
}

}  // namespace cubepad

#endif  // CUBEPAD_PADDING_HPP
