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
// Cube geometry: face frames, direction <-> face-coordinate transforms, and
// the co-projection-plane extension mapping.
//
// Conventions (fixed for the whole library):
//  * Right-handed world axes. Face outward normals:
//      Front = -Z, Rear = +Z, Left = -X, Right = +X, Top = +Y, Bottom = -Y.
//  * Each face carries in-plane axes (U, V). U is the image's +x direction,
//    V the image's +y-up direction, chosen so U x V = -outward (looking at
//    the face from the cube center, U goes right and V goes up).
//  * Face coordinates (u, v) are measured from the face center in sample
//    units; the face spans [-a/2, a/2] in both. The 3-D position of (u, v)
//    on face F is (a/2) * outward + u * U + v * V.
//  * Pixel (i, j) of an a x a face image has its center at continuous
//    coordinates (i + 0.5, j + 0.5) measured from the image's top-left
//    corner, i.e. at face coordinates u = i + 0.5 - a/2, v = a/2 - j - 0.5.
//    The same corner-origin rule applies to the (a+2S) x (a+2S) extended
//    image, whose face-center offset is S + a/2.
//

#ifndef CUBEPAD_GEOMETRY_HPP
#define CUBEPAD_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include "cubepad/common.hpp"

namespace cubepad {

// Order doubles as the deterministic priority for resolving seam/edge ties:
// the lowest enumerator among the candidates wins.
enum class Face : int { kFront = 0, kRear, kLeft, kRight, kTop, kBottom };

inline constexpr int kNumFaces = 6;

inline constexpr std::array<Face, kNumFaces> kAllFaces = {
    Face::kFront, Face::kRear, Face::kLeft, Face::kRight, Face::kTop,
    Face::kBottom};

inline const char* face_name(Face f) {
  switch (f) {
    case Face::kFront:  return "front";
    case Face::kRear:   return "rear";
    case Face::kLeft:   return "left";
    case Face::kRight:  return "right";
    case Face::kTop:    return "top";
    case Face::kBottom: return "bottom";
  }
  fail(ErrorKind::kInvalidArgument, "face_name: bad Face value");
}

inline std::optional<Face> face_from_name(std::string_view name) {
  for (Face f : kAllFaces) {
    if (name == face_name(f)) return f;
  }
  return std::nullopt;
}

// Integer 3-vector. Face frames are axis-aligned, so all frame math stays in
// exact integer arithmetic until a continuous coordinate enters.
struct Vec3i {
  int x = 0, y = 0, z = 0;
};

inline constexpr Vec3i operator-(Vec3i a) { return {-a.x, -a.y, -a.z}; }
inline constexpr bool operator==(Vec3i a, Vec3i b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}
inline constexpr int dot(Vec3i a, Vec3i b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

struct Direction3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline constexpr double dot(const Direction3& a, Vec3i b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

// Orthonormal face basis: outward normal plus in-plane image axes.
struct FaceFrame {
  Vec3i outward;
  Vec3i u_axis;
  Vec3i v_axis;
};

inline constexpr FaceFrame face_frame(Face f) {
  // Invariant: u_axis x v_axis == -outward for every face.
  switch (f) {
    case Face::kFront:  return {{0, 0, -1}, {+1, 0, 0}, {0, +1, 0}};
    case Face::kRear:   return {{0, 0, +1}, {-1, 0, 0}, {0, +1, 0}};
    case Face::kLeft:   return {{-1, 0, 0}, {0, 0, -1}, {0, +1, 0}};
    case Face::kRight:  return {{+1, 0, 0}, {0, 0, +1}, {0, +1, 0}};
    case Face::kTop:    return {{0, +1, 0}, {+1, 0, 0}, {0, 0, +1}};
    case Face::kBottom: return {{0, -1, 0}, {+1, 0, 0}, {0, 0, -1}};
  }
  return {};
}

inline Face face_from_outward(Vec3i n) {
  for (Face f : kAllFaces) {
    if (face_frame(f).outward == n) return f;
  }
  fail(ErrorKind::kInvalidArgument, "face_from_outward: not a face normal");
}

// Sides of a face image (image orientation, not world orientation).
enum class FaceSide : int { kLeft = 0, kRight, kTop, kBottom };

inline constexpr std::array<FaceSide, 4> kAllSides = {
    FaceSide::kLeft, FaceSide::kRight, FaceSide::kTop, FaceSide::kBottom};

// Outward in-plane direction pointing across the given image side.
inline constexpr Vec3i side_outward(const FaceFrame& fr, FaceSide s) {
  switch (s) {
    case FaceSide::kLeft:   return -fr.u_axis;
    case FaceSide::kRight:  return fr.u_axis;
    case FaceSide::kTop:    return fr.v_axis;
    case FaceSide::kBottom: return -fr.v_axis;
  }
  return {};
}

// Face adjacent to `f` across image side `s`.
inline Face neighbor_across(Face f, FaceSide s) {
  return face_from_outward(side_outward(face_frame(f), s));
}

// Cube parameters: face size `a` (even, >= 4) and extension margin `S`
// (even, > 0). `S` bounds how far the extended image reaches past the face;
// the extension mapping itself is defined for any point outside the face.
struct CubeGeom {
  int a = 0;
  int S = 0;

  void validate() const {
    check(a >= 4 && a % 2 == 0, ErrorKind::kGeometryMismatch,
          "face size must be even and >= 4");
    check(S > 0 && S % 2 == 0, ErrorKind::kBadExtension,
          "extension margin must be even and > 0");
  }
};

// Point on (or beyond) a face plane in face-centered sample units.
struct FaceCoord {
  Face face = Face::kFront;
  double u = 0.0;
  double v = 0.0;
};

// 3-D position of a face-plane point for a cube of face size `a`. The result
// is a position on the plane of the face, not normalized.
inline Direction3 face_point_to_direction(const FaceCoord& c, int a) {
  const FaceFrame fr = face_frame(c.face);
  const double h = 0.5 * a;
  return {h * fr.outward.x + c.u * fr.u_axis.x + c.v * fr.v_axis.x,
          h * fr.outward.y + c.u * fr.u_axis.y + c.v * fr.v_axis.y,
          h * fr.outward.z + c.u * fr.u_axis.z + c.v * fr.v_axis.z};
}

struct FaceHit {
  FaceCoord coord;
  // True when the direction hits a cube edge/corner exactly, i.e. the
  // dominant-axis choice was a tie (resolved by Face enum priority).
  bool seam = false;
};

// Central projection of direction `d` (from the cube center, any nonzero
// length) onto the cube of face size `a`. The dominant axis selects the
// face; exact ties are seams and resolve to the lowest Face enumerator.
inline FaceHit direction_to_face_coord(const Direction3& d, int a) {
  const double ax = std::fabs(d.x), ay = std::fabs(d.y), az = std::fabs(d.z);
  const double m = std::max(ax, std::max(ay, az));
  check(m > 0.0, ErrorKind::kInvalidArgument,
        "direction_to_face_coord: zero direction");

  int hits = 0;
  Face face = Face::kFront;
  for (Face f : kAllFaces) {
    if (dot(d, face_frame(f).outward) == m) {
      if (hits == 0) face = f;
      ++hits;
    }
  }
  check(hits > 0, ErrorKind::kInternal,
        "direction_to_face_coord: no positive dominant axis");

  const FaceFrame fr = face_frame(face);
  const double t = 0.5 * a / m;
  return {{face, t * dot(d, fr.u_axis), t * dot(d, fr.v_axis)}, hits > 1};
}

// Where an extension-region point samples from: a position on the single
// adjacent source face, in that face's own (u, v) coordinates.
struct ExtensionSource {
  Face source = Face::kFront;
  double su = 0.0;
  double sv = 0.0;
  // True on the diagonal between two extension strips (|u| == |v| > a/2),
  // where two source faces are equally valid; `source` is then the
  // higher-priority candidate. Callers that blend seams handle this flag.
  bool seam = false;
};

// Maps a point of face `face`'s extended projection plane to its source.
//
// (x, y) are continuous corner-origin coordinates of the (a+2S)-sized
// extended image, so the face center sits at (S + a/2, S + a/2). The face
// plane is extended beyond the face square; a point past the shared edge
// with a neighbor is the image (under central projection through the cube
// center) of a point on that neighbor's face. With w = dominant in-plane
// offset magnitude and lat = the other offset, similar triangles give the
// source position at depth (a/2) * (w - a/2) / w behind the shared edge and
// lateral offset (a/2) * lat / w along it.
//
// Throws kInsideFace when max(|u|, |v|) < a/2 (the point is the face's own
// sample, not an extension).
inline ExtensionSource extension_source(Face face, double x, double y,
                                        const CubeGeom& geom) {
  geom.validate();
  const double half = 0.5 * geom.a;
  const double center = geom.S + half;
  const double u = x - center;
  const double v = center - y;
  const double au = std::fabs(u), av = std::fabs(v);
  check(std::max(au, av) >= half, ErrorKind::kInsideFace,
        "extension_source: point lies inside the central face");

  const bool seam = (au == av);
  const FaceFrame fr = face_frame(face);

  const auto resolve = [&](bool cross_u) -> ExtensionSource {
    const Vec3i toward = cross_u ? (u > 0.0 ? fr.u_axis : -fr.u_axis)
                                 : (v > 0.0 ? fr.v_axis : -fr.v_axis);
    const Vec3i lat_axis = cross_u ? fr.v_axis : fr.u_axis;
    const double w = cross_u ? au : av;
    const double lat = cross_u ? v : u;

    const Face nbr = face_from_outward(toward);
    const FaceFrame nf = face_frame(nbr);
    // Depth measured from the shared edge into the neighbor, and lateral
    // offset along the edge, both scaled by the similar-triangle ratio
    // (a/2) / w of the central projection.
    const double depth = (w - half) * half / w;
    const double lat_src = half * lat / w;
    const double su = (half - depth) * dot(fr.outward, nf.u_axis) +
                      lat_src * dot(lat_axis, nf.u_axis);
    const double sv = (half - depth) * dot(fr.outward, nf.v_axis) +
                      lat_src * dot(lat_axis, nf.v_axis);
    return {nbr, su, sv, seam};
  };

  if (au > av) return resolve(true);
  if (av > au) return resolve(false);
  const ExtensionSource via_u = resolve(true);
  const ExtensionSource via_v = resolve(false);
  return static_cast<int>(via_u.source) <= static_cast<int>(via_v.source)
             ? via_u
             : via_v;
}

// Quarter-turn rotations applied to square tiles when packing.
enum class TileRot : int { kR0 = 0, kR90Cw, kR180, kR90Ccw };

struct TilePlacement {
  Face face = Face::kFront;
  int col = 0;
  int row = 0;
  TileRot rot = TileRot::kR0;
};

enum class LayoutKind { kFourByThree, kThreeByTwo };

inline const char* layout_name(LayoutKind k) {
  return k == LayoutKind::kFourByThree ? "4x3" : "3x2";
}

inline std::optional<LayoutKind> layout_from_name(std::string_view s) {
  if (s == "4x3") return LayoutKind::kFourByThree;
  if (s == "3x2") return LayoutKind::kThreeByTwo;
  return std::nullopt;
}

// Grid packing of the six faces. Grid cells not covered by a placement are
// filled with mid-gray. Placements are listed in Face enum order.
struct LayoutSpec {
  LayoutKind kind = LayoutKind::kFourByThree;
  int cols = 0;
  int rows = 0;
  std::array<TilePlacement, kNumFaces> tiles{};

  const TilePlacement& tile(Face f) const {
    return tiles[static_cast<int>(f)];
  }
};

// 4x3: the unfolded cross. Every seam between horizontally or vertically
// adjacent face tiles is a true cube edge and is continuous as packed.
// 3x2: two independent rows; the bottom row's rotations are chosen so both
// within-row seam pairs are continuous (the row boundary is a cut).
inline const LayoutSpec& layout_table(LayoutKind kind) {
  static const LayoutSpec four_by_three = {
      LayoutKind::kFourByThree,
      4,
      3,
      {{{Face::kFront, 1, 1, TileRot::kR0},
        {Face::kRear, 3, 1, TileRot::kR0},
        {Face::kLeft, 0, 1, TileRot::kR0},
        {Face::kRight, 2, 1, TileRot::kR0},
        {Face::kTop, 1, 0, TileRot::kR0},
        {Face::kBottom, 1, 2, TileRot::kR0}}}};
  static const LayoutSpec three_by_two = {
      LayoutKind::kThreeByTwo,
      3,
      2,
      {{{Face::kFront, 1, 0, TileRot::kR0},
        {Face::kRear, 1, 1, TileRot::kR90Ccw},
        {Face::kLeft, 0, 0, TileRot::kR0},
        {Face::kRight, 2, 0, TileRot::kR0},
        {Face::kTop, 0, 1, TileRot::kR90Cw},
        {Face::kBottom, 2, 1, TileRot::kR90Cw}}}};
  return kind == LayoutKind::kFourByThree ? four_by_three : three_by_two;
}

}  // namespace cubepad

#endif  // CUBEPAD_GEOMETRY_HPP
