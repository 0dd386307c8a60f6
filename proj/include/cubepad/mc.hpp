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
// Codec-free motion-compensation harness.
//
// The harness quantifies how much the reference padding style matters for
// inter prediction, without entangling the comparison with a codec: it runs
// exhaustive integer-pel motion search for every block of every face of the
// current frame against a reference frame whose out-of-face samples come
// either from coordinate clamping over the packed picture (kReplicate, the
// conventional codec behavior) or from the co-projection-plane extension
// (kCoprojection). Blocks whose search window leaves the face are tallied
// separately from interior blocks, since only they can touch padded
// samples. Luma only.
//
// Also hosts the PSNR helper and the BD-rate calculation used to summarize
// rate-distortion runs.
//

#ifndef CUBEPAD_MC_HPP
#define CUBEPAD_MC_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "cubepad/common.hpp"
#include "cubepad/geometry.hpp"
#include "cubepad/padding.hpp"
#include "cubepad/parallel.hpp"
#include "cubepad/projection.hpp"
#include "cubepad/resample.hpp"

namespace cubepad {

// Luma PSNR between two planes of identical shape, in dB against the
// bit depth's peak value. Identical planes give +infinity.
inline double psnr(const Plane& p1, const Plane& p2) {
  check(p1.same_shape(p2), ErrorKind::kDimensionMismatch,
        "psnr: plane shapes differ");
  std::int64_t sse = 0;
  const std::size_t n = p1.samples.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t d = static_cast<std::int64_t>(p1.samples[i]) -
                           static_cast<std::int64_t>(p2.samples[i]);
    sse += d * d;
  }
  if (sse == 0) return std::numeric_limits<double>::infinity();
  const double peak = static_cast<double>(p1.maxval());
  return 10.0 * std::log10(peak * peak * static_cast<double>(n) /
                           static_cast<double>(sse));
}

// HM-style frame padding: every margin sample replicates the nearest edge
// sample of its plane. Luma margin is `margin` samples; chroma margins are
// (margin + 1) / 2.
inline PlanarFrame pad_replicate(const PlanarFrame& frame, int margin) {
  frame.validate();
  check(margin > 0, ErrorKind::kInvalidArgument,
        "pad_replicate: margin must be positive");
  const auto pad_plane = [](const Plane& p, int m) {
    Plane out(p.width + 2 * m, p.height + 2 * m, p.bitdepth);
    for (int y = 0; y < out.height; ++y) {
      const int sy = std::clamp(y - m, 0, p.height - 1);
      for (int x = 0; x < out.width; ++x) {
        out.at(x, y) = p.at(std::clamp(x - m, 0, p.width - 1), sy);
      }
    }
    return out;
  };
  PlanarFrame out;
  const int mc = (margin + 1) / 2;
  out.y = pad_plane(frame.y, margin);
  out.cb = pad_plane(frame.cb, mc);
  out.cr = pad_plane(frame.cr, mc);
  return out;
}

enum class PadMode { kReplicate, kCoprojection };

inline const char* pad_mode_name(PadMode m) {
  return m == PadMode::kReplicate ? "replicate" : "coprojection";
}

// Read-only luma reference for one face, covering face-local coordinates
// [-S, a+S) in both axes. Construction materializes the window; the frames
// it was built from are never modified.
struct FaceRefView {
  Face face = Face::kFront;
  int a = 0;
  int S = 0;
  Plane window;

  std::uint16_t at(int fx, int fy) const {
    return window.at(fx + S, fy + S);
  }
};

// Builds the motion-compensation reference for `face` from a packed
// reference frame.
//
// kReplicate reproduces what a codec sees when it codes the packed picture:
// face-local coordinates map through the layout placement into the packed
// picture, coordinates outside the picture clamp to its border (HM-style
// frame padding), and positions beyond a face tile's edge but inside the
// picture read whatever neighboring tile or filler happens to be there.
//
// kCoprojection serves the co-projection-plane extension of the face
// instead, so out-of-face positions continue the scene.
inline FaceRefView fill_reference_for_face(const PlanarFrame& packed_ref,
                                           LayoutKind layout, Face face,
                                           PadMode mode, int S) {
  packed_ref.validate();
  const LayoutSpec& spec = layout_table(layout);
  check(packed_ref.width() % spec.cols == 0 &&
            packed_ref.height() ==
                spec.rows * (packed_ref.width() / spec.cols),
        ErrorKind::kDimensionMismatch,
        "fill_reference_for_face: frame does not match the layout grid");
  const int a = packed_ref.width() / spec.cols;
  const CubeGeom geom{a, S};
  geom.validate();

  FaceRefView view;
  view.face = face;
  view.a = a;
  view.S = S;

  if (mode == PadMode::kCoprojection) {
    view.window = extend_face(unpack_layout(packed_ref, layout), face, S).y;
    return view;
  }

  const TilePlacement& t = spec.tile(face);
  const int ox = t.col * a, oy = t.row * a;
  const int W = packed_ref.width(), H = packed_ref.height();
  view.window = Plane(a + 2 * S, a + 2 * S, packed_ref.bitdepth());
  for (int wy = 0; wy < a + 2 * S; ++wy) {
    const int fy = wy - S;
    for (int wx = 0; wx < a + 2 * S; ++wx) {
      const int fx = wx - S;
      // Face-local -> packed coordinates under the tile's rotation. The
      // affine map extends past the tile for out-of-face positions.
      int px = 0, py = 0;
      switch (t.rot) {
        case TileRot::kR0:     px = fx;          py = fy;          break;
        case TileRot::kR90Cw:  px = a - 1 - fy;  py = fx;          break;
        case TileRot::kR90Ccw: px = fy;          py = a - 1 - fx;  break;
        case TileRot::kR180:   px = a - 1 - fx;  py = a - 1 - fy;  break;
      }
      const int cx = std::clamp(ox + px, 0, W - 1);
      const int cy = std::clamp(oy + py, 0, H - 1);
      view.window.at(wx, wy) = packed_ref.y.at(cx, cy);
    }
  }
  return view;
}

struct MotionVector {
  int dx = 0;
  int dy = 0;
};

struct MotionResult {
  Face face = Face::kFront;
  int bx = 0;
  int by = 0;
  MotionVector mv;
  std::int64_t sad = 0;
  std::int64_t sse = 0;
  double pred_psnr = 0.0;
  bool boundary = false;
};

// Exhaustive integer-pel search of the B x B block at (bx, by) of
// `cur_face` over displacements [-R, R]^2 in the reference view. SAD ties
// break toward smaller |dx| + |dy|, then smaller dy, then smaller dx, so
// the result is order-independent and deterministic. The block is a
// boundary block when its search window leaves the face square.
inline MotionResult full_search_me(const Plane& cur_face,
                                   const FaceRefView& ref, int bx, int by,
                                   int B, int R) {
  const int a = ref.a;
  check(cur_face.width == a && cur_face.height == a,
        ErrorKind::kDimensionMismatch,
        "full_search_me: current face does not match the reference");
  check(B > 0 && bx >= 0 && by >= 0 && bx + B <= a && by + B <= a,
        ErrorKind::kInvalidArgument, "full_search_me: block outside face");
  check(R >= 0 && R <= ref.S, ErrorKind::kGeometryMismatch,
        "full_search_me: search range exceeds reference margin");

  MotionResult best;
  best.face = ref.face;
  best.bx = bx;
  best.by = by;
  best.sad = std::numeric_limits<std::int64_t>::max();
  best.boundary =
      bx - R < 0 || by - R < 0 || bx + B + R > a || by + B + R > a;

  int best_cost = 0;
  for (int dy = -R; dy <= R; ++dy) {
    for (int dx = -R; dx <= R; ++dx) {
      std::int64_t sad = 0;
      for (int j = 0; j < B; ++j) {
        const int ry = by + dy + j;
        for (int i = 0; i < B; ++i) {
          const int d = static_cast<int>(cur_face.at(bx + i, by + j)) -
                        static_cast<int>(ref.at(bx + dx + i, ry));
          sad += d < 0 ? -d : d;
        }
      }
      const int cost = std::abs(dx) + std::abs(dy);
      const bool better =
          sad < best.sad ||
          (sad == best.sad &&
           (cost < best_cost ||
            (cost == best_cost &&
             (dy < best.mv.dy ||
              (dy == best.mv.dy && dx < best.mv.dx)))));
      if (better) {
        best.sad = sad;
        best.mv = {dx, dy};
        best_cost = cost;
      }
    }
  }

  std::int64_t sse = 0;
  for (int j = 0; j < B; ++j) {
    for (int i = 0; i < B; ++i) {
      const int d =
          static_cast<int>(cur_face.at(bx + i, by + j)) -
          static_cast<int>(ref.at(bx + best.mv.dx + i, by + best.mv.dy + j));
      sse += static_cast<std::int64_t>(d) * d;
    }
  }
  best.sse = sse;
  if (sse == 0) {
    best.pred_psnr = std::numeric_limits<double>::infinity();
  } else {
    const double peak = static_cast<double>(cur_face.maxval());
    best.pred_psnr =
        10.0 * std::log10(peak * peak * static_cast<double>(B) * B /
                          static_cast<double>(sse));
  }
  return best;
}

// Aggregates over one block group (interior or boundary blocks).
struct McGroupStats {
  std::int64_t blocks = 0;
  std::int64_t sad_sum = 0;
  std::int64_t sse_sum = 0;

  void add(const MotionResult& r) {
    ++blocks;
    sad_sum += r.sad;
    sse_sum += r.sse;
  }

  std::optional<double> mean_sad() const {
    if (blocks == 0) return std::nullopt;
    return static_cast<double>(sad_sum) / static_cast<double>(blocks);
  }

  // Pooled-MSE PSNR of the group's predictions. Empty groups and lossless
  // groups (zero pooled error) report no value.
  std::optional<double> mean_psnr(int bitdepth, int B) const {
    if (blocks == 0 || sse_sum == 0) return std::nullopt;
    const double peak = static_cast<double>((1 << bitdepth) - 1);
    const double npx =
        static_cast<double>(blocks) * static_cast<double>(B) * B;
    return 10.0 *
           std::log10(peak * peak * npx / static_cast<double>(sse_sum));
  }
};

struct McFaceStats {
  Face face = Face::kFront;
  McGroupStats interior;
  McGroupStats boundary;
};

// One mc-eval run: configuration echo plus aggregated and per-block
// results.
struct McRunReport {
  PadMode mode = PadMode::kReplicate;
  LayoutKind layout = LayoutKind::kFourByThree;
  int block = 0;
  int range = 0;
  int S = 0;
  int a = 0;
  int bitdepth = 8;
  McGroupStats interior;
  McGroupStats boundary;
  std::array<McFaceStats, kNumFaces> faces{};
  std::vector<MotionResult> results;
};

// Runs the harness for every block of every face of `cur` against `ref`
// (both packed cubemap frames in the given layout). Block results are
// computed in parallel into preallocated slots and reduced sequentially,
// so the report does not depend on `threads`.
inline McRunReport evaluate_pair(const PlanarFrame& cur,
                                 const PlanarFrame& ref, LayoutKind layout,
                                 int B, int R, PadMode mode, int S,
                                 int threads = 1) {
  cur.validate();
  ref.validate();
  check(cur.width() == ref.width() && cur.height() == ref.height() &&
            cur.bitdepth() == ref.bitdepth(),
        ErrorKind::kDimensionMismatch,
        "evaluate_pair: current/reference frames differ in shape");
  const CubeMapFrame cur_cube = unpack_layout(cur, layout);
  const int a = cur_cube.a;
  check(B >= 2 && a % B == 0, ErrorKind::kGeometryMismatch,
        "evaluate_pair: block size must divide the face size");
  const CubeGeom geom{a, S};
  geom.validate();
  check(R >= 0 && R <= S, ErrorKind::kGeometryMismatch,
        "evaluate_pair: search range exceeds the margin");

  std::array<FaceRefView, kNumFaces> refs;
  if (mode == PadMode::kCoprojection) {
    // extend_face per face matches fill_reference_for_face exactly; doing
    // it through extend_all shares the unpack across faces.
    const CubeMapFrame ref_cube = unpack_layout(ref, layout);
    auto ext = extend_all(ref_cube, S, threads);
    for (int i = 0; i < kNumFaces; ++i) {
      refs[i].face = kAllFaces[i];
      refs[i].a = a;
      refs[i].S = S;
      refs[i].window = std::move(ext[i].y);
    }
  } else {
    for (int i = 0; i < kNumFaces; ++i) {
      refs[i] = fill_reference_for_face(ref, layout, kAllFaces[i], mode, S);
    }
  }

  McRunReport rep;
  rep.mode = mode;
  rep.layout = layout;
  rep.block = B;
  rep.range = R;
  rep.S = S;
  rep.a = a;
  rep.bitdepth = cur.bitdepth();

  const int nb = a / B;
  const std::int64_t total = static_cast<std::int64_t>(kNumFaces) * nb * nb;
  rep.results.resize(total);
  parallel_for(total, threads, [&](std::int64_t idx) {
    const int fi = static_cast<int>(idx / (nb * nb));
    const int rem = static_cast<int>(idx % (nb * nb));
    const int by = (rem / nb) * B;
    const int bx = (rem % nb) * B;
    rep.results[idx] = full_search_me(cur_cube.faces[fi].y, refs[fi], bx, by,
                                      B, R);
  });

  for (int i = 0; i < kNumFaces; ++i) rep.faces[i].face = kAllFaces[i];
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const MotionResult& r = rep.results[idx];
    const int fi = static_cast<int>(idx / (nb * nb));
    McGroupStats& face_group =
        r.boundary ? rep.faces[fi].boundary : rep.faces[fi].interior;
    McGroupStats& top_group = r.boundary ? rep.boundary : rep.interior;
    face_group.add(r);
    top_group.add(r);
  }
  return rep;
}

// One rate-distortion measurement.
struct RdPoint {
  double rate = 0.0;
  double psnr = 0.0;
};

namespace detail {

// Least-squares cubic fit of log10(rate) as a function of PSNR, with the
// PSNR axis centered for conditioning. Returns {center, c0..c3}.
struct RdFit {
  double center = 0.0;
  double c[4] = {0, 0, 0, 0};

  // Antiderivative of the fitted polynomial at PSNR value x.
  double integral_at(double x) const {
    const double t = x - center;
    return t * (c[0] + t * (c[1] / 2 + t * (c[2] / 3 + t * (c[3] / 4))));
  }
};

inline RdFit fit_rd_curve(const std::vector<RdPoint>& pts,
                          const char* which) {
  check(pts.size() >= 4, ErrorKind::kInsufficientPoints,
        std::string("bd_rate: ") + which + " curve needs at least 4 points");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    check(pts[i].rate > 0.0, ErrorKind::kInvalidArgument,
          std::string("bd_rate: ") + which + " curve has a non-positive rate");
    if (i > 0) {
      check(pts[i].rate > pts[i - 1].rate && pts[i].psnr > pts[i - 1].psnr,
            ErrorKind::kInvalidArgument,
            std::string("bd_rate: ") + which +
                " curve must be sorted with strictly increasing rate and "
                "PSNR");
    }
  }

  RdFit fit;
  double mean = 0.0;
  for (const RdPoint& p : pts) mean += p.psnr;
  fit.center = mean / static_cast<double>(pts.size());

  long double moments[7] = {0, 0, 0, 0, 0, 0, 0};
  long double rhs[4] = {0, 0, 0, 0};
  for (const RdPoint& p : pts) {
    const long double t = p.psnr - fit.center;
    const long double y = std::log10(static_cast<long double>(p.rate));
    long double tp = 1.0L;
    for (int k = 0; k < 7; ++k) {
      moments[k] += tp;
      if (k < 4) rhs[k] += tp * y;
      tp *= t;
    }
  }
  long double m[4][5];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = moments[i + j];
    m[i][4] = rhs[i];
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::fabs(static_cast<double>(m[r][col])) >
          std::fabs(static_cast<double>(m[piv][col]))) {
        piv = r;
      }
    }
    for (int k = 0; k < 5; ++k) std::swap(m[col][k], m[piv][k]);
    check(m[col][col] != 0.0L, ErrorKind::kInvalidArgument,
          "bd_rate: degenerate rate curve");
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const long double f = m[r][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
    }
  }
  for (int i = 0; i < 4; ++i) {
    fit.c[i] = static_cast<double>(m[i][4] / m[i][i]);
  }
  return fit;
}

}  // namespace detail

// Average rate difference of `test` against `anchor` in percent (negative
// means the test curve needs less rate at equal quality). Both curves are
// fitted with a cubic in log10(rate) over PSNR and the fit difference is
// averaged in closed form over the curves' common PSNR interval.
inline double bd_rate(const std::vector<RdPoint>& anchor,
                      const std::vector<RdPoint>& test) {
  const detail::RdFit fa = detail::fit_rd_curve(anchor, "anchor");
  const detail::RdFit ft = detail::fit_rd_curve(test, "test");
  const double lo = std::max(anchor.front().psnr, test.front().psnr);
  const double hi = std::min(anchor.back().psnr, test.back().psnr);
  check(hi > lo, ErrorKind::kNoOverlap,
        "bd_rate: curves share no PSNR interval");
  const double ia = fa.integral_at(hi) - fa.integral_at(lo);
  const double it = ft.integral_at(hi) - ft.integral_at(lo);
  const double avg_diff = (it - ia) / (hi - lo);
  return (std::pow(10.0, avg_diff) - 1.0) * 100.0;
}

}  // namespace cubepad

#endif  // CUBEPAD_MC_HPP
