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
// Sample planes and separable resampling kernels.
//
// Sample (i, j) of a plane sits at continuous coordinate (i, j); resampling
// at (x, y) therefore interpolates between whole-numbered sample positions.
// All interpolators evaluate in double precision and leave quantization to
// the caller (see quantize()).
//
// Determinism: weight normalization and the separable dot products
// accumulate in a fixed symmetric-pair order, so a mirrored sampling
// position (reversed tap order with mirrored weights) produces bit-identical
// results. Cube-rotation equivariance of the downstream projection and
// padding code relies on this.
//

#ifndef CUBEPAD_RESAMPLE_HPP
#define CUBEPAD_RESAMPLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "cubepad/common.hpp"

namespace cubepad {

// How sampling treats coordinates outside the plane.
//  kClamp:          nearest edge sample in both axes.
//  kWrapHorizontal: x wraps modulo width (panoramic), y clamps.
enum class BorderMode { kClamp, kWrapHorizontal };

// One image plane. Samples are stored row-major as uint16_t regardless of
// bit depth; legal values are [0, 2^bitdepth - 1].
struct Plane {
  int width = 0;
  int height = 0;
  int bitdepth = 8;
  std::vector<std::uint16_t> samples;

  Plane() = default;
  Plane(int w, int h, int bd, std::uint16_t fill = 0)
      : width(w), height(h), bitdepth(bd),
        samples(static_cast<std::size_t>(w) * h, fill) {
    check(w > 0 && h > 0, ErrorKind::kDimensionMismatch,
          "Plane: non-positive dimensions");
    check(bd == 8 || bd == 10, ErrorKind::kInvalidArgument,
          "Plane: bit depth must be 8 or 10");
  }

  int maxval() const { return (1 << bitdepth) - 1; }

  std::uint16_t at(int x, int y) const {
    return samples[static_cast<std::size_t>(y) * width + x];
  }
  std::uint16_t& at(int x, int y) {
    return samples[static_cast<std::size_t>(y) * width + x];
  }

  bool same_shape(const Plane& o) const {
    return width == o.width && height == o.height && bitdepth == o.bitdepth;
  }
};

// 4:2:0 frame: full-size luma, half-size chroma. Chroma sample (i, j) is
// co-sited with the mean of its 2x2 luma quad, i.e. at luma coordinate
// (2i + 0.5, 2j + 0.5).
struct PlanarFrame {
  Plane y, cb, cr;

  PlanarFrame() = default;
  PlanarFrame(int w, int h, int bd, std::uint16_t luma_fill = 0,
              std::uint16_t chroma_fill = 0)
      : y(w, h, bd, luma_fill),
        cb(w / 2, h / 2, bd, chroma_fill),
        cr(w / 2, h / 2, bd, chroma_fill) {
    check(w % 2 == 0 && h % 2 == 0, ErrorKind::kDimensionMismatch,
          "PlanarFrame: 4:2:0 needs even dimensions");
  }

  int width() const { return y.width; }
  int height() const { return y.height; }
  int bitdepth() const { return y.bitdepth; }

  void validate() const {
    check(y.width > 0 && y.width % 2 == 0 && y.height % 2 == 0,
          ErrorKind::kDimensionMismatch, "PlanarFrame: bad luma dimensions");
    check(cb.width == y.width / 2 && cb.height == y.height / 2 &&
              cr.width == cb.width && cr.height == cb.height,
          ErrorKind::kDimensionMismatch, "PlanarFrame: bad chroma dimensions");
    check(cb.bitdepth == y.bitdepth && cr.bitdepth == y.bitdepth,
          ErrorKind::kInvalidArgument, "PlanarFrame: mixed bit depths");
  }
};

namespace detail {

inline constexpr double kPi = 3.14159265358979323846;

// Normalized-sinc Lanczos kernel of order A. Integer arguments evaluate to
// exactly 0 or 1 so that whole-sample positions reproduce the input. The
// evaluation runs on |t| so the kernel is even to the last bit; the weight
// mirror identities below depend on that, not on libm sign symmetry.
inline double lanczos_kernel(double t, int A) {
  const double at = std::fabs(t);
  if (at >= static_cast<double>(A)) return 0.0;
  if (at == std::nearbyint(at)) return at == 0.0 ? 1.0 : 0.0;
  const double pt = kPi * at;
  return (std::sin(pt) / pt) * (std::sin(pt / A) / (pt / A));
}

// Mirror-invariant sum of 2A terms: pairs equidistant from the center are
// added first, so reversing the term order cannot change the result.
inline double paired_sum(const double* w, int n2) {
  double s = 0.0;
  for (int i = 0; i < n2 / 2; ++i) s += w[i] + w[n2 - 1 - i];
  return s;
}

inline int resolve_col(int x, int width, BorderMode mode) {
  if (mode == BorderMode::kWrapHorizontal) {
    x %= width;
    return x < 0 ? x + width : x;
  }
  return std::clamp(x, 0, width - 1);
}

inline int resolve_row(int y, int height) {
  return std::clamp(y, 0, height - 1);
}

// |k| representable steps away from x, toward +inf for k > 0.
inline double nudge(double x, int k) {
  const double dir = k >= 0 ? std::numeric_limits<double>::infinity()
                            : -std::numeric_limits<double>::infinity();
  for (int i = k >= 0 ? k : -k; i > 0; --i) x = std::nextafter(x, dir);
  return x;
}

// Rewrites the tap pair (w[i], w[n-1-i]) so that w[i] + w[n-1-i] evaluates
// to exactly `target`, moving the taps as little as possible. Which slot
// absorbs the correction is decided from swap-invariant quantities only, so
// mirrored weight vectors remain exact reversals. Returns false when no
// nearby representable pair realizes the target.
inline bool realize_pair_sum(double* w, int n, int i, double target) {
  double& a = w[i];
  double& b = w[n - 1 - i];
  if (a + b == target) return true;
  if (a == b) {
    const double h = 0.5 * target;  // exact: power-of-two scaling
    if (h + h == target) {
      a = h;
      b = h;
      return true;
    }
    return false;
  }
  if (std::fabs(a) == std::fabs(b)) {
    // a == -b: move both ends in lockstep (swap-symmetric).
    for (int k = -8; k <= 8; ++k) {
      const double aa = nudge(a, k);
      const double bb = nudge(b, k);
      if (aa + bb == target) {
        a = aa;
        b = bb;
        return true;
      }
    }
    return false;
  }
  const bool keep_a = std::fabs(a) > std::fabs(b);
  double& fix = keep_a ? b : a;
  const double keep = keep_a ? a : b;
  double x = target - keep;
  for (int it = 0; it < 4; ++it) {
    const double r = (keep + x) - target;
    if (r == 0.0) {
      fix = x;
      return true;
    }
    x -= r;
  }
  for (int k = -8; k <= 8; ++k) {
    const double xx = nudge(x, k);
    if (keep + xx == target) {
      fix = xx;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Fills w[0 .. 2A-1] with Lanczos-A weights for a sampling position whose
// fractional offset from the tap at index A-1 is `frac` in [0, 1). Weights
// are normalized so that their paired_sum is exactly 1.0; the residual after
// division is folded into the two center taps in equal halves, which keeps
// mirrored fractions (frac vs 1-frac) exactly reversed and frac = 0.5
// exactly symmetric. frac = 0 yields a unit impulse at index A-1.
inline void lanczos_weights(int A, double frac, double* w) {
  check(A == 2 || A == 3, ErrorKind::kInvalidArgument,
        "lanczos_weights: kernel order must be 2 or 3");
  check(frac >= 0.0 && frac < 1.0, ErrorKind::kInvalidArgument,
        "lanczos_weights: frac outside [0, 1)");
  const int n = 2 * A;
  for (int i = 0; i < n; ++i) {
    w[i] = detail::lanczos_kernel(static_cast<double>(i - (A - 1)) - frac, A);
  }
  const double s = detail::paired_sum(w, n);
  for (int i = 0; i < n; ++i) w[i] /= s;
  if (detail::paired_sum(w, n) == 1.0) return;

  // Drive the accumulated sum to exactly 1.0 by retargeting the last two
  // pair sums. Retargeting only the center pair is not always enough: near
  // 1.0 its representable grid can be coarser than the rounding window of
  // the total, so a second correction moves any sub-ulp residual into the
  // preceding pair, whose grid is orders of magnitude finer. Every step
  // depends only on pair sums and swap-invariant tap selection, so mirrored
  // fractions keep producing exactly reversed weight vectors.
  const double q_fixed = (A == 3) ? (w[0] + w[n - 1]) : 0.0;
  const auto pre_of = [&](double q) { return A == 3 ? q_fixed + q : q; };
  double q1 = w[A - 2] + w[A + 1];
  double t = 1.0 - pre_of(q1);
  for (int it = 0; it < 4; ++it) {
    const double r = (pre_of(q1) + t) - 1.0;
    if (r == 0.0) break;
    t -= r;
  }
  for (int it = 0; it < 8; ++it) {
    const double r = (pre_of(q1) + t) - 1.0;
    if (r == 0.0) break;
    q1 -= r;
  }
  if ((pre_of(q1) + t) - 1.0 != 0.0) {
    // Oscillation backstop: walk the knob over its immediate neighbors.
    const double q_base = q1;
    for (int dk = 1; dk <= 16 && (pre_of(q1) + t) != 1.0; ++dk) {
      const int k = (dk % 2 == 1) ? (dk + 1) / 2 : -dk / 2;
      q1 = detail::nudge(q_base, k);
    }
  }
  if ((pre_of(q1) + t) == 1.0 && detail::realize_pair_sum(w, n, A - 2, q1) &&
      detail::realize_pair_sum(w, n, A - 1, t) &&
      detail::paired_sum(w, n) == 1.0) {
    return;
  }
  fail(ErrorKind::kInternal, "lanczos_weights: could not normalize exactly");
}

// Separable Lanczos-A resampling at (xi + xf, y). The split x form lets
// callers keep the integer part exact (e.g. large wrap offsets) while the
// fraction stays in a fixed small range; sample_lanczos below is the plain
// wrapper. Accumulation is mirror-invariant in both axes.
inline double sample_lanczos_split(const Plane& p, std::int64_t xi, double xf,
                                   double y, int A, BorderMode mode) {
  check(A == 2 || A == 3, ErrorKind::kInvalidArgument,
        "sample_lanczos: kernel order must be 2 or 3");
  const double fx = std::floor(xf);
  const double fy = std::floor(y);
  const std::int64_t x0 = xi + static_cast<std::int64_t>(fx) - (A - 1);
  const std::int64_t y0 = static_cast<std::int64_t>(fy) - (A - 1);
  double wx[6], wy[6];
  lanczos_weights(A, xf - fx, wx);
  lanczos_weights(A, y - fy, wy);

  const int n = 2 * A;
  int cols[6];
  for (int tx = 0; tx < n; ++tx) {
    cols[tx] = detail::resolve_col(static_cast<int>(x0 + tx), p.width, mode);
  }
  // Anchored accumulation: weights are applied to offsets from the mean of
  // the two center taps. Constant content then reproduces exactly (all
  // offsets are zero and the anchor passes through), and the anchor is
  // invariant under tap reversal, which keeps mirrored samplings bit-equal.
  double rows[6];
  for (int ty = 0; ty < n; ++ty) {
    const int row = detail::resolve_row(static_cast<int>(y0 + ty), p.height);
    const double anchor =
        0.5 * (static_cast<double>(p.at(cols[A - 1], row)) +
               static_cast<double>(p.at(cols[A], row)));
    double terms[6];
    for (int tx = 0; tx < n; ++tx) {
      terms[tx] = wx[tx] * (static_cast<double>(p.at(cols[tx], row)) - anchor);
    }
    rows[ty] = anchor + detail::paired_sum(terms, n);
  }
  const double anchor = 0.5 * (rows[A - 1] + rows[A]);
  double terms[6];
  for (int ty = 0; ty < n; ++ty) terms[ty] = wy[ty] * (rows[ty] - anchor);
  return anchor + detail::paired_sum(terms, n);
}

inline double sample_lanczos(const Plane& p, double x, double y, int A,
                             BorderMode mode) {
  return sample_lanczos_split(p, 0, x, y, A, mode);
}

// Bilinear resampling at (x, y); the four taps use the same border rules as
// sample_lanczos.
inline double sample_bilinear(const Plane& p, double x, double y,
                              BorderMode mode) {
  const double fx = std::floor(x), fy = std::floor(y);
  const int x0 = static_cast<int>(fx), y0 = static_cast<int>(fy);
  const double ax = x - fx, ay = y - fy;
  const int c0 = detail::resolve_col(x0, p.width, mode);
  const int c1 = detail::resolve_col(x0 + 1, p.width, mode);
  const int r0 = detail::resolve_row(y0, p.height);
  const int r1 = detail::resolve_row(y0 + 1, p.height);
  const double t00 = p.at(c0, r0), t10 = p.at(c1, r0);
  const double t01 = p.at(c0, r1), t11 = p.at(c1, r1);
  // Lerp form: constant content reproduces exactly.
  const double top = t00 + ax * (t10 - t00);
  const double bot = t01 + ax * (t11 - t01);
  return top + ay * (bot - top);
}

// Rounds half away from zero, then clamps to the legal sample range of the
// given bit depth.
inline std::uint16_t quantize(double v, int bitdepth) {
  const double maxv = static_cast<double>((1 << bitdepth) - 1);
  const double r = std::round(v);
  return static_cast<std::uint16_t>(std::clamp(r, 0.0, maxv));
}

}  // namespace cubepad

#endif  // CUBEPAD_RESAMPLE_HPP
