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

#include "cubepad/resample.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

using namespace cubepad;

namespace {

TEST(LanczosKernel, IntegerArgumentsAreExact) {
  EXPECT_EQ(detail::lanczos_kernel(0.0, 3), 1.0);
  for (int t = 1; t < 3; ++t) {
    EXPECT_EQ(detail::lanczos_kernel(static_cast<double>(t), 3), 0.0);
    EXPECT_EQ(detail::lanczos_kernel(static_cast<double>(-t), 3), 0.0);
  }
  EXPECT_EQ(detail::lanczos_kernel(3.0, 3), 0.0);
  EXPECT_EQ(detail::lanczos_kernel(5.5, 3), 0.0);
  EXPECT_EQ(detail::lanczos_kernel(0.0, 2), 1.0);
  EXPECT_EQ(detail::lanczos_kernel(1.0, 2), 0.0);
  EXPECT_EQ(detail::lanczos_kernel(-2.5, 2), 0.0);
}

TEST(LanczosWeights, ZeroFractionIsImpulse) {
  double w3[6];
  lanczos_weights(3, 0.0, w3);
  const double want3[6] = {0, 0, 1, 0, 0, 0};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(w3[i], want3[i]) << i;

  double w2[4];
  lanczos_weights(2, 0.0, w2);
  const double want2[4] = {0, 1, 0, 0};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(w2[i], want2[i]) << i;
}

TEST(LanczosWeights, PairedSumIsExactlyOne) {
  // Dense sweep; the paired summation of the adjusted weights must be the
  // literal double 1.0, not merely close to it.
  for (int A : {2, 3}) {
    std::vector<double> w(2 * A);
    for (int k = 0; k < 20011; ++k) {
      const double frac = k / 20011.0;
      lanczos_weights(A, frac, w.data());
      EXPECT_EQ(detail::paired_sum(w.data(), 2 * A), 1.0)
          << "A=" << A << " frac=" << frac;
    }
  }
}

TEST(LanczosWeights, MirrorSymmetryOnDyadicFractions) {
  // w(1 - frac) must be the exact reversal of w(frac). Bitwise mirroring is
  // promised for dyadic fractions (the projection code only ever produces
  // those): there 1 - frac is itself exact, so the kernel arguments of the
  // two calls are exact negations of each other.
  for (int A : {2, 3}) {
    std::vector<double> w(2 * A), m(2 * A);
    for (int k = 1; k < 4096; ++k) {
      const double frac = k / 4096.0;
      lanczos_weights(A, frac, w.data());
      lanczos_weights(A, 1.0 - frac, m.data());
      for (int i = 0; i < 2 * A; ++i) {
        ASSERT_EQ(w[i], m[2 * A - 1 - i]) << "A=" << A << " frac=" << frac;
      }
    }
  }
}

TEST(LanczosWeights, HalfFractionIsPalindromic) {
  for (int A : {2, 3}) {
    std::vector<double> w(2 * A);
    lanczos_weights(A, 0.5, w.data());
    for (int i = 0; i < A; ++i) EXPECT_EQ(w[i], w[2 * A - 1 - i]);
  }
}

TEST(LanczosWeights, RejectsBadArguments) {
  double w[6];
  EXPECT_THROW(lanczos_weights(4, 0.25, w), Error);
  EXPECT_THROW(lanczos_weights(3, 1.0, w), Error);
  EXPECT_THROW(lanczos_weights(3, -0.1, w), Error);
}

Plane random_plane(int w, int h, int bd, std::uint32_t seed) {
  Plane p(w, h, bd);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, (1 << bd) - 1);
  for (auto& s : p.samples) s = static_cast<std::uint16_t>(dist(rng));
  return p;
}

TEST(SampleLanczos, ReproducesSamplesAtIntegerCoordinates) {
  const Plane p = random_plane(16, 12, 10, 5u);
  for (int A : {2, 3}) {
    for (int j = 0; j < p.height; ++j) {
      for (int i = 0; i < p.width; ++i) {
        const double got =
            sample_lanczos(p, static_cast<double>(i), static_cast<double>(j),
                           A, BorderMode::kClamp);
        ASSERT_EQ(got, static_cast<double>(p.at(i, j)));
      }
    }
  }
}

TEST(SampleLanczos, ConstantPlaneIsReproducedEverywhere) {
  Plane p(9, 7, 8, 137);
  std::mt19937 rng(17u);
  std::uniform_real_distribution<double> pos(-3.0, 12.0);
  for (int n = 0; n < 2000; ++n) {
    const double x = pos(rng);
    const double y = pos(rng);
    // Weights sum to exactly one, so a constant plane samples exactly.
    EXPECT_EQ(sample_lanczos(p, x, y, 3, BorderMode::kClamp), 137.0);
    EXPECT_EQ(sample_lanczos(p, x, y, 2, BorderMode::kWrapHorizontal), 137.0);
  }
}

// Dyadic coordinate with 20 fractional bits in [lo, hi). For such values
// both 1 - frac and (W - 1) - x are exact, which is the regime in which the
// sampler promises bitwise mirror equality (projection only produces dyadic
// sampling offsets).
double random_dyadic(std::mt19937& rng, double lo, double hi) {
  const double span = hi - lo;
  std::uniform_int_distribution<std::int64_t> bits(
      0, static_cast<std::int64_t>(span * 1048576.0) - 1);
  return lo + static_cast<double>(bits(rng)) / 1048576.0;
}

TEST(SampleLanczos, HorizontalMirrorIsExact) {
  const Plane p = random_plane(24, 8, 10, 99u);
  Plane q(p.width, p.height, p.bitdepth);
  for (int j = 0; j < p.height; ++j) {
    for (int i = 0; i < p.width; ++i) q.at(i, j) = p.at(p.width - 1 - i, j);
  }
  std::mt19937 rng(3u);
  for (int A : {2, 3}) {
    for (int n = 0; n < 4000; ++n) {
      const double x = random_dyadic(rng, -2.0, p.width + 1.0);
      const double y = random_dyadic(rng, 0.0, p.height - 1.0);
      const double a = sample_lanczos(p, x, y, A, BorderMode::kClamp);
      const double b =
          sample_lanczos(q, (p.width - 1) - x, y, A, BorderMode::kClamp);
      ASSERT_EQ(a, b) << "A=" << A << " x=" << x << " y=" << y;
    }
  }
}

TEST(SampleLanczos, VerticalMirrorIsExact) {
  const Plane p = random_plane(8, 24, 10, 42u);
  Plane q(p.width, p.height, p.bitdepth);
  for (int j = 0; j < p.height; ++j) {
    for (int i = 0; i < p.width; ++i) q.at(i, j) = p.at(i, p.height - 1 - j);
  }
  std::mt19937 rng(4u);
  for (int A : {2, 3}) {
    for (int n = 0; n < 4000; ++n) {
      const double x = random_dyadic(rng, 0.0, p.width - 1.0);
      const double y = random_dyadic(rng, -2.0, p.height + 1.0);
      const double a = sample_lanczos(p, x, y, A, BorderMode::kClamp);
      const double b =
          sample_lanczos(q, x, (p.height - 1) - y, A, BorderMode::kClamp);
      ASSERT_EQ(a, b) << "A=" << A << " x=" << x << " y=" << y;
    }
  }
}

TEST(SampleLanczos, SplitCoordinateMatchesPlainCall) {
  // With a dyadic fraction the recombined coordinate xi + xf is exact, so
  // the split and plain forms see identical positions and must agree to the
  // bit. (With a full-precision fraction the plain form would round the
  // recombination; avoiding that is what the split form is for.)
  const Plane p = random_plane(32, 6, 8, 12u);
  std::mt19937 rng(5u);
  for (int n = 0; n < 2000; ++n) {
    const std::int64_t xi = n % p.width;
    const double xf = random_dyadic(rng, 0.0, 1.0);
    const double y = random_dyadic(rng, 0.0, p.height - 1.0);
    const double a =
        sample_lanczos_split(p, xi, xf, y, 3, BorderMode::kWrapHorizontal);
    const double b = sample_lanczos(p, static_cast<double>(xi) + xf, y, 3,
                                    BorderMode::kWrapHorizontal);
    ASSERT_EQ(a, b);
  }
}

TEST(BorderModes, ClampAndWrapIndices) {
  EXPECT_EQ(detail::resolve_col(-3, 4, BorderMode::kClamp), 0);
  EXPECT_EQ(detail::resolve_col(0, 4, BorderMode::kClamp), 0);
  EXPECT_EQ(detail::resolve_col(3, 4, BorderMode::kClamp), 3);
  EXPECT_EQ(detail::resolve_col(7, 4, BorderMode::kClamp), 3);
  EXPECT_EQ(detail::resolve_col(-1, 4, BorderMode::kWrapHorizontal), 3);
  EXPECT_EQ(detail::resolve_col(-5, 4, BorderMode::kWrapHorizontal), 3);
  EXPECT_EQ(detail::resolve_col(4, 4, BorderMode::kWrapHorizontal), 0);
  EXPECT_EQ(detail::resolve_col(9, 4, BorderMode::kWrapHorizontal), 1);
  // Rows always clamp.
  EXPECT_EQ(detail::resolve_row(-2, 4), 0);
  EXPECT_EQ(detail::resolve_row(5, 4), 3);
}

TEST(BorderModes, WrapReadsAroundTheSeam) {
  Plane p(4, 1, 8);
  p.at(0, 0) = 10;
  p.at(1, 0) = 20;
  p.at(2, 0) = 30;
  p.at(3, 0) = 40;
  // Bilinear midpoint between the last and first columns.
  EXPECT_EQ(sample_bilinear(p, 3.5, 0.0, BorderMode::kWrapHorizontal), 25.0);
  EXPECT_EQ(sample_bilinear(p, 3.5, 0.0, BorderMode::kClamp), 40.0);
}

TEST(SampleBilinear, MidpointAverage) {
  Plane p(2, 2, 8);
  p.at(0, 0) = 10;
  p.at(1, 0) = 20;
  p.at(0, 1) = 30;
  p.at(1, 1) = 40;
  EXPECT_EQ(sample_bilinear(p, 0.5, 0.5, BorderMode::kClamp), 25.0);
  EXPECT_EQ(sample_bilinear(p, 0.0, 0.0, BorderMode::kClamp), 10.0);
  EXPECT_EQ(sample_bilinear(p, 1.0, 1.0, BorderMode::kClamp), 40.0);
  EXPECT_EQ(sample_bilinear(p, 0.25, 0.0, BorderMode::kClamp), 12.5);
}

TEST(Quantize, RoundsHalfAwayAndClamps) {
  EXPECT_EQ(quantize(0.5, 8), 1);
  EXPECT_EQ(quantize(0.49999, 8), 0);
  EXPECT_EQ(quantize(-0.4, 8), 0);
  EXPECT_EQ(quantize(-7.0, 8), 0);
  EXPECT_EQ(quantize(254.5, 8), 255);
  EXPECT_EQ(quantize(255.7, 8), 255);
  EXPECT_EQ(quantize(300.0, 8), 255);
  EXPECT_EQ(quantize(100.49, 8), 100);
  EXPECT_EQ(quantize(1023.6, 10), 1023);
  EXPECT_EQ(quantize(511.5, 10), 512);
}

TEST(Plane, ShapeAndMaxval) {
  Plane p(6, 4, 10, 3);
  EXPECT_EQ(p.width, 6);
  EXPECT_EQ(p.height, 4);
  EXPECT_EQ(p.maxval(), 1023);
  EXPECT_EQ(p.samples.size(), 24u);
  for (auto s : p.samples) EXPECT_EQ(s, 3);
  Plane q(6, 4, 10);
  EXPECT_TRUE(p.same_shape(q));
  Plane r(6, 5, 10);
  EXPECT_FALSE(p.same_shape(r));
}

TEST(PlanarFrame, ValidatesEvenDimensions) {
  PlanarFrame f(8, 6, 8);
  EXPECT_EQ(f.y.width, 8);
  EXPECT_EQ(f.cb.width, 4);
  EXPECT_EQ(f.cr.height, 3);
  EXPECT_NO_THROW(f.validate());
  try {
    PlanarFrame g(7, 6, 8);
    FAIL() << "expected Error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

}  // namespace
