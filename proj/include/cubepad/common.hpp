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

#ifndef CUBEPAD_COMMON_HPP
#define CUBEPAD_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubepad {

// Failure categories surfaced by the library. Every precondition violation
// throws Error with one of these kinds; nothing is reported through return
// codes or silent clamping unless a function documents the clamp.
enum class ErrorKind {
  kInvalidArgument,   // malformed parameter (zero direction, bad enum, ...)
  kInsideFace,        // extension query for a point inside the central face
  kBadExtension,      // extension margin S unusable (odd, non-positive, ...)
  kDimensionMismatch, // plane/frame dimensions disagree with the operation
  kGeometryMismatch,  // frame geometry incompatible (face size, margin, ...)
  kTruncatedFile,     // raw video file size is not a whole number of frames
  kOutOfRangeSample,  // encoded sample exceeds the declared bit depth
  kBadIndex,          // frame index beyond the end of the file
  kInsufficientPoints,// rate curve has fewer points than the fit needs
  kNoOverlap,         // rate curves share no PSNR interval
  kInvalidRotation,   // rotation matrix is not orthonormal / proper
  kIoFailure,         // OS-level read/write/open failure
  kInternal,          // invariant the library itself maintains was violated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void check(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace cubepad

#endif  // CUBEPAD_COMMON_HPP
