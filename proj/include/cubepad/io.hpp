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
// File formats.
//
//  * Raw planar 4:2:0 YUV. A frame is W*H luma samples followed by the Cb
//    then Cr planes at (W/2)x(H/2). 8-bit samples are single bytes; 10-bit
//    samples are two bytes little-endian carrying the value in the low 10
//    bits (values >= 1024 are rejected). A file must be a whole number of
//    frames.
//  * Binary PGM (P5) for single planes: maxval 255 with 1-byte samples for
//    8-bit planes, maxval 1023 with 2-byte big-endian samples for 10-bit
//    (the PGM byte order is part of the format, unlike raw YUV).
//  * JSON reports for mc-eval runs, serialized with a fixed key order and
//    shortest-round-trip number formatting so byte-identical reruns are
//    byte-identical files.
//

#ifndef CUBEPAD_IO_HPP
#define CUBEPAD_IO_HPP

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubepad/common.hpp"
#include "cubepad/mc.hpp"
#include "cubepad/resample.hpp"

namespace cubepad {

namespace detail {

inline int bytes_per_sample(int bitdepth) {
  check(bitdepth == 8 || bitdepth == 10, ErrorKind::kInvalidArgument,
        "bit depth must be 8 or 10");
  return bitdepth == 8 ? 1 : 2;
}

inline std::int64_t yuv_frame_bytes(int w, int h, int bitdepth) {
  check(w > 0 && h > 0 && w % 2 == 0 && h % 2 == 0,
        ErrorKind::kDimensionMismatch,
        "YUV 4:2:0 needs positive even dimensions");
  return static_cast<std::int64_t>(w) * h * 3 / 2 *
         bytes_per_sample(bitdepth);
}

inline void read_plane_samples(std::istream& in, Plane& p,
                               const std::string& path) {
  const std::size_t n = p.samples.size();
  if (p.bitdepth == 8) {
    std::vector<unsigned char> buf(n);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(n));
    check(static_cast<std::size_t>(in.gcount()) == n, ErrorKind::kIoFailure,
          "short read from " + path);
    for (std::size_t i = 0; i < n; ++i) p.samples[i] = buf[i];
    return;
  }
  std::vector<unsigned char> buf(n * 2);
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(n * 2));
  check(static_cast<std::size_t>(in.gcount()) == n * 2,
        ErrorKind::kIoFailure, "short read from " + path);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint16_t v = static_cast<std::uint16_t>(
        buf[2 * i] | (static_cast<std::uint16_t>(buf[2 * i + 1]) << 8));
    check(v < 1024, ErrorKind::kOutOfRangeSample,
          path + ": 10-bit sample out of range");
    p.samples[i] = v;
  }
}

inline void write_plane_samples(std::ostream& out, const Plane& p) {
  const std::size_t n = p.samples.size();
  const int maxv = p.maxval();
  if (p.bitdepth == 8) {
    std::vector<unsigned char> buf(n);
    for (std::size_t i = 0; i < n; ++i) {
      check(p.samples[i] <= maxv, ErrorKind::kOutOfRangeSample,
            "8-bit sample out of range on write");
      buf[i] = static_cast<unsigned char>(p.samples[i]);
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(n));
    return;
  }
  std::vector<unsigned char> buf(n * 2);
  for (std::size_t i = 0; i < n; ++i) {
    check(p.samples[i] <= maxv, ErrorKind::kOutOfRangeSample,
          "10-bit sample out of range on write");
    buf[2 * i] = static_cast<unsigned char>(p.samples[i] & 0xff);
    buf[2 * i + 1] = static_cast<unsigned char>(p.samples[i] >> 8);
  }
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(n * 2));
}

inline std::int64_t file_size_for_yuv(std::ifstream& in,
                                      const std::string& path) {
  check(static_cast<bool>(in), ErrorKind::kIoFailure,
        "cannot open " + path);
  in.seekg(0, std::ios::end);
  const std::int64_t size = static_cast<std::int64_t>(in.tellg());
  in.seekg(0, std::ios::beg);
  return size;
}

}  // namespace detail

// Number of whole frames in a raw YUV file; throws kTruncatedFile if the
// file size is not a multiple of the frame size.
inline std::int64_t count_yuv_frames(const std::string& path, int w, int h,
                                     int bitdepth) {
  std::ifstream in(path, std::ios::binary);
  const std::int64_t size = detail::file_size_for_yuv(in, path);
  const std::int64_t fb = detail::yuv_frame_bytes(w, h, bitdepth);
  check(size % fb == 0, ErrorKind::kTruncatedFile,
        path + ": size is not a whole number of frames");
  return size / fb;
}

// Reads frame `index` (0-based) of a raw YUV file.
inline PlanarFrame read_yuv(const std::string& path, int w, int h,
                            int bitdepth, std::int64_t index = 0) {
  std::ifstream in(path, std::ios::binary);
  const std::int64_t size = detail::file_size_for_yuv(in, path);
  const std::int64_t fb = detail::yuv_frame_bytes(w, h, bitdepth);
  check(size % fb == 0, ErrorKind::kTruncatedFile,
        path + ": size is not a whole number of frames");
  check(index >= 0 && index < size / fb, ErrorKind::kBadIndex,
        path + ": frame index out of range");
  in.seekg(index * fb, std::ios::beg);
  PlanarFrame f(w, h, bitdepth);
  detail::read_plane_samples(in, f.y, path);
  detail::read_plane_samples(in, f.cb, path);
  detail::read_plane_samples(in, f.cr, path);
  return f;
}

// Writes frames back-to-back as one raw YUV file.
inline void write_yuv(const std::string& path,
                      const std::vector<PlanarFrame>& frames) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  check(static_cast<bool>(out), ErrorKind::kIoFailure,
        "cannot open " + path + " for writing");
  for (const PlanarFrame& f : frames) {
    f.validate();
    detail::write_plane_samples(out, f.y);
    detail::write_plane_samples(out, f.cb);
    detail::write_plane_samples(out, f.cr);
  }
  out.flush();
  check(static_cast<bool>(out), ErrorKind::kIoFailure,
        "write failed for " + path);
}

// Appends one frame to an open stream (for frame-by-frame conversion).
inline void append_yuv_frame(std::ostream& out, const PlanarFrame& f) {
  f.validate();
  detail::write_plane_samples(out, f.y);
  detail::write_plane_samples(out, f.cb);
  detail::write_plane_samples(out, f.cr);
}

// Writes a plane as binary PGM (P5).
inline void export_pgm(const Plane& plane, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  check(static_cast<bool>(out), ErrorKind::kIoFailure,
        "cannot open " + path + " for writing");
  out << "P5\n" << plane.width << " " << plane.height << "\n"
      << plane.maxval() << "\n";
  const std::size_t n = plane.samples.size();
  if (plane.bitdepth == 8) {
    std::vector<unsigned char> buf(n);
    for (std::size_t i = 0; i < n; ++i) {
      check(plane.samples[i] <= 255, ErrorKind::kOutOfRangeSample,
            "PGM sample out of range");
      buf[i] = static_cast<unsigned char>(plane.samples[i]);
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(n));
  } else {
    std::vector<unsigned char> buf(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
      check(plane.samples[i] <= 1023, ErrorKind::kOutOfRangeSample,
            "PGM sample out of range");
      buf[2 * i] = static_cast<unsigned char>(plane.samples[i] >> 8);
      buf[2 * i + 1] = static_cast<unsigned char>(plane.samples[i] & 0xff);
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(n * 2));
  }
  out.flush();
  check(static_cast<bool>(out), ErrorKind::kIoFailure,
        "write failed for " + path);
}

namespace detail {

inline nlohmann::ordered_json group_sad_json(const McGroupStats& interior,
                                             const McGroupStats& boundary) {
  nlohmann::ordered_json j;
  const auto im = interior.mean_sad();
  const auto bm = boundary.mean_sad();
  j["interior_mean"] = im ? nlohmann::ordered_json(*im)
                          : nlohmann::ordered_json(nullptr);
  j["boundary_mean"] = bm ? nlohmann::ordered_json(*bm)
                          : nlohmann::ordered_json(nullptr);
  return j;
}

inline nlohmann::ordered_json group_psnr_json(const McGroupStats& interior,
                                              const McGroupStats& boundary,
                                              int bitdepth, int B) {
  nlohmann::ordered_json j;
  const auto im = interior.mean_psnr(bitdepth, B);
  const auto bm = boundary.mean_psnr(bitdepth, B);
  j["interior_mean_db"] = im ? nlohmann::ordered_json(*im)
                             : nlohmann::ordered_json(nullptr);
  j["boundary_mean_db"] = bm ? nlohmann::ordered_json(*bm)
                             : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace detail

// Fixed-schema JSON object for one run.
inline nlohmann::ordered_json report_to_json(const McRunReport& rep) {
  nlohmann::ordered_json j;
  j["config"]["block"] = rep.block;
  j["config"]["range"] = rep.range;
  j["config"]["mode"] = pad_mode_name(rep.mode);
  j["config"]["S"] = rep.S;
  j["totals"]["blocks"] = rep.interior.blocks + rep.boundary.blocks;
  j["totals"]["boundary_blocks"] = rep.boundary.blocks;
  j["sad"] = detail::group_sad_json(rep.interior, rep.boundary);
  j["psnr"] = detail::group_psnr_json(rep.interior, rep.boundary,
                                      rep.bitdepth, rep.block);
  j["per_face"] = nlohmann::ordered_json::array();
  for (const McFaceStats& fs : rep.faces) {
    nlohmann::ordered_json f;
    f["face"] = face_name(fs.face);
    f["blocks"] = fs.interior.blocks + fs.boundary.blocks;
    f["boundary_blocks"] = fs.boundary.blocks;
    f["sad"] = detail::group_sad_json(fs.interior, fs.boundary);
    f["psnr"] = detail::group_psnr_json(fs.interior, fs.boundary,
                                        rep.bitdepth, rep.block);
    j["per_face"].push_back(f);
  }
  return j;
}

// Serialized report file: always a JSON array of run objects (one per
// evaluated mode), two-space indented with a trailing newline. The bytes
// depend only on the run results, never on thread counts or timing.
inline std::string report_json_bytes(const std::vector<McRunReport>& runs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const McRunReport& r : runs) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

inline void write_report(const std::vector<McRunReport>& runs,
                         const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  check(static_cast<bool>(out), ErrorKind::kIoFailure,
        "cannot open " + path + " for writing");
  const std::string bytes = report_json_bytes(runs);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  check(static_cast<bool>(out), ErrorKind::kIoFailure,
        "write failed for " + path);
}

}  // namespace cubepad

#endif  // CUBEPAD_IO_HPP
