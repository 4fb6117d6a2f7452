#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "depflow/errors.hpp"

namespace depflow {

// Frame storage: `<base>.f32` holds row-major little-endian float32 samples,
// `<base>.shape` is a one-line text sidecar "T frame_dim". The pair is
// readable from any language without a binary-format dependency.

inline void write_frames(const std::string& base, const Eigen::MatrixXd& frames) {
  {
    std::ofstream shape(base + ".shape");
    if (!shape) throw PreconditionError("cannot write " + base + ".shape");
    shape << frames.rows() << " " << frames.cols() << "\n";
  }
  std::ofstream out(base + ".f32", std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + base + ".f32");
  for (Eigen::Index r = 0; r < frames.rows(); ++r) {
    for (Eigen::Index c = 0; c < frames.cols(); ++c) {
      const float v = static_cast<float>(frames(r, c));
      std::uint32_t bits;
      std::memcpy(&bits, &v, 4);
      unsigned char b[4] = {static_cast<unsigned char>(bits),
                            static_cast<unsigned char>(bits >> 8),
                            static_cast<unsigned char>(bits >> 16),
                            static_cast<unsigned char>(bits >> 24)};
      out.write(reinterpret_cast<const char*>(b), 4);
    }
  }
}

inline Eigen::MatrixXd read_frames(const std::string& base) {
  std::ifstream shape(base + ".shape");
  if (!shape) throw PreconditionError("cannot read " + base + ".shape");
  Eigen::Index rows = 0, cols = 0;
  shape >> rows >> cols;
  if (rows < 0 || cols <= 0)
    throw PreconditionError("bad shape sidecar: " + base + ".shape");

  std::ifstream in(base + ".f32", std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + base + ".f32");
  Eigen::MatrixXd frames(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      unsigned char b[4];
      if (!in.read(reinterpret_cast<char*>(b), 4))
        throw PreconditionError("truncated frame file: " + base + ".f32");
      std::uint32_t bits = static_cast<std::uint32_t>(b[0]) |
                           (static_cast<std::uint32_t>(b[1]) << 8) |
                           (static_cast<std::uint32_t>(b[2]) << 16) |
                           (static_cast<std::uint32_t>(b[3]) << 24);
      float v;
      std::memcpy(&v, &bits, 4);
      frames(r, c) = static_cast<double>(v);
    }
  }
  return frames;
}

}  // namespace depflow
