#include "reid/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "reid/error.hpp"

namespace reid {

namespace {

constexpr char kMagic[4] = {'R', 'E', 'M', 'B'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) {
    b[i] = static_cast<unsigned char>(v >> (8 * i));
  }
  out.write(reinterpret_cast<const char*>(b), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) {
    b[i] = static_cast<unsigned char>(v >> (8 * i));
  }
  out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32(std::istream& in, const std::string& path) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    throw IoError("truncated REMB file: " + path);
  }
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  }
  return v;
}

std::uint64_t get_u64(std::istream& in, const std::string& path) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) {
    throw IoError("truncated REMB file: " + path);
  }
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  }
  return v;
}

}  // namespace

void validate_embeddings(const Matrix& m, const std::string& what) {
  if (m.rows == 0 || m.cols == 0) {
    throw ValidationError(what + ": matrix is empty");
  }
  if (m.data.size() != m.rows * m.cols) {
    throw ValidationError(what + ": storage size does not match rows*cols");
  }
  for (std::size_t i = 0; i < m.data.size(); ++i) {
    if (!std::isfinite(m.data[i])) {
      throw ValidationError(what + ": non-finite entry at flat index " +
                            std::to_string(i));
    }
  }
}

Matrix gather_rows(const Matrix& m, std::span<const std::size_t> indices) {
  Matrix out(indices.size(), m.cols);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto src = m.row(indices[i]);
    std::memcpy(out.row(i).data(), src.data(), m.cols * sizeof(float));
  }
  return out;
}

void save_remb(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  out.write(kMagic, 4);
  put_u32(out, kVersion);
  put_u64(out, m.rows);
  put_u64(out, m.cols);
  // f32 values are written little-endian; x86/ARM little-endian hosts can
  // stream the buffer directly.
  static_assert(sizeof(float) == 4);
  std::uint32_t probe = 1;
  unsigned char probe_byte;
  std::memcpy(&probe_byte, &probe, 1);
  if (probe_byte == 1) {
    out.write(reinterpret_cast<const char*>(m.data.data()),
              static_cast<std::streamsize>(m.data.size() * sizeof(float)));
  } else {
    for (float f : m.data) {
      std::uint32_t bits;
      std::memcpy(&bits, &f, 4);
      put_u32(out, bits);
    }
  }
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

Matrix load_remb(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open: " + path.string());
  }
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw ParseError("not a REMB file (bad magic): " + path.string());
  }
  const std::uint32_t version = get_u32(in, path.string());
  if (version != kVersion) {
    throw ParseError("unsupported REMB version " + std::to_string(version) +
                     " in " + path.string());
  }
  const std::uint64_t rows = get_u64(in, path.string());
  const std::uint64_t cols = get_u64(in, path.string());
  if (rows == 0 || cols == 0) {
    throw ParseError("REMB file declares an empty matrix: " + path.string());
  }
  Matrix m(rows, cols);
  std::uint32_t probe = 1;
  unsigned char probe_byte;
  std::memcpy(&probe_byte, &probe, 1);
  if (probe_byte == 1) {
    if (!in.read(reinterpret_cast<char*>(m.data.data()),
                 static_cast<std::streamsize>(m.data.size() * sizeof(float)))) {
      throw IoError("truncated REMB file: " + path.string());
    }
  } else {
    for (auto& f : m.data) {
      const std::uint32_t bits = get_u32(in, path.string());
      std::memcpy(&f, &bits, 4);
    }
  }
  validate_embeddings(m, "REMB file " + path.string());
  return m;
}

}  // namespace reid
