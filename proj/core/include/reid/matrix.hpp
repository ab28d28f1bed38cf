#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace reid {

// Dense row-major float matrix: the common currency between the data,
// metrics, losses and engine modules. Embeddings, logits, gradients and
// parameter tensors are all Matrix values.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, float fill = 0.0f)
      : rows(r), cols(c), data(r * c, fill) {}

  float& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  float at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::span<float> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const float> row(std::size_t r) const {
    return {data.data() + r * cols, cols};
  }

  bool empty() const { return rows == 0 || cols == 0; }

  bool operator==(const Matrix&) const = default;
};

// Throws ValidationError if the matrix is empty or contains NaN/Inf.
void validate_embeddings(const Matrix& m, const std::string& what);

// Gathers rows into a new matrix, in index order.
Matrix gather_rows(const Matrix& m, std::span<const std::size_t> indices);

// REMB embedding container: magic "REMB", u32 version=1, u64 rows, u64 cols,
// then rows*cols little-endian f32 values in row-major order.
void save_remb(const std::filesystem::path& path, const Matrix& m);
Matrix load_remb(const std::filesystem::path& path);

}  // namespace reid
