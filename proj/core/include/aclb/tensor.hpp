#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace aclb {

class Rng;

/// Dense row-major tensor of 64-bit reals. Rank 0 (empty shape) is a scalar
/// with one element.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> values;

  Tensor() = default;

  static Tensor zeros(std::vector<std::size_t> shape);
  static Tensor full(std::vector<std::size_t> shape, double v);
  static Tensor scalar(double v);
  static Tensor vector(std::vector<double> v);
  /// Xavier-style uniform(-r, r) with r = sqrt(6 / (fan_in + fan_out)).
  /// For matrices [rows, cols], fan_out = rows and fan_in = cols.
  static Tensor glorot(std::vector<std::size_t> shape, Rng& rng);

  std::size_t rank() const { return shape.size(); }
  std::size_t numel() const;
  /// Rows/cols of a rank-2 tensor (rank-1 is treated as a single column).
  std::size_t rows() const { return shape.empty() ? 1 : shape[0]; }
  std::size_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }
  double& at2(std::size_t r, std::size_t c) { return values[r * cols() + c]; }
  double at2(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }

  bool same_shape(const Tensor& other) const { return shape == other.shape; }
  bool is_scalar() const { return numel() == 1 && rank() <= 1; }
  bool all_finite() const;

  std::string shape_str() const;
};

/// Dot product of two equal-length value arrays.
double dot(const Tensor& a, const Tensor& b);
/// Euclidean norm of all elements.
double norm(const Tensor& t);
/// Cosine similarity of two tensors viewed as flat vectors.
/// Throws NumericError if either norm is below 1e-12.
double cosine_similarity(const Tensor& a, const Tensor& b);

}  // namespace aclb
