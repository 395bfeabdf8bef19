#include "aclb/tensor.hpp"

#include <cmath>
#include <sstream>

#include "aclb/errors.hpp"
#include "aclb/rng.hpp"

namespace aclb {

namespace {
std::size_t shape_numel(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}
}  // namespace

Tensor Tensor::zeros(std::vector<std::size_t> shape) {
  Tensor t;
  t.values.assign(shape_numel(shape), 0.0);
  t.shape = std::move(shape);
  return t;
}

Tensor Tensor::full(std::vector<std::size_t> shape, double v) {
  Tensor t;
  t.values.assign(shape_numel(shape), v);
  t.shape = std::move(shape);
  return t;
}

Tensor Tensor::scalar(double v) {
  Tensor t;
  t.values.assign(1, v);
  return t;
}

Tensor Tensor::vector(std::vector<double> v) {
  Tensor t;
  t.shape = {v.size()};
  t.values = std::move(v);
  return t;
}

Tensor Tensor::glorot(std::vector<std::size_t> shape, Rng& rng) {
  Tensor t = zeros(shape);
  std::size_t fan_out = t.rows();
  std::size_t fan_in = t.numel() / (fan_out == 0 ? 1 : fan_out);
  double r = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
  for (double& v : t.values) v = rng.uniform(-r, r);
  return t;
}

std::size_t Tensor::numel() const { return shape_numel(shape); }

bool Tensor::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) os << 'x';
    os << shape[i];
  }
  os << ']';
  return os.str();
}

double dot(const Tensor& a, const Tensor& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
  return s;
}

double norm(const Tensor& t) { return std::sqrt(dot(t, t)); }

double cosine_similarity(const Tensor& a, const Tensor& b) {
  double na = norm(a), nb = norm(b);
  if (na < 1e-12 || nb < 1e-12)
    throw NumericError("cosine_similarity: zero-norm vector");
  return dot(a, b) / (na * nb);
}

}  // namespace aclb
