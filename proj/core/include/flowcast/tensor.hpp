#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace flowcast {

/// Throws std::runtime_error with the given message when `cond` is false.
void check(bool cond, const std::string& msg);

/// Dense row-major tensor of 64-bit reals. Rank 0 (shape {}) is a scalar
/// with one element. Every numerical quantity in the engine lives in one
/// of these; layout is always row-major over `shape()`.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);  // zero-filled

  static Tensor zeros(std::vector<int> shape);
  static Tensor full(std::vector<int> shape, double value);
  static Tensor scalar(double value);
  static Tensor from(std::vector<int> shape, std::vector<double> values);
  static Tensor zeros_like(const Tensor& other);

  const std::vector<int>& shape() const { return shape_; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int dim(int axis) const;
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }
  double* raw() { return data_.data(); }
  const double* raw() const { return data_.data(); }

  double& operator[](std::int64_t flat) { return data_[flat]; }
  double operator[](std::int64_t flat) const { return data_[flat]; }

  /// Multi-index access; the index list length must equal rank().
  double& at(std::initializer_list<int> idx);
  double at(std::initializer_list<int> idx) const;

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;

  /// Scalar read for size-1 tensors of any rank.
  double item() const;

  void fill(double value);
  /// this += alpha * other, shapes must match exactly.
  void axpy(double alpha, const Tensor& other);

  std::string shape_str() const;

 private:
  std::int64_t flat_index(std::initializer_list<int> idx) const;

  std::vector<int> shape_;
  std::vector<double> data_;
};

std::int64_t shape_size(const std::vector<int>& shape);
std::string shape_to_string(const std::vector<int>& shape);

}  // namespace flowcast
