#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "vqgen/errors.hpp"

namespace vqgen {

// Dense row-major matrix of doubles. Everything in the model is rank <= 2;
// vectors are 1 x n or n x 1, scalars are 1 x 1.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), d_(rows * cols, fill) {}

  static Tensor scalar(double v) {
    Tensor t(1, 1);
    t.d_[0] = v;
    return t;
  }
  static Tensor row(std::initializer_list<double> v) {
    Tensor t(1, v.size());
    std::size_t i = 0;
    for (double x : v) t.d_[i++] = x;
    return t;
  }
  static Tensor col(std::initializer_list<double> v) {
    Tensor t(v.size(), 1);
    std::size_t i = 0;
    for (double x : v) t.d_[i++] = x;
    return t;
  }
  static Tensor from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Tensor t(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw ShapeError("from_rows: ragged initializer");
      for (double x : row) t.d_[i++] = x;
    }
    return t;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return d_.size(); }
  bool empty() const { return d_.empty(); }

  double& at(std::size_t r, std::size_t c) { return d_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return d_[r * cols_ + c]; }
  double& operator[](std::size_t i) { return d_[i]; }
  double operator[](std::size_t i) const { return d_[i]; }

  double* data() { return d_.data(); }
  const double* data() const { return d_.data(); }

  bool same_shape(const Tensor& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  // value of a 1x1 tensor
  double item() const {
    if (size() != 1) throw ShapeError("item(): tensor is " + shape_str() + ", expected 1x1");
    return d_[0];
  }

  bool all_finite() const {
    for (double v : d_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  void fill(double v) { std::fill(d_.begin(), d_.end(), v); }

  void add_inplace(const Tensor& o) {
    if (!same_shape(o)) throw ShapeError("add_inplace: " + shape_str() + " vs " + o.shape_str());
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  bool operator==(const Tensor& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> d_;
};

}  // namespace vqgen
