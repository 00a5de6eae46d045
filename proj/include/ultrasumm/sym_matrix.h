// Copyright 2026 The UltraSumm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ULTRASUMM_SYM_MATRIX_H_
#define ULTRASUMM_SYM_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

namespace ultrasumm {

// Dense symmetric matrix, stored in full row-major form.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t order, double fill = 0.0)
      : order_(order), values_(order * order, fill) {}

  std::size_t order() const { return order_; }

  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * order_ + j];
  }
  // Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double v) {
    values_[i * order_ + j] = v;
    values_[j * order_ + i] = v;
  }
  void add(std::size_t i, std::size_t j, double v) {
    values_[i * order_ + j] += v;
    if (i != j) values_[j * order_ + i] += v;
  }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * order_, order_};
  }

  // Elements strictly below the diagonal, row by row:
  // (1,0), (2,0), (2,1), (3,0), ...
  std::vector<double> lower_triangle() const {
    std::vector<double> out;
    out.reserve(order_ * (order_ > 0 ? order_ - 1 : 0) / 2);
    for (std::size_t i = 1; i < order_; ++i) {
      for (std::size_t j = 0; j < i; ++j) out.push_back((*this)(i, j));
    }
    return out;
  }

  // B(i, j) = A(perm[i], perm[j]).
  SymMatrix permuted(std::span<const std::size_t> perm) const {
    SymMatrix out(order_);
    for (std::size_t i = 0; i < order_; ++i) {
      for (std::size_t j = 0; j < order_; ++j) {
        out.values_[i * order_ + j] = (*this)(perm[i], perm[j]);
      }
    }
    return out;
  }

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<double> values_;
};

}  // namespace ultrasumm

#endif  // ULTRASUMM_SYM_MATRIX_H_
