#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace nuderiv {

/// Dense row-major table indexed (row, col), used for m-by-k derivative
/// columns. Rows and columns are both zero-based.
template <typename T>
class Table2D {
 public:
  Table2D() = default;
  Table2D(int rows, int cols, T fill = T{})
      : rows_{rows}, cols_{cols},
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  [[nodiscard]] T& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[index(r, c)];
  }
  [[nodiscard]] const T& operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[index(r, c)];
  }

 private:
  [[nodiscard]] std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

}  // namespace nuderiv
