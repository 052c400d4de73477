#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace raag {

// Dense integer matrix with exact rank/determinant via fraction-free
// (Bareiss) elimination. Entries stay in int64; intermediates use __int128
// and overflow is checked, since exactness is the whole point here.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int64_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  int64_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> a_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix matadd(const IntMatrix& a, const IntMatrix& b);

// Rank over Z (equivalently over Q), exact.
int matrank(const IntMatrix& m);

// Determinant of a square matrix, exact; throws std::overflow_error if an
// intermediate would leave int64 range.
int64_t matdet(const IntMatrix& m);

std::string matrix_to_string(const IntMatrix& m);

}  // namespace raag
