#include "raag/intmat.hpp"

#include <sstream>

namespace raag {

namespace {

using i128 = __int128;

int64_t narrow(i128 v, const char* what) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw std::overflow_error(std::string("integer overflow in ") + what);
  return static_cast<int64_t>(v);
}

}  // namespace

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      i128 s = 0;
      for (int k = 0; k < a.cols(); ++k) s += i128(a.at(i, k)) * b.at(k, j);
      c.at(i, j) = narrow(s, "matmul");
    }
  return c;
}

IntMatrix matadd(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matadd: shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.at(i, j) = narrow(i128(a.at(i, j)) + b.at(i, j), "matadd");
  return c;
}

// Bareiss one-step fraction-free elimination. Every division below is exact.
// Returns (rank, det-if-square), working on a __int128 copy so pivot growth
// cannot silently wrap.
static std::pair<int, i128> bareiss(const IntMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<i128> w(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) w[static_cast<size_t>(i) * cols + j] = m.at(i, j);
  auto at = [&](int r, int c) -> i128& { return w[static_cast<size_t>(r) * cols + c]; };

  i128 prev = 1;
  int sign = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev;
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  i128 det = 0;
  if (rows == cols) det = (r == rows) ? sign * prev : 0;
  return {r, det};
}

int matrank(const IntMatrix& m) { return bareiss(m).first; }

int64_t matdet(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matdet: not square");
  if (m.rows() == 0) return 1;
  return narrow(bareiss(m).second, "matdet");
}

std::string matrix_to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.at(i, j);
    }
    os << (i + 1 == m.rows() ? "]" : "\n");
  }
  if (m.rows() == 0) os << "[]";
  return os.str();
}

}  // namespace raag
