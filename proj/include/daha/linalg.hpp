#ifndef DAHA_LINALG_HPP
#define DAHA_LINALG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "daha/ratfunc.hpp"

namespace daha {

using Vec = std::vector<RatFunc>;
using Mat = std::vector<Vec>;  // row-major

inline Mat zero_mat(size_t r, size_t c) { return Mat(r, Vec(c)); }
inline Mat identity_mat(size_t d) {
  Mat m = zero_mat(d, d);
  for (size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty()) return {};
  size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  if (a[0].size() != k) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat out = zero_mat(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t m = 0; m < k; ++m) {
      if (a[i][m].is_zero()) continue;
      for (size_t j = 0; j < c; ++j)
        if (!b[m][j].is_zero()) out[i][j] += a[i][m] * b[m][j];
    }
  return out;
}

inline Vec mat_vec(const Mat& a, const Vec& v) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
  return out;
}

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    RatFunc inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j)
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      RatFunc f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline size_t rank(Mat m) { return rref(m).size(); }

// Basis of {x : m x = 0}.
inline std::vector<Vec> nullspace(Mat m, size_t cols) {
  std::vector<size_t> piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    out.push_back(v);
  }
  return out;
}

// Incrementally maintained row space used for span and membership questions.
class RowSpace {
 public:
  explicit RowSpace(size_t dim) : dim_(dim) {}
  size_t dim() const { return rows_.size(); }
  // reduces v against the basis; returns true and stores it when independent
  bool insert(Vec v) {
    reduce(v);
    size_t c = 0;
    while (c < dim_ && v[c].is_zero()) ++c;
    if (c == dim_) return false;
    RatFunc inv = v[c].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    for (size_t k = 0; k < rows_.size(); ++k) {
      RatFunc f = rows_[k][c];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) rows_[k][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    piv_.push_back(c);
    return true;
  }
  bool contains(Vec v) const {
    reduce(v);
    return is_zero_vec(v);
  }

 private:
  void reduce(Vec& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
      RatFunc f = v[piv_[k]];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < dim_; ++j)
        if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
    }
  }
  size_t dim_;
  Mat rows_;
  std::vector<size_t> piv_;
};

}  // namespace daha

#endif
