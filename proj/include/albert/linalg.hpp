#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "albert/scalar.hpp"

namespace albert {

// Dense row-major matrix over an abstract scalar. Sizes here are tiny
// (8x8, 27x27, one 512x56 solve), so no blocking or sparsity.
template <class S>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int r, int c) : r_(r), c_(c), a_(static_cast<std::size_t>(r) * c, S(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  S& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const S& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat z(x.r_, x.c_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] + y.a_[k];
    return z;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat z(x.r_, x.c_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = x.a_[k] - y.a_[k];
    return z;
  }
  friend Mat operator*(const S& v, const Mat& x) {
    Mat z(x.r_, x.c_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) z.a_[k] = v * x.a_[k];
    return z;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    assert(x.c_ == y.r_);
    Mat z(x.r_, y.c_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        const S& v = x(i, k);
        if (scalar_ops<S>::exact && v == S(0)) continue;
        for (int j = 0; j < y.c_; ++j) z(i, j) += v * y(k, j);
      }
    return z;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

  Mat transpose() const {
    Mat z(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) z(j, i) = (*this)(i, j);
    return z;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    assert(static_cast<int>(v.size()) == c_);
    std::vector<S> out(static_cast<std::size_t>(r_), S(0));
    for (int i = 0; i < r_; ++i) {
      S acc(0);
      for (int j = 0; j < c_; ++j) acc += (*this)(i, j) * v[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
  }

  S trace() const {
    S t(0);
    for (int i = 0; i < r_ && i < c_; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!scalar_ops<S>::is_zero(v)) return false;
    return true;
  }

  double max_abs_double() const {
    double m = 0;
    for (const auto& v : a_) {
      double d = std::fabs(to_double(v));
      if (d > m) m = d;
    }
    return m;
  }

 private:
  int r_, c_;
  std::vector<S> a_;
};

namespace detail {
// Pivot choice: exact backends take any nonzero, floats the largest magnitude.
template <class S>
int pick_pivot(const Mat<S>& m, int col, int from) {
  int best = -1;
  double best_mag = 0;
  for (int i = from; i < m.rows(); ++i) {
    const S& v = m(i, col);
    if constexpr (scalar_ops<S>::exact) {
      if (v != S(0)) return i;
    } else {
      double mag = std::fabs(to_double(v));
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
  }
  if constexpr (!scalar_ops<S>::exact) {
    if (best >= 0 && best_mag > scalar_ops<S>::tol) return best;
  }
  return -1;
}
}  // namespace detail

// Row echelon in place; returns rank. Optionally carries a right-hand block.
template <class S>
int gauss_eliminate(Mat<S>& m, Mat<S>* rhs = nullptr) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int p = detail::pick_pivot(m, col, rank);
    if (p < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    if (rhs)
      for (int j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(p, j), (*rhs)(rank, j));
    const S piv = m(rank, col);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      const S f = m(i, col) / piv;
      if (scalar_ops<S>::is_zero(f)) continue;
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
      if (rhs)
        for (int j = 0; j < rhs->cols(); ++j) (*rhs)(i, j) -= f * (*rhs)(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class S>
int mat_rank(Mat<S> m) {
  return gauss_eliminate(m);
}

template <class S>
std::optional<Mat<S>> mat_inverse(Mat<S> m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  Mat<S> inv = Mat<S>::identity(n);
  if (gauss_eliminate(m, &inv) < n) return std::nullopt;
  // m is now diagonal (full pivoting eliminated above and below); scale rows.
  Mat<S> out(n, n);
  for (int i = 0; i < n; ++i) {
    // locate the pivot column of row i
    int pc = -1;
    for (int j = 0; j < n; ++j)
      if (!scalar_ops<S>::is_zero(m(i, j))) {
        pc = j;
        break;
      }
    if (pc < 0) return std::nullopt;
    for (int j = 0; j < n; ++j) out(pc, j) = inv(i, j) / m(i, pc);
  }
  return out;
}

// Solve A x = b for a (possibly overdetermined) consistent exact system with a
// unique solution; returns nullopt when inconsistent or underdetermined.
template <class S>
std::optional<std::vector<S>> solve_unique(Mat<S> a, std::vector<S> b) {
  const int n = a.cols();
  Mat<S> rhs(a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) rhs(i, 0) = b[static_cast<std::size_t>(i)];
  const int rank = gauss_eliminate(a, &rhs);
  if (rank < n) return std::nullopt;
  std::vector<S> x(static_cast<std::size_t>(n), S(0));
  for (int i = 0; i < a.rows(); ++i) {
    int pc = -1;
    for (int j = 0; j < n; ++j)
      if (!scalar_ops<S>::is_zero(a(i, j))) {
        pc = j;
        break;
      }
    if (pc < 0) {
      if (!scalar_ops<S>::is_zero(rhs(i, 0))) return std::nullopt;  // inconsistent
      continue;
    }
    x[static_cast<std::size_t>(pc)] = rhs(i, 0) / a(i, pc);
  }
  return x;
}

}  // namespace albert
