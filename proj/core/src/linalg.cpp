#include "holoforms/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace holoforms {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Mat();
  Mat m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_) throw std::invalid_argument("ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& bkj = o(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

Mat Mat::scaled(const Rational& c) const {
  Mat out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
  return out;
}

Mat Mat::transposed() const {
  Mat out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Rational Mat::trace() const {
  Rational t;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const Rational& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Vec Mat::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
  return out;
}

Vec Mat::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

std::size_t rref(Mat& m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(rank, j), m(piv, j));
    Rational inv = m(rank, col).inv();
    for (std::size_t j = col; j < m.cols(); ++j) m(rank, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col).is_zero()) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

std::size_t rank(Mat m) { return rref(m); }

std::vector<Vec> nullspace(const Mat& m) {
  Mat r = m;
  std::vector<std::size_t> pivots;
  std::size_t rk = rref(r, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols());
    v[j] = 1;
    for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = -r(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve shape mismatch");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t rk = rref(aug, &pivots);
  for (std::size_t i = 0; i < rk; ++i)
    if (pivots[i] == a.cols()) return std::nullopt;  // pivot in the b column
  Vec x(a.cols());
  for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  std::size_t rk = rref(aug, &pivots);
  if (rk < n || pivots[n - 1] >= n) throw std::domain_error("singular matrix");
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

Signature congruence_signature(Mat s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("signature of non-square matrix");
  const std::size_t n = s.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (s(k, k).is_zero()) {
      std::size_t d = k;
      while (d < n && s(d, d).is_zero()) ++d;
      if (d < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(s(k, j), s(d, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(s(i, k), s(i, d));
      } else {
        std::size_t j = k + 1;
        while (j < n && s(k, j).is_zero()) ++j;
        if (j == n) {
          // Row k is zero outside the already-cleared block: a radical
          // direction.  (With a symmetric matrix the whole remaining row is
          // zero here.)
          ++sig.zero;
          continue;
        }
        // Hyperbolic move: both diagonals are zero, s(k,j) != 0, so adding
        // row/column j to row/column k puts 2*s(k,j) on the diagonal.
        for (std::size_t c = 0; c < n; ++c) s(k, c) += s(j, c);
        for (std::size_t r = 0; r < n; ++r) s(r, k) += s(r, j);
      }
    }
    const Rational piv = s(k, k);
    if (piv.sign() > 0)
      ++sig.pos;
    else
      ++sig.neg;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || s(i, k).is_zero()) continue;
      Rational f = s(i, k) / piv;
      for (std::size_t c = 0; c < n; ++c) s(i, c) -= f * s(k, c);
      for (std::size_t r = 0; r < n; ++r) s(r, i) -= f * s(r, k);
    }
  }
  return sig;
}

void Span::reduce(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Rational f = c;  // rows are pivot-normalized to 1
    for (std::size_t j = 0; j < n_; ++j) v[j] -= f * rows_[i][j];
  }
}

bool Span::add(Vec v) {
  if (v.size() != n_) throw std::invalid_argument("span dimension mismatch");
  reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && v[piv].is_zero()) ++piv;
  if (piv == n_) return false;
  Rational inv = v[piv].inv();
  for (std::size_t j = 0; j < n_; ++j) v[j] *= inv;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rational f = rows_[i][piv];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) rows_[i][j] -= f * v[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  return true;
}

bool Span::contains(Vec v) const {
  if (v.size() != n_) throw std::invalid_argument("span dimension mismatch");
  reduce(v);
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace holoforms
