#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "holoforms/rational.hpp"

namespace holoforms {

using Vec = std::vector<Rational>;

// Dense matrix of Rationals.  Everything downstream that needs linear
// algebra (isotropy nullspaces, Killing forms, invariant-tensor solves)
// realifies into this type, so only exact rational elimination is needed.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows);
  static Mat from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rational& c) const;
  Mat transposed() const;
  Rational trace() const;
  bool is_zero() const;
  Vec apply(const Vec& v) const;  // matrix times column vector
  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

// In-place reduced row echelon form; returns the rank and optionally the
// pivot columns.
std::size_t rref(Mat& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(Mat m);

// Canonical nullspace basis: one vector per free column, entry 1 at the free
// column.
std::vector<Vec> nullspace(const Mat& m);

// One exact solution of A x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Exact inverse of a square matrix; throws std::domain_error when singular.
Mat inverse(const Mat& m);

struct Signature {
  std::size_t pos = 0;
  std::size_t neg = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Sylvester signature of a symmetric matrix by exact congruence
// diagonalization (zero diagonals handled with hyperbolic row/column moves).
Signature congruence_signature(Mat s);

// Incrementally maintained row space, kept in reduced echelon form.
class Span {
 public:
  explicit Span(std::size_t ambient_dim) : n_(ambient_dim) {}

  // Returns true when v enlarged the span.
  bool add(Vec v);
  bool contains(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return n_; }
  const std::vector<Vec>& reduced_rows() const { return rows_; }

 private:
  void reduce(Vec& v) const;

  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace holoforms
