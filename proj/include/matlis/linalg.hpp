#pragma once

#include <optional>
#include <vector>

#include "matlis/field.hpp"

namespace matlis {

using Vec = std::vector<Scalar>;

// Dense exact matrix, row-major.
struct Mat {
  FieldSpec field;
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(const FieldSpec& f, int r, int c) : field(f), rows(r), cols(c), a(static_cast<size_t>(r) * c, Scalar::zero(f)) {}

  Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static Mat identity(const FieldSpec& f, int n);
  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& v) const;  // this * v (column vector)
  bool operator==(const Mat& o) const;
  bool is_zero() const;
};

int rank(Mat m);
std::vector<Vec> kernel_basis(const Mat& m);     // right kernel
std::optional<Mat> inverse(const Mat& m);        // square only
std::optional<Vec> solve(const Mat& m, const Vec& b);  // any solution of m x = b

// Incremental row space with expression tracking: each reduced row is a known
// combination of the inserted vectors.
class Span {
 public:
  Span(const FieldSpec& f, int dim) : field_(f), dim_(dim) {}

  // Returns true if v enlarged the span; v is remembered either way.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  // Coordinates of v as a combination of the *inserted* vectors (those that
  // enlarged the span), if v lies in the span.
  std::optional<Vec> express(const Vec& v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const { return dim_; }

 private:
  void reduce(Vec& v, Vec& combo) const;

  FieldSpec field_;
  int dim_;
  int inserted_ = 0;  // number of basis (span-enlarging) insertions
  std::vector<Vec> rows_;    // in row echelon form
  std::vector<int> pivots_;  // pivot column of each row
  std::vector<Vec> combos_;  // rows_[i] = sum combos_[i][j] * basis vector j
};

}  // namespace matlis
