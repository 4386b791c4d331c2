#include "matlis/linalg.hpp"

namespace matlis {

Mat Mat::identity(const FieldSpec& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::transpose() const {
  Mat t(field, cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols != o.rows) fail(Errc::internal, "matrix shape mismatch");
  Mat m(field, rows, o.cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < cols; ++k) {
      const Scalar& x = at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < o.cols; ++c) {
        if (o.at(k, c).is_zero()) continue;
        m.at(r, c) = m.at(r, c) + x * o.at(k, c);
      }
    }
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols) fail(Errc::internal, "apply shape mismatch");
  Vec out(rows, Scalar::zero(field));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] = out[r] + at(r, c) * v[c];
  return out;
}

bool Mat::operator==(const Mat& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// In-place Gaussian elimination to reduced row echelon form.
// Returns pivot columns.
std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    Scalar piv = m.at(r, c).inv();
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * piv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<Vec> kernel_basis(const Mat& m) {
  Mat w = m;
  std::vector<int> pivots = rref(w);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols, Scalar::zero(m.field));
    v[c] = Scalar::one(m.field);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(static_cast<int>(r), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  Mat aug(m.field, m.rows, 2 * m.cols);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols + r) = Scalar::one(m.field);
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != m.rows) return std::nullopt;
  for (size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] != static_cast<int>(i)) return std::nullopt;
  Mat inv(m.field, m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) inv.at(r, c) = aug.at(r, m.cols + c);
  return inv;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  Mat aug(m.field, m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // inconsistent
  Vec x(m.cols, Scalar::zero(m.field));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

// Rows are kept sorted by pivot ascending, each normalized with its pivot as
// first nonzero entry, so one ascending pass clears every pivot coordinate.
// After reduce: v_out = v_in + sum_j combo[j] * basis[j].
void Span::reduce(Vec& v, Vec& combo) const {
  combo.assign(inserted_, Scalar::zero(field_));
  for (size_t i = 0; i < rows_.size(); ++i) {
    Scalar f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (int j = pivots_[i]; j < dim_; ++j)
      if (!rows_[i][j].is_zero()) v[j] = v[j] - f * rows_[i][j];
    for (size_t j = 0; j < combos_[i].size(); ++j)
      if (!combos_[i][j].is_zero()) combo[j] = combo[j] - f * combos_[i][j];
  }
}

bool Span::insert(const Vec& v) {
  Vec w = v;
  Vec combo;
  reduce(w, combo);
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (!w[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Scalar piv = w[pivot].inv();
  for (int j = pivot; j < dim_; ++j) w[j] = w[j] * piv;
  // row = piv*(v + sum combo[j] basis[j]), and v becomes basis[inserted_]
  Vec full(inserted_ + 1, Scalar::zero(field_));
  for (size_t j = 0; j < combo.size(); ++j) full[j] = combo[j] * piv;
  full[inserted_] = piv;
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  combos_.push_back(std::move(full));
  ++inserted_;
  for (size_t i = rows_.size(); i-- > 1;) {
    if (pivots_[i] < pivots_[i - 1]) {
      std::swap(rows_[i], rows_[i - 1]);
      std::swap(pivots_[i], pivots_[i - 1]);
      std::swap(combos_[i], combos_[i - 1]);
    } else {
      break;
    }
  }
  return true;
}

bool Span::contains(const Vec& v) const {
  Vec w = v;
  Vec combo;
  reduce(w, combo);
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<Vec> Span::express(const Vec& v) const {
  Vec w = v;
  Vec combo;
  reduce(w, combo);
  for (const auto& x : w)
    if (!x.is_zero()) return std::nullopt;
  Vec out(inserted_, Scalar::zero(field_));
  for (size_t j = 0; j < combo.size() && j < out.size(); ++j) out[j] = -combo[j];
  return out;
}

}  // namespace matlis
